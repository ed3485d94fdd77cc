"""Deterministic graph constructors, random models, and small enumerations."""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .graph import Graph


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_graph_minus_edge(n: int) -> Graph:
    if n < 2:
        raise ValueError("needs n >= 2")
    edges = [e for e in itertools.combinations(range(n), 2) if e != (0, 1)]
    return Graph.from_edges(n, edges)


def star_graph(t: int) -> Graph:
    """K_{1,t}: center 0 with leaves 1..t."""
    return Graph.from_edges(t + 1, [(0, i) for i in range(1, t + 1)])


def complete_bipartite_graph(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Each of the C(n,2) candidate edges kept independently with probability p."""
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def decode_prufer(seq, n: int) -> Graph:
    """Tree on n vertices from a length n-2 sequence over 0..n-1."""
    if n < 2:
        raise ValueError("needs n >= 2")
    arr = np.asarray(seq, dtype=np.int64)
    if arr.size != n - 2:
        raise ValueError("sequence must have n - 2 entries")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise ValueError("sequence entry out of range")
    deg = np.empty(n, dtype=np.int64)
    eu = np.empty(n - 1, dtype=np.int64)
    ev = np.empty(n - 1, dtype=np.int64)
    _kernels.ACTIVE.decode_prufer(arr, deg, eu, ev)
    return Graph.from_arrays(n, eu, ev)


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniform random labeled tree via a random sequence code."""
    if n < 1:
        raise ValueError("needs n >= 1")
    if n == 1:
        return empty_graph(1)
    rng = np.random.default_rng(seed)
    seq = rng.integers(0, n, size=n - 2, dtype=np.int64)
    return decode_prufer(seq, n)


def all_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices (n**(n-2) of them); small n only."""
    if n == 1:
        yield empty_graph(1)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield decode_prufer(np.array(seq, dtype=np.int64), n)


def all_graphs(n: int, min_edges: int = 0) -> Iterator[Graph]:
    """Every labeled graph on n vertices; 2**C(n,2) of them, small n only."""
    slots = list(itertools.combinations(range(n), 2))
    for r in range(min_edges, len(slots) + 1):
        for chosen in itertools.combinations(slots, r):
            yield Graph.from_edges(n, chosen)


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled graph on n vertices, by edge-subset filtering."""
    slots = list(itertools.combinations(range(n), 2))
    if n == 1:
        yield empty_graph(1)
        return
    for bits in range(1 << len(slots)):
        chosen = [slots[i] for i in range(len(slots)) if (bits >> i) & 1]
        if len(chosen) < n - 1:
            continue
        if _spans_connected(n, chosen):
            yield Graph.from_edges(n, chosen)


def _spans_connected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps == 1
