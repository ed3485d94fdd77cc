"""Exact solvers: branch-and-bound maximum independent set and the
edge open packing / induced matching numbers built on top of it.

The branch and bound works on bitset-encoded residual graphs: it splits the
residual into connected components, branches on a maximum-degree vertex
(include first, then exclude), and prunes with the residual vertex count.
Identical inputs explore identical search trees, so witnesses are
deterministic.  Work is metered in visited nodes against a budget.
"""

from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import _kernels
from .graph import (EopSet, Graph, GraphError, common_edge, conflict_graph,
                    is_eop_set)

DEFAULT_NODE_BUDGET = 10 ** 8


class BudgetExceededError(RuntimeError):
    """Search aborted: the node budget ran out before the solve finished."""

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"budget exceeded: {nodes} nodes explored (budget {budget})")
        self.nodes = nodes
        self.budget = budget


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Union[frozenset[int], EopSet]
    nodes_explored: int
    elapsed: float


def _mis_masks(adj: list[int], n: int, budget: int) -> tuple[int, int, int]:
    """Max independent set over bitmask adjacency; returns (size, mask, nodes)."""
    closed = [adj[v] | (1 << v) for v in range(n)]
    memo: dict[int, tuple[int, int]] = {}
    nodes = 0

    if n > 300:
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 3 * n + 200))

    def solve(mask: int) -> tuple[int, int]:
        nonlocal nodes
        if mask == 0:
            return 0, 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(nodes, budget)
        # peel off the component holding the lowest vertex
        comp = mask & -mask
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~comp
            comp |= frontier
        if comp != mask:
            s1, w1 = solve(comp)
            s2, w2 = solve(mask ^ comp)
            res = (s1 + s2, w1 | w2)
        else:
            k = comp.bit_count()
            if k == 1:
                res = (1, comp)
            elif k == 2:
                res = (1, comp & -comp)
            else:
                best_v = -1
                best_d = -1
                mm = comp
                while mm:
                    b = mm & -mm
                    mm ^= b
                    v = b.bit_length() - 1
                    d = (adj[v] & comp).bit_count()
                    if d > best_d:
                        best_d = d
                        best_v = v
                v = best_v
                inc_s, inc_w = solve(comp & ~closed[v])
                res = (inc_s + 1, inc_w | (1 << v))
                if k - 1 > res[0]:  # exclude branch can reach at most k - 1
                    exc = solve(comp & ~(1 << v))
                    if exc[0] > res[0]:
                        res = exc
        memo[mask] = res
        return res

    size, mask = solve((1 << n) - 1 if n else 0)
    return size, mask, nodes


def _adjacency_masks(g: Graph) -> list[int]:
    adj = [0] * g.n
    for a, b in zip(g.edge_u.tolist(), g.edge_v.tolist()):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def max_independent_set(g: Graph, node_budget: Optional[int] = None) -> SolveResult:
    """Deterministic exact maximum independent set of an arbitrary graph."""
    budget = DEFAULT_NODE_BUDGET if node_budget is None else int(node_budget)
    start = time.perf_counter()
    size, mask, nodes = _mis_masks(_adjacency_masks(g), g.n, budget)
    witness = frozenset(v for v in range(g.n) if (mask >> v) & 1)
    return SolveResult(value=size, witness=witness, nodes_explored=nodes,
                       elapsed=time.perf_counter() - start)


def eop_number_exact(g: Graph, node_budget: Optional[int] = None) -> SolveResult:
    """Maximum edge open packing via independent sets of the conflict graph."""
    budget = DEFAULT_NODE_BUDGET if node_budget is None else int(node_budget)
    start = time.perf_counter()
    cg = conflict_graph(g)
    size, mask, nodes = _mis_masks(_adjacency_masks(cg), cg.n, budget)
    witness = EopSet.of(i for i in range(cg.n) if (mask >> i) & 1)
    assert is_eop_set(g, witness)
    return SolveResult(value=size, witness=witness, nodes_explored=nodes,
                       elapsed=time.perf_counter() - start)


def _im_conflict_masks(g: Graph) -> list[int]:
    # induced matching conflicts: shared endpoint, or any edge joining the pair
    es = g.edges
    masks = [0] * g.m
    for i, j in itertools.combinations(range(g.m), 2):
        e1, e2 = es[i], es[j]
        share = len({e1.u, e1.v} & {e2.u, e2.v}) > 0
        if share or common_edge(g, e1, e2) is not None:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    return masks


def is_induced_matching(g: Graph, edge_indices) -> bool:
    """Pairwise vertex-disjoint edges with no edge of g joining any two of them."""
    idx = sorted(set(int(i) for i in edge_indices))
    for i in idx:
        if not 0 <= i < g.m:
            raise GraphError(f"edge index {i} out of range")
    for i, j in itertools.combinations(idx, 2):
        e1, e2 = g.edge(i), g.edge(j)
        if {e1.u, e1.v} & {e2.u, e2.v}:
            return False
        if common_edge(g, e1, e2) is not None:
            return False
    return True


def induced_matching_number(g: Graph, node_budget: Optional[int] = None) -> SolveResult:
    """Maximum induced matching, solved as an independent set problem."""
    budget = DEFAULT_NODE_BUDGET if node_budget is None else int(node_budget)
    start = time.perf_counter()
    size, mask, nodes = _mis_masks(_im_conflict_masks(g), g.m, budget)
    witness = EopSet.of(i for i in range(g.m) if (mask >> i) & 1)
    assert is_induced_matching(g, witness.edge_indices)
    return SolveResult(value=size, witness=witness, nodes_explored=nodes,
                       elapsed=time.perf_counter() - start)


BRUTE_FORCE_EDGE_LIMIT = 20


def eop_number_brute(g: Graph, kernels: Optional[_kernels.Kernels] = None) -> int:
    """Independent oracle: exhaustive search over all edge subsets."""
    if g.m > BRUTE_FORCE_EDGE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_EDGE_LIMIT} edges, got {g.m}")
    k = kernels or _kernels.ACTIVE
    es = g.edges
    masks = np.zeros(g.m, dtype=np.int64)
    for i, j in itertools.combinations(range(g.m), 2):
        if common_edge(g, es[i], es[j]) is not None:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
    valid = np.empty(1 << g.m, dtype=np.uint8)
    return int(k.max_valid_subset(masks, valid))


BRUTE_FORCE_VERTEX_LIMIT = 20


def independence_number_brute(g: Graph, kernels: Optional[_kernels.Kernels] = None) -> int:
    """Independent oracle: exhaustive search over all vertex subsets."""
    if g.n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_VERTEX_LIMIT} vertices, got {g.n}")
    k = kernels or _kernels.ACTIVE
    masks = np.array(_adjacency_masks(g), dtype=np.int64) if g.n else np.zeros(0, dtype=np.int64)
    valid = np.empty(1 << g.n, dtype=np.uint8)
    return int(k.max_valid_subset(masks, valid))
