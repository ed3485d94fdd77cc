"""Simple undirected graphs and the common-edge machinery of edge open packing.

Vertices are dense integer ids ``0..n-1``.  Edges are normalized ``u < v``,
stored once, and kept in lexicographic order, so an edge index is a stable
handle into the graph.  Graphs are immutable after construction.

Two edges *e1* and *e2* have a *common edge* when a third edge joins an
endvertex of *e1* to an endvertex of *e2* (so the three edges form a path or
a triangle).  An *edge open packing* (EOP) is a set of edges no two of which
have a common edge; the subgraph induced by such a set is a disjoint union
of stars.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs, unknown edges, or bad indices."""


class Edge(NamedTuple):
    u: int
    v: int


def normalized(u: int, v: int) -> Edge:
    """Return the edge as an ``(u, v)`` pair with ``u < v``."""
    return Edge(u, v) if u < v else Edge(v, u)


@dataclass(frozen=True)
class EopSet:
    """A set of edge indices claimed to be an edge open packing.

    Indices refer to the ``edges`` of a host graph; the claim is checked
    with :func:`is_eop_set`.
    """

    edge_indices: frozenset[int]

    @classmethod
    def of(cls, indices: Iterable[int]) -> "EopSet":
        return cls(frozenset(int(i) for i in indices))

    def __len__(self) -> int:
        return len(self.edge_indices)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.edge_indices))


class Graph:
    """Immutable simple undirected graph with numpy-backed storage."""

    __slots__ = ("n", "edge_u", "edge_v", "indptr", "indices", "_adj", "_index")

    def __init__(self, n: int, edge_u: np.ndarray, edge_v: np.ndarray,
                 indptr: np.ndarray, indices: np.ndarray):
        # Private: use from_edges / from_arrays, which validate and normalize.
        self.n = int(n)
        self.edge_u = edge_u
        self.edge_v = edge_v
        self.indptr = indptr
        self.indices = indices
        self._adj = None
        self._index = None

    @classmethod
    def from_arrays(cls, n: int, u, v) -> "Graph":
        """Build a graph from parallel endpoint arrays (vectorized path)."""
        n = int(n)
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        u = np.asarray(u, dtype=np.int64).ravel()
        v = np.asarray(v, dtype=np.int64).ravel()
        if u.size != v.size:
            raise GraphError("endpoint arrays differ in length")
        m = u.size
        if m:
            if u.min() < 0 or v.min() < 0 or u.max() >= n or v.max() >= n:
                raise GraphError("edge endpoint out of range")
            if (u == v).any():
                raise GraphError("self-loops are not allowed")
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        order = np.lexsort((hi, lo))
        lo = lo[order]
        hi = hi[order]
        if m > 1:
            dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
            if dup.any():
                k = int(np.flatnonzero(dup)[0])
                raise GraphError(f"duplicate edge ({lo[k]}, {hi[k]})")
        ends = np.concatenate([lo, hi])
        other = np.concatenate([hi, lo])
        counts = np.bincount(ends, minlength=n) if n else np.zeros(0, dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        pos = np.lexsort((other, ends))
        indices = other[pos].astype(np.int64, copy=False)
        for arr in (lo, hi, indptr, indices):
            arr.setflags(write=False)
        return cls(n, lo, hi, indptr, indices)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        pairs = list(edges)
        u = np.fromiter((p[0] for p in pairs), dtype=np.int64, count=len(pairs))
        v = np.fromiter((p[1] for p in pairs), dtype=np.int64, count=len(pairs))
        return cls.from_arrays(n, u, v)

    @property
    def m(self) -> int:
        return int(self.edge_u.size)

    @property
    def edges(self) -> list[Edge]:
        """Materialized edge list; prefer edge_u/edge_v arrays in hot paths."""
        return [Edge(int(a), int(b)) for a, b in zip(self.edge_u, self.edge_v)]

    def edge(self, i: int) -> Edge:
        if not 0 <= i < self.m:
            raise GraphError(f"edge index {i} out of range")
        return Edge(int(self.edge_u[i]), int(self.edge_v[i]))

    def _adj_sets(self) -> list[set[int]]:
        if self._adj is None:
            adj: list[set[int]] = [set() for _ in range(self.n)]
            for a, b in zip(self.edge_u.tolist(), self.edge_v.tolist()):
                adj[a].add(b)
                adj[b].add(a)
            self._adj = adj
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
            return False
        return v in self._adj_sets()[u]

    def edge_id(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises if the edge is not present."""
        if self._index is None:
            self._index = {
                (int(a), int(b)): i
                for i, (a, b) in enumerate(zip(self.edge_u, self.edge_v))
            }
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"no edge ({u}, {v}) in graph") from None

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return int(self.indptr[v + 1] - self.indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def min_degree(self) -> int:
        return int(self.degrees().min()) if self.n else 0

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self.n else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self.edge_u, other.edge_u)
                and np.array_equal(self.edge_v, other.edge_v))

    def __hash__(self):
        return hash((self.n, self.edge_u.tobytes(), self.edge_v.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def common_edge(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Optional[Edge]:
    """Smallest edge joining an endvertex of ``e1`` to one of ``e2``, if any.

    The joining edge must be distinct from ``e1`` and ``e2`` themselves; the
    three edges then form a path or a triangle.  Both input edges must be
    present in ``g`` and distinct.
    """
    a = normalized(*e1)
    b = normalized(*e2)
    if not g.has_edge(*a):
        raise GraphError(f"edge {tuple(a)} not in graph")
    if not g.has_edge(*b):
        raise GraphError(f"edge {tuple(b)} not in graph")
    if a == b:
        raise GraphError("common_edge needs two distinct edges")
    best: Optional[Edge] = None
    for x in a:
        for y in b:
            if x == y:
                continue
            cand = normalized(x, y)
            if cand == a or cand == b or not g.has_edge(*cand):
                continue
            if best is None or cand < best:
                best = cand
    return best


def is_eop_set(g: Graph, b) -> bool:
    """Whether the given edge indices form an edge open packing of ``g``."""
    idx = sorted(b.edge_indices if isinstance(b, EopSet) else set(int(i) for i in b))
    for i in idx:
        if not 0 <= i < g.m:
            raise GraphError(f"edge index {i} out of range")
    picked = [g.edge(i) for i in idx]
    for e1, e2 in itertools.combinations(picked, 2):
        if common_edge(g, e1, e2) is not None:
            return False
    return True


def conflict_graph(g: Graph) -> Graph:
    """Graph on edge indices of ``g``; edges joined when they share a common edge.

    Edge open packings of ``g`` are exactly the independent sets of this graph.
    """
    m = g.m
    es = g.edges
    pairs = [
        (i, j)
        for i, j in itertools.combinations(range(m), 2)
        if common_edge(g, es[i], es[j]) is not None
    ]
    return Graph.from_edges(m, pairs)


def induced_subgraph_by_edges(g: Graph, b) -> tuple[Graph, list[int]]:
    """Subgraph induced by the endvertices of the given edges.

    Returns the relabeled subgraph together with the list mapping new vertex
    ids to the original ones.  All edges of ``g`` between the chosen
    endvertices are kept, not just the listed ones.
    """
    idx = sorted(b.edge_indices if isinstance(b, EopSet) else set(int(i) for i in b))
    verts: set[int] = set()
    for i in idx:
        e = g.edge(i)
        verts.add(e.u)
        verts.add(e.v)
    old_ids = sorted(verts)
    back = {v: k for k, v in enumerate(old_ids)}
    edges = [
        (back[int(a)], back[int(c)])
        for a, c in zip(g.edge_u, g.edge_v)
        if int(a) in verts and int(c) in verts
    ]
    return Graph.from_edges(len(old_ids), edges), old_ids


def connected_components(g: Graph) -> list[np.ndarray]:
    """Vertex sets of the connected components, in order of smallest vertex."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.neighbors(v).tolist():
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        comps.append(np.array(sorted(comp), dtype=np.int64))
    return comps


def bipartition_colors(g: Graph) -> Optional[np.ndarray]:
    """Per-vertex 0/1 coloring with no monochromatic edge, or None.

    The smallest vertex of each component gets color 0.
    """
    color = np.full(g.n, -1, dtype=np.int64)
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.neighbors(v).tolist():
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    q.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_star_forest(g: Graph) -> bool:
    """Whether every connected component of ``g`` is a star (K_{1,t}, t >= 0)."""
    degs = g.degrees()
    for comp in connected_components(g):
        nv = comp.size
        ne = int(degs[comp].sum()) // 2
        if ne != nv - 1:
            return False
        if nv > 2 and int(degs[comp].max()) != nv - 1:
            return False
    return True


def _bfs_distances(g: Graph, s: int) -> np.ndarray:
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for w in g.neighbors(v).tolist():
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def diameter(g: Graph) -> Optional[int]:
    """Largest eccentricity; None marks a disconnected (or empty) graph."""
    if g.n == 0:
        return None
    best = 0
    for s in range(g.n):
        dist = _bfs_distances(g, s)
        if (dist < 0).any():
            return None
        best = max(best, int(dist.max()))
    return best


def is_claw_free(g: Graph) -> bool:
    """True when no vertex has three pairwise nonadjacent neighbors."""
    for v in range(g.n):
        nb = g.neighbors(v).tolist()
        if len(nb) < 3:
            continue
        for x, y, z in itertools.combinations(nb, 3):
            if not (g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z)):
                return False
    return True


@dataclass(frozen=True)
class StructuralSummary:
    is_connected: bool
    is_bipartite: bool
    bipartition: Optional[tuple[frozenset[int], frozenset[int]]]
    is_tree: bool
    is_eulerian: bool
    diameter: Optional[int]
    is_claw_free: bool
    min_degree: int
    max_degree: int


def structural_predicates(g: Graph) -> StructuralSummary:
    """One-stop structural facts used by the gadget and bound checkers."""
    comps = connected_components(g)
    connected = len(comps) == 1
    colors = bipartition_colors(g)
    if colors is None:
        bip = None
    else:
        side0 = frozenset(int(v) for v in np.flatnonzero(colors == 0))
        side1 = frozenset(int(v) for v in np.flatnonzero(colors == 1))
        bip = (side0, side1)
    degs = g.degrees()
    return StructuralSummary(
        is_connected=connected,
        is_bipartite=colors is not None,
        bipartition=bip,
        is_tree=connected and g.m == g.n - 1,
        is_eulerian=connected and (g.n == 0 or not (degs % 2).any()),
        diameter=diameter(g) if connected else None,
        is_claw_free=is_claw_free(g),
        min_degree=g.min_degree(),
        max_degree=g.max_degree(),
    )


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Graph on the vertices of ``a`` followed by those of ``b``, no new edges."""
    u = np.concatenate([a.edge_u, b.edge_u + a.n])
    v = np.concatenate([a.edge_v, b.edge_v + a.n])
    return Graph.from_arrays(a.n + b.n, u, v)


def without_edge(g: Graph, i: int) -> Graph:
    """Copy of ``g`` with edge index ``i`` removed (vertex set unchanged)."""
    if not 0 <= i < g.m:
        raise GraphError(f"edge index {i} out of range")
    keep = np.ones(g.m, dtype=bool)
    keep[i] = False
    return Graph.from_arrays(g.n, g.edge_u[keep], g.edge_v[keep])
