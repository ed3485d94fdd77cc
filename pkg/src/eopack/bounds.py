"""Extremal bounds for the edge open packing number.

The basic bound is rho_eo(G) <= m / delta(G) for graphs with minimum degree
delta >= 1, compared in exact integer arithmetic as rho_eo * delta <= m.
Equality holds exactly for disjoint unions of stars and for members of a
bipartite family: parts A, B, C with every vertex of B having one neighbor
in A and delta - 1 neighbors in C, all degrees at least delta = k >= 2.

Also here: the behavior of rho_eo under single-edge removal (with builders
realizing every admissible before/after pair), and consistency checks for
the characterizations of graphs with rho_eo equal to 1 or 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exact import eop_number_exact
from .graph import (Edge, Graph, GraphError, bipartition_colors, common_edge,
                    connected_components, diameter, is_claw_free, is_complete,
                    is_star_forest, without_edge)


class InfeasiblePatternError(ValueError):
    """The requested family pattern violates a degree constraint."""


@dataclass(frozen=True)
class DeltaBoundReport:
    rho_eo: int
    num_edges: int
    min_degree: int
    bound_holds: bool  # rho_eo * delta <= m
    is_tight: bool     # rho_eo * delta == m


def delta_bound_check(g: Graph, node_budget: Optional[int] = None) -> DeltaBoundReport:
    """Exact check of rho_eo * delta <= m; integer arithmetic only."""
    delta = g.min_degree()
    if delta < 1:
        raise GraphError("undefined bound: minimum degree is 0")
    rho = eop_number_exact(g, node_budget).value
    return DeltaBoundReport(rho_eo=rho, num_edges=g.m, min_degree=delta,
                            bound_holds=rho * delta <= g.m,
                            is_tight=rho * delta == g.m)


@dataclass(frozen=True)
class FamilyFWitness:
    k: int
    a_side: frozenset[int]
    b_side: frozenset[int]
    c_side: frozenset[int]


def recognize_family_f(g: Graph) -> Optional[FamilyFWitness]:
    """Partition witnessing membership in the tight bipartite family, if any.

    Candidate B sides are unions of per-component bipartition classes whose
    vertices all have degree exactly k = delta(g); the opposite side is then
    split into A and C by backtracking on the one-A-neighbor constraint.
    Deterministic: components ordered by smallest vertex, class 0 tried
    first, vertices labeled in increasing order with A before C.
    """
    if g.n == 0 or g.m == 0:
        return None
    k = g.min_degree()
    if k < 2:
        return None
    colors = bipartition_colors(g)
    if colors is None:
        return None
    degs = g.degrees()
    per_comp: list[list[tuple[list[int], list[int]]]] = []
    for comp in connected_components(g):
        comp_list = comp.tolist()
        side0 = [v for v in comp_list if colors[v] == 0]
        side1 = [v for v in comp_list if colors[v] == 1]
        options = []
        for b_side, other in ((side0, side1), (side1, side0)):
            if b_side and all(degs[v] == k for v in b_side):
                options.append((b_side, other))
        if not options:
            return None
        per_comp.append(options)
    for combo in itertools.product(*per_comp):
        b_side = sorted(v for sides in combo for v in sides[0])
        rest = sorted(v for sides in combo for v in sides[1])
        split = _split_a_c(g, b_side, rest)
        if split is not None:
            a_side, c_side = split
            return FamilyFWitness(k=k, a_side=frozenset(a_side),
                                  b_side=frozenset(b_side),
                                  c_side=frozenset(c_side))
    return None


def _split_a_c(g: Graph, b_side: list[int], rest: list[int]) -> Optional[tuple[set[int], set[int]]]:
    a_count = {b: 0 for b in b_side}
    unassigned = {b: 0 for b in b_side}
    nbrs = {v: [w for w in g.neighbors(v).tolist()] for v in rest}
    for v in rest:
        for b in nbrs[v]:
            unassigned[b] += 1
    a_side: set[int] = set()
    c_side: set[int] = set()

    def place(idx: int) -> bool:
        if idx == len(rest):
            return all(a_count[b] == 1 for b in b_side)
        v = rest[idx]
        for b in nbrs[v]:
            unassigned[b] -= 1
        if all(a_count[b] < 1 for b in nbrs[v]):
            for b in nbrs[v]:
                a_count[b] += 1
            if all(a_count[b] + unassigned[b] >= 1 for b in nbrs[v]):
                a_side.add(v)
                if place(idx + 1):
                    return True
                a_side.discard(v)
            for b in nbrs[v]:
                a_count[b] -= 1
        if all(a_count[b] + unassigned[b] >= 1 for b in nbrs[v]):
            c_side.add(v)
            if place(idx + 1):
                return True
            c_side.discard(v)
        for b in nbrs[v]:
            unassigned[b] += 1
        return False

    if place(0):
        return a_side, c_side
    return None


def check_char_theorem(g: Graph, node_budget: Optional[int] = None) -> bool:
    """Tightness of the delta bound coincides with star forest or family membership."""
    report = delta_bound_check(g, node_budget)
    structural = is_star_forest(g) or recognize_family_f(g) is not None
    return report.is_tight == structural


def build_family_f(k: int, n_a: int, n_b: int, n_c: int) -> Graph:
    """Deterministic family instance: A, B, C sized as given, round-robin wiring.

    Vertex b_t takes a-neighbor ``t mod n_a`` and the k-1 c-slots
    ``t*(k-1) .. t*(k-1)+k-2`` modulo n_c.  Every degree constraint is
    checked up front and a violated one is reported by name.
    """
    if k < 2:
        raise InfeasiblePatternError("k must be at least 2")
    if n_a < 1 or n_b < 1 or n_c < 1:
        raise InfeasiblePatternError("all three parts must be nonempty")
    if n_c < k - 1:
        raise InfeasiblePatternError(
            f"need |C| >= k - 1 = {k - 1} distinct c-neighbors per b-vertex, have {n_c}")
    if n_b // n_a < k:
        raise InfeasiblePatternError(
            f"a-vertex degree {n_b // n_a} < k = {k}; need |B| >= k * |A|")
    if (k - 1) * n_b // n_c < k:
        raise InfeasiblePatternError(
            f"c-vertex degree {(k - 1) * n_b // n_c} < k = {k}; need (k-1)|B| >= k|C|")
    a0, b0, c0 = 0, n_a, n_a + n_b
    edges = []
    for t in range(n_b):
        edges.append((b0 + t, a0 + t % n_a))
        for s in range(k - 1):
            edges.append((b0 + t, c0 + (t * (k - 1) + s) % n_c))
    return Graph.from_edges(n_a + n_b + n_c, edges)


@dataclass(frozen=True)
class RemovalEntry:
    edge: Edge
    rho_after: int
    within_bounds: bool


@dataclass(frozen=True)
class RemovalProfile:
    rho_before: int
    entries: tuple[RemovalEntry, ...]
    bounds_ok: bool


def _removal_entry_ok(g: Graph, rho: int, rho_after: int) -> bool:
    if rho == 1:
        # the edges of a rho-1 graph span a complete subgraph; isolated
        # vertices do not matter, so count the spanned vertices
        r = int(np.count_nonzero(g.degrees()))
        return rho_after == (2 if r >= 3 else 0)
    if rho == 2:
        return 1 <= rho_after <= 3
    return rho - 1 <= rho_after <= 2 * (rho - 1)


def edge_removal_profile(g: Graph, node_budget: Optional[int] = None) -> RemovalProfile:
    """Exact rho_eo of g - e for every edge e, with range checks per entry."""
    if g.m < 1:
        raise GraphError("edge removal needs at least one edge")
    rho = eop_number_exact(g, node_budget).value
    entries = []
    for i in range(g.m):
        after = eop_number_exact(without_edge(g, i), node_budget).value
        entries.append(RemovalEntry(edge=g.edge(i), rho_after=after,
                                    within_bounds=_removal_entry_ok(g, rho, after)))
    return RemovalProfile(rho_before=rho, entries=tuple(entries),
                          bounds_ok=all(e.within_bounds for e in entries))


def build_removal_realization(a: int, b: int) -> tuple[Graph, Edge]:
    """Graph G and edge e with rho_eo(G) = b and rho_eo(G - e) = a.

    Admissible pairs: b = 2 with a in {1, 2, 3}, or b >= 3 with
    b - 1 <= a <= 2b - 2.  Constructions:

    * b = 2: complete graph on 4 vertices plus a pendant vertex; the removed
      edge is the pendant edge (a = 1), a clique edge at the attachment
      vertex (a = 2), or a clique edge avoiding it (a = 3).
    * a = b - 1: the star with b edges; removing any edge leaves a smaller
      star, so every maximum set loses exactly one edge.
    * a = b: star center v with leaves v_1..v_{b+1} and the extra edge
      v_1 v_2; e = v v_1.
    * b + 1 <= a <= 2b - 2: the a = b graph with floor(a/2) pendants on v_1
      and ceil(a/2) pendants on v_2; e = v_1 v_2.
    """
    if b == 2:
        if a not in (1, 2, 3):
            raise ValueError("for b = 2 the reachable values are a in {1, 2, 3}")
        edges = list(itertools.combinations(range(4), 2)) + [(0, 4)]
        g = Graph.from_edges(5, edges)
        e = {1: Edge(0, 4), 2: Edge(0, 1), 3: Edge(1, 2)}[a]
        return g, e
    if b < 3 or not b - 1 <= a <= 2 * b - 2:
        raise ValueError(f"no realization for a = {a}, b = {b}")
    if a == b - 1:
        edges = [(0, i) for i in range(1, b + 1)]
        return Graph.from_edges(b + 1, edges), Edge(0, b)
    edges = [(0, i) for i in range(1, b + 2)]
    edges.append((1, 2))
    n = b + 2
    if a > b:
        lo, hi = a // 2, a - a // 2
        edges += [(1, n + j) for j in range(lo)]
        edges += [(2, n + lo + j) for j in range(hi)]
        n += a
        return Graph.from_edges(n, edges), Edge(1, 2)
    return Graph.from_edges(n, edges), Edge(0, 1)


@dataclass(frozen=True)
class SmallRhoReport:
    rho_eo: int
    is_complete: bool
    diameter: Optional[int]
    is_claw_free: bool
    pair_condition: bool
    rho1_consistent: bool
    rho2_consistent: bool
    consistent: bool


def _disjoint_pair_condition(g: Graph) -> bool:
    # Every pair of vertex-disjoint edges without a common edge must see all
    # outside vertices adjacent to at least two of the four endpoints.
    es = g.edges
    for e1, e2 in itertools.combinations(es, 2):
        four = {e1.u, e1.v, e2.u, e2.v}
        if len(four) != 4:
            continue
        if common_edge(g, e1, e2) is not None:
            continue
        for w in range(g.n):
            if w in four:
                continue
            hits = sum(1 for x in four if g.has_edge(w, x))
            if hits < 2:
                return False
    return True


def check_rho_small_characterizations(g: Graph, node_budget: Optional[int] = None) -> SmallRhoReport:
    """Consistency of the rho_eo = 1 and rho_eo = 2 characterizations.

    A connected graph has rho_eo 1 exactly when it is complete with at
    least two vertices, and rho_eo 2 exactly when its diameter lies in
    2..4, it is claw-free, and the disjoint-pair condition holds.
    """
    comps = connected_components(g)
    if len(comps) != 1:
        raise GraphError("characterization check needs a connected graph")
    rho = eop_number_exact(g, node_budget).value
    complete = is_complete(g)
    diam = diameter(g)
    claw_free = is_claw_free(g)
    pair_cond = _disjoint_pair_condition(g)
    rho1 = (rho == 1) == (complete and g.n >= 2)
    rho2 = (rho == 2) == (diam is not None and 2 <= diam <= 4 and claw_free and pair_cond)
    return SmallRhoReport(rho_eo=rho, is_complete=complete, diameter=diam,
                          is_claw_free=claw_free, pair_condition=pair_cond,
                          rho1_consistent=rho1, rho2_consistent=rho2,
                          consistent=rho1 and rho2)
