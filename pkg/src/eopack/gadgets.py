"""Hardness-reduction gadgets tying edge open packing to independent sets.

Each builder turns a source graph g into a gadget graph whose maximum edge
open packing equals a fixed offset plus the independence number of g:

* ``universal``: add a universal vertex v plus m+n pendant-like neighbors
  u_1..u_{m+n} of v; offset m+n.  The gadget has diameter at most 2.
* ``eulerian``: replace every vertex with a partner edge and every edge with
  six internally disjoint 5-edge paths; offset 12m.  The gadget is always
  bipartite, and for connected cubic sources it is connected with all
  degrees even, hence Eulerian.
* ``planar``: hang a path x_i - z_i - y_i off every vertex v_i through the
  extra edge z_i v_i; offset 2n.  Planarity is preserved and the maximum
  degree grows by exactly one.

Witness builders map an independent set of the source to a concrete edge
open packing of the gadget that attains offset + |independent set|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .exact import BudgetExceededError, SolveResult, eop_number_exact, max_independent_set
from .graph import EopSet, Graph, GraphError, is_eop_set

UNIVERSAL = "universal"
EULERIAN = "eulerian"
PLANAR = "planar"
KINDS = (UNIVERSAL, EULERIAN, PLANAR)


class NotIndependentError(GraphError):
    """The claimed independent set has two adjacent vertices or bad ids."""


@dataclass(frozen=True)
class GadgetOutput:
    graph: Graph
    kind: str
    source_n: int
    source_m: int
    name_map: dict[str, int]       # human-readable vertex names -> gadget ids
    predicted_offset: int          # eop number of gadget = offset + alpha(source)


def _check_independent(g: Graph, independent: Iterable[int]) -> list[int]:
    iset = sorted(set(int(v) for v in independent))
    for v in iset:
        if not 0 <= v < g.n:
            raise NotIndependentError(f"vertex {v} out of range")
    for i, a in enumerate(iset):
        for b in iset[i + 1:]:
            if g.has_edge(a, b):
                raise NotIndependentError(f"not an independent set: edge ({a}, {b})")
    return iset


# ---------------------------------------------------------------- universal

def build_universal_gadget(g: Graph) -> GadgetOutput:
    n, m = g.n, g.m
    v = n
    extras = [n + 1 + j for j in range(m + n)]
    edges = list(zip(g.edge_u.tolist(), g.edge_v.tolist()))
    edges += [(v, w) for w in range(n)]
    edges += [(v, u) for u in extras]
    names = {f"v_{i + 1}": i for i in range(n)}
    names["v"] = v
    names.update({f"u_{j + 1}": u for j, u in enumerate(extras)})
    return GadgetOutput(graph=Graph.from_edges(n + 1 + m + n, edges),
                        kind=UNIVERSAL, source_n=n, source_m=m,
                        name_map=names, predicted_offset=m + n)


def build_universal_witness(g: Graph, independent: Iterable[int]) -> EopSet:
    """Star at the universal vertex: edges to every u_j and to the chosen set."""
    iset = _check_independent(g, independent)
    out = build_universal_gadget(g)
    h = out.graph
    v = g.n
    picked = [h.edge_id(v, g.n + 1 + j) for j in range(g.m + g.n)]
    picked += [h.edge_id(v, w) for w in iset]
    return EopSet.of(picked)


# ----------------------------------------------------------------- eulerian

def _eulerian_paths(n: int, t: int, a: int, b: int) -> tuple[list[list[int]], list[list[int]]]:
    # Edge t = (a, b) owns a block of 24 internal vertices after the 2n
    # endpoint copies.  Letter L in {0,1,2} (x, y, z) takes 8 slots:
    #   +0 w_ab  +1 wt_ab  +2 wpp_ba  +3 wp_ba   (path a .. b')
    #   +4 wp_ab +5 wpp_ab +6 wt_ba   +7 w_ba    (path a' .. b)
    base = 2 * n + 24 * t
    fwd = []
    bwd = []
    for L in range(3):
        o = base + 8 * L
        fwd.append([a, o + 0, o + 1, o + 2, o + 3, n + b])
        bwd.append([n + a, o + 4, o + 5, o + 6, o + 7, b])
    return fwd, bwd


_LETTERS = ("x", "y", "z")


def build_eulerian_gadget(g: Graph) -> GadgetOutput:
    n, m = g.n, g.m
    edges: list[tuple[int, int]] = [(i, n + i) for i in range(n)]
    names = {f"v_{i + 1}": i for i in range(n)}
    names.update({f"vp_{i + 1}": n + i for i in range(n)})
    for t, (a, b) in enumerate(zip(g.edge_u.tolist(), g.edge_v.tolist())):
        fwd, bwd = _eulerian_paths(n, t, a, b)
        i, j = a + 1, b + 1
        for L, (pf, pb) in enumerate(zip(fwd, bwd)):
            w = _LETTERS[L]
            names[f"{w}_{i}_{j}"] = pf[1]
            names[f"{w}t_{i}_{j}"] = pf[2]
            names[f"{w}pp_{j}_{i}"] = pf[3]
            names[f"{w}p_{j}_{i}"] = pf[4]
            names[f"{w}p_{i}_{j}"] = pb[1]
            names[f"{w}pp_{i}_{j}"] = pb[2]
            names[f"{w}t_{j}_{i}"] = pb[3]
            names[f"{w}_{j}_{i}"] = pb[4]
            for p in (pf, pb):
                edges += [(p[k], p[k + 1]) for k in range(5)]
    return GadgetOutput(graph=Graph.from_edges(2 * n + 24 * m, edges),
                        kind=EULERIAN, source_n=n, source_m=m,
                        name_map=names, predicted_offset=12 * m)


def build_eulerian_witness(g: Graph, independent: Iterable[int]) -> EopSet:
    """Per source edge, 12 path edges; 13 when an endpoint sits in the set.

    With s the chosen endpoint of an edge and t the other one, the three
    paths between s and t' contribute their edge at s plus the second edge
    from the t' end, the three paths between t and s' contribute the two
    middle-star edges nearest t, and the partner edge s s' joins once.  An
    edge with no chosen endpoint takes the two edges nearest each unprimed
    endpoint on all six paths.  Chosen vertices with no incident edge still
    contribute their partner edge.
    """
    iset = set(_check_independent(g, independent))
    out = build_eulerian_gadget(g)
    h = out.graph
    n = g.n
    pairs: set[tuple[int, int]] = set()
    for t, (a, b) in enumerate(zip(g.edge_u.tolist(), g.edge_v.tolist())):
        fwd, bwd = _eulerian_paths(n, t, a, b)
        if b in iset:
            to_s = bwd                       # listed t' .. s
            to_sp = fwd                      # listed t .. s'
        elif a in iset:
            to_s = [p[::-1] for p in fwd]    # reversed: t' .. s
            to_sp = [p[::-1] for p in bwd]   # reversed: t .. s'
        else:
            for p in fwd + bwd:
                pairs.add((p[1], p[2]))
                pairs.add((p[2], p[3]))
            continue
        s = b if b in iset else a
        pairs.add((s, n + s))
        for p in to_s:
            pairs.add((p[1], p[2]))
            pairs.add((p[4], p[5]))
        for p in to_sp:
            pairs.add((p[1], p[2]))
            pairs.add((p[2], p[3]))
    for s in iset:
        pairs.add((s, n + s))
    return EopSet.of(h.edge_id(u, v) for u, v in pairs)


# ------------------------------------------------------------------- planar

def build_planar_gadget(g: Graph) -> GadgetOutput:
    n, m = g.n, g.m
    edges = list(zip(g.edge_u.tolist(), g.edge_v.tolist()))
    names = {f"v_{i + 1}": i for i in range(n)}
    for i in range(n):
        x, z, y = n + 3 * i, n + 3 * i + 1, n + 3 * i + 2
        names[f"x_{i + 1}"] = x
        names[f"z_{i + 1}"] = z
        names[f"y_{i + 1}"] = y
        edges += [(x, z), (z, y), (z, i)]
    return GadgetOutput(graph=Graph.from_edges(4 * n, edges), kind=PLANAR,
                        source_n=n, source_m=m, name_map=names,
                        predicted_offset=2 * n)


def build_planar_witness(g: Graph, independent: Iterable[int]) -> EopSet:
    """Full 3-star at z_i for chosen vertices, the two pendant edges otherwise."""
    iset = set(_check_independent(g, independent))
    out = build_planar_gadget(g)
    h = out.graph
    picked = []
    for i in range(g.n):
        x, z, y = g.n + 3 * i, g.n + 3 * i + 1, g.n + 3 * i + 2
        picked += [h.edge_id(z, x), h.edge_id(z, y)]
        if i in iset:
            picked.append(h.edge_id(z, i))
    return EopSet.of(picked)


# ------------------------------------------------------------- verification

_BUILDERS = {
    UNIVERSAL: (build_universal_gadget, build_universal_witness),
    EULERIAN: (build_eulerian_gadget, build_eulerian_witness),
    PLANAR: (build_planar_gadget, build_planar_witness),
}


@dataclass(frozen=True)
class ReductionReport:
    kind: str
    source_n: int
    source_m: int
    gadget_n: int
    gadget_m: int
    alpha: int
    predicted_offset: int
    predicted_value: int
    witness_size: int
    witness_valid: bool
    mode: str                       # "exact" or "witness-only"
    exact_value: Optional[int]      # None when the budget ran out
    identity_holds: Optional[bool]  # None when the budget ran out
    passed: bool


def verify_reduction(g: Graph, kind: str, node_budget: Optional[int] = None) -> ReductionReport:
    """Check the reduction identity on a concrete source graph.

    Solves the source for an optimal independent set, builds the gadget and
    the witness, and checks the witness is a valid packing of the predicted
    size.  When the exact gadget solve finishes within budget the identity
    eop(gadget) = offset + alpha(source) is checked too; otherwise the
    report downgrades to witness-only mode.
    """
    if kind not in _BUILDERS:
        raise ValueError(f"unknown gadget kind {kind!r}")
    build, build_witness = _BUILDERS[kind]
    alpha_res: SolveResult = max_independent_set(g, node_budget)
    out = build(g)
    witness = build_witness(g, alpha_res.witness)
    valid = is_eop_set(out.graph, witness)
    predicted = out.predicted_offset + alpha_res.value
    try:
        exact = eop_number_exact(out.graph, node_budget)
        exact_value: Optional[int] = exact.value
        identity: Optional[bool] = exact.value == predicted
        mode = "exact"
    except BudgetExceededError:
        exact_value = None
        identity = None
        mode = "witness-only"
    passed = valid and len(witness) == predicted and identity is not False
    return ReductionReport(kind=kind, source_n=g.n, source_m=g.m,
                           gadget_n=out.graph.n, gadget_m=out.graph.m,
                           alpha=alpha_res.value,
                           predicted_offset=out.predicted_offset,
                           predicted_value=predicted,
                           witness_size=len(witness), witness_valid=valid,
                           mode=mode, exact_value=exact_value,
                           identity_holds=identity, passed=passed)
