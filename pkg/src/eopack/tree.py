"""Linear-time edge open packing solver for trees.

The solver roots the tree, runs one leaves-to-root sweep that computes five
packing parameters per vertex, and can replay the recorded decisions
top-down to emit an optimal edge set.  Hot loops live in
:mod:`eopack._kernels` and are numba-compiled by default.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .graph import EopSet, Graph, GraphError

TYPE1 = 1
TYPE2 = 2

BRANCH_CENTER = "center"    # the vertex is the center of a packed star
BRANCH_LEAF = "leaf"        # the vertex is a leaf of a packed star
BRANCH_OUTSIDE = "outside"  # the vertex is not incident to the packing
_BRANCH_NAMES = (BRANCH_CENTER, BRANCH_LEAF, BRANCH_OUTSIDE)


class NotATreeError(GraphError):
    """Raised when a tree-only operation receives a non-tree."""


@dataclass(frozen=True)
class ReconHints:
    """Recorded argmax/argmin choices needed to rebuild an optimal set."""

    ell_child: Optional[int]    # child acting as star center when this vertex is a leaf
    cstar_child: Optional[int]  # forced single leaf when all children are Type 2
    best_branch: str            # which parameter attains rho at this vertex


@dataclass(frozen=True)
class DpRecord:
    rho: int         # best packing in the subtree
    rho_c: int       # best with this vertex a star center
    rho_ell: int     # best with this vertex a star leaf
    rho_prime: int   # best with this vertex not incident to the set
    rho_dprime: int  # best with the whole closed neighborhood not incident
    vertex_type: int
    recon: ReconHints


@dataclass(frozen=True)
class RootedTree:
    underlying: Graph
    root: int
    parent: np.ndarray  # parent[v]; -1 at the root
    order: np.ndarray   # reverse breadth-first order: children first, root last
    child_ptr: np.ndarray
    child_idx: np.ndarray

    def children(self, v: int) -> np.ndarray:
        return self.child_idx[self.child_ptr[v]:self.child_ptr[v + 1]]


class DpTable:
    """Per-vertex DP arrays with record-style access."""

    def __init__(self, rho, rho_c, rho_ell, rho_prime, rho_dprime, vertex_type,
                 ell_child, cstar_child, best_branch):
        self.rho = rho
        self.rho_c = rho_c
        self.rho_ell = rho_ell
        self.rho_prime = rho_prime
        self.rho_dprime = rho_dprime
        self.vertex_type = vertex_type
        self.ell_child = ell_child
        self.cstar_child = cstar_child
        self.best_branch = best_branch

    def __len__(self) -> int:
        return int(self.rho.size)

    def __getitem__(self, v: int) -> DpRecord:
        if not 0 <= v < len(self):
            raise GraphError(f"vertex {v} out of range")
        ell = int(self.ell_child[v])
        cstar = int(self.cstar_child[v])
        return DpRecord(
            rho=int(self.rho[v]),
            rho_c=int(self.rho_c[v]),
            rho_ell=int(self.rho_ell[v]),
            rho_prime=int(self.rho_prime[v]),
            rho_dprime=int(self.rho_dprime[v]),
            vertex_type=int(self.vertex_type[v]),
            recon=ReconHints(
                ell_child=None if ell < 0 else ell,
                cstar_child=None if cstar < 0 else cstar,
                best_branch=_BRANCH_NAMES[int(self.best_branch[v])],
            ),
        )


def root_tree(g: Graph, r: int, kernels: Optional[_kernels.Kernels] = None) -> RootedTree:
    """Orient a tree from root ``r``: parents, reverse-BFS order, child lists."""
    k = kernels or _kernels.ACTIVE
    if g.n < 1:
        raise NotATreeError("not a tree: empty vertex set")
    if not 0 <= r < g.n:
        raise GraphError(f"bad root {r}")
    if g.m != g.n - 1:
        raise NotATreeError(f"not a tree: {g.m} edges on {g.n} vertices")
    parent = np.empty(g.n, dtype=np.int64)
    visit = np.empty(g.n, dtype=np.int64)
    count = k.bfs_tree(g.indptr, g.indices, r, parent, visit)
    if count != g.n:
        raise NotATreeError("not a tree: graph is disconnected")
    child_ptr = np.empty(g.n + 1, dtype=np.int64)
    child_idx = np.empty(max(g.n - 1, 1), dtype=np.int64)
    cursor = np.empty(g.n, dtype=np.int64)
    k.children_csr(parent, child_ptr, child_idx, cursor)
    order = visit[::-1].copy()
    return RootedTree(underlying=g, root=r, parent=parent, order=order,
                      child_ptr=child_ptr, child_idx=child_idx)


def dp_pass(t: RootedTree, kernels: Optional[_kernels.Kernels] = None) -> DpTable:
    """Run the leaves-to-root sweep and return the full parameter table."""
    k = kernels or _kernels.ACTIVE
    n = t.underlying.n
    rho = np.empty(n, dtype=np.int64)
    rho_c = np.empty(n, dtype=np.int64)
    rho_ell = np.empty(n, dtype=np.int64)
    rho_p = np.empty(n, dtype=np.int64)
    rho_pp = np.empty(n, dtype=np.int64)
    vtype = np.empty(n, dtype=np.int64)
    ell_child = np.empty(n, dtype=np.int64)
    cstar_child = np.empty(n, dtype=np.int64)
    best_branch = np.empty(n, dtype=np.int64)
    k.tree_dp(t.order, t.child_ptr, t.child_idx, rho, rho_c, rho_ell, rho_p,
              rho_pp, vtype, ell_child, cstar_child, best_branch)
    return DpTable(rho, rho_c, rho_ell, rho_p, rho_pp, vtype, ell_child,
                   cstar_child, best_branch)


def tree_eop_number(g: Graph, kernels: Optional[_kernels.Kernels] = None) -> int:
    """Maximum size of an edge open packing of a tree."""
    t = root_tree(g, 0, kernels)
    table = dp_pass(t, kernels)
    return int(table.rho[t.root])


# reconstruction roles
_R_CENTER = 0   # vertex is a star center: expand per rho_c
_R_LEAF = 1     # vertex is a star leaf: expand per rho_ell
_R_OUT = 2      # vertex not incident: children contribute their optima
_R_DEEP = 3     # closed neighborhood not incident: children go "outside"
_R_BEST = 4     # follow the recorded best branch


def tree_eop_set(g: Graph, kernels: Optional[_kernels.Kernels] = None) -> EopSet:
    """An optimal edge open packing of a tree, rebuilt from the DP table.

    Deterministic: branch ties prefer center, then leaf, then outside, and
    the smallest child id wins inside a branch.  A single packed edge is
    read with the parent-side endpoint as the star leaf.
    """
    t = root_tree(g, 0, kernels)
    table = dp_pass(t, kernels)
    rho_c = table.rho_c
    rho_pp = table.rho_dprime
    vtype = table.vertex_type
    ell_child = table.ell_child
    cstar_child = table.cstar_child
    best = table.best_branch
    picked: list[int] = []
    stack: list[tuple[int, int]] = [(t.root, _R_BEST)]
    while stack:
        v, role = stack.pop()
        if role == _R_BEST:
            role = int(best[v])
        children = t.children(v).tolist()
        if role == _R_CENTER:
            has_t1 = any(vtype[u] == 1 for u in children)
            if has_t1:
                for u in children:
                    if vtype[u] == 1:
                        picked.append(g.edge_id(v, u))
                        stack.append((u, _R_DEEP))
                    else:
                        stack.append((u, _R_OUT))
            else:
                u0 = int(cstar_child[v])
                picked.append(g.edge_id(v, u0))
                stack.append((u0, _R_DEEP))
                for u in children:
                    if u != u0:
                        stack.append((u, _R_OUT))
        elif role == _R_LEAF:
            u0 = int(ell_child[v])
            picked.append(g.edge_id(v, u0))
            # the chosen child centers the star; it hosts its own leaves
            # only when that beats keeping its neighborhood untouched
            stack.append((u0, _R_CENTER if rho_c[u0] > rho_pp[u0] else _R_DEEP))
            for u in children:
                if u != u0:
                    stack.append((u, _R_OUT))
        elif role == _R_OUT:
            for u in children:
                stack.append((u, _R_BEST))
        else:  # _R_DEEP
            for u in children:
                stack.append((u, _R_OUT))
    return EopSet.of(picked)


@dataclass(frozen=True)
class SweepResult:
    trees_checked: int
    mismatches: int
    invariant_violations: int
    first_bad_code: int  # -1 when all trees agreed


def sweep_prufer_trees(n: int, code_lo: int = 0, code_hi: Optional[int] = None,
                       kernels: Optional[_kernels.Kernels] = None) -> SweepResult:
    """Cross-check the DP against subset brute force over labeled trees.

    Decodes every length-(n-2) sequence code in ``[code_lo, code_hi)`` to a
    tree on ``n`` vertices and compares the DP value with an exhaustive
    search over edge subsets, also counting per-vertex invariant
    violations.  ``n >= 2``; the full range covers all ``n**(n-2)`` labeled
    trees.
    """
    if n < 2:
        raise ValueError("sweep needs n >= 2")
    k = kernels or _kernels.ACTIVE
    total = n ** (n - 2)
    if code_hi is None:
        code_hi = total
    if not 0 <= code_lo <= code_hi <= total:
        raise ValueError("bad code range")
    m = n - 1
    seq = np.empty(n - 2, dtype=np.int64)
    deg = np.empty(n, dtype=np.int64)
    eu = np.empty(m, dtype=np.int64)
    ev = np.empty(m, dtype=np.int64)
    adj = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    order = np.empty(n, dtype=np.int64)
    order_rev = np.empty(n, dtype=np.int64)
    child_ptr = np.empty(n + 1, dtype=np.int64)
    child_idx = np.empty(m, dtype=np.int64)
    cursor = np.empty(n, dtype=np.int64)
    rho = np.empty(n, dtype=np.int64)
    rho_c = np.empty(n, dtype=np.int64)
    rho_ell = np.empty(n, dtype=np.int64)
    rho_p = np.empty(n, dtype=np.int64)
    rho_pp = np.empty(n, dtype=np.int64)
    vtype = np.empty(n, dtype=np.int64)
    ell_child = np.empty(n, dtype=np.int64)
    cstar_child = np.empty(n, dtype=np.int64)
    best_branch = np.empty(n, dtype=np.int64)
    masks = np.empty(m, dtype=np.int64)
    valid = np.empty(1 << m, dtype=np.uint8)
    mism, viol, first_bad = k.sweep_prufer(
        n, code_lo, code_hi, seq, deg, eu, ev, adj, parent, order, order_rev,
        child_ptr, child_idx, cursor, rho, rho_c, rho_ell, rho_p, rho_pp,
        vtype, ell_child, cstar_child, best_branch, masks, valid)
    return SweepResult(trees_checked=code_hi - code_lo, mismatches=int(mism),
                       invariant_violations=int(viol),
                       first_bad_code=int(first_bad))
