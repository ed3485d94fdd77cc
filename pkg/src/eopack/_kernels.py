"""Hot numeric kernels with two interchangeable backends.

The default backend compiles these loops with numba's ``@njit``.  Setting
``EOPACK_JIT=0`` (also ``false``/``off``/``no``) in the environment before
import selects the plain-Python fallback, which runs the very same code on
the same numpy arrays, just without compilation.  ``get_kernels("python")``
exposes the fallback at any time for side-by-side benchmarking.

All kernels work in-place on caller-allocated int64 arrays so the exhaustive
tree sweep can recycle its scratch buffers across millions of instances.
"""

from __future__ import annotations

import os
from typing import Callable, NamedTuple

_FALSY = {"0", "false", "off", "no"}


def jit_requested() -> bool:
    return os.environ.get("EOPACK_JIT", "1").strip().lower() not in _FALSY


class Kernels(NamedTuple):
    name: str
    decode_prufer: Callable
    bfs_tree: Callable
    children_csr: Callable
    tree_dp: Callable
    max_valid_subset: Callable
    sweep_prufer: Callable


def _build(jit: bool) -> Kernels:
    if jit:
        from numba import njit as wrap
    else:
        def wrap(f):
            return f

    @wrap
    def decode_prufer(seq, deg, eu, ev):
        # seq has n-2 entries in [0, n); writes the n-1 tree edges.
        n = deg.shape[0]
        for v in range(n):
            deg[v] = 1
        for i in range(seq.shape[0]):
            deg[seq[i]] += 1
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        for i in range(seq.shape[0]):
            v = seq[i]
            eu[i] = leaf
            ev[i] = v
            deg[v] -= 1
            if deg[v] == 1 and v < ptr:
                leaf = v
            else:
                ptr += 1
                while deg[ptr] != 1:
                    ptr += 1
                leaf = ptr
        eu[n - 2] = leaf
        ev[n - 2] = n - 1

    @wrap
    def bfs_tree(indptr, indices, root, parent, order):
        # parent[root] = -1, unvisited = -2; returns number of visited vertices.
        n = parent.shape[0]
        for v in range(n):
            parent[v] = -2
        parent[root] = -1
        order[0] = root
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if parent[w] == -2:
                    parent[w] = v
                    order[tail] = w
                    tail += 1
        return tail

    @wrap
    def children_csr(parent, child_ptr, child_idx, cursor):
        n = parent.shape[0]
        for v in range(n + 1):
            child_ptr[v] = 0
        for v in range(n):
            p = parent[v]
            if p >= 0:
                child_ptr[p + 1] += 1
        for v in range(n):
            child_ptr[v + 1] += child_ptr[v]
        for v in range(n):
            cursor[v] = child_ptr[v]
        for v in range(n):
            p = parent[v]
            if p >= 0:
                child_idx[cursor[p]] = v
                cursor[p] += 1

    @wrap
    def tree_dp(order, child_ptr, child_idx, rho, rho_c, rho_ell, rho_p,
                rho_pp, vtype, ell_child, cstar_child, best_branch):
        # order lists children before parents (root last).  Per vertex:
        #   rho    best packing in the subtree
        #   rho_c  best with the vertex a star center
        #   rho_ell best with the vertex a star leaf
        #   rho_p  best with the vertex not incident to the set
        #   rho_pp best with the whole closed neighborhood not incident
        # Type 1 means rho_pp + 1 >= rho_p.  Branch codes: 0 center, 1 leaf,
        # 2 outside; ties prefer the smaller code, smaller child ids win.
        n = order.shape[0]
        for oi in range(n):
            v = order[oi]
            lo = child_ptr[v]
            hi = child_ptr[v + 1]
            if lo == hi:
                rho[v] = 0
                rho_c[v] = 0
                rho_ell[v] = 0
                rho_p[v] = 0
                rho_pp[v] = 0
                vtype[v] = 1
                ell_child[v] = -1
                cstar_child[v] = -1
                best_branch[v] = 2
                continue
            spp = 0
            sp = 0
            has_t1 = False
            for k in range(lo, hi):
                u = child_idx[k]
                spp += rho_p[u]
                sp += rho[u]
                if vtype[u] == 1:
                    has_t1 = True
            rho_pp[v] = spp
            rho_p[v] = sp
            if spp + 1 >= sp:
                vtype[v] = 1
            else:
                vtype[v] = 2
            best_ell = -1
            best_u = -1
            for k in range(lo, hi):
                u = child_idx[k]
                base = rho_c[u] if rho_c[u] > rho_pp[u] else rho_pp[u]
                mu = base + 1 + (spp - rho_p[u])
                if mu > best_ell:
                    best_ell = mu
                    best_u = u
            rho_ell[v] = best_ell
            ell_child[v] = best_u
            if has_t1:
                s = 0
                for k in range(lo, hi):
                    u = child_idx[k]
                    if vtype[u] == 1:
                        s += rho_pp[u] + 1
                    else:
                        s += rho_p[u]
                rho_c[v] = s
                cstar_child[v] = -1
            else:
                dmin = 0
                du = -1
                first = True
                for k in range(lo, hi):
                    u = child_idx[k]
                    d = rho_pp[u] + 1 - rho_p[u]
                    if first or d < dmin:
                        dmin = d
                        du = u
                        first = False
                rho_c[v] = spp + dmin
                cstar_child[v] = du
            r = rho_c[v]
            if rho_ell[v] > r:
                r = rho_ell[v]
            if rho_p[v] > r:
                r = rho_p[v]
            rho[v] = r
            if rho_c[v] == r:
                best_branch[v] = 0
            elif rho_ell[v] == r:
                best_branch[v] = 1
            else:
                best_branch[v] = 2

    @wrap
    def max_valid_subset(masks, valid):
        # Largest subset S of items with masks[i] & S == 0 for every i in S.
        # valid must hold at least 2**len(masks) bytes.
        m = masks.shape[0]
        total = 1 << m
        valid[0] = 1
        best = 0
        for s in range(1, total):
            i = 0
            while ((s >> i) & 1) == 0:
                i += 1
            r = s & (s - 1)
            if valid[r] and (masks[i] & r) == 0:
                valid[s] = 1
                c = 0
                t = s
                while t:
                    t &= t - 1
                    c += 1
                if c > best:
                    best = c
            else:
                valid[s] = 0
        return best

    @wrap
    def sweep_prufer(n, code_lo, code_hi, seq, deg, eu, ev, adj, parent,
                     order, order_rev, child_ptr, child_idx, cursor, rho,
                     rho_c, rho_ell, rho_p, rho_pp, vtype, ell_child,
                     cstar_child, best_branch, masks, valid):
        # Decode every sequence code in [code_lo, code_hi), solve the tree
        # with the DP and with subset brute force over the edge conflicts,
        # and count disagreements and per-vertex invariant violations.
        m = n - 1
        mism = 0
        viol = 0
        first_bad = -1
        for code in range(code_lo, code_hi):
            c = code
            for i in range(n - 2):
                seq[i] = c % n
                c //= n
            decode_prufer(seq, deg, eu, ev)
            for v in range(n):
                adj[v] = 0
            for i in range(m):
                adj[eu[i]] |= 1 << ev[i]
                adj[ev[i]] |= 1 << eu[i]
            for v in range(n):
                parent[v] = -2
            parent[0] = -1
            order[0] = 0
            head = 0
            tail = 1
            while head < tail:
                v = order[head]
                head += 1
                nb = adj[v]
                w = 0
                while nb:
                    if nb & 1:
                        if parent[w] == -2:
                            parent[w] = v
                            order[tail] = w
                            tail += 1
                    nb >>= 1
                    w += 1
            for i in range(n):
                order_rev[i] = order[n - 1 - i]
            children_csr(parent, child_ptr, child_idx, cursor)
            tree_dp(order_rev, child_ptr, child_idx, rho, rho_c, rho_ell,
                    rho_p, rho_pp, vtype, ell_child, cstar_child, best_branch)
            for v in range(n):
                if rho_p[v] < rho_pp[v]:
                    viol += 1
                r = rho_c[v]
                if rho_ell[v] > r:
                    r = rho_ell[v]
                if rho_p[v] > r:
                    r = rho_p[v]
                if rho[v] != r:
                    viol += 1
            for i in range(m):
                masks[i] = 0
            for i in range(m):
                a = eu[i]
                b = ev[i]
                for j in range(i + 1, m):
                    cc = eu[j]
                    dd = ev[j]
                    if a == cc or a == dd or b == cc or b == dd:
                        # adjacent tree edges never conflict (no triangles)
                        continue
                    if (((adj[a] >> cc) & 1) or ((adj[a] >> dd) & 1)
                            or ((adj[b] >> cc) & 1) or ((adj[b] >> dd) & 1)):
                        masks[i] |= 1 << j
                        masks[j] |= 1 << i
            brute = max_valid_subset(masks, valid)
            if brute != rho[0]:
                mism += 1
                if first_bad < 0:
                    first_bad = code
        return mism, viol, first_bad

    name = "numba" if jit else "python"
    return Kernels(name, decode_prufer, bfs_tree, children_csr, tree_dp,
                   max_valid_subset, sweep_prufer)


def _select_active() -> tuple[Kernels, bool]:
    if jit_requested():
        try:
            import numba  # noqa: F401
        except ImportError:
            return _build(False), False
        return _build(True), True
    return _build(False), False


ACTIVE, JIT_ENABLED = _select_active()
_CACHE: dict[str, Kernels] = {ACTIVE.name: ACTIVE}


def get_kernels(name: str = "active") -> Kernels:
    """Kernel set by backend name: "active", "numba", or "python"."""
    if name == "active":
        return ACTIVE
    if name not in ("numba", "python"):
        raise ValueError(f"unknown backend {name!r}")
    if name not in _CACHE:
        _CACHE[name] = _build(name == "numba")
    return _CACHE[name]


def backend_name() -> str:
    return ACTIVE.name
