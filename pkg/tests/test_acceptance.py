"""End-to-end checks of the package's advertised guarantees.

Each test covers one numbered guarantee and contributes a PASS/FAIL line
(with wall time) to the scorecard section printed after the run, so a
plain ``pytest tests/test_acceptance.py`` always shows the tally.
Guarantees that come with a wall-clock budget assert it; the rest only
assert exactness.
"""

import random
import time

from eopack.bounds import (build_family_f, build_removal_realization,
                           check_char_theorem, delta_bound_check,
                           edge_removal_profile, recognize_family_f)
from eopack.exact import (eop_number_exact, induced_matching_number,
                          max_independent_set)
from eopack.gadgets import (EULERIAN, PLANAR, UNIVERSAL,
                            build_eulerian_gadget, build_eulerian_witness,
                            verify_reduction)
from eopack.generators import (all_trees, complete_graph,
                               complete_graph_minus_edge, cycle_graph,
                               path_graph, random_tree, star_graph)
from eopack.graph import connected_components, is_eop_set, without_edge
from eopack.tree import dp_pass, root_tree, sweep_prufer_trees, tree_eop_number

from conftest import record_scorecard, seeded_graphs


def _check(num, label, problems, elapsed, limit=None):
    """File the scorecard line for one guarantee, then assert it."""
    ok = not problems and (limit is None or elapsed <= limit)
    line = f"[{num:2d}] {'PASS' if ok else 'FAIL'} {elapsed:7.2f}s  {label}"
    record_scorecard(line)
    assert not problems, f"[{num}] {label}: " + "; ".join(map(str, problems[:5]))
    if limit is not None:
        assert elapsed <= limit, (
            f"[{num}] {label}: {elapsed:.2f}s over the {limit:g}s budget")


def test_01_ten_cycle_value():
    t0 = time.perf_counter()
    value = eop_number_exact(cycle_graph(10)).value
    problems = [] if value == 4 else [f"C_10 solved to {value}, wanted 4"]
    _check(1, "exact solver: ten-cycle packs 4 edges", problems,
           time.perf_counter() - t0, limit=1.0)


def test_02_complete_and_near_complete():
    t0 = time.perf_counter()
    problems = []
    for n in range(3, 8):
        full = eop_number_exact(complete_graph(n)).value
        dented = eop_number_exact(complete_graph_minus_edge(n)).value
        if full != 1:
            problems.append(f"K_{n} solved to {full}, wanted 1")
        if dented != 2:
            problems.append(f"K_{n} minus an edge solved to {dented}, wanted 2")
    _check(2, "complete graphs pack 1 edge, near-complete pack 2", problems,
           time.perf_counter() - t0, limit=1.0)


def test_03_tree_solver_matches_exhaustive():
    t0 = time.perf_counter()
    problems = []
    # every labeled tree on up to 9 vertices, against in-kernel subset search
    for n in range(2, 10):
        res = sweep_prufer_trees(n)
        if res.mismatches:
            problems.append(f"n={n}: {res.mismatches} value mismatches "
                            f"(first code {res.first_bad_code})")
        if res.invariant_violations:
            problems.append(f"n={n}: {res.invariant_violations} table "
                            "invariant violations")
    # plus a seeded random sample of larger trees against branch and bound
    rng = random.Random(2403)
    for _ in range(1000):
        g = random_tree(rng.randint(2, 16), seed=rng.randrange(1 << 30))
        fast, slow = tree_eop_number(g), eop_number_exact(g).value
        if fast != slow:
            problems.append(f"random tree n={g.n}: dp {fast} != exact {slow}")
    _check(3, "tree solver agrees with exhaustive search (all trees n<=9, "
              "1000 random n<=16)", problems, time.perf_counter() - t0,
           limit=60.0)


def test_04_star_center_table():
    t0 = time.perf_counter()
    problems = []
    for t in range(1, 9):
        table = dp_pass(root_tree(star_graph(t), 0))
        got = (int(table.rho_c[0]), int(table.rho_ell[0]),
               int(table.rho_prime[0]), int(table.rho_dprime[0]))
        if got != (t, 1, 0, 0):
            problems.append(f"star with {t} leaves: center row {got}, "
                            f"wanted ({t}, 1, 0, 0)")
    _check(4, "star centers tabulate (t, 1, 0, 0)", problems,
           time.perf_counter() - t0)


def test_05_table_invariants():
    t0 = time.perf_counter()
    suite = [g for n in range(2, 7) for g in all_trees(n)]
    rng = random.Random(2405)
    suite += [random_tree(rng.randint(2, 16), seed=rng.randrange(1 << 30))
              for _ in range(200)]
    problems = []
    for g in suite:
        table = dp_pass(root_tree(g, 0))
        for v in range(g.n):
            if table.rho_prime[v] < table.rho_dprime[v]:
                problems.append(f"n={g.n} v={v}: rho' < rho''")
            want = max(table.rho_c[v], table.rho_ell[v], table.rho_prime[v])
            if table.rho[v] != want:
                problems.append(f"n={g.n} v={v}: rho != max of the three")
    _check(5, "per-vertex table invariants hold on "
              f"{len(suite)} trees", problems, time.perf_counter() - t0)


def _identity_problems(report, tag):
    out = []
    if report.mode != "exact":
        out.append(f"{tag}: gadget solve did not finish")
    if not report.witness_valid:
        out.append(f"{tag}: witness is not a packing")
    if report.witness_size != report.predicted_value:
        out.append(f"{tag}: witness size {report.witness_size} != "
                   f"predicted {report.predicted_value}")
    if report.identity_holds is not True:
        out.append(f"{tag}: gadget optimum {report.exact_value} != "
                   f"predicted {report.predicted_value}")
    return out


def test_06_universal_reduction_identity():
    t0 = time.perf_counter()
    sources = seeded_graphs(20, 1, 6, seed=2406)
    sources += [cycle_graph(5), complete_graph(3), complete_graph(1)]
    problems = []
    for i, g in enumerate(sources):
        problems += _identity_problems(verify_reduction(g, UNIVERSAL),
                                       f"source {i} (n={g.n}, m={g.m})")
    _check(6, "hub gadget optimum is m+n+alpha on 23 sources", problems,
           time.perf_counter() - t0, limit=120.0)


def test_07_planar_reduction_identity():
    t0 = time.perf_counter()
    pool = seeded_graphs(60, 3, 6, seed=2407)
    sources = [g for g in pool if g.max_degree() >= 2][:20]
    problems = [] if len(sources) == 20 else ["source pool came up short"]
    for i, g in enumerate(sources):
        report = verify_reduction(g, PLANAR)
        tag = f"source {i} (n={g.n}, m={g.m})"
        problems += _identity_problems(report, tag)
        from eopack.gadgets import build_planar_gadget
        if build_planar_gadget(g).graph.max_degree() != g.max_degree() + 1:
            problems.append(f"{tag}: gadget did not raise the max degree by 1")
    _check(7, "path-cover gadget optimum is 2n+alpha and Delta goes up by 1 "
              "on 20 sources", problems, time.perf_counter() - t0, limit=120.0)


def test_08_eulerian_reduction():
    t0 = time.perf_counter()
    problems = []

    def count_problems(g, out, tag):
        bad = []
        if out.graph.n != 2 * g.n + 24 * g.m:
            bad.append(f"{tag}: vertex count {out.graph.n} != 2n+24m")
        if out.graph.m != g.n + 30 * g.m:
            bad.append(f"{tag}: edge count {out.graph.m} != n+30m")
        return bad

    # witnesses of the predicted size on seeded sources, counts on all
    for i, g in enumerate(seeded_graphs(10, 1, 6, seed=2408)):
        tag = f"source {i} (n={g.n}, m={g.m})"
        out = build_eulerian_gadget(g)
        problems += count_problems(g, out, tag)
        alpha = max_independent_set(g)
        witness = build_eulerian_witness(g, alpha.witness)
        if not is_eop_set(out.graph, witness):
            problems.append(f"{tag}: witness is not a packing")
        if len(witness) != 12 * g.m + alpha.value:
            problems.append(f"{tag}: witness size {len(witness)} != 12m+alpha")
    # the full identity on the three smallest sources
    for g, tag in ((complete_graph(1), "K_1"), (complete_graph(2), "K_2"),
                   (path_graph(3), "P_3")):
        problems += count_problems(g, build_eulerian_gadget(g), tag)
        problems += _identity_problems(verify_reduction(g, EULERIAN), tag)
    # an Eulerian output for an Eulerian-eligible source
    h = build_eulerian_gadget(complete_graph(4)).graph
    if len(connected_components(h)) != 1:
        problems.append("K_4 gadget is disconnected")
    if any(int(d) % 2 for d in h.degrees()):
        problems.append("K_4 gadget has an odd-degree vertex")
    _check(8, "tour gadget: sized witnesses, 2n+24m/n+30m counts, exact "
              "identity on 3 small sources, Eulerian output for K_4",
           problems, time.perf_counter() - t0, limit=300.0)


def test_09_degree_bound_and_tight_characterization():
    from eopack.generators import connected_graphs
    t0 = time.perf_counter()
    problems = []
    checked = 0
    for n in range(2, 7):
        for g in connected_graphs(n):
            checked += 1
            if not delta_bound_check(g).bound_holds:
                problems.append(f"bound fails on n={n} graph #{checked}")
            if not check_char_theorem(g):
                problems.append(f"tightness test wrong on n={n} #{checked}")
            if len(problems) > 4:
                break
        if len(problems) > 4:
            break
    for pattern in [(2, 1, 2, 1), (2, 1, 4, 2), (2, 2, 4, 2), (3, 1, 6, 4),
                    (3, 1, 3, 2), (3, 2, 6, 2), (4, 1, 8, 3), (2, 3, 6, 3)]:
        g = build_family_f(*pattern)
        if recognize_family_f(g) is None:
            problems.append(f"built member {pattern} not recognized")
        if not delta_bound_check(g).is_tight:
            problems.append(f"built member {pattern} not tight")
    _check(9, f"rho*delta <= m and the tightness test hold on all {checked} "
              "connected graphs n<=6; built family members tight",
           problems, time.perf_counter() - t0, limit=600.0)


def test_10_edge_removal():
    t0 = time.perf_counter()
    problems = []
    for i, g in enumerate(seeded_graphs(40, 2, 8, seed=2410, min_edges=1)):
        profile = edge_removal_profile(g)
        if not profile.bounds_ok:
            problems.append(f"graph {i}: an entry left the predicted range")
    for b in range(2, 7):
        valid_a = (1, 2, 3) if b == 2 else range(b - 1, 2 * b - 1)
        for a in valid_a:
            g, e = build_removal_realization(a, b)
            before = eop_number_exact(g).value
            after = eop_number_exact(without_edge(g, g.edge_id(*e))).value
            if (before, after) != (b, a):
                problems.append(f"(a={a}, b={b}): built graph gives "
                                f"{before} -> {after}")
    _check(10, "removal stays in range on 40 seeded graphs; every (a, b) "
               "drop b<=6 is realized exactly", problems,
           time.perf_counter() - t0, limit=120.0)


def test_11_induced_matching_lower_bound():
    t0 = time.perf_counter()
    problems = []
    for i, g in enumerate(seeded_graphs(60, 1, 9, seed=2411)):
        im = induced_matching_number(g).value
        rho = eop_number_exact(g).value
        if im > rho:
            problems.append(f"graph {i} (n={g.n}, m={g.m}): "
                            f"induced matching {im} > packing {rho}")
    _check(11, "induced matching number never exceeds the packing number "
               "(60 seeded graphs)", problems, time.perf_counter() - t0)


def test_12_tree_solver_linearity():
    tree_eop_number(random_tree(64, seed=2412))  # warm the compiled path
    small = random_tree(10 ** 5, seed=2413)
    large = random_tree(10 ** 6, seed=2414)

    def best_of(g, repeat=3):
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            tree_eop_number(g)
            best = min(best, time.perf_counter() - t0)
        return best

    t0 = time.perf_counter()
    t_small, t_large = best_of(small), best_of(large)
    ratio = t_large / t_small
    problems = []
    if t_large >= 5.0:
        problems.append(f"10^6 vertices took {t_large:.2f}s, budget 5s")
    if not (10 / 3 <= ratio <= 30):
        problems.append(f"10x input scaled time by {ratio:.1f}x, "
                        "outside [3.3, 30]")
    _check(12, f"tree solve scales linearly (10^5: {t_small:.3f}s, "
               f"10^6: {t_large:.3f}s)", problems, time.perf_counter() - t0)
