"""Shared corpora and strategies for the test suite."""

import random

import pytest
from hypothesis import strategies as st

from eopack.generators import random_graph, random_tree
from eopack.graph import Graph


_scorecard = []


def record_scorecard(line):
    """Queue a guarantee result for the end-of-run summary."""
    _scorecard.append(line)


def pytest_terminal_summary(terminalreporter):
    if _scorecard:
        terminalreporter.section("guarantee scorecard")
        for line in _scorecard:
            terminalreporter.line(line)


def seeded_graphs(count, n_lo, n_hi, seed, p_lo=0.15, p_hi=0.85,
                  min_edges=0, connected_only=False):
    """Deterministic list of random graphs for cross-solver checks."""
    from eopack.graph import connected_components
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_lo, n_hi)
        g = random_graph(n, rng.uniform(p_lo, p_hi), rng)
        if g.m < min_edges:
            continue
        if connected_only and len(connected_components(g)) != 1:
            continue
        out.append(g)
    return out


@pytest.fixture(scope="session")
def small_graph_corpus():
    return seeded_graphs(60, 1, 9, seed=1301)


@pytest.fixture(scope="session")
def small_tree_corpus():
    return [random_tree(n, seed=7 * n + i) for n in range(2, 15) for i in range(4)]


@st.composite
def graph_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(all_pairs), unique=True,
                          max_size=len(all_pairs))) if all_pairs else []
    return Graph.from_edges(n, edges)


@st.composite
def tree_strategy(draw, max_n=10):
    n = draw(st.integers(min_value=2, max_value=max_n))
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = draw(st.lists(st.integers(min_value=0, max_value=n - 1),
                        min_size=n - 2, max_size=n - 2))
    from eopack.generators import decode_prufer
    return decode_prufer(seq, n)
