from __future__ import annotations

import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import closed_bipartite, closed_complete, closed_glued, ham_sizes, path_subsets

from hamsets.constructors import complete, complete_bipartite, cycle, glue_at_vertex, path
from hamsets.counting import (
    closed_form_bipartite,
    closed_form_complete,
    closed_form_glued,
    count_all_cycles,
    ham_fraction_estimate,
    ham_subsets_count,
    path_subsets_count,
    subset_masks,
    tuza_floor,
    weak_ham_count,
)
from hamsets.graph import CapExceeded, Graph, blocks


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


# -- examples ------------------------------------------------------------------

def test_count_examples():
    assert ham_subsets_count(complete(4)).c == 5
    assert ham_subsets_count(cycle(7)).c == 1
    assert ham_subsets_count(glue_at_vertex(complete(4), 0, complete(3), 0)).c == 6
    tree = Graph(10, nx.random_labeled_tree(10, seed=1).edges())
    assert ham_subsets_count(tree).c == 0


def test_report_fields():
    r = ham_subsets_count(complete(5), with_nu=True)
    assert r.by_size == {3: 10, 4: 5, 5: 1}
    assert r.weak == r.c + r.e + r.n + 1
    assert r.nu == 37
    d = r.as_dict()
    assert d["by_size"] == {"3": 10, "4": 5, "5": 1}
    assert "by_size" not in r.as_dict(with_sizes=False)


def test_cap():
    with pytest.raises(CapExceeded, match="ham_fraction_estimate"):
        ham_subsets_count(cycle(25))
    with pytest.raises(CapExceeded):
        count_all_cycles(cycle(23))


def test_path_count_examples():
    assert path_subsets_count(complete(3), 0, 1).p == 2
    assert path_subsets_count(path(3), 0, 2).p == 1
    assert path_subsets_count(complete(4), 1, 3).p == 4
    with pytest.raises(ValueError):
        path_subsets_count(complete(3), 1, 1)


def test_weak_examples():
    assert weak_ham_count(complete(4)) == 16
    assert weak_ham_count(complete(3)) == 8
    assert weak_ham_count(Graph(5)) == 6


def test_cycle_census_examples():
    assert count_all_cycles(complete(4)) == 7
    assert count_all_cycles(cycle(9)) == 1
    assert count_all_cycles(path(6)) == 0


def test_cycle_census_crt_range():
    # orders 21 and 22 use the two-prime route; compare with the cycle
    # formula for complete graphs on small orders and with C_n
    assert count_all_cycles(cycle(22)) == 1
    g = glue_at_vertex(complete(6), 0, cycle(16), 0)
    assert g.n == 21
    assert count_all_cycles(g) == count_all_cycles(complete(6)) + 1


def test_closed_forms():
    assert closed_form_complete(5) == 42
    assert closed_form_glued(3) == 6
    assert closed_form_bipartite(3, 3) == 10
    assert closed_form_bipartite(2, 2) == 1
    assert tuza_floor(3) == 3
    for d in range(2, 40):
        assert closed_form_complete(d) == closed_complete(d)
        assert closed_form_glued(d) == closed_glued(d)
        assert tuza_floor(d) ** 2 >= 2**d > (tuza_floor(d) - 1) ** 2
    for a in range(2, 12):
        for b in range(a, 12):
            assert closed_form_bipartite(a, b) == closed_bipartite(a, b)


@pytest.mark.parametrize("d", range(2, 11))
def test_dp_matches_complete_formula(d):
    assert ham_subsets_count(complete(d + 1)).c == closed_form_complete(d)


@pytest.mark.parametrize("a,b", [(a, b) for a in range(2, 7) for b in range(a, 7)])
def test_dp_matches_bipartite_formula(a, b):
    assert ham_subsets_count(complete_bipartite(a, b)).c == closed_form_bipartite(a, b)


# -- oracles and invariants ----------------------------------------------------

@given(graphs())
@settings(max_examples=300)
def test_dp_matches_backtracking(g):
    r = ham_subsets_count(g)
    assert r.by_size == ham_sizes(g.n, list(g.edges()))
    assert r.c == sum(r.by_size.values()) and all(k >= 3 for k in r.by_size)
    assert 0 <= r.c <= 2**g.n


@given(graphs(min_n=2, max_n=7), st.data())
@settings(max_examples=150)
def test_path_count_matches_backtracking(g, data):
    x, y = data.draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    p = path_subsets_count(g, x, y).p
    assert p == path_subsets(g.n, list(g.edges()), x, y)
    assert p <= 2 ** (g.n - 2)


@given(graphs(max_n=8))
@settings(max_examples=150)
def test_cycle_census_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert count_all_cycles(g) == sum(1 for _ in nx.simple_cycles(h))


@given(graphs(max_n=8), st.data())
@settings(max_examples=100)
def test_adding_an_edge_never_decreases(g, data):
    missing = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)]
    if not missing or g.n < 2:
        return
    e = data.draw(st.sampled_from(missing))
    h = g.with_edges([e])
    a, b = ham_subsets_count(g, with_nu=True), ham_subsets_count(h, with_nu=True)
    assert b.c >= a.c and b.weak >= a.weak and b.nu >= a.nu
    x, y = e
    assert path_subsets_count(h, x, y).p >= path_subsets_count(g, x, y).p


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_count_is_additive_over_blocks(g):
    total = 0
    for b in blocks(g).blocks:
        sub, _ = g.induced(sorted(b))
        total += ham_subsets_count(sub).c
    assert ham_subsets_count(g).c == total


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_ahrens_bounds(g):
    if g.n == 0 or not g.is_connected():
        return
    k = g.m - g.n + 1
    nu = count_all_cycles(g)
    assert k <= nu <= 2**k - 1


def test_volkmann_bound_is_not_general():
    # K_4 has 7 cycles but delta(delta+1) = 12; recorded, never asserted
    assert count_all_cycles(complete(4)) < 3 * 4


# -- Monte Carlo ---------------------------------------------------------------

def test_fraction_estimate_complete():
    exact = (2**12 - math.comb(12, 2) - 12 - 1 - 1) / 2**12
    est = ham_fraction_estimate(complete(12), 10_000, seed=4)
    assert abs(float(est.fraction) - exact) < 0.02
    assert est.half_width < 0.02


def test_fraction_estimate_cycle_and_empty():
    assert ham_fraction_estimate(cycle(20), 2000, seed=1).fraction <= 1 / 2**10
    assert ham_fraction_estimate(Graph(6), 100).fraction == 0
    with pytest.raises(ValueError):
        ham_fraction_estimate(cycle(5), 0)


def test_fraction_estimate_deterministic_and_prefix_stable():
    g = Graph(14, nx.gnp_random_graph(14, 0.5, seed=2).edges())
    assert ham_fraction_estimate(g, 500, 9) == ham_fraction_estimate(g, 500, 9)
    a = subset_masks(14, 100, 9)
    b = subset_masks(14, 60, 9, start=40)
    assert list(a[40:]) == list(b)


def test_fraction_estimate_against_exact():
    rng = random.Random(6)
    for _ in range(5):
        n = rng.randint(8, 14)
        g = Graph(n, nx.gnp_random_graph(n, 0.6, seed=rng.randrange(10**6)).edges())
        exact = ham_subsets_count(g).c / 2**n
        est = ham_fraction_estimate(g, 4000, seed=rng.randrange(100))
        assert abs(float(est.fraction) - exact) < 0.05
