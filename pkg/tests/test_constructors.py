from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hamsets.constructors import (
    GlueSpec,
    barbell,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    figure1_family,
    figure1_specs,
    glue_at_vertex,
    glued_pair,
    path,
    petersen,
    split_graph,
    star,
)
from hamsets.counting import ham_subsets_count
from hamsets.graph import Graph, blocks


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_named_graphs():
    assert complete(4).m == 6
    assert nx.is_isomorphic(_nx(complete_bipartite(2, 2)), nx.cycle_graph(4))
    u = disjoint_union(complete(4), complete(4))
    assert (u.n, u.m, u.average_degree()) == (8, 12, 3)
    assert nx.is_isomorphic(_nx(petersen()), nx.petersen_graph())
    assert (path(4).m, star(4).m, barbell(5).m) == (3, 4, 21)
    with pytest.raises(ValueError):
        cycle(2)


def test_glue_examples():
    g = glue_at_vertex(complete(4), 0, complete(3), 0)
    assert (g.n, g.m, len(blocks(g).cut_vertices)) == (6, 9, 1)
    assert nx.is_isomorphic(_nx(glue_at_vertex(complete(2), 0, complete(2), 0)), nx.path_graph(3))
    g = glue_at_vertex(complete(4), 0, complete(4), 0)
    assert (g.n, g.m) == (7, 12) and g.average_degree() == Fraction(24, 7)
    with pytest.raises(ValueError):
        glue_at_vertex(complete(3), 3, complete(3), 0)


def test_glue_keeps_first_labels():
    g1 = cycle(5)
    g = glue_at_vertex(g1, 2, complete(3), 1)
    for u, v in g1.edges():
        assert g.has_edge(u, v)
    # the other two triangle vertices follow g1's labels
    assert g.has_edge(2, 5) and g.has_edge(2, 6) and g.has_edge(5, 6)


def test_figure1_examples():
    fam = figure1_family(3)
    assert len(fam) == 4
    assert (fam[1].n, fam[1].m, fam[1].average_degree()) == (8, 12, 3)
    assert ham_subsets_count(fam[0]).c == 10
    assert all(g.average_degree() == 2 for g in figure1_family(2))
    assert all(isinstance(s, GlueSpec) for s in figure1_specs(3))


@pytest.mark.parametrize("d", range(2, 13))
def test_figure1_average_degree_exact(d):
    for g in figure1_family(d):
        assert g.average_degree() == Fraction(d)
    g = figure1_family(d)[1]
    assert g.n == (d + 1) + 2 * (d - 1)
    assert g.m == (d + 1) * d // 2 + 2 * (d * (d - 1) // 2)


def test_glue_spec_rejects_wrong_attachments():
    with pytest.raises(ValueError):
        GlueSpec((3, 3, 3), ((0, 0),))


small = st.integers(1, 8).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2),
    )
)


def _build(spec) -> Graph:
    n, mask = spec
    pairs = itertools.combinations(range(n), 2)
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@given(small, small, st.data())
@settings(max_examples=60, deadline=None)
def test_gluing_adds_counts(a, b, data):
    g1, g2 = _build(a), _build(b)
    v1 = data.draw(st.integers(0, g1.n - 1))
    v2 = data.draw(st.integers(0, g2.n - 1))
    g = glue_at_vertex(g1, v1, g2, v2)
    assert g.n == g1.n + g2.n - 1 and g.m == g1.m + g2.m
    assert ham_subsets_count(g).c == ham_subsets_count(g1).c + ham_subsets_count(g2).c


@given(small, small, small)
@settings(max_examples=30, deadline=None)
def test_chain_gluing_adds_counts(a, b, c):
    ga, gb, gc = _build(a), _build(b), _build(c)
    if gb.n < 2:
        return
    g = glue_at_vertex(ga, 0, gb, 0)
    # attach the third graph at a different vertex of the middle one
    g = glue_at_vertex(g, ga.n, gc, 0)
    want = sum(ham_subsets_count(x).c for x in (ga, gb, gc))
    assert ham_subsets_count(g).c == want


def test_glued_pair_and_split_graph():
    g = glued_pair(5, 4)
    assert (g.n, g.m) == (8, 16)
    s = split_graph(3, 4)
    assert (s.n, s.m) == (7, 3 + 12)
