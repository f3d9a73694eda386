import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pezzo import checks, fixtures, pezzotope


def test_e6_graph():
    g = checks.graph(6)
    assert g.size == 15 and len(g.edges) == 60
    assert g.census == {"A1-A1": 30, "A1-A2x3": 30}
    degrees = {v.kind: len(g.neighbors(i)) for i, v in enumerate(g.vertices)}
    assert degrees == {"A1": 9, "A2x3": 6}


def test_e6_faces_and_dual_f_vector():
    cx = checks.complex_of(6)
    assert cx.face_counts == (15, 60, 90, 45)
    assert pezzotope.vector_f(cx) == tuple(fixtures.E6_F_VECTOR)
    assert all(len(f) == 4 for f in cx.facets())


def test_e7_graph_and_faces():
    g = checks.graph(7)
    assert len(g.edges) == 297
    assert g.census == fixtures.E7_EDGE_GROUPS
    assert checks.complex_of(7).face_counts == (34, 297, 1105, 2000, 1737, 579)


@pytest.mark.parametrize("n", [6, 7])
def test_clique_complex_is_flag(n):
    cx = checks.complex_of(n)
    assert pezzotope.is_flag(cx, checks.graph(n).edges)
    assert pezzotope.sample_flag_check(cx, checks.graph(n), 300, np.random.default_rng(0))


@pytest.mark.parametrize("n", [6, 7])
def test_facets_are_maximal_cliques(n):
    g = checks.graph(n)
    h = nx.Graph()
    h.add_nodes_from(range(g.size))
    h.add_edges_from(tuple(e) for e in g.edges)
    cliques = {tuple(sorted(c)) for c in nx.find_cliques(h)}
    assert cliques == set(checks.complex_of(n).facets())


def test_e6_homology_is_three_sphere():
    rep = pezzotope.homology(checks.complex_of(6))
    assert rep.betti_rational == (1, 0, 0, 1) and rep.consistent


def test_e7_homology_is_five_sphere():
    rep = pezzotope.homology(checks.complex_of(7))
    assert rep.betti_rational == (1, 0, 0, 0, 0, 1)
    assert rep.consistent and len(rep.betti_mod_p) >= 3


def test_octahedron_boundary():
    edges = {frozenset(p) for p in itertools.combinations(range(6), 2) if set(p) not in ({0, 1}, {2, 3}, {4, 5})}
    cx = pezzotope.clique_complex(nvert=6, edges=edges)
    assert cx.face_counts == (6, 12, 8)
    assert pezzotope.homology(cx).betti_rational == (1, 0, 1)


def test_stanley_reisner_matches_fixture():
    g = checks.fixture_graph7()
    assert len(pezzotope.stanley_reisner(g)) == 264
    assert pezzotope.sr_fixture_diff(g) == (set(), set())


def test_alexander_dual():
    dual = pezzotope.alexander_dual(checks.complex_of(7))
    assert len(dual) == 579 and {len(m) for m in dual} == {28}


def test_facet_links_e6():
    rep = pezzotope.facet_links(checks.complex_of(6), 6)
    assert not rep.unmatched
    sizes = sorted(len(v) for v in rep.classes.values())
    assert sizes == [5, 10]


def test_facet_links_e7():
    rep = pezzotope.facet_links(checks.e7_fixture_complex(), 7)
    assert not rep.unmatched
    want = {tuple(f): sorted(v) for v, f in fixtures.E7_FACET_TYPES}
    assert {k: sorted(v) for k, v in rep.classes.items()} == want


def test_hull():
    rep = pezzotope.hull_check()
    assert rep.f_vector == (15, 60, 90, 45)
    assert rep.simplicial and rep.all_vertices
    assert pezzotope.amplitude_facets_match(rep)


def test_hull_of_cross_polytope():
    m = [[1, -1, 0, 0, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0, 0, 0], [0, 0, 0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 0, 0, 1, -1]]
    rep = pezzotope.hull_check(m)
    assert rep.f_vector == (8, 24, 32, 16) and rep.simplicial


def test_det_int():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    assert pezzotope.det_int(m) == round(np.linalg.det(np.array(m)))


def test_region_orbits():
    assert pezzotope.region_orbit_count(6) == 432


@pytest.mark.slow
def test_region_orbit_e7():
    assert pezzotope.region_orbit_count(7) == 60480


def test_e7_relabeling_is_isomorphism():
    g = checks.graph(7)
    m = pezzotope.fixture_relabeling(g)
    assert m is not None
    assert pezzotope.relabel(g, m).edges == pezzotope.fixture_graph(7).edges


def test_census_error_names_group(monkeypatch):
    monkeypatch.setattr(pezzotope, "E6_CENSUS", {"A1-A1": 31, "A1-A2x3": 30})
    with pytest.raises(pezzotope.CensusError, match="A1-A1"):
        pezzotope.build_graph(6)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 8).flatmap(
    lambda k: st.tuples(st.just(k), st.sets(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1))))))
def test_random_clique_complexes(data):
    k, pairs = data
    edges = {frozenset(p) for p in pairs if p[0] != p[1]}
    cx = pezzotope.clique_complex(nvert=k, edges=edges)
    rep = pezzotope.homology(cx)
    betti = rep.betti_rational
    assert sum((-1) ** i * b for i, b in enumerate(betti)) == cx.euler_characteristic()
    h = nx.Graph()
    h.add_nodes_from(range(k))
    h.add_edges_from(tuple(e) for e in edges)
    assert betti[0] == nx.number_connected_components(h)
    assert pezzotope.is_flag(cx, edges)
