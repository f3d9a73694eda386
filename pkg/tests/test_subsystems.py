import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pezzo import fixtures, lattice, subsystems


def test_a2x3_count_and_shape():
    fam = subsystems.enumerate_a2x3_e6()
    assert len(fam) == 40
    assert all(len(s.roots) == 9 and len(s.factors) == 3 for s in fam)
    assert all(subsystems.classify(set(s.roots), 6).kind == "A2x3" for s in fam)


def test_a1x7_count():
    fam = subsystems.enumerate_a1x7_e7()
    assert len(fam) == 135
    assert all(subsystems.classify(set(s.roots), 7).kind == "A1x7" for s in fam)


@pytest.mark.parametrize("n", [6, 7])
def test_families_are_weyl_stable(n):
    assert subsystems.subsystem_closed_under_weyl(n)


@pytest.mark.parametrize("n,rank", [(6, 16), (7, 36)])
def test_incidence_rank(n, rank):
    rep = subsystems.incidence_rank(n)
    assert rep.rank == rank and rep.consistent


def test_incidence_column_sums():
    assert set(subsystems.build_incidence(6).column_sums()) == {9}
    assert set(subsystems.build_incidence(7).column_sums()) == {7}


def test_incidence_csv_shape():
    text = subsystems.build_incidence(6).to_csv().strip().splitlines()
    assert len(text) == 37 and len(text[0].split(",")) == 41


def test_a2_subsystem_count():
    assert len(subsystems.a2_subsystems(6)) == 120
    assert len(subsystems.a2_subsystems(7)) == 336


@pytest.mark.parametrize("n,size", [(6, 15), (7, 34)])
def test_vertex_catalog_validates(n, size):
    verts = subsystems.vertex_catalog(n)
    assert len(verts) == size


def test_classify_rejects_open_set():
    cat = lattice.root_catalog(6)
    with pytest.raises(subsystems.SubsystemError):
        subsystems.classify({cat.label_index("12"), cat.label_index("23")}, 6)


def test_a1_labels_avoid_complements():
    assert subsystems.a1_complement_check()


def test_eckardt_triples():
    rep = subsystems.eckardt_triples()
    assert len(rep.triples) == 45 == rep.tritangent_count
    assert rep.orbit_size == 45
    assert set(rep.triples) == set(subsystems.tritangent_triples(lattice.build_catalogs(6)))
    assert subsystems.is_eckardt_triple(fixtures.ECKARDT_EXAMPLE)
    assert not subsystems.is_eckardt_triple("(12)(13)(14)")


def test_strata_total():
    assert subsystems.strata_total() == 2111


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(0, 35), min_size=1, max_size=4))
def test_closure_is_closed_and_idempotent(seed):
    c = subsystems.closure(set(seed), 6)
    assert seed <= c
    assert subsystems.closure(c, 6) == c
    comps = subsystems.components(c, 6)
    assert set().union(*comps) == c
