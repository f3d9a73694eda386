import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pezzo import fixtures, lattice


@pytest.mark.parametrize("n,lines,degree", [(4, 10, 3), (5, 16, 5), (6, 27, 10), (7, 56, 28)])
def test_line_counts_and_degrees(n, lines, degree):
    cat = lattice.build_catalogs(n)
    assert len(cat.line_names) == lines
    assert all(v.is_line() for v in cat.lines)
    m = cat.intersections
    assert (m == m.T).all()
    off = m - np.diag(np.diag(m))
    meets = (off > 0).sum(axis=1)
    assert set(meets.tolist()) == {degree}


def test_seven_points_each_e_meets_its_cubic_twice():
    cat = lattice.build_catalogs(7)
    for i in range(1, 8):
        assert cat.line(f"E{i}").dot(cat.line(f"H{i}")) == 2


@pytest.mark.parametrize("n,count", [(4, 10), (5, 20), (6, 36), (7, 63)])
def test_root_catalog(n, count):
    cat = lattice.root_catalog(n)
    assert len(cat) == count
    assert len(set(cat.labels)) == count
    assert len({r.coeffs for r in cat.roots}) == count
    assert all(r.is_root() for r in cat.roots)
    assert all((-r).coeffs not in cat.index for r in cat.roots)


def test_reflection_transposition():
    w = lattice.reflection(lattice.root_from_label("12", 6))
    cat = lattice.build_catalogs(6)
    perm = lattice.line_permutation(w, cat)
    assert perm["E1"] == "E2" and perm["E2"] == "E1"
    assert all(perm[f"E{i}"] == f"E{i}" for i in range(3, 7))
    assert w.apply((1,) + (0,) * 6) == (1,) + (0,) * 6


@pytest.mark.parametrize("n", [6, 7])
def test_cremona_line_swaps(n):
    cat = lattice.build_catalogs(n)
    perm = lattice.line_permutation(lattice.cremona(n, cat.roots), cat)
    want = {frozenset(p) for p in fixtures.CREMONA_LINE_SWAPS[n]}
    assert lattice.transpositions(perm) == want


def test_reflection_rejects_non_root():
    with pytest.raises(ValueError):
        lattice.reflection(lattice.PicardClass((1, -1, 0, 0, 0, 0, 0)))


def test_weyl_orders():
    assert lattice.weyl_group_order(6) == 51840
    assert lattice.weyl_group_order(7) == 2903040


def test_label_transpositions_alone_give_symmetric_group():
    assert lattice.weyl_group_order(6, with_cremona=False) == 720
    assert lattice.weyl_group_order(7, with_cremona=False) == 5040


def test_stabilizer_chain_small_group():
    # cyclic group of order 5 and dihedral group of order 10 on 5 points
    rot = (1, 2, 3, 4, 0)
    flip = (0, 4, 3, 2, 1)
    assert lattice.StabilizerChain([rot], 5).order() == 5
    assert lattice.StabilizerChain([rot, flip], 5).order() == 10


def test_orbit_budget():
    cat = lattice.build_catalogs(6)
    perms, act = lattice.line_action(cat)
    res = lattice.orbit(frozenset(["E1"]), act, perms)
    assert res.size == 27
    with pytest.raises(lattice.OrbitBudgetExceeded):
        lattice.orbit(frozenset(["E1"]), act, perms, budget=5)


def test_orbit_of_disjoint_sixes_is_72():
    cat = lattice.build_catalogs(6)
    perms, act = lattice.line_action(cat)
    assert lattice.orbit(frozenset(f"E{i}" for i in range(1, 7)), act, perms).size == 72


@pytest.mark.parametrize("n", [6, 7])
def test_cremona_matrix_properties(n):
    rep = lattice.verify_cremona_matrices(n)
    # every root form maps to a root form up to sign, and the matrix is an involution
    assert all(r["observed"] is not None for r in rep.rows)
    assert rep.involution
    if n == 7:
        assert rep.restriction_ok


def test_identity_matrix_gives_identity_permutation():
    cat = lattice.root_catalog(6)
    ident = [[3 if i == j else 0 for j in range(6)] for i in range(6)]
    assert lattice.form_permutation(ident, 3, cat) == [(i, 1) for i in range(36)]


def test_cremona_matrix_with_transpositions_generates_weyl_group():
    assert lattice.cremona_group_order(6) == 51840


def test_finite_field_count_against_brute_force():
    q = 7
    forms = np.array([r.d_form() for r in lattice.root_catalog(6).roots])
    grid = np.array(list(itertools.product(range(q), repeat=6)))
    brute = int(np.all((grid @ forms.T) % q != 0, axis=1).sum())
    assert lattice.finite_field_complement_count(6, q).count == brute


@pytest.mark.parametrize("q", [13, 17])
def test_finite_field_matches_polynomial(q):
    fc = lattice.finite_field_complement_count(6, q)
    assert fc.agrees and not fc.flagged


def test_reduced_polynomial_at_one():
    assert lattice.reduced_char_poly_at_one(6) == 5040
    assert lattice.reduced_char_poly_at_one(7) == 368640


roots6 = st.sampled_from(lattice.root_catalog(6).roots)
classes6 = st.lists(st.integers(-4, 4), min_size=7, max_size=7).map(tuple)


@settings(max_examples=60, deadline=None)
@given(roots6, classes6, classes6)
def test_reflection_is_isometric_involution(r, x, y):
    w = lattice.reflection(r)
    assert w.preserves_form(x, y)
    assert w.apply(w.apply(x)) == x
    k = lattice.canonical_class(6).coeffs
    assert w.apply(k) == k
    assert w.apply(r.coeffs) == (-r).coeffs


@settings(max_examples=40, deadline=None)
@given(roots6, roots6)
def test_reflections_permute_catalog(r, s):
    w = lattice.reflection(r)
    img = lattice.PicardClass(w.apply(s.coeffs))
    assert img.is_root()
    lattice.root_catalog(6).signed_index(img.coeffs)
