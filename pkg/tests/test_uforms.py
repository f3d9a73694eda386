from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pezzo import checks, fixtures, uforms

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_generated_systems_match_fixtures():
    assert checks._u_system(6)
    assert checks._u_system(7)
    assert checks._u_m05(0)


def test_e6_system_is_perfect():
    eqs = uforms.generate_u_system(checks.graph(6)).equations()
    assert len(eqs) == 15
    assert all(set(mon.values()) == {1} for _, mon in eqs)


@settings(max_examples=80, deadline=None)
@given(rationals, rationals)
def test_m05_coordinates_solve_equations(x, y):
    assume(x not in (0, 1) and y not in (0, 1) and x != y)
    u = uforms.m05_u_values(x, y)
    system = uforms.USystem(fixtures.M05_U_SUPPORTS)
    assert system.holds(u)
    if 0 < x < y < 1:
        assert all(0 < v < 1 for v in u.values())


def test_m05_boundary():
    with pytest.raises(uforms.BoundaryError):
        uforms.m05_u_values(Fraction(1, 2), Fraction(1, 2))


def test_sign_census():
    pats = uforms.m05_sign_census()
    assert len(pats) == 12
    assert pats == set(fixtures.M05_U_SIGNS)


def test_sign_census_regions():
    # twelve regions of five lines in the affine plane, seen with the line at infinity
    assert len(uforms.m05_regions()) == 12


d_points = st.lists(rationals, min_size=6, max_size=6)


def _off_hyperplanes(d):
    from pezzo import lattice

    return all(sum(c * x for c, x in zip(r.d_form(), d)) != 0 for r in lattice.root_catalog(6).roots)


@settings(max_examples=60, deadline=None)
@given(d_points)
def test_parametrization_solves_e6_equations(d):
    assume(_off_hyperplanes(d))
    u = uforms.dunit_u_values(d)
    assert uforms.USystem(fixtures.E6_U_SUPPORTS).holds(u)


@settings(max_examples=40, deadline=None)
@given(d_points)
def test_two_routes_agree(d):
    assume(_off_hyperplanes(d))
    assert uforms.dunit_u_values(d) == uforms.plucker_u_values(uforms.cuspidal_matrix(d))


def test_parametrization_hundred_points():
    assert checks._parametrization(0) == 100


def test_boundary_point_rejected():
    with pytest.raises(uforms.BoundaryError):
        uforms.dunit_u_values([1, 1, 2, 3, 5, 7])


def test_jacobian_rank():
    import random

    x = checks._chart_point(random.Random(3))
    assert uforms.jacobian_rank(x) == 4
    assert uforms.jacobian_rank(x, p=1_000_003) == 4


chart = st.lists(rationals, min_size=4, max_size=4)


@settings(max_examples=60, deadline=None)
@given(chart)
def test_omega_chart_matches_closed_form(x):
    try:
        uforms.closed_form_denominator(x)
        uforms.log_jacobian(x)
    except uforms.BoundaryError:
        assume(False)
    assert uforms.omega_chart_eval(x) == uforms.omega_closed_form(x)


def test_omega_fifty_points():
    assert checks._omega_chart(0) == 50


def test_omega_orbit():
    assert uforms.omega_orbit_count() == 432


def test_omega_root_matrix_rank():
    from pezzo.linalg import rank_rational

    assert rank_rational(uforms.omega_root_matrix()) == 4


def test_form_key_detects_proportional_rows():
    a = [[1, 2, 0, 1], [0, 1, 1, 3]]
    b = [[1, 3, 1, 4], [0, -1, -1, -3]]  # determinant -1 row operation
    doubled = [[2, 5, 1, 5], [0, -1, -1, -3]]  # determinant -2
    assert uforms.form_key(a) == uforms.form_key(b)
    assert uforms.form_key(a) != uforms.form_key(doubled)
    assert uforms.form_key(a) != uforms.form_key([[1, 0, 0, 0], [0, 1, 0, 0]])
