from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pezzo import amplitudes, scatter

coef = st.integers(-5, 5)
monomials = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coef, max_size=5)
points = st.tuples(st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False),
                   st.complex_numbers(max_magnitude=2, allow_nan=False, allow_infinity=False))


@settings(max_examples=60, deadline=None)
@given(monomials, monomials, points)
def test_poly_product_and_sum(a, b, x):
    pa = {k: Fraction(v) for k, v in a.items() if v}
    pb = {k: Fraction(v) for k, v in b.items() if v}
    va, vb = scatter.p_eval(pa, x), scatter.p_eval(pb, x)
    assert scatter.p_eval(scatter.p_mul(pa, pb), x) == pytest.approx(va * vb, abs=1e-9)
    assert scatter.p_eval(scatter.p_add(pa, pb, -1), x) == pytest.approx(va - vb, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(monomials, points)
def test_poly_derivative(a, x):
    pa = {k: Fraction(v) for k, v in a.items() if v}
    h = 1e-6
    num = (scatter.p_eval(pa, (x[0] + h, x[1])) - scatter.p_eval(pa, (x[0] - h, x[1]))) / (2 * h)
    assert scatter.p_eval(scatter.p_diff(pa, 0), x) == pytest.approx(num, rel=1e-5, abs=1e-5)


def _solve(name, seed=1, params=None):
    sys = scatter.model(name)
    if params is None:
        rng = np.random.default_rng(seed)
        params = rng.normal(size=sys.nparams) + 1j * rng.normal(size=sys.nparams)
    return sys, scatter.monodromy_solve(sys, sys.target, seed=seed, params=params)


@pytest.mark.parametrize("name,count", [("y35", 2), ("s5", 16), ("y36", 32)])
def test_ml_degrees(name, count):
    sys, sol = _solve(name)
    assert sys.target == count
    assert sol.found == count and sol.certified.all()
    c = sys.exponents(sol.params)
    res = sys.residual(sol.points, np.broadcast_to(c, (len(sol.points), len(c))))
    assert np.abs(res).max() < 1e-8


def test_solutions_are_distinct():
    _, sol = _solve("y36")
    d = np.linalg.norm(sol.points[:, None, :] - sol.points[None, :, :], axis=2)
    assert d[np.triu_indices(len(d), 1)].min() > 1e-6


def test_seed_independence():
    assert _solve("s5", seed=7)[1].found == 16


def test_y35_closed_form():
    s = [Fraction(v) for v in (3, 5, 7, 2, 11)]
    sys, sol = _solve("y35", params=np.array([complex(v) for v in s]))
    exact = np.array(scatter.closed_form_y35(s))
    for p in exact:
        assert np.min(np.linalg.norm(sol.points - p, axis=1)) < 1e-10


def test_y35_one_point_per_region():
    pts = scatter.closed_form_y35([1] * 5)
    regions = sorted(scatter.y35_region(p[0].real, p[1].real) for p in pts)
    assert all(abs(p[0].imag) < 1e-12 for p in pts)
    assert regions == ["0<x<y<1", "0<y<x<1"]


def test_y35_degenerate():
    with pytest.raises(scatter.DegenerateParameters):
        scatter.closed_form_y35([1, -1, 0, 1, 0])


def test_conjugation_closed_for_real_parameters():
    sys = scatter.model("y36")
    params = np.random.default_rng(0).normal(size=sys.nparams).astype(complex)
    _, sol = _solve("y36", seed=0, params=params)
    assert sol.found == 32 and scatter.conjugation_closed(sol)


def test_dedup():
    pts = np.array([[1, 2], [1 + 1e-9, 2], [3, 4]], dtype=complex)
    assert len(scatter.dedup(pts, 1e-6)) == 2


def test_mp_certified():
    assert scatter.mp_certified([1e-3, 1e-6, 1e-12, 1e-24, 1e-40])
    assert not scatter.mp_certified([1e-3, 5e-4, 2.5e-4])


def test_m05_cegm_exact():
    rng = np.random.default_rng(0)
    for _ in range(5):
        s = scatter.random_rational(5, rng)
        exact = scatter.m05_amplitude(s)
        assert scatter.m05_cegm(s) == pytest.approx(float(exact), rel=1e-12)


def test_m05_amplitude_forms_evaluate():
    s = [Fraction(v) for v in (2, 3, 5, 7, 11)]
    assert scatter.m05_amplitude(s) == amplitudes.evaluate_linear_terms(amplitudes.m05_amplitude_forms(), s)


def test_e6_cegm_single():
    rng = np.random.default_rng(3)
    r = scatter.e6_cegm_check(scatter.random_rational(15, rng), seed=3)
    assert r.found == 32
    assert r.rel_error < 1e-6


def test_random_rational_range():
    vals = scatter.random_rational(200, np.random.default_rng(0))
    assert all(1 <= v.numerator < 10_000 and 1 <= v.denominator < 1000 for v in vals)


def test_eckardt_configuration_has_one_point():
    from pezzo import realdp

    assert len(realdp.eckardt_points(scatter.eckardt_configuration())) == 1


def test_model_dimensions():
    assert scatter.model("y35").nvars == 2
    assert scatter.model("y36").nvars == 4
    assert scatter.model("s6").nvars == 2
    with pytest.raises(KeyError):
        scatter.model("nope")


def test_soft_limit_identities():
    assert all(scatter.soft_limit_identities().values())
