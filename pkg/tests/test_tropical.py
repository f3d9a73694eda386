import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pezzo import tropical
from pezzo.uforms import minors


def test_plucker_relation_counts():
    assert len(tropical.triples(6)) == 20
    assert len(tropical.plucker_relations(6)) == 6 * 5
    assert len(tropical.plucker_relations(7)) == 7 * 15


def test_sorted_triple_sign():
    assert tropical.sorted_triple((1, 2, 3)) == ("123", 1)
    assert tropical.sorted_triple((2, 1, 3)) == ("123", -1)
    assert tropical.sorted_triple((3, 1, 2)) == ("123", 1)


ints = st.integers(-9, 9)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(ints, min_size=6, max_size=6), min_size=3, max_size=3))
def test_plucker_relations_vanish_on_minors(m):
    p = minors(m)
    assert all(tropical.relation_value(r, p) == 0 for r in tropical.plucker_relations(6))


def _generic(n, seed):
    rng = random.Random(seed)
    while True:
        m = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(3)]
        try:
            return tropical.chirotope_from_config(m)
        except tropical.MalformedChirotope:
            continue


def _leibniz(cols):
    # 3x3 determinant of polynomial entries {exponent: coef}
    out = {}
    for perm, sgn in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
        terms = {0: sgn}
        for row, col in enumerate(perm):
            nxt = {}
            for e1, c1 in terms.items():
                for e2, c2 in cols[col][row].items():
                    nxt[e1 + e2] = nxt.get(e1 + e2, 0) + c1 * c2
            terms = nxt
        for e, c in terms.items():
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 9) | st.integers(-9, -1), st.integers(0, 4)), min_size=18, max_size=18))
def test_valuation_of_puiseux_config_is_tropical(entries):
    # a real config with entries c * t^a, t -> 0+, has tropical Pluecker vector in the signed variety
    cols = [[{entries[3 * j + i][1]: entries[3 * j + i][0]} for i in range(3)] for j in range(6)]
    w, signs = {}, {}
    for t in tropical.triples(6):
        det = _leibniz([cols[int(ch) - 1] for ch in t])
        if not det:
            return
        low = min(det)
        w[t], signs[t] = Fraction(low), 1 if det[low] > 0 else -1
    assert tropical.membership(w, tropical.plucker_relations(6), signs)


def test_zero_weight_is_member():
    chi = _generic(6, 4)
    w = {t: Fraction(0) for t in tropical.triples(6)}
    assert tropical.membership(w, tropical.plucker_relations(6), chi)


def test_non_generic_configuration_rejected():
    with pytest.raises(tropical.MalformedChirotope):
        tropical.chirotope_from_config([[1, 2, 3, 0, 1, 5], [0, 0, 0, 1, 1, 1], [1, 1, 1, 0, 2, 3]])


def test_reorientation_flips_signs():
    chi = _generic(6, 5)
    r = chi.reoriented(1)
    assert all(r.signs[t] == (-s if "1" in t else s) for t, s in chi.signs.items())


def test_lineality_reduction():
    n = 6
    w = tropical.ray("e123", n)
    shifted = {t: v + (1 if "2" in t else 0) for t, v in w.items()}
    assert tropical.reduce_mod_lineality(w, n) == tropical.reduce_mod_lineality(shifted, n)
    assert not tropical.same_ray("e123", "e124", n)


def test_gr36():
    rep = tropical.gr36_ray_and_pair_filter()
    assert rep.ray_count == 15 and rep.pair_count == 60
    assert rep.edges_match
    assert sorted(rep.vertex_of.values()) == list(range(15))


def test_gr37_partial():
    rep = tropical.gr37_partial_filter()
    assert len(rep.candidates) == 13 and rep.all_pass
    assert rep.consistent


def test_yoshida():
    rep = tropical.yoshida_route()
    assert rep.circuits == 270
    assert len(rep.a1_passing) == 10
    assert (len(rep.a2_passing), rep.a2_images) == (5, 40)
    assert rep.edges_match
