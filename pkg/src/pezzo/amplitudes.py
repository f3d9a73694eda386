"""Reciprocal facet sums, biadjoint amplitudes and Mandelstam linear maps."""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from . import fixtures
from .linalg import nullspace_rational, rank_rational
from .pezzotope import CliqueComplex, build_graph, clique_complex, fixture_relabeling, relabel


class PoleError(ZeroDivisionError):
    """A propagator used by some term vanishes."""


@dataclass
class ReciprocalSum:
    """Sum over terms of 1 / prod(s_i for i in term); indices are 1-based or labels."""

    terms: set[frozenset]
    names: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        sizes = {len(t) for t in self.terms}
        if len(sizes) != 1:
            raise ValueError("terms of mixed size")
        return -sizes.pop()

    def breakdown(self, s: Mapping) -> dict[frozenset, Fraction]:
        out = {}
        for t in self.terms:
            den = Fraction(1)
            for i in t:
                v = Fraction(s[i])
                if v == 0:
                    raise PoleError(f"s{i} vanishes")
                den *= v
            out[t] = 1 / den
        return out

    def evaluate(self, s: Mapping | Sequence) -> Fraction:
        if not isinstance(s, Mapping):
            s = {i + 1: v for i, v in enumerate(s)}
        return sum(self.breakdown(s).values(), Fraction(0))

    def sorted_terms(self) -> list[list]:
        return sorted(sorted(t) for t in self.terms)


def facet_amplitude(cx: CliqueComplex) -> ReciprocalSum:
    """One term per facet, vertex indices shifted to 1-based."""
    return ReciprocalSum({frozenset(v + 1 for v in f) for f in cx.facets()})


def segment_amplitude() -> ReciprocalSum:
    return facet_amplitude(CliqueComplex([[(0,), (1,)]], 2))


def e6_amplitude() -> ReciprocalSum:
    return facet_amplitude(clique_complex(build_graph(6)))


def e7_amplitude() -> ReciprocalSum:
    """Facets of the E7 complex in the numbering of the transcribed u-equations."""
    g = build_graph(7)
    return facet_amplitude(clique_complex(relabel(g, fixture_relabeling(g))))


def fixture_diff(amp: ReciprocalSum, terms) -> tuple[set, set]:
    want = {frozenset(t) for t in terms}
    return amp.terms - want, want - amp.terms


# M0,5: u-coordinates as monomials in the five factors x, y, 1-x, 1-y, y-x.
M05_FACTOR_EXPONENTS = {
    1: (0, 0, -1, 1, 0),
    2: (0, 1, 0, 0, 0),
    3: (0, 0, 1, 0, 0),
    4: (1, -1, 0, 0, 0),
    5: (0, -1, -1, 0, 1),
}


def m05_s_forms() -> dict[int, tuple[int, ...]]:
    """Coefficient of log u_i when sum s_j log f_j is rewritten in the u's.

    Inverts the factor exponent matrix: f_j = prod u_i^{b_ji}, so the
    coefficient of log u_i is sum_j s_j b_ji.
    """
    a = [list(M05_FACTOR_EXPONENTS[i]) for i in range(1, 6)]
    inv = _integer_inverse(a)
    return {i + 1: tuple(int(inv[j][i]) for j in range(5)) for i in range(5)}


def _integer_inverse(a: list[list[int]]) -> list[list[Fraction]]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        lead = m[c][c]
        m[c] = [v / lead for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[c])]
    out = [row[n:] for row in m]
    if any(v.denominator != 1 for row in out for v in row):
        raise ValueError("exponent matrix is not unimodular")
    return out


def m05_amplitude_forms() -> set[frozenset[tuple[int, ...]]]:
    """Pentagon facets with each u replaced by its linear form in s1..s5."""
    from .uforms import m05_graph

    forms = m05_s_forms()
    amp = facet_amplitude(clique_complex(m05_graph()))
    return {frozenset(forms[i] for i in t) for t in amp.terms}


def evaluate_linear_terms(terms: set[frozenset[tuple[int, ...]]], s: Sequence) -> Fraction:
    total = Fraction(0)
    for t in terms:
        den = Fraction(1)
        for f in t:
            v = sum(Fraction(c) * x for c, x in zip(f, s))
            if v == 0:
                raise PoleError(f"linear form {f} vanishes")
            den *= v
        total += 1 / den
    return total


# Biadjoint amplitude from planar cubic trees


def polygon_cuts(n: int) -> list[frozenset[int]]:
    """Cyclic intervals of 2..n-2 particles, one representative per complementary pair."""
    every = frozenset(range(1, n + 1))
    seen, out = set(), []
    for size in range(2, n - 1):
        for start in range(1, n + 1):
            cut = frozenset((start - 1 + k) % n + 1 for k in range(size))
            comp = every - cut
            if cut in seen or comp in seen:
                continue
            seen.add(cut)
            out.append(cut if len(cut) < len(comp) or n not in cut else comp)
    return out


def compatible(a: frozenset[int], b: frozenset[int], n: int) -> bool:
    return not (a & b) or a <= b or b <= a or len(a | b) == n


def cut_label(cut: frozenset[int]) -> str:
    return "".join(str(i) for i in sorted(cut))


def biadjoint(n: int) -> ReciprocalSum:
    """Sum over triangulations of an n-gon, i.e. planar cubic trees with n leaves."""
    cuts = polygon_cuts(n)
    terms = set()
    for combo in itertools.combinations(cuts, n - 3):
        if all(compatible(a, b, n) for a, b in itertools.combinations(combo, 2)):
            terms.add(frozenset(cut_label(c) for c in combo))
    return ReciprocalSum(terms)


def biadjoint_m6() -> ReciprocalSum:
    return biadjoint(6)


def propagator_value(label: str, sij: Mapping[str, Fraction]) -> Fraction:
    """s_I as the sum of s_ij over pairs in I."""
    return sum((Fraction(sij["".join(p)]) for p in itertools.combinations(label, 2)), Fraction(0))


def evaluate_biadjoint(amp: ReciprocalSum, sij: Mapping[str, Fraction]) -> Fraction:
    return amp.evaluate({lab: propagator_value(lab, sij) for t in amp.terms for lab in t})


# Mandelstam maps


@dataclass
class MandelstamMap:
    labels: list[str]
    rows: list[list[int]]

    def form(self, label: str) -> dict[int, int]:
        row = self.rows[self.labels.index(label)]
        return {i + 1: c for i, c in enumerate(row) if c}

    def rank(self) -> int:
        return rank_rational(self.rows)

    def constraints(self) -> list[list[Fraction]]:
        """Basis of linear relations among the forms (left kernel)."""
        cols = [list(col) for col in zip(*self.rows)]
        return nullspace_rational(cols)

    def satisfies(self, relation: Mapping[str, int]) -> bool:
        total = [0] * len(self.rows[0])
        for lab, c in relation.items():
            total = [a + c * b for a, b in zip(total, self.rows[self.labels.index(lab)])]
        return not any(total)

    def sample_mismatches(self, samples: Mapping[str, Mapping[int, int]]) -> dict[str, tuple[dict, dict]]:
        out = {}
        for lab, want in samples.items():
            got = self.form(lab)
            if got != dict(want):
                out[lab] = (got, dict(want))
        return out


def mandelstam_map(n: int = 6) -> MandelstamMap:
    """Coefficients of log p_ijk and log q in sum s_i log u_i under the Pluecker parametrization."""
    if n != 6:
        raise NotImplementedError("a Pluecker parametrization is only available for n=6")
    labels = ["".join(map(str, t)) for t in itertools.combinations(range(1, 7), 3)] + ["t"]
    idx = {lab: k for k, lab in enumerate(labels)}
    rows = [[0] * 15 for _ in labels]
    for i, (num, den) in fixtures.E6_U_PLUCKER.items():
        for sign, group in ((1, num), (-1, den)):
            for f in group:
                lab = "t" if f.lstrip("-") == "q" else f
                rows[idx[lab]][i - 1] += sign
    return MandelstamMap(labels, rows)


def printed_relation() -> dict[str, int]:
    rel = {lab: 1 for lab in fixtures.MANDELSTAM_RELATION}
    rel["t"] = 2
    return rel
