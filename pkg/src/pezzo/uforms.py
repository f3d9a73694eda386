"""u-equation systems, their Pluecker and root-form parametrizations, sign census and the canonical form."""

from __future__ import annotations

import itertools
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from . import fixtures
from .lattice import generators, orbit, root_catalog
from .linalg import rank_mod_p, rank_rational
from .pezzotope import PezzoGraph, u_supports

Matrix = Sequence[Sequence]


class BoundaryError(ValueError):
    """A coordinate is undefined because some factor vanishes."""


@dataclass
class USystem:
    supports: dict[int, list[int]]

    def equations(self) -> list[tuple[int, dict[int, int]]]:
        return [(i, {j: 1 for j in s}) for i, s in sorted(self.supports.items())]

    def residuals(self, u: dict[int, Fraction]) -> dict[int, Fraction]:
        out = {}
        for i, s in self.supports.items():
            prod = Fraction(1)
            for j in s:
                prod *= u[j]
            out[i] = u[i] + prod - 1
        return out

    def holds(self, u: dict[int, Fraction]) -> bool:
        return all(r == 0 for r in self.residuals(u).values())


def generate_u_system(graph: PezzoGraph) -> USystem:
    """u_i + prod of the non-neighbors of i = 1."""
    return USystem(u_supports(graph))


# The five M0,5 coordinates in the affine chart (x, y); walking the boundary of
# the region 0 < x < y < 1 after blowing up (0,0) and (1,1) meets the divisors
# u4 (x=0), u1 (y=1), u3 (point (1,1)), u5 (y=x), u2 (point (0,0)) in this order.
M05_CYCLE = (4, 1, 3, 5, 2)


def m05_graph() -> PezzoGraph:
    k = len(M05_CYCLE)
    edges = {frozenset((M05_CYCLE[i] - 1, M05_CYCLE[(i + 1) % k] - 1)) for i in range(k)}
    return PezzoGraph(2, [None] * k, edges)


def m05_u_values(x: Fraction, y: Fraction) -> dict[int, Fraction]:
    x, y = Fraction(x), Fraction(y)
    if x in (0, 1) or y in (0, 1) or x == y:
        raise BoundaryError("point lies on a boundary line")
    return {
        1: (1 - y) / (1 - x),
        2: y,
        3: 1 - x,
        4: x / y,
        5: (y - x) / ((1 - x) * y),
    }


def _sign(v) -> str:
    return "+" if v > 0 else "-"


def m05_regions() -> dict[tuple[str, ...], tuple[Fraction, Fraction]]:
    """One rational sample per region of the lines x, y, 1-x, 1-y, y-x."""
    grid = [Fraction(k, 7) for k in range(-14, 22)]
    out = {}
    for x in grid:
        for y in grid:
            forms = (x, y, 1 - x, 1 - y, y - x)
            if any(f == 0 for f in forms):
                continue
            out.setdefault(tuple(map(_sign, forms)), (x, y))
    return out


def m05_sign_census() -> set[str]:
    pats = set()
    for x, y in m05_regions().values():
        u = m05_u_values(x, y)
        pats.add("".join(_sign(u[i]) for i in range(1, 6)))
    return pats


# Pluecker coordinates


def triple(label: str) -> tuple[int, int, int]:
    return tuple(int(c) - 1 for c in label)


def det3(m: Matrix, cols: Sequence[int]):
    a, b, c = ([m[r][k] for r in range(3)] for k in cols)
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - b[0] * (a[1] * c[2] - a[2] * c[1])
        + c[0] * (a[1] * b[2] - a[2] * b[1])
    )


def minors(m: Matrix) -> dict[str, Fraction]:
    n = len(m[0])
    return {
        "".join(str(i + 1) for i in t): Fraction(det3(m, t))
        for t in itertools.combinations(range(n), 3)
    }


def conic_q(p: dict[str, Fraction]) -> Fraction:
    return p["134"] * p["156"] * p["235"] * p["246"] - p["135"] * p["146"] * p["234"] * p["256"]


def _factor_value(label: str, p: dict[str, Fraction]) -> Fraction:
    if label == "q":
        return conic_q(p)
    if label == "-q":
        return -conic_q(p)
    return p[label]


def plucker_u_values(m: Matrix) -> dict[int, Fraction]:
    """The fifteen E6 coordinates as ratios of minors and the conic."""
    p = minors(m)
    out = {}
    for i, (num, den) in fixtures.E6_U_PLUCKER.items():
        vals = [_factor_value(s, p) for s in num + den]
        for s, v in zip(num + den, vals):
            if v == 0:
                raise BoundaryError(f"u{i}: factor {s.lstrip('-')} vanishes")
        top = Fraction(1)
        for v in vals[: len(num)]:
            top *= v
        bot = Fraction(1)
        for v in vals[len(num):]:
            bot *= v
        out[i] = top / bot
    return out


def cuspidal_matrix(d: Sequence) -> list[list[Fraction]]:
    d = [Fraction(x) for x in d]
    return [[Fraction(1)] * len(d), d, [x**3 for x in d]]


def root_form_value(label: str, sign: int, d: Sequence[Fraction]) -> Fraction:
    idx = triple(label) if len(label) == 3 else [int(c) - 1 for c in label]
    if len(label) == 2:
        v = d[idx[0]] - d[idx[1]]
        return v if sign > 0 else -v
    return sign * sum(d[i] for i in idx)


def dunit_u_values(d: Sequence) -> dict[int, Fraction]:
    """The fifteen coordinates as ratios of four root forms each."""
    d = [Fraction(x) for x in d]
    for lab, r in zip(root_catalog(6).labels, root_catalog(6).roots):
        if sum(c * x for c, x in zip(r.d_form(), d)) == 0:
            raise BoundaryError(f"d lies on the hyperplane of root {lab}")
    out = {}
    for i, (num, den) in fixtures.E6_U_DFORMS.items():
        top = Fraction(1)
        for lab, s in num:
            top *= root_form_value(lab, s, d)
        bot = Fraction(1)
        for lab, s in den:
            bot *= root_form_value(lab, s, d)
        out[i] = top / bot
    return out


# Derivatives in the chart with free entries x1..x4


def chart_matrix(x: Sequence, template: Sequence[Sequence[str]] | None = None) -> list[list[Fraction]]:
    """Substitute x1..x4 into a template of strings; default is the projective-basis chart."""
    template = template or [["1", "0", "0", "1", "1", "1"], ["0", "1", "0", "1", "x1", "x2"], ["0", "0", "1", "1", "x3", "x4"]]
    vals = {f"x{k + 1}": Fraction(v) for k, v in enumerate(x)}
    return [[vals[e] if e in vals else Fraction(e) for e in row] for row in template]


def _positions(template, var: str) -> tuple[int, int]:
    for r, row in enumerate(template):
        for c, e in enumerate(row):
            if e == var:
                return r, c
    raise KeyError(var)


def _minor_derivative(m, t: tuple[int, ...], pos: tuple[int, int]) -> Fraction:
    r, c = pos
    if c not in t:
        return Fraction(0)
    hi = [row[:] for row in m]
    lo = [row[:] for row in m]
    hi[r][c], lo[r][c] = Fraction(1), Fraction(0)
    return Fraction(det3(hi, t)) - Fraction(det3(lo, t))


def log_jacobian(x: Sequence, template=None) -> dict[int, list[Fraction]]:
    """d log u_i / d x_j for the fifteen coordinates at a chart point."""
    template = template or [["1", "0", "0", "1", "1", "1"], ["0", "1", "0", "1", "x1", "x2"], ["0", "0", "1", "1", "x3", "x4"]]
    m = chart_matrix(x, template)
    p = minors(m)
    poss = [_positions(template, f"x{k + 1}") for k in range(4)]
    dp = {lab: [_minor_derivative(m, triple(lab), pos) for pos in poss] for lab in p}

    def dlog(label: str) -> list[Fraction]:
        if label.lstrip("-") == "q":
            terms = [("134", "156", "235", "246"), ("135", "146", "234", "256")]
            q = conic_q(p)
            if q == 0:
                raise BoundaryError("conic vanishes")
            out = []
            for k in range(4):
                tot = Fraction(0)
                for sgn, term in zip((1, -1), terms):
                    for a in term:
                        prod = dp[a][k]
                        for b in term:
                            if b != a:
                                prod *= p[b]
                        tot += sgn * prod
                out.append(tot / q)
            return out
        if p[label] == 0:
            raise BoundaryError(f"minor {label} vanishes")
        return [g / p[label] for g in dp[label]]

    out = {}
    for i, (num, den) in fixtures.E6_U_PLUCKER.items():
        row = [Fraction(0)] * 4
        for s in num:
            row = [a + b for a, b in zip(row, dlog(s))]
        for s in den:
            row = [a - b for a, b in zip(row, dlog(s))]
        out[i] = row
    return out


def jacobian_rank(x: Sequence, p: int | None = None) -> int:
    """Rank of the 15x4 Jacobian of the coordinates (log derivatives scaled by u)."""
    m = chart_matrix(x)
    u = plucker_u_values(m)
    jl = log_jacobian(x)
    rows = [[u[i] * g for g in jl[i]] for i in sorted(jl)]
    if p is None:
        return rank_rational(rows)
    den = math.lcm(*(v.denominator for r in rows for v in r))
    ints = [[int(v * den) for v in r] for r in rows]
    return rank_mod_p(ints, p)


# Canonical form


def det_fraction(m: list[list[Fraction]]) -> Fraction:
    a = [row[:] for row in m]
    k = len(a)
    out = Fraction(1)
    for c in range(k):
        piv = next((i for i in range(c, k) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, k):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def omega_chart_eval(x: Sequence) -> Fraction:
    """Coefficient of dx1 dx2 dx3 dx4 in the wedge of the four dlog arguments."""
    x = [Fraction(v) for v in x]
    closed_form_denominator(x)
    jl = log_jacobian(x, fixtures.OMEGA_CHART)
    rows = []
    for arg in fixtures.OMEGA_DLOG_ARGS:
        row = [Fraction(0)] * 4
        for i, e in arg.items():
            row = [a + e * b for a, b in zip(row, jl[i])]
        rows.append(row)
    return det_fraction(rows)


def _poly(terms: dict[tuple[int, ...], int], x: Sequence[Fraction]) -> Fraction:
    tot = Fraction(0)
    for exps, c in terms.items():
        v = Fraction(c)
        for xi, e in zip(x, exps):
            v *= xi**e
        tot += v
    return tot


def closed_form_denominator(x: Sequence[Fraction]) -> Fraction:
    den = Fraction(1)
    for f in fixtures.OMEGA_CLOSED_DENOMINATOR:
        v = _poly(f, x)
        if v == 0:
            raise BoundaryError("pole of the closed form")
        den *= v
    return den


def omega_closed_form(x: Sequence) -> Fraction:
    x = [Fraction(v) for v in x]
    num = Fraction(1)
    for f in fixtures.OMEGA_CLOSED_NUMERATOR:
        num *= _poly(f, x)
    return num / closed_form_denominator(x)


def omega_root_matrix() -> list[list[int]]:
    """The four dlog arguments as exponent vectors over the 36 positive roots."""
    cat = root_catalog(6)
    u_rows = {}
    for i, (num, den) in fixtures.E6_U_DFORMS.items():
        row = [0] * len(cat)
        for lab, _ in num:
            row[cat.label_index(lab)] += 1
        for lab, _ in den:
            row[cat.label_index(lab)] -= 1
        u_rows[i] = row
    out = []
    for arg in fixtures.OMEGA_DLOG_ARGS:
        row = [0] * len(cat)
        for i, e in arg.items():
            row = [a + e * b for a, b in zip(row, u_rows[i])]
        out.append(row)
    return out


def form_key(rows: list[list[int]]) -> tuple:
    """Canonical key of a decomposable form up to sign.

    Two k x N matrices have proportional maximal-minor vectors iff they share a
    reduced row echelon form R; writing A = T R, the minors of A are det(T) times
    those of R. So (R, |det T|) identifies the minor vector up to a global sign.
    """
    a = [[Fraction(v) for v in r] for r in rows]
    k, n = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, k) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]
        for i in range(k):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == k:
            break
    if r < k:
        return ("degenerate",)
    scale = abs(det_fraction([[Fraction(rows[i][c]) for c in pivots] for i in range(k)]))
    return tuple(tuple(row) for row in a), scale


def _dlog_table(seed: int = 2024, count: int = 3) -> list[list[list[Fraction]]]:
    """alpha(v)/alpha(d) for every positive root at seeded random points d and tangent vectors v."""
    rng = random.Random(seed)
    forms = [r.d_form() for r in root_catalog(6).roots]
    out = []
    while len(out) < count:
        d = [Fraction(rng.randint(-99, 99), rng.randint(1, 30)) for _ in range(6)]
        vs = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(4)]
        ats = [sum(a * b for a, b in zip(f, d)) for f in forms]
        if 0 in ats:
            continue
        out.append([[sum(a * b for a, b in zip(f, v)) / at for v in vs] for f, at in zip(forms, ats)])
    return out


def form_value_key(rows, table=None) -> tuple:
    """Values of the 4-form at the fixed points, up to a global sign.

    Equal forms always get equal keys; the maximal-minor vector of the exponent
    matrix is not canonical because the 36 root dlogs satisfy linear relations.
    """
    table = table or _dlog_table()
    vals = []
    for tab in table:
        m = [[sum(c * tab[r][j] for r, c in enumerate(row) if c) for j in range(4)] for row in rows]
        vals.append(det_fraction(m))
    sign = next((1 if v > 0 else -1 for v in vals if v != 0), 1)
    return tuple(sign * v for v in vals)


def omega_orbit_count(key: str = "values", budget: int = 10**6) -> int:
    """Size of the W(E6) orbit of the canonical form.

    key="values" compares forms as functions; key="minors" compares maximal-minor
    vectors of the 4x36 exponent matrices, which separates equal forms.
    """
    cat = root_catalog(6)
    perms = [tuple(j for j, _ in w.root_perm) for w in generators(6, cat)]

    def act(perm, rows):
        out = []
        for row in rows:
            new = [0] * len(row)
            for i, v in enumerate(row):
                new[perm[i]] = v
            out.append(tuple(new))
        return tuple(out)

    if key == "values":
        table = _dlog_table()
        keyfn = lambda rows: form_value_key(rows, table)  # noqa: E731
    else:
        keyfn = lambda rows: form_key([list(r) for r in rows])  # noqa: E731
    seed = tuple(tuple(r) for r in omega_root_matrix())
    return orbit(seed, act, perms, key=keyfn, budget=budget).size
