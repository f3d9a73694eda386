"""Critical points of log-likelihood functions by monodromy and parameter homotopy.

Factors are kept as exact integer polynomials; the likelihood equations are the
rational functions sum_a c_a grad(f_a)/f_a, never cleared of denominators.
Paths are tracked in batches with a fourth-order predictor and Newton corrector.
"""

from __future__ import annotations

import cmath
import itertools
import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np
from scipy.spatial import cKDTree

from . import fixtures
from .amplitudes import e6_amplitude, m05_amplitude_forms, evaluate_linear_terms, mandelstam_map
from .lattice import root_catalog
from .linalg import nullspace_rational
from .subsystems import build_incidence

Mono = tuple[int, ...]
Poly = dict[Mono, Fraction]


# Small exact polynomial algebra


def p_const(c, nvars: int) -> Poly:
    return {(0,) * nvars: Fraction(c)} if c else {}


def p_var(k: int, nvars: int) -> Poly:
    e = [0] * nvars
    e[k] = 1
    return {tuple(e): Fraction(1)}


def p_add(a: Poly, b: Poly, sb: int = 1) -> Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, 0) + sb * c
        if out[m] == 0:
            del out[m]
    return out


def p_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def p_prod(polys: Sequence[Poly], nvars: int) -> Poly:
    out = p_const(1, nvars)
    for p in polys:
        out = p_mul(out, p)
    return out


def p_det3(m: list[list[Poly]], cols: Sequence[int], nvars: int) -> Poly:
    out: Poly = {}
    for perm in itertools.permutations(range(3)):
        sign = 1
        for i, j in itertools.combinations(range(3), 2):
            if perm[i] > perm[j]:
                sign = -sign
        term = p_prod([m[r][cols[perm[r]]] for r in range(3)], nvars)
        out = p_add(out, term, sign)
    return out


def p_eval(p: Poly, x: Sequence) -> complex:
    return sum(complex(c) * np.prod([xi**e for xi, e in zip(x, m)]) for m, c in p.items())


def p_is_constant(p: Poly) -> bool:
    return all(not any(m) for m in p)


# Likelihood systems


@dataclass
class LikelihoodSystem:
    """Factors f_a in chart variables; exponents c = basis @ params."""

    name: str
    nvars: int
    labels: list[str]
    factors: list[Poly]
    basis: np.ndarray  # (m, k)
    target: int | None = None
    _tables: tuple | None = field(default=None, repr=False)

    @property
    def nparams(self) -> int:
        return self.basis.shape[1]

    def tables(self):
        """Monomial table closed under two derivatives, with coefficient arrays for f, grad, Hessian."""
        if self._tables is not None:
            return self._tables
        n, m = self.nvars, len(self.factors)
        monos: dict[Mono, int] = {}

        def idx(mono):
            if mono not in monos:
                monos[mono] = len(monos)
            return monos[mono]

        entries_f, entries_g, entries_h = [], [], []
        for a, poly in enumerate(self.factors):
            for mono, c in poly.items():
                entries_f.append((idx(mono), a, float(c)))
                for j in range(n):
                    if mono[j] == 0:
                        continue
                    dj = list(mono)
                    dj[j] -= 1
                    entries_g.append((idx(tuple(dj)), j, a, float(c) * mono[j]))
                    for k in range(n):
                        if dj[k] == 0:
                            continue
                        djk = list(dj)
                        djk[k] -= 1
                        entries_h.append((idx(tuple(djk)), j, k, a, float(c) * mono[j] * dj[k]))
        u = len(monos)
        cf = np.zeros((u, m))
        cg = np.zeros((u, n, m))
        ch = np.zeros((u, n, n, m))
        for i, a, c in entries_f:
            cf[i, a] += c
        for i, j, a, c in entries_g:
            cg[i, j, a] += c
        for i, j, k, a, c in entries_h:
            ch[i, j, k, a] += c
        expo = np.array(list(monos.keys()), dtype=int).reshape(u, n)
        self._tables = (expo, cf, cg.reshape(u, n * m), ch.reshape(u, n * n * m))
        return self._tables

    def evaluate(self, x: np.ndarray, order: int = 2):
        """Values (P,m), gradients (P,n,m) and Hessians (P,n,n,m) at a batch of points."""
        expo, cf, cg, ch = self.tables()
        n, m = self.nvars, len(self.factors)
        p = x.shape[0]
        v = np.ones((p, expo.shape[0]), dtype=complex)
        for j in range(n):
            top = expo[:, j].max()
            if top == 0:
                continue
            pw = x[:, j:j + 1] ** np.arange(top + 1)[None, :]
            v *= pw[:, expo[:, j]]
        f = v @ cf
        g = (v @ cg).reshape(p, n, m)
        h = (v @ ch).reshape(p, n, n, m) if order > 1 else None
        return f, g, h

    def exponents(self, params: np.ndarray) -> np.ndarray:
        return params @ self.basis.T

    def residual(self, x: np.ndarray, c: np.ndarray) -> np.ndarray:
        f, g, _ = self.evaluate(x, order=1)
        return np.einsum("pna,pa->pn", g / f[:, None, :], c)

    def system(self, x: np.ndarray, c: np.ndarray):
        """Residual F (P,n), Jacobian dF/dx (P,n,n) and dlog matrix G (P,n,m)."""
        f, g, h = self.evaluate(x)
        dl = g / f[:, None, :]
        res = np.einsum("pna,pa->pn", dl, c)
        jac = np.einsum("pjka,pa->pjk", h / f[:, None, None, :], c) - np.einsum("pja,pka,pa->pjk", dl, dl, c)
        return res, jac, dl

    def scale(self, x: np.ndarray, c: np.ndarray) -> np.ndarray:
        """Size of the individual terms, used to make residuals relative."""
        f, g, _ = self.evaluate(x, order=1)
        return np.einsum("pna,pa->p", np.abs(g / f[:, None, :]), np.abs(c)) + 1e-300

    def min_factor(self, x: np.ndarray) -> np.ndarray:
        f, _, _ = self.evaluate(x, order=1)
        return np.abs(f).min(axis=1)


# Extended precision


def p_diff(p: Poly, j: int) -> Poly:
    out: Poly = {}
    for m, c in p.items():
        if m[j]:
            e = list(m)
            e[j] -= 1
            out[tuple(e)] = out.get(tuple(e), 0) + c * m[j]
    return out


def _mp_eval(p: Poly, x) -> mpmath.mpc:
    total = mpmath.mpc(0)
    for m, c in p.items():
        term = mpmath.mpf(c.numerator) / c.denominator
        for xi, e in zip(x, m):
            if e:
                term *= xi**e
        total += term
    return total


def mp_system(sys: LikelihoodSystem, x, c):
    """Residual and Jacobian of the likelihood equations in mpmath."""
    n = sys.nvars
    res = [mpmath.mpc(0)] * n
    jac = mpmath.matrix(n, n)
    for a, f in enumerate(sys.factors):
        if c[a] == 0:
            continue
        fv = _mp_eval(f, x)
        grads = [p_diff(f, j) for j in range(n)]
        gv = [_mp_eval(g, x) for g in grads]
        for j in range(n):
            res[j] += c[a] * gv[j] / fv
            for k in range(n):
                hv = _mp_eval(p_diff(grads[j], k), x)
                jac[j, k] += c[a] * (hv / fv - gv[j] * gv[k] / fv**2)
    return mpmath.matrix(res), jac


def mp_newton(sys: LikelihoodSystem, x0: Sequence[complex], c, iters: int = 8, dps: int = 50):
    """Newton refinement at extended precision; returns the point and the relative step sizes."""
    with mpmath.workdps(dps):
        x = mpmath.matrix([mpmath.mpc(z) for z in x0])
        cm = [_to_mp(v) for v in c]
        steps = []
        for _ in range(iters):
            res, jac = mp_system(sys, x, cm)
            dx = mpmath.lu_solve(jac, -res)
            x = x + dx
            steps.append(float(mpmath.norm(dx) / (1 + mpmath.norm(x))))
        return [complex(v) for v in x], steps, x


def _to_mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpc(v)


def mp_certified(steps: Sequence[float], floor: float = 1e-30) -> bool:
    """Quadratic convergence: some step shrinks the previous one tenfold and the last is at the floor."""
    shrink = any(b <= a / 10 for a, b in zip(steps, steps[1:]) if a > 0)
    return shrink and steps[-1] < floor


# Model constructors


def _free_basis(factors: Sequence[Poly]) -> np.ndarray:
    return np.eye(len(factors))


def _constraint_basis(weights: Sequence[int]) -> np.ndarray:
    """Orthonormal basis of {c : sum w_a c_a = 0}."""
    ker = nullspace_rational([list(weights)])
    b = np.array([[float(x) for x in v] for v in ker]).T
    q, _ = np.linalg.qr(b)
    return q


def _drop_constants(labels, factors):
    keep = [(lab, f) for lab, f in zip(labels, factors) if not p_is_constant(f)]
    return [k[0] for k in keep], [k[1] for k in keep]


def m05_system() -> LikelihoodSystem:
    n = 2
    x, y = p_var(0, n), p_var(1, n)
    one = p_const(1, n)
    factors = [x, y, p_add(one, x, -1), p_add(one, y, -1), p_add(y, x, -1)]
    return LikelihoodSystem("y35", n, ["x", "y", "1-x", "1-y", "y-x"], factors, np.eye(5), 2)


def chart_polys(npoints: int) -> list[list[Poly]]:
    """The chart [[1,0,0,1,1,...],[0,1,0,1,x..],[0,0,1,1,x..]] with free entries as variables."""
    extra = npoints - 4
    nv = 2 * extra
    rows = [[p_const(v, nv) for v in r] for r in ([1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1])]
    for k in range(extra):
        rows[0].append(p_const(1, nv))
        rows[1].append(p_var(k, nv))
        rows[2].append(p_var(extra + k, nv))
    return rows


def _minor_polys(npoints: int) -> tuple[dict[str, Poly], int]:
    m = chart_polys(npoints)
    nv = 2 * (npoints - 4)
    out = {}
    for t in itertools.combinations(range(npoints), 3):
        out["".join(str(i + 1) for i in t)] = p_det3(m, t, nv)
    return out, nv


def _conic_poly(p: dict[str, Poly], pts: Sequence[int], nv: int) -> Poly:
    """The six-points-on-a-conic condition for the given labels, in the q pattern."""
    a = {k + 1: pts[k] for k in range(6)}

    def minor(*ix):
        labs = [a[i] for i in ix]
        order = sorted(range(3), key=lambda r: labs[r])
        sign = 1
        for i, j in itertools.combinations(range(3), 2):
            if order[i] > order[j]:
                sign = -sign
        key = "".join(str(labs[r]) for r in order)
        return p[key] if sign > 0 else p_add({}, p[key], -1)

    t1 = p_prod([minor(1, 3, 4), minor(1, 5, 6), minor(2, 3, 5), minor(2, 4, 6)], nv)
    t2 = p_prod([minor(1, 3, 5), minor(1, 4, 6), minor(2, 3, 4), minor(2, 5, 6)], nv)
    return p_add(t1, t2, -1)


def y3n_system(npoints: int) -> LikelihoodSystem:
    """Y(3,6) or Y(3,7) in the chart: non-constant minors and conic conditions, free exponents."""
    p, nv = _minor_polys(npoints)
    labels, factors = _drop_constants(list(p), list(p.values()))
    for six in itertools.combinations(range(1, npoints + 1), 6):
        labels.append("q" if npoints == 6 else "q" + "".join(map(str, six)))
        factors.append(_conic_poly(p, six, nv))
    target = {6: 32, 7: 3600}[npoints]
    return LikelihoodSystem(f"y3{npoints}", nv, labels, factors, _free_basis(factors), target)


def y36_mandelstam_system() -> LikelihoodSystem:
    """Y(3,6) with exponents sum_i s_i log u_i, so the parameters are s_1..s_15."""
    p, nv = _minor_polys(6)
    mm = mandelstam_map(6)
    labels, factors, rows = [], [], []
    for lab, row in zip(mm.labels, mm.rows):
        poly = _conic_poly(p, (1, 2, 3, 4, 5, 6), nv) if lab == "t" else p[lab]
        if p_is_constant(poly):
            continue
        labels.append("q" if lab == "t" else lab)
        factors.append(poly)
        rows.append(row)
    return LikelihoodSystem("y36-s", nv, labels, factors, np.array(rows, dtype=float), 32)


def _affine_line(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    """The line through two points of the plane, in the chart z = 1."""
    nx = a[1] * b[2] - a[2] * b[1]
    ny = a[2] * b[0] - a[0] * b[2]
    nz = a[0] * b[1] - a[1] * b[0]
    out = {(1, 0): Fraction(nx), (0, 1): Fraction(ny), (0, 0): Fraction(nz)}
    return {m: c for m, c in out.items() if c}


def _affine_conic(pts: Sequence[Sequence[Fraction]]) -> Poly:
    rows = [[x * x, y * y, z * z, x * y, x * z, y * z] for x, y, z in pts]
    ker = nullspace_rational(rows)
    if len(ker) != 1:
        raise ValueError("five points do not determine a unique conic")
    a, b, c, d, e, f = ker[0]
    out = {(2, 0): a, (0, 2): b, (0, 0): c, (1, 1): d, (1, 0): e, (0, 1): f}
    return {m: v for m, v in out.items() if v}


def surface_system(matrix: Sequence[Sequence]) -> LikelihoodSystem:
    """The plane minus the lines and conics through 5 or 6 points, exponents of total degree zero."""
    pts = [tuple(Fraction(matrix[r][k]) for r in range(3)) for k in range(len(matrix[0]))]
    n = len(pts)
    labels, factors, degrees = [], [], []
    for i, j in itertools.combinations(range(n), 2):
        labels.append(f"F{i + 1}{j + 1}")
        factors.append(_affine_line(pts[i], pts[j]))
        degrees.append(1)
    if n == 5:
        labels.append("G")
        factors.append(_affine_conic(pts))
        degrees.append(2)
    else:
        for k in range(n):
            labels.append(f"G{k + 1}")
            factors.append(_affine_conic([p for i, p in enumerate(pts) if i != k]))
            degrees.append(2)
    target = {5: 16, 6: 90}[n]
    return LikelihoodSystem(f"s{n}", 2, labels, factors, _constraint_basis(degrees), target)


def eckardt_configuration(seed: int = 0) -> list[list[Fraction]]:
    """Six rational points with F12, F34, F56 concurrent and otherwise general."""
    rng = np.random.default_rng(seed)

    def pt():
        return [Fraction(int(v)) for v in rng.integers(-9, 10, size=3)]

    while True:
        meet, p1, p3, p5 = pt(), pt(), pt(), pt()
        a, b, c = (Fraction(int(v)) for v in rng.integers(1, 4, size=3))
        p2 = [u + a * v for u, v in zip(p1, meet)]
        p4 = [u + b * v for u, v in zip(p3, meet)]
        p6 = [u - c * v for u, v in zip(p5, meet)]
        cols = [p1, p2, p3, p4, p5, p6]
        if _general_except_eckardt(cols):
            return [[col[r] for col in cols] for r in range(3)]


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def _general_except_eckardt(cols) -> bool:
    from .realdp import DegenerateConfiguration, eckardt_points

    try:
        return len(eckardt_points([[col[r] for col in cols] for r in range(3)])) == 1
    except DegenerateConfiguration:
        return False


def _root_forms_poly(nvars: int) -> tuple[list[str], list[Poly]]:
    """The 36 positive roots of E6 as linear forms in d1..d5 with d6 = 1."""
    cat = root_catalog(6)
    labels, factors = [], []
    for lab, r in zip(cat.labels, cat.roots):
        form = r.d_form()
        poly: Poly = {}
        for k, c in enumerate(form):
            if c == 0:
                continue
            if k < nvars:
                e = [0] * nvars
                e[k] = 1
                poly[tuple(e)] = Fraction(c)
            else:
                poly[(0,) * nvars] = poly.get((0,) * nvars, 0) + Fraction(c)
        labels.append(lab)
        factors.append({m: c for m, c in poly.items() if c})
    return labels, factors


def arrangement_system() -> LikelihoodSystem:
    """The complement of the E6 reflection arrangement in projective 5-space."""
    labels, factors = _root_forms_poly(5)
    return LikelihoodSystem("ae6", 5, labels, factors, _constraint_basis([1] * 36), 5040)


def yoshida_system() -> LikelihoodSystem:
    """Arrangement complement with exponents in the column space of the incidence matrix."""
    labels, factors = _root_forms_poly(5)
    inc = build_incidence(6)
    a = np.array(inc.entries, dtype=float)
    # each column is a product of nine forms, so column sums are 9 and degree zero needs sum w = 0
    w = _constraint_basis([1] * a.shape[1])
    b, _ = np.linalg.qr(a @ w)
    rank = np.linalg.matrix_rank(a @ w)
    return LikelihoodSystem("yoshida", 5, labels, factors, b[:, :rank], 2880)


def model(name: str, **kw) -> LikelihoodSystem:
    if name == "y35":
        return m05_system()
    if name == "y36":
        return y3n_system(6)
    if name == "y37":
        return y3n_system(7)
    if name == "s5":
        return surface_system(kw.get("matrix", CONVEX_PENTAGON))
    if name == "s6":
        return surface_system(kw.get("matrix", fixtures.EXAMPLE_CUBIC_MATRIX))
    if name == "s6e":
        sys = surface_system(eckardt_configuration(kw.get("seed", 0)))
        sys.name, sys.target = "s6e", 89
        return sys
    if name == "ae6":
        return arrangement_system()
    if name == "yoshida":
        return yoshida_system()
    raise KeyError(name)


CONVEX_PENTAGON = [[0, 2, 3, 1, -1], [0, 0, 2, 3, 2], [1, 1, 1, 1, 1]]
MODELS = ["y35", "s5", "s6", "s6e", "y36", "y37", "ae6", "yoshida"]
FAST_MODELS = ["y35", "s5", "s6", "s6e", "y36"]


# Path tracking


@dataclass
class TrackerConfig:
    h_init: float = 0.05
    h_min: float = 1e-7
    h_max: float = 0.2
    newton_tol: float = 1e-9
    newton_iters: int = 3
    max_steps: int = 4000
    dedup_radius: float = 1e-6
    residual_tol: float = 1e-10
    seed: int = 0
    blowup: float = 1e8


@dataclass
class TrackResult:
    points: np.ndarray
    ok: np.ndarray
    steps: int


def safe_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Batched solve; singular or non-finite systems give NaN rows."""
    bad = ~np.isfinite(a).all(axis=(1, 2)) | ~np.isfinite(b).all(axis=1)
    a = np.where(bad[:, None, None], np.eye(a.shape[1]), a)
    b = np.where(bad[:, None], 0, b)
    try:
        out = np.linalg.solve(a, b[..., None])[..., 0]
    except np.linalg.LinAlgError:
        out = np.empty_like(b)
        for i in range(len(b)):
            try:
                out[i] = np.linalg.solve(a[i], b[i])
            except np.linalg.LinAlgError:
                out[i] = np.nan
    out[bad] = np.nan
    return out


def track(sys: LikelihoodSystem, x0: np.ndarray, p_start: np.ndarray, p_end: np.ndarray,
          cfg: TrackerConfig) -> TrackResult:
    """Follow solutions from parameters p_start to p_end along the straight segment."""
    x = np.array(x0, dtype=complex).copy()
    npaths = x.shape[0]
    c0, c1 = sys.exponents(p_start), sys.exponents(p_end)
    dc = c1 - c0
    t = np.zeros(npaths)
    h = np.full(npaths, cfg.h_init)
    alive = np.ones(npaths, dtype=bool)
    done = np.zeros(npaths, dtype=bool)
    steps = 0

    def velocity(xs, ts):
        cs = c0[None, :] + ts[:, None] * dc[None, :]
        _, jac, dl = sys.system(xs, cs)
        rhs = -np.einsum("pna,a->pn", dl, dc)
        return safe_solve(jac, rhs)

    while steps < cfg.max_steps:
        act = alive & ~done
        if not act.any():
            break
        steps += 1
        idx = np.nonzero(act)[0]
        xs, ts = x[idx], t[idx]
        hs = np.minimum(h[idx], 1.0 - ts)
        with np.errstate(all="ignore"):
            k1 = velocity(xs, ts)
            k2 = velocity(xs + 0.5 * hs[:, None] * k1, ts + 0.5 * hs)
            k3 = velocity(xs + 0.5 * hs[:, None] * k2, ts + 0.5 * hs)
            k4 = velocity(xs + hs[:, None] * k3, ts + hs)
            xp = xs + hs[:, None] / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
            tn = ts + hs
            cs = c0[None, :] + tn[:, None] * dc[None, :]
            good = np.isfinite(xp).all(axis=1)
            last = np.full(len(idx), np.inf)
            for _ in range(cfg.newton_iters):
                res, jac, _ = sys.system(np.where(good[:, None], xp, 1.0), cs)
                dx = safe_solve(jac, -res)
                norm = np.linalg.norm(dx, axis=1) / (1 + np.linalg.norm(xp, axis=1))
                good &= np.isfinite(norm) & (norm < np.maximum(last, 1e-12))
                xp = xp + np.where(good[:, None], dx, 0)
                last = norm
            good &= last < cfg.newton_tol * 1e3
        acc = idx[good]
        rej = idx[~good]
        x[acc] = xp[good]
        t[acc] = tn[good]
        h[acc] = np.minimum(h[acc] * 1.6, cfg.h_max)
        done[acc] = t[acc] >= 1.0 - 1e-15
        h[rej] *= 0.5
        alive[rej[h[rej] < cfg.h_min]] = False
        far = np.linalg.norm(x, axis=1) > cfg.blowup
        alive &= ~far
    alive &= done
    return TrackResult(x, alive, steps)


def polish(sys: LikelihoodSystem, x: np.ndarray, c: np.ndarray, iters: int = 6):
    """Newton refinement; returns points, last two step sizes and relative residuals."""
    cs = np.broadcast_to(c, (x.shape[0], len(c)))
    steps = []
    with np.errstate(all="ignore"):
        for _ in range(iters):
            res, jac, _ = sys.system(x, cs)
            dx = safe_solve(jac, -res)
            x = x + dx
            steps.append(np.linalg.norm(dx, axis=1) / (1 + np.linalg.norm(x, axis=1)))
        res = sys.residual(x, cs)
        rel = np.linalg.norm(res, axis=1) / sys.scale(x, cs)
    return x, steps[-3], steps[-2], rel


def contraction(sys: LikelihoodSystem, x: np.ndarray, c: np.ndarray, delta: float = 1e-7,
                seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Sizes of two Newton steps started from a small random perturbation of each point."""
    rng = np.random.default_rng(seed)
    kick = rng.normal(size=x.shape) + 1j * rng.normal(size=x.shape)
    kick *= delta * (1 + np.linalg.norm(x, axis=1, keepdims=True)) / np.linalg.norm(kick, axis=1, keepdims=True)
    y = x + kick
    cs = np.broadcast_to(c, (x.shape[0], len(c)))
    sizes = []
    with np.errstate(all="ignore"):
        for _ in range(2):
            res, jac, _ = sys.system(y, cs)
            dx = safe_solve(jac, -res)
            y = y + dx
            sizes.append(np.linalg.norm(dx, axis=1))
    return sizes[0], sizes[1]


def dedup(points: np.ndarray, radius: float) -> np.ndarray:
    """Indices of representatives after merging points within radius (scale-normalized)."""
    if len(points) == 0:
        return np.array([], dtype=int)
    emb = points / np.maximum(1.0, np.linalg.norm(points, axis=1))[:, None]
    emb = np.concatenate([emb.real, emb.imag], axis=1)
    tree = cKDTree(emb)
    keep, taken = [], np.zeros(len(points), dtype=bool)
    for i in range(len(points)):
        if taken[i]:
            continue
        keep.append(i)
        for j in tree.query_ball_point(emb[i], radius):
            taken[j] = True
    return np.array(keep, dtype=int)


# Monodromy


@dataclass
class SolutionSet:
    model: str
    target: int | None
    params: np.ndarray
    points: np.ndarray
    residuals: np.ndarray
    certified: np.ndarray
    seed: int
    loops: int = 0
    dropped: int = 0
    seconds: float = 0.0

    @property
    def found(self) -> int:
        return len(self.points)

    @property
    def deficit(self) -> int:
        return max(0, (self.target or 0) - self.found)

    def report(self) -> dict:
        return {
            "model": self.model,
            "target": self.target,
            "found": self.found,
            "certified": int(self.certified.sum()),
            "seed": self.seed,
            "loops": self.loops,
            "dropped": self.dropped,
            "solutions": [
                {"point": [[float(z.real), float(z.imag)] for z in p], "residual": float(r)}
                for p, r in zip(self.points, self.residuals)
            ],
        }


def seed_pair(sys: LikelihoodSystem, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """A random complex point and parameters making it critical (the equations are linear in them)."""
    while True:
        x0 = rng.normal(size=sys.nvars) + 1j * rng.normal(size=sys.nvars)
        if sys.min_factor(x0[None])[0] < 1e-3:
            continue
        f, g, _ = sys.evaluate(x0[None], order=1)
        a = (g[0] / f[0][None, :]) @ sys.basis  # (n, k)
        _, sv, vh = np.linalg.svd(a)
        null = vh[len(sv[sv > 1e-10 * sv[0]]):].conj().T
        if null.shape[1] == 0:
            continue
        coef = rng.normal(size=null.shape[1]) + 1j * rng.normal(size=null.shape[1])
        return x0, null @ coef


def _random_params(sys: LikelihoodSystem, rng: np.random.Generator) -> np.ndarray:
    return rng.normal(size=sys.nparams) + 1j * rng.normal(size=sys.nparams)


def _merge(pool: np.ndarray, new: np.ndarray, radius: float) -> np.ndarray:
    allp = np.concatenate([pool, new]) if len(pool) else new
    return allp[dedup(allp, radius)]


def _populate(sys: LikelihoodSystem, pool: np.ndarray, base: np.ndarray, target: int | None,
              rng: np.random.Generator, cfg: TrackerConfig, max_stagnant: int, max_loops: int):
    """Grow the solution pool at base by tracking it around random triangular loops."""
    stagnant = loops = dropped = 0
    while (target is None or len(pool) < target) and stagnant < max_stagnant and loops < max_loops:
        loops += 1
        p1, p2 = _random_params(sys, rng), _random_params(sys, rng)
        pts, ok = pool, np.ones(len(pool), dtype=bool)
        for a, b in ((base, p1), (p1, p2), (p2, base)):
            r = track(sys, pts, a, b, cfg)
            ok &= r.ok
            pts = r.points
        dropped += int((~ok).sum())
        before = len(pool)
        pool = _merge(pool, pts[ok], cfg.dedup_radius)
        stagnant = stagnant + 1 if len(pool) == before else 0
    return pool, loops, dropped


def monodromy_solve(sys: LikelihoodSystem, target_count: int | None = None, seed: int = 0,
                    params: np.ndarray | None = None, cfg: TrackerConfig | None = None,
                    max_stagnant: int = 5, max_loops: int = 400) -> SolutionSet:
    """All critical points at the given parameters (random complex ones if None)."""
    cfg = cfg or TrackerConfig(seed=seed)
    target = target_count if target_count is not None else sys.target
    rng = np.random.default_rng(seed)
    start = time.time()
    x0, base = seed_pair(sys, rng)
    pool, loops, dropped = _populate(sys, x0[None, :], base, target, rng, cfg, max_stagnant, max_loops)
    if target is not None and len(pool) > target:
        raise RuntimeError(f"{sys.name}: {len(pool)} distinct solutions exceed the ML degree {target}")
    dest = base if params is None else np.asarray(params, dtype=complex)
    if params is not None:
        r = track(sys, pool, base, dest, cfg)
        dropped += int((~r.ok).sum())
        pool = r.points[r.ok]
        c = sys.exponents(dest)
        pool, _, _, _ = polish(sys, pool, c)
        pool = pool[np.isfinite(pool).all(axis=1)]
        pool = pool[dedup(pool, cfg.dedup_radius)]
        if target is not None and 0 < len(pool) < target:
            # recover paths lost on the way by loops based at the destination
            pool, more, lost = _populate(sys, pool, dest, target, rng, cfg, max_stagnant, max_loops)
            loops += more
            dropped += lost
    c = sys.exponents(dest)
    pts, d1, d2, rel = polish(sys, pool, c)
    finite = np.isfinite(pts).all(axis=1)
    pts, d1, d2, rel = pts[finite], d1[finite], d2[finite], rel[finite]
    keep = dedup(pts, cfg.dedup_radius)
    pts, d1, d2, rel = pts[keep], d1[keep], d2[keep], rel[keep]
    if target is not None and len(pts) > target:
        raise RuntimeError(f"{sys.name}: {len(pts)} distinct solutions exceed the ML degree {target}")
    s1, s2 = contraction(sys, pts, c, seed=seed)
    certified = (rel < cfg.residual_tol) & (s2 <= s1 / 10)
    for i in np.nonzero(~certified & (rel < cfg.residual_tol))[0]:
        # borderline points are re-polished at extended precision
        point, steps, _ = mp_newton(sys, pts[i], c)
        if mp_certified(steps):
            pts[i], certified[i] = point, True
    return SolutionSet(sys.name, target, dest, pts, rel, certified, seed, loops, dropped, time.time() - start)


def conjugation_closed(sol: SolutionSet, radius: float = 1e-6) -> bool:
    """For real parameters the critical set is closed under complex conjugation."""
    if len(sol.points) == 0:
        return True
    emb = lambda p: np.concatenate([p.real, p.imag], axis=1)  # noqa: E731
    tree = cKDTree(emb(sol.points / np.maximum(1, np.linalg.norm(sol.points, axis=1))[:, None]))
    conj = sol.points.conj()
    d, _ = tree.query(emb(conj / np.maximum(1, np.linalg.norm(conj, axis=1))[:, None]))
    return bool((d < radius).all())


# Closed form for five points on a line


class DegenerateParameters(ValueError):
    pass


def closed_form_y35(s: Sequence) -> list[tuple[complex, complex]]:
    """Both critical points: x solves a quadratic, y is rational in x."""
    s1, s2, s3, s4, s5 = (complex(v) for v in s)
    a = (s1 + s3 + s5) * (s1 + s2 + s3 + s4 + s5)
    b = -(2 * s1 * s1 + 2 * s1 * s2 + 2 * s1 * s3 + s1 * s4 + 3 * s1 * s5
          + s2 * s3 + s2 * s5 + s3 * s5 + s4 * s5 + s5 * s5)
    c = s1 * (s1 + s2 + s5)
    disc = b * b - 4 * a * c
    if a == 0 or disc == 0:
        raise DegenerateParameters("the quadratic degenerates at these parameters")
    root = cmath.sqrt(disc)
    out = []
    for x in ((-b + root) / (2 * a), (-b - root) / (2 * a)):
        den = s1 * x - s1 + s3 * x
        if den == 0:
            raise DegenerateParameters("y is undefined at this solution")
        out.append((x, x * (s1 * x - s1 + s3 * x + s5 * x - s5) / den))
    return out


def y35_region(x: float, y: float) -> str | None:
    """Which bounded region of the five lines contains a real point."""
    if 0 < x < y < 1:
        return "0<x<y<1"
    if 0 < y < x < 1:
        return "0<y<x<1"
    return None


# Amplitude sums over critical points


class SingularHessian(ArithmeticError):
    pass


@dataclass
class Integrand:
    """A ratio of products of polynomials in the chart variables."""

    num: list[Poly]
    den: list[Poly]
    nvars: int

    def __call__(self, x: np.ndarray) -> np.ndarray:
        out = np.ones(len(x), dtype=complex)
        for p in self.num:
            out *= np.array([p_eval(p, row) for row in x])
        for p in self.den:
            out /= np.array([p_eval(p, row) for row in x])
        return out

    def mp(self, x) -> mpmath.mpc:
        out = mpmath.mpc(1)
        for p in self.num:
            out *= _mp_eval(p, x)
        for p in self.den:
            out /= _mp_eval(p, x)
        return out


def cegm_sum(sys: LikelihoodSystem, sol: SolutionSet, integrand: Integrand,
             exponents: Sequence | None = None, rel_min: float = 1e-35, dps: int = 50,
             as_mp: bool = False):
    """Sum of integrand^2 / det(Hessian of L) over the critical points.

    Each point is re-polished and each term evaluated in mpmath, using exact
    exponents when given. A Hessian whose determinant is below rel_min times
    the Hadamard bound counts as singular.
    """
    c = sys.exponents(sol.params) if exponents is None else exponents
    total = mpmath.mpc(0)
    with mpmath.workdps(dps):
        cm = [_to_mp(v) for v in c]
        for point in sol.points:
            _, _, x = mp_newton(sys, point, c, iters=6, dps=dps)
            _, hess = mp_system(sys, x, cm)
            det = mpmath.det(hess)
            bound = mpmath.fprod(mpmath.norm(hess[i, :]) for i in range(hess.rows))
            if abs(det) < rel_min * bound:
                raise SingularHessian("near-singular Hessian at a critical point")
            total += integrand.mp(x) ** 2 / det
    return total if as_mp else complex(total)


def m05_integrand() -> Integrand:
    sys = m05_system()
    x, y, _, one_minus_y, y_minus_x = sys.factors
    return Integrand([], [x, y_minus_x, one_minus_y], 2)


def m05_amplitude(s: Sequence) -> Fraction:
    return evaluate_linear_terms(m05_amplitude_forms(), [Fraction(v) for v in s])


def m05_cegm(s: Sequence) -> complex:
    """The two-point sum using the closed-form critical points."""
    sys = m05_system()
    pts = np.array(closed_form_y35(s))
    sol = SolutionSet("y35", 2, np.array([complex(v) for v in s]), pts, np.zeros(2), np.ones(2, bool), 0)
    return cegm_sum(sys, sol, m05_integrand(), exponents=[Fraction(v) for v in s])


def e6_integrand() -> Integrand:
    """p135 / (p123 p345 p156 q) in the chart, where p123 = 1."""
    p, nv = _minor_polys(6)
    q = _conic_poly(p, (1, 2, 3, 4, 5, 6), nv)
    return Integrand([p["135"]], [p["345"], p["156"], q], nv)


@dataclass
class CegmComparison:
    s: list[Fraction]
    numeric: complex
    exact: Fraction
    found: int
    error: float = float("nan")

    @property
    def rel_error(self) -> float:
        return self.error


def e6_cegm_check(s: Sequence, seed: int = 0, cfg: TrackerConfig | None = None) -> CegmComparison:
    """Numerical CEGM sum over the 32 critical points against the 45-term amplitude."""
    sys = y36_mandelstam_system()
    s = [Fraction(v) for v in s]
    sol = monodromy_solve(sys, 32, seed=seed, params=np.array([float(v) for v in s], dtype=complex), cfg=cfg)
    rows = sys.basis.astype(int).tolist()
    exact = [sum(r * v for r, v in zip(row, s)) for row in rows]
    val = cegm_sum(sys, sol, e6_integrand(), exponents=exact, as_mp=True)
    amp = e6_amplitude().evaluate(s)
    with mpmath.workdps(50):
        err = float(abs(val - _to_mp(amp)) / abs(_to_mp(amp)))
    return CegmComparison(s, complex(val), amp, sol.found, err)


def random_rational(k: int, rng: np.random.Generator, lo: int = 1, hi: int = 10_000) -> list[Fraction]:
    return [Fraction(int(rng.integers(lo, hi)), int(rng.integers(1, 1000))) for _ in range(k)]


# Reports


@dataclass
class DegreeRow:
    model: str
    target: int
    found: int
    certified: int
    loops: int
    seconds: float

    @property
    def ok(self) -> bool:
        return self.found == self.target and self.certified == self.target


def ml_degree_report(models: Sequence[str] = tuple(FAST_MODELS), seed: int = 0) -> list[DegreeRow]:
    rows = []
    for name in models:
        sys = model(name)
        rng = np.random.default_rng(seed)
        params = rng.normal(size=sys.nparams) + 1j * rng.normal(size=sys.nparams)
        sol = monodromy_solve(sys, sys.target, seed=seed, params=params)
        rows.append(DegreeRow(name, sys.target, sol.found, int(sol.certified.sum()), sol.loops, sol.seconds))
    return rows


def soft_limit_identities() -> dict[str, bool]:
    """Multiplicity arithmetic of the soft limits (recorded, not computed)."""
    return {
        "32 = 2*16": 32 == 2 * 16,
        "32 = 26 + 6": 32 == 26 + 6,
        "3600 = 2880 + 15*16 + 30*16": 3600 == 90 * 32 + 15 * 16 + 30 * 16,
        "1272 = 26*42 + 15*12": 1272 == 26 * 42 + 15 * 12,
    }
