"""Picard lattice of blown-up planes, E6/E7 root catalogs, reflections and Weyl groups."""

from __future__ import annotations

import itertools
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import fixtures
from .linalg import rank_rational


def form(x: Sequence[int], y: Sequence[int]) -> int:
    """Intersection pairing with signature diag(1, -1, ..., -1)."""
    return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))


@dataclass(frozen=True)
class PicardClass:
    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    def dot(self, other: PicardClass) -> int:
        return form(self.coeffs, other.coeffs)

    def square(self) -> int:
        return self.dot(self)

    def is_root(self) -> bool:
        return self.square() == -2 and self.dot(canonical_class(self.n)) == 0

    def is_line(self) -> bool:
        return self.square() == -1 and self.dot(canonical_class(self.n)) == -1

    def __add__(self, other: PicardClass) -> PicardClass:
        return PicardClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: PicardClass) -> PicardClass:
        return PicardClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> PicardClass:
        return PicardClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, k: int) -> PicardClass:
        return PicardClass(tuple(k * a for a in self.coeffs))

    def d_form(self) -> tuple[int, ...]:
        """Linear form in d-coordinates: the exceptional coefficients."""
        return self.coeffs[1:]


def canonical_class(n: int) -> PicardClass:
    return PicardClass((-3,) + (1,) * n)


def _vec(n: int, h: int = 0, minus: Iterable[int] = (), plus: Iterable[int] = ()) -> PicardClass:
    c = [0] * (n + 1)
    c[0] = h
    for i in minus:
        c[i] -= 1
    for i in plus:
        c[i] += 1
    return PicardClass(tuple(c))


def root_from_label(label: str, n: int) -> PicardClass:
    """Pair ij -> Ei-Ej, triple ijk -> L-Ei-Ej-Ek, six digits or bar digit -> 2L minus six E's."""
    idx = [int(ch) for ch in label]
    if len(idx) == 2:
        return _vec(n, 0, minus=[idx[1]], plus=[idx[0]])
    if len(idx) == 3:
        return _vec(n, 1, minus=idx)
    if len(idx) == 6:
        return _vec(n, 2, minus=idx)
    if len(idx) == 1 and n == 7:
        return _vec(n, 2, minus=[k for k in range(1, 8) if k != idx[0]])
    raise ValueError(f"unknown root label {label!r} for n={n}")


@dataclass
class RootCatalog:
    n: int
    labels: list[str]
    roots: list[PicardClass]
    index: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {r.coeffs: i for i, r in enumerate(self.roots)}

    def __len__(self) -> int:
        return len(self.roots)

    def signed_index(self, v: Sequence[int]) -> tuple[int, int]:
        """(catalog index, sign) of a root or its negative."""
        v = tuple(v)
        if v in self.index:
            return self.index[v], 1
        neg = tuple(-a for a in v)
        if neg in self.index:
            return self.index[neg], -1
        raise KeyError(f"{v} is not a root")

    def root(self, label: str) -> PicardClass:
        return self.roots[self.labels.index(label)]

    def label_index(self, label: str) -> int:
        return self.labels.index(label)

    def signed_points(self) -> list[tuple[int, ...]]:
        """Positive roots followed by their negatives."""
        return [r.coeffs for r in self.roots] + [(-r).coeffs for r in self.roots]


@lru_cache(maxsize=None)
def root_catalog(n: int) -> RootCatalog:
    if n not in (4, 5, 6, 7):
        raise ValueError("n must be in 4..7")
    labels = [f"{i}{j}" for i, j in itertools.combinations(range(1, n + 1), 2)]
    labels += ["".join(map(str, t)) for t in itertools.combinations(range(1, n + 1), 3)]
    if n == 6:
        labels.append("123456")
    if n == 7:
        labels += [str(i) for i in range(1, 8)]
    return RootCatalog(n, labels, [root_from_label(s, n) for s in labels])


def line_classes(n: int) -> tuple[list[str], list[PicardClass]]:
    """Exceptional curves E_i, F_ij and the conic/cubic classes G, H."""
    names, vecs = [], []
    for i in range(1, n + 1):
        names.append(f"E{i}")
        vecs.append(_vec(n, 0, plus=[i]))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        names.append(f"F{i}{j}")
        vecs.append(_vec(n, 1, minus=[i, j]))
    every = range(1, n + 1)
    if n == 5:
        names.append("G")
        vecs.append(_vec(n, 2, minus=every))
    if n == 6:
        for i in every:
            names.append(f"G{i}")
            vecs.append(_vec(n, 2, minus=[k for k in every if k != i]))
    if n == 7:
        for i, j in itertools.combinations(every, 2):
            names.append(f"G{i}{j}")
            vecs.append(_vec(n, 2, minus=[k for k in every if k not in (i, j)]))
        for i in every:
            names.append(f"H{i}")
            vecs.append(_vec(n, 3, minus=list(every) + [i]))
    return names, vecs


@dataclass
class Catalogs:
    n: int
    roots: RootCatalog
    line_names: list[str]
    lines: list[PicardClass]
    intersections: np.ndarray

    def line(self, name: str) -> PicardClass:
        return self.lines[self.line_names.index(name)]


def build_catalogs(n: int) -> Catalogs:
    names, lines = line_classes(n)
    m = np.array([[a.dot(b) for b in lines] for a in lines], dtype=int)
    return Catalogs(n, root_catalog(n), names, lines, m)


@dataclass(frozen=True)
class WeylElement:
    matrix: tuple[tuple[int, ...], ...]
    root_perm: tuple[tuple[int, int], ...]

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in self.matrix)

    def preserves_form(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return form(self.apply(x), self.apply(y)) == form(x, y)

    def point_perm(self) -> tuple[int, ...]:
        """Permutation of the signed-root points (positives, then negatives)."""
        m = len(self.root_perm)
        img = [0] * (2 * m)
        for i, (j, s) in enumerate(self.root_perm):
            img[i] = j if s > 0 else j + m
            img[i + m] = j + m if s > 0 else j
        return tuple(img)


def weyl_element(matrix: Sequence[Sequence[int]], catalog: RootCatalog) -> WeylElement:
    mat = tuple(tuple(int(a) for a in row) for row in matrix)
    probe = WeylElement(mat, ())
    perm = tuple(catalog.signed_index(probe.apply(r.coeffs)) for r in catalog.roots)
    return WeylElement(mat, perm)


def reflection_matrix(r: PicardClass) -> list[list[int]]:
    """Matrix of x -> x + (x.r) r."""
    n1 = len(r.coeffs)
    cols = []
    for j in range(n1):
        e = [0] * n1
        e[j] = 1
        k = form(e, r.coeffs)
        cols.append([e[i] + k * r.coeffs[i] for i in range(n1)])
    return [[cols[j][i] for j in range(n1)] for i in range(n1)]


def reflection(r: PicardClass, catalog: RootCatalog | None = None) -> WeylElement:
    if not r.is_root():
        raise ValueError(f"{r.coeffs} is not a root")
    catalog = catalog or root_catalog(r.n)
    return weyl_element(reflection_matrix(r), catalog)


def line_permutation(w: WeylElement, cat: Catalogs) -> dict[str, str]:
    where = {v.coeffs: name for name, v in zip(cat.line_names, cat.lines)}
    return {name: where[w.apply(v.coeffs)] for name, v in zip(cat.line_names, cat.lines)}


def transpositions(perm: dict[str, str]) -> set[frozenset[str]]:
    return {frozenset((a, b)) for a, b in perm.items() if a != b}


def cremona(n: int, catalog: RootCatalog | None = None) -> WeylElement:
    """Reflection at L - E1 - E2 - E3."""
    return reflection(root_from_label("123", n), catalog)


def generators(n: int, catalog: RootCatalog | None = None, with_cremona: bool = True) -> list[WeylElement]:
    """Adjacent label transpositions plus, optionally, the Cremona involution."""
    catalog = catalog or root_catalog(n)
    gens = [reflection(root_from_label(f"{i}{i + 1}", n), catalog) for i in range(1, n)]
    if with_cremona:
        gens.append(cremona(n, catalog))
    return gens


# Permutation groups


def _mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p, then q."""
    return tuple(q[x] for x in p)


def _inv(p: tuple[int, ...]) -> tuple[int, ...]:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


class StabilizerChain:
    """Deterministic Schreier-Sims; new base points maximize the cycle length under the new generator."""

    def __init__(self, gens: Iterable[Sequence[int]], degree: int):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.base: list[int] = []
        self.strong: list[list[tuple[int, ...]]] = []
        self.transversals: list[dict[int, tuple[int, ...]]] = []
        for g in gens:
            r, j = self.sift(tuple(g))
            if r != self.identity:
                self._add(r, j)

    def sift(self, h: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        for j in range(start, len(self.base)):
            t = self.transversals[j]
            y = h[self.base[j]]
            if y not in t:
                return h, j
            h = _mul(h, _inv(t[y]))
        return h, len(self.base)

    def _cycle_len(self, g: tuple[int, ...], x: int) -> int:
        k, y = 1, g[x]
        while y != x:
            k, y = k + 1, g[y]
        return k

    def _add(self, g: tuple[int, ...], level: int) -> None:
        if level == len(self.base):
            moved = [x for x in range(self.degree) if g[x] != x]
            self.base.append(max(moved, key=lambda x: (self._cycle_len(g, x), -x)))
            self.strong.append([])
            self.transversals.append({})
        for k in range(level + 1):
            self.strong[k].append(g)
        for k in range(level, -1, -1):
            self._orbit(k)
            self._close(k)

    def _orbit(self, i: int) -> None:
        b = self.base[i]
        t = {b: self.identity}
        queue = [b]
        for x in queue:
            for s in self.strong[i]:
                y = s[x]
                if y not in t:
                    t[y] = _mul(t[x], s)
                    queue.append(y)
        self.transversals[i] = t

    def _close(self, i: int) -> None:
        b = self.base[i]
        restart = True
        while restart:
            restart = False
            t = self.transversals[i]
            for u in list(t.values()):
                for s in list(self.strong[i]):
                    us = _mul(u, s)
                    h = _mul(us, _inv(t[us[b]]))
                    if h == self.identity:
                        continue
                    r, j = self.sift(h, i + 1)
                    if r != self.identity:
                        self._add(r, j)
                        restart = True
                        break
                if restart:
                    break

    def order(self) -> int:
        o = 1
        for t in self.transversals:
            o *= len(t)
        return o

    def contains(self, g: Sequence[int]) -> bool:
        r, j = self.sift(tuple(g))
        return r == self.identity and j == len(self.base)


def weyl_group_order(n: int, with_cremona: bool = True) -> int:
    catalog = root_catalog(n)
    gens = [w.point_perm() for w in generators(n, catalog, with_cremona)]
    return StabilizerChain(gens, 2 * len(catalog)).order()


# Orbits


@dataclass
class OrbitResult:
    size: int
    transversal: list | None = None
    complete: bool = True


class OrbitBudgetExceeded(RuntimeError):
    def __init__(self, partial: int):
        super().__init__(f"orbit budget exceeded after {partial} elements")
        self.partial = partial


def orbit(
    seed,
    action: Callable,
    gens: Sequence,
    key: Callable[[object], Hashable] = lambda x: x,
    budget: int = 10**7,
    keep: bool = False,
) -> OrbitResult:
    """Breadth-first orbit with deduplication on key(obj)."""
    seen = {key(seed): seed}
    queue = [seed]
    for obj in queue:
        for g in gens:
            img = action(g, obj)
            k = key(img)
            if k not in seen:
                seen[k] = img
                queue.append(img)
                if len(seen) > budget:
                    raise OrbitBudgetExceeded(len(seen))
    return OrbitResult(len(seen), sorted(seen) if keep else None)


def line_action(cat: Catalogs) -> tuple[list[dict[str, str]], Callable]:
    """Weyl generators as line permutations, with an action on sets of line names."""
    perms = [line_permutation(w, cat) for w in generators(cat.n, cat.roots)]
    return perms, lambda p, s: frozenset(p[x] for x in s)


# Cremona matrices on d-coordinates


def form_permutation(matrix: Sequence[Sequence[int]], denom: int, catalog: RootCatalog) -> list[tuple[int, int] | None]:
    """Signed images of the root forms under pullback by d -> matrix d / denom."""
    m = np.array(matrix, dtype=object)
    out = []
    for r in catalog.roots:
        a = np.array(r.d_form(), dtype=object)
        img = m.T.dot(a)
        if any(x % denom for x in img):
            out.append(None)
            continue
        img = tuple(int(x) // denom for x in img)
        out.append(_signed_form_index(img, catalog))
    return out


def _signed_form_index(f: tuple[int, ...], catalog: RootCatalog) -> tuple[int, int] | None:
    for i, r in enumerate(catalog.roots):
        d = r.d_form()
        if d == f:
            return i, 1
        if tuple(-x for x in d) == f:
            return i, -1
    return None


@dataclass
class CremonaReport:
    n: int
    rows: list[dict]
    matches: int
    fixed_dimension: int
    involution: bool
    restriction_ok: bool | None

    @property
    def passed(self) -> bool:
        return self.matches == len(self.rows)

    def mismatches(self) -> list[dict]:
        return [r for r in self.rows if not r["match"]]


def _fixed_dimension(matrix: Sequence[Sequence[int]], denom: int) -> int:
    m = [[Fraction(a, denom) for a in row] for row in matrix]
    k = len(m)
    diff = [[m[i][j] - (1 if i == j else 0) for j in range(k)] for i in range(k)]
    return k - rank_rational(diff)


def verify_cremona_matrices(n: int, matrix: Sequence[Sequence[int]] | None = None, denom: int = 3) -> CremonaReport:
    """Compare the d-space matrix action with the lattice reflection at L-E1-E2-E3, root by root."""
    catalog = root_catalog(n)
    if matrix is None:
        matrix = fixtures.CREMONA_D6 if n == 6 else fixtures.CREMONA_D7
    observed = form_permutation(matrix, denom, catalog)
    predicted = cremona(n, catalog).root_perm
    rows = []
    for i, lab in enumerate(catalog.labels):
        obs = observed[i]
        pred = predicted[i]
        rows.append({
            "root": lab,
            "predicted": (catalog.labels[pred[0]], pred[1]),
            "observed": None if obs is None else (catalog.labels[obs[0]], obs[1]),
            "match": obs is not None and obs[0] == pred[0],
        })
    sq = np.array(matrix, dtype=object).dot(np.array(matrix, dtype=object))
    involution = all(sq[i][j] == (denom * denom if i == j else 0) for i in range(n) for j in range(n))
    restriction = None
    if n == 7:
        restriction = [list(r[:6]) for r in matrix[:6]] == fixtures.CREMONA_D6
    return CremonaReport(n, rows, sum(r["match"] for r in rows), _fixed_dimension(matrix, denom), involution, restriction)


def cremona_group_order(n: int) -> int:
    """Order of the group generated by the d-space matrix and the label transpositions."""
    catalog = root_catalog(n)
    matrix = fixtures.CREMONA_D6 if n == 6 else fixtures.CREMONA_D7
    gens = [w.point_perm() for w in generators(n, catalog, with_cremona=False)]
    perm = form_permutation(matrix, 3, catalog)
    gens.append(WeylElement((), tuple(perm)).point_perm())
    return StabilizerChain(gens, 2 * len(catalog)).order()


# Finite-field point counts


E6_EXPONENTS = (1, 4, 5, 7, 8, 11)
E7_EXPONENTS = (1, 5, 7, 9, 11, 13, 17)


def char_poly_value(n: int, q: int) -> int:
    out = 1
    for e in (E6_EXPONENTS if n == 6 else E7_EXPONENTS):
        out *= q - e
    return out


def reduced_char_poly_at_one(n: int) -> int:
    out = 1
    for e in (E6_EXPONENTS if n == 6 else E7_EXPONENTS)[1:]:
        out *= 1 - e
    return abs(out)


@dataclass
class FieldCount:
    q: int
    count: int
    polynomial: int
    flagged: bool

    @property
    def agrees(self) -> bool:
        return self.count == self.polynomial


def finite_field_complement_count(n: int, q: int) -> FieldCount:
    """Brute-force count of points of F_q^n off all root hyperplanes.

    Coordinates are appended one at a time; a partial vector is dropped once a form
    supported on the coordinates so far vanishes.
    """
    forms = np.array([r.d_form() for r in root_catalog(n).roots], dtype=np.int64)
    last = np.array([max(np.nonzero(f)[0]) for f in forms])
    pts = np.zeros((1, 0), dtype=np.int64)
    for k in range(n):
        grid = np.arange(q, dtype=np.int64)
        pts = np.hstack([np.repeat(pts, q, axis=0), np.tile(grid, len(pts))[:, None]])
        active = forms[last == k][:, : k + 1]
        if len(active):
            vals = (pts @ active.T) % q
            pts = pts[np.all(vals != 0, axis=1)]
    total = len(pts)
    # Below the largest exponent the reduction mod q is not generic.
    exps = E6_EXPONENTS if n == 6 else E7_EXPONENTS
    return FieldCount(q, total, char_poly_value(n, q), q <= max(exps))
