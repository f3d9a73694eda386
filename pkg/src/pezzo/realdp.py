"""Exact polygonal subdivision of real del Pezzo surfaces from lines and conics in the plane.

The arrangement is built on the sphere (the double cover of the real projective
plane): lines lift to great circles and each conic lifts to two antipodal ovals.
Faces are traced on the sphere and paired by the antipodal map; corners at base
points become arcs of the exceptional curves E_i.
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import fixtures
from .lattice import build_catalogs
from .linalg import nullspace_rational

Vec = tuple[Fraction, Fraction, Fraction]


class DegenerateConfiguration(ValueError):
    pass


def cross(a, b) -> Vec:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def det3v(a, b, c):
    return dot(a, cross(b, c))


def neg(a) -> Vec:
    return (-a[0], -a[1], -a[2])


def add(a, b, s=1, t=1) -> Vec:
    return (s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2])


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def same_ray(a, b) -> bool:
    return cross(a, b) == (0, 0, 0) and dot(a, b) > 0


def ray_key(v) -> tuple:
    """Positive multiples of v share this key."""
    m = max(abs(x) for x in v)
    return tuple(Fraction(x) / m for x in v)


# Curves


@dataclass
class Curve:
    name: str
    degree: int
    coeffs: object  # normal vector (lines) or symmetric 3x3 matrix (conics)

    def value(self, v):
        if self.degree == 1:
            return dot(self.coeffs, v)
        q = self.coeffs
        return sum(q[i][j] * v[i] * v[j] for i in range(3) for j in range(3))

    def gradient(self, v) -> Vec:
        if self.degree == 1:
            return tuple(self.coeffs)
        q = self.coeffs
        return tuple(2 * sum(q[i][j] * v[j] for j in range(3)) for i in range(3))


def conic_through(points: Sequence[Vec]) -> list[list[Fraction]]:
    """The symmetric matrix of the unique conic through five points."""
    rows = [[x * x, y * y, z * z, x * y, x * z, y * z] for x, y, z in points]
    ker = nullspace_rational(rows)
    if len(ker) != 1:
        raise DegenerateConfiguration("five points do not determine a unique conic")
    a, b, c, d, e, f = ker[0]
    h = Fraction(1, 2)
    return [[a, h * d, h * e], [h * d, b, h * f], [h * e, h * f, c]]


def det_matrix(q) -> Fraction:
    return det3v(q[0], q[1], q[2])


@dataclass
class PointConfig:
    matrix: list[list[Fraction]]

    @property
    def n(self) -> int:
        return len(self.matrix[0])

    def point(self, i: int) -> Vec:
        """Column i (1-based) as a vector."""
        return tuple(Fraction(self.matrix[r][i - 1]) for r in range(3))


def parse_config(matrix: Sequence[Sequence]) -> PointConfig:
    return PointConfig([[Fraction(x) for x in row] for row in matrix])


@dataclass
class CurveSet:
    config: PointConfig
    curves: list[Curve]
    through: dict[int, list[str]]  # base point -> names of curves through it

    def by_name(self, name: str) -> Curve:
        return next(c for c in self.curves if c.name == name)


def build_curves(config: PointConfig) -> CurveSet:
    n = config.n
    pts = {i: config.point(i) for i in range(1, n + 1)}
    curves = []
    through = {i: [] for i in pts}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        curves.append(Curve(f"F{i}{j}", 1, cross(pts[i], pts[j])))
        through[i].append(f"F{i}{j}")
        through[j].append(f"F{i}{j}")
    if n == 5:
        curves.append(Curve("G", 2, conic_through(list(pts.values()))))
        for i in pts:
            through[i].append("G")
    elif n == 6:
        for k in range(1, 7):
            others = [i for i in pts if i != k]
            curves.append(Curve(f"G{k}", 2, conic_through([pts[i] for i in others])))
            for i in others:
                through[i].append(f"G{k}")
    else:
        raise ValueError("the exact census covers n = 5 and 6")
    return CurveSet(config, curves, through)


@dataclass
class Vertex:
    """A point of the arrangement in the projective plane, with the curves through it."""

    v: Vec
    curves: tuple[str, ...]
    base: int | None = None


def arrangement_vertices(cs: CurveSet) -> list[Vertex]:
    """Base points plus all pairwise intersections away from them, exactly."""
    cfg = cs.config
    n = cfg.n
    out = [Vertex(cfg.point(i), tuple(cs.through[i]), i) for i in range(1, n + 1)]
    lines = [c for c in cs.curves if c.degree == 1]
    conics = [c for c in cs.curves if c.degree == 2]
    for a, b in itertools.combinations(lines, 2):
        if set(a.name[1:]) & set(b.name[1:]):
            continue
        out.append(Vertex(cross(a.coeffs, b.coeffs), (a.name, b.name)))
    for line in lines:
        i, j = int(line.name[1]), int(line.name[2])
        for g in conics:
            on = [k for k in (i, j) if g.name in cs.through[k]]
            if len(on) != 1:
                continue
            known, other = cfg.point(on[0]), cfg.point(j if on[0] == i else i)
            q = g.coeffs
            bb = sum(known[r] * q[r][s] * other[s] for r in range(3) for s in range(3))
            cc = g.value(other)
            if bb == 0:
                raise DegenerateConfiguration(f"{line.name} is tangent to {g.name} at a base point")
            out.append(Vertex(add(known, other, -cc, 2 * bb), (line.name, g.name)))
    return out


def validate_general(config: PointConfig) -> CurveSet:
    """Curves of the configuration, after exact genericity checks."""
    n = config.n
    for t in itertools.combinations(range(1, n + 1), 3):
        if det3v(*(config.point(i) for i in t)) == 0:
            raise DegenerateConfiguration(f"points {t} are collinear")
    cs = build_curves(config)
    for c in cs.curves:
        if c.degree == 2 and det_matrix(c.coeffs) == 0:
            raise DegenerateConfiguration(f"conic {c.name} is degenerate")
    if n == 6:
        q = cs.by_name("G1")
        if q.value(config.point(1)) == 0:
            raise DegenerateConfiguration("the six points lie on a conic")
    verts = arrangement_vertices(cs)
    seen = {}
    for vx in verts:
        k = min(ray_key(vx.v), ray_key(neg(vx.v)))
        if k in seen:
            raise DegenerateConfiguration(f"curves {seen[k]} and {vx.curves} meet at one point")
        seen[k] = vx.curves
        on = {c.name for c in cs.curves if c.value(vx.v) == 0}
        if on != set(vx.curves):
            extra = sorted(on - set(vx.curves))
            raise DegenerateConfiguration(f"point of {vx.curves} also lies on {extra}")
    return cs


def eckardt_points(config: PointConfig | Sequence[Sequence]) -> list[tuple[str, ...]]:
    """Triples of curves through a common point away from the base points.

    Raises if any other degeneracy occurs (collinear points, coconic six, tangency,
    or four curves through one point).
    """
    if not isinstance(config, PointConfig):
        config = parse_config(config)
    for t in itertools.combinations(range(1, config.n + 1), 3):
        if det3v(*(config.point(i) for i in t)) == 0:
            raise DegenerateConfiguration(f"points {t} are collinear")
    cs = build_curves(config)
    if config.n == 6 and cs.by_name("G1").value(config.point(1)) == 0:
        raise DegenerateConfiguration("the six points lie on a conic")
    groups: dict[tuple, set[str]] = {}
    for vx in arrangement_vertices(cs):
        if vx.base is not None:
            continue
        k = min(ray_key(vx.v), ray_key(neg(vx.v)))
        groups.setdefault(k, set()).update(vx.curves)
    out = []
    for names in groups.values():
        if len(names) > 3:
            raise DegenerateConfiguration(f"curves {sorted(names)} share a point")
        if len(names) == 3:
            out.append(tuple(sorted(names, key=label_order)))
    return sorted(out)


# Sphere arrangement


@dataclass
class Component:
    """A closed curve on the sphere with an axis it winds around."""

    curve: str
    axis: Vec
    sign: int = 1  # which lift of a conic (+1 or -1); lines use +1


def azimuth_cmp(axis: Vec, ref: Vec):
    """Comparator ordering vectors by azimuth around axis, starting at ref."""
    cr = cross(axis, ref)

    def half(v):
        y = det3v(axis, ref, v)
        x = dot(cr, cross(axis, v))
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(a, b):
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        s = det3v(axis, a, b)
        return -1 if s > 0 else (1 if s < 0 else 0)

    return cmp


def interior_point(q, pts: Sequence[Vec]) -> Vec:
    """A point inside the oval: a signed combination of three points on it."""
    sd = _sign(det_matrix(q))
    a, b, c = pts[:3]
    for sb, sc in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        e = add(add(a, b, 1, sb), c, 1, sc)
        val = sum(q[i][j] * e[i] * e[j] for i in range(3) for j in range(3))
        if _sign(val) == sd:
            return e
    raise DegenerateConfiguration("no interior point found")


@dataclass
class HalfEdge:
    tail: int
    head: int
    curve: str
    direction: Vec
    twin: int = -1
    next: int = -1


@dataclass
class SphereArrangement:
    points: list[Vec]
    point_curves: list[tuple[str, ...]]
    point_base: list[int | None]
    halfedges: list[HalfEdge]
    faces: list[list[int]]
    antipode: list[int]


def build_sphere(cs: CurveSet) -> SphereArrangement:
    verts = arrangement_vertices(cs)
    points, pcurves, pbase = [], [], []
    for vx in verts:
        for s in (1, -1):
            points.append(vx.v if s == 1 else neg(vx.v))
            pcurves.append(vx.curves)
            pbase.append(vx.base)
    antipode = [k ^ 1 for k in range(len(points))]
    comps: list[tuple[Component, list[int]]] = []
    for c in cs.curves:
        on = [k for k in range(len(points)) if c.name in pcurves[k]]
        if c.degree == 1:
            comps.append((Component(c.name, tuple(c.coeffs)), on))
        else:
            base_on = [cs.config.point(i) for i in range(1, cs.config.n + 1) if c.name in cs.through[i]]
            e = interior_point(c.coeffs, base_on)
            ell = c.gradient(e)
            side = _sign(dot(ell, e))
            for s in (1, -1):
                members = [k for k in on if _sign(dot(ell, points[k])) == s * side]
                comps.append((Component(c.name, e if s == 1 else neg(e), s), members))
    halfedges: list[HalfEdge] = []
    for comp, members in comps:
        if len(members) < 2:
            raise DegenerateConfiguration(f"component of {comp.curve} has fewer than two vertices")
        cmp = azimuth_cmp(comp.axis, points[members[0]])
        order = sorted(members, key=lambda k: functools.cmp_to_key(cmp)(points[k]))
        curve = cs.by_name(comp.curve)
        for a, b in zip(order, order[1:] + order[:1]):
            ta = _forward_tangent(curve, comp.axis, points[a])
            tb = _forward_tangent(curve, comp.axis, points[b])
            h = len(halfedges)
            halfedges.append(HalfEdge(a, b, comp.curve, ta, h + 1))
            halfedges.append(HalfEdge(b, a, comp.curve, neg(tb), h))
    out_of: dict[int, list[int]] = {}
    for k, h in enumerate(halfedges):
        out_of.setdefault(h.tail, []).append(k)
    rotation = {}
    for v, hs in out_of.items():
        cmp = azimuth_cmp(points[v], halfedges[hs[0]].direction)
        ordered = sorted(hs, key=lambda k: functools.cmp_to_key(cmp)(halfedges[k].direction))
        for a, b in zip(ordered, ordered[1:] + ordered[:1]):
            if cmp(halfedges[a].direction, halfedges[b].direction) == 0:
                raise DegenerateConfiguration(f"tangent directions coincide at {points[v]}")
        rotation[v] = ordered
    pos = {k: (v, i) for v, hs in rotation.items() for i, k in enumerate(hs)}
    for k, h in enumerate(halfedges):
        v, i = pos[h.twin]
        ring = rotation[v]
        h.next = ring[(i - 1) % len(ring)]
    faces, seen = [], set()
    for k in range(len(halfedges)):
        if k in seen:
            continue
        cyc, cur = [], k
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = halfedges[cur].next
        faces.append(cyc)
    return SphereArrangement(points, pcurves, pbase, halfedges, faces, antipode)


def _forward_tangent(curve: Curve, axis: Vec, v: Vec) -> Vec:
    t = cross(curve.gradient(v), v)
    return t if det3v(axis, v, t) > 0 else neg(t)


# Census


@dataclass
class FaceRecord:
    labels: list[str]
    sign_vector: tuple[int, ...]
    sample: Vec

    @property
    def size(self) -> int:
        return len(self.labels)

    def key(self) -> tuple[str, ...]:
        return tuple(sorted(self.labels, key=label_order))


@dataclass
class RegionCensus:
    n: int
    v: int
    e: int
    f: int
    faces: list[FaceRecord]
    sign_vector_count: int
    curve_names: list[str] = field(default_factory=list)

    def sizes(self) -> dict[int, int]:
        out = {}
        for fc in self.faces:
            out[fc.size] = out.get(fc.size, 0) + 1
        return dict(sorted(out.items()))

    def euler(self) -> int:
        return self.v - self.e + self.f

    def report(self) -> dict:
        return {
            "v": self.v,
            "e": self.e,
            "f": self.f,
            "faces": [{"size": fc.size, "labels": list(fc.key())} for fc in self.faces],
            "sign_vectors": self.sign_vector_count,
        }


def label_order(label: str) -> tuple:
    return ("EFG".index(label[0]), label[1:])


def _face_labels(arr: SphereArrangement, cyc: list[int]) -> list[str]:
    labels = []
    for k in cyc:
        h = arr.halfedges[k]
        labels.append(h.curve)
        base = arr.point_base[h.head]
        if base is not None:
            labels.append(f"E{base}")
    return labels


def _face_sign_vector(arr: SphereArrangement, cs: CurveSet, cyc: list[int]) -> tuple[tuple[int, ...], Vec]:
    h = arr.halfedges[cyc[0]]
    v = arr.points[h.head]
    # the face occupies the sector between the reversed incoming edge and the outgoing edge
    d = add(arr.halfedges[h.twin].direction, arr.halfedges[h.next].direction)
    signs = []
    for c in cs.curves:
        val = c.value(v)
        s = _sign(val) if val != 0 else _sign(dot(c.gradient(v), d))
        if s == 0:
            raise DegenerateConfiguration("sample direction is tangent to a curve")
        signs.append(s)
    sv = tuple(signs)
    sample = _nudge(cs, v, d, sv)
    return sv, sample


def _nudge(cs: CurveSet, v: Vec, d: Vec, want: tuple[int, ...]) -> Vec:
    """A rational point v + eps d with exactly the expected sign vector."""
    eps = Fraction(1, 8)
    scale = max(abs(x) for x in v) / max(abs(x) for x in d)
    for _ in range(200):
        p = add(v, d, 1, eps * scale)
        if tuple(_sign(c.value(p)) for c in cs.curves) == want:
            return p
        eps /= 2
    raise DegenerateConfiguration("could not place a sample point")


def blowup_census(config: PointConfig | Sequence[Sequence]) -> RegionCensus:
    if not isinstance(config, PointConfig):
        config = parse_config(config)
    cs = validate_general(config)
    arr = build_sphere(cs)
    records, signs = [], set()
    for cyc in arr.faces:
        sv, sample = _face_sign_vector(arr, cs, cyc)
        signs.add(sv)
        records.append((cyc, sv, sample))
    # antipodal pairing: linear forms flip sign, quadrics keep it
    flip = tuple(-1 if c.degree % 2 else 1 for c in cs.curves)
    kept, used = [], set()
    for cyc, sv, sample in records:
        if sv in used:
            continue
        used.add(sv)
        used.add(tuple(a * b for a, b in zip(sv, flip)))
        kept.append(FaceRecord(_face_labels(arr, cyc), sv, sample))
    ncurves_at_base = sum(len(cs.through[i]) for i in cs.through)
    nonbase = sum(1 for b in arr.point_base if b is None) // 2
    v = nonbase + ncurves_at_base
    e = len(arr.halfedges) // 4 + ncurves_at_base
    f = len(arr.faces) // 2
    if len(kept) != f:
        raise DegenerateConfiguration("faces and sign vectors do not pair up")
    return RegionCensus(config.n, v, e, f, kept, len(signs), [c.name for c in cs.curves])


# Comparison with the transcribed example


@dataclass
class CensusDiff:
    missing: list[tuple[str, ...]]
    unexpected: list[tuple[str, ...]]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.unexpected


def example_faces() -> list[tuple[str, ...]]:
    out = []
    for group in (fixtures.EXAMPLE_CUBIC_TRIANGLES, fixtures.EXAMPLE_CUBIC_QUADRILATERALS, fixtures.EXAMPLE_CUBIC_PENTAGONS):
        out += [tuple(sorted(f, key=label_order)) for f in group]
    return out


def census_fixture_compare(census: RegionCensus) -> CensusDiff:
    mine = sorted(fc.key() for fc in census.faces)
    want = sorted(example_faces())
    from collections import Counter

    a, b = Counter(mine), Counter(want)
    return CensusDiff(sorted((b - a).elements()), sorted((a - b).elements()))


# Double-six and blow-down witnesses


@functools.lru_cache(maxsize=None)
def disjoint_families(n: int, size: int) -> list[tuple[str, ...]]:
    """All sets of `size` pairwise disjoint exceptional classes."""
    cat = build_catalogs(n)
    m = cat.intersections
    names = cat.line_names
    out = []

    def extend(chosen, cands):
        if len(chosen) == size:
            out.append(tuple(names[i] for i in chosen))
            return
        for k, c in enumerate(cands):
            extend(chosen + [c], [d for d in cands[k + 1:] if m[c][d] == 0])

    extend([], list(range(len(names))))
    return out


def double_sixes() -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    cat = build_catalogs(6)
    idx = {name: i for i, name in enumerate(cat.line_names)}
    m = cat.intersections
    out, seen = [], set()
    for a in disjoint_families(6, 6):
        b = []
        for i, x in enumerate(a):
            partner = [
                y for y in cat.line_names
                if y not in a and m[idx[x]][idx[y]] == 0
                and all(m[idx[z]][idx[y]] == 1 for j, z in enumerate(a) if j != i)
            ]
            if len(partner) != 1:
                break
            b.append(partner[0])
        else:
            key = frozenset([frozenset(a), frozenset(b)])
            if key not in seen:
                seen.add(key)
                out.append((a, tuple(b)))
    return out


@dataclass
class DoubleSixReport:
    avoiding: set[str]
    double_six: tuple[tuple[str, ...], tuple[str, ...]] | None
    unique: bool
    pentagon_counts: dict[str, int]
    others_profile: set[tuple[int, int, int]]


def incidence_profile(census: RegionCensus) -> dict[str, dict[int, int]]:
    prof: dict[str, dict[int, int]] = {}
    for fc in census.faces:
        for lab in set(fc.labels):
            prof.setdefault(lab, {}).setdefault(fc.size, 0)
            prof[lab][fc.size] += 1
    return prof


def double_six_check(census: RegionCensus) -> DoubleSixReport:
    every = set(build_catalogs(6).line_names)
    in_triangles = {lab for fc in census.faces if fc.size == 3 for lab in fc.labels}
    avoid = every - in_triangles
    candidates = [ds for ds in double_sixes() if set(ds[0]) | set(ds[1]) <= avoid]
    prof = incidence_profile(census)
    found = candidates[0] if len(candidates) == 1 and set(candidates[0][0]) | set(candidates[0][1]) == avoid else None
    pent = {lab: prof.get(lab, {}).get(5, 0) for lab in avoid}
    others = {(prof[lab].get(3, 0), prof[lab].get(4, 0), prof[lab].get(5, 0)) for lab in every - avoid}
    return DoubleSixReport(avoid, found, len(candidates) == 1, pent, others)


def blowdown_witness(labels: Sequence[str], n: int = 6, avoid_neighbors: bool = False) -> tuple[str, ...] | None:
    """n pairwise disjoint classes, none of them on the face boundary.

    With avoid_neighbors the classes must also miss every boundary class.
    """
    cat = build_catalogs(n)
    idx = {name: i for i, name in enumerate(cat.line_names)}
    bad = {lab for lab in labels if lab in idx}
    if avoid_neighbors:
        bad |= {x for x in cat.line_names for b in list(bad) if cat.intersections[idx[x]][idx[b]] == 1}
    for fam in disjoint_families(n, n):
        if not bad & set(fam):
            return fam
    return None


def all_witnesses(census: RegionCensus) -> dict[tuple[str, ...], tuple[str, ...] | None]:
    return {fc.key(): blowdown_witness(fc.labels, census.n) for fc in census.faces}


# n = 7: sign vectors of lines, conics and nodal cubics (sampling evidence)


CUBIC_MONOMIALS = [(a, b, 3 - a - b) for a in range(4) for b in range(4 - a)]


def nodal_cubic(points: Sequence[Vec], node: int) -> dict[tuple[int, int, int], Fraction]:
    """The cubic through all points with a double point at points[node]."""
    rows = []
    for p in points:
        rows.append([p[0] ** a * p[1] ** b * p[2] ** c for a, b, c in CUBIC_MONOMIALS])
    p = points[node]
    for k in range(3):
        row = []
        for mono in CUBIC_MONOMIALS:
            e = list(mono)
            if e[k] == 0:
                row.append(Fraction(0))
                continue
            c = e[k]
            e[k] -= 1
            row.append(c * p[0] ** e[0] * p[1] ** e[1] * p[2] ** e[2])
        rows.append(row)
    ker = nullspace_rational(rows)
    if len(ker) != 1:
        raise DegenerateConfiguration("nodal cubic is not unique")
    return dict(zip(CUBIC_MONOMIALS, ker[0]))


Poly = dict[tuple[int, int, int], Fraction]


def _pmul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _ppow(a: list, k: int) -> list:
    out = [Fraction(1)]
    for _ in range(k):
        out = _pmul(out, a)
    return out


def _padd(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def compose(poly: Poly, param: Sequence[list]) -> list:
    """Coefficients in u of poly(x(u), y(u), z(u))."""
    out = [Fraction(0)]
    for (a, b, c), coef in poly.items():
        if coef:
            term = _pmul(_pmul(_ppow(param[0], a), _ppow(param[1], b)), _ppow(param[2], c))
            out = _padd(out, [coef * t for t in term])
    return out


def poly_eval(poly: Poly, v):
    return sum(coef * v[0] ** a * v[1] ** b * v[2] ** c for (a, b, c), coef in poly.items())


def _complement(p: Vec) -> tuple[Vec, Vec]:
    """Two vectors spanning a plane that misses p."""
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    k = max(range(3), key=lambda i: abs(p[i]))
    u, v = [b for i, b in enumerate(basis) if i != k]
    return tuple(Fraction(x) for x in u), tuple(Fraction(x) for x in v)


def _linear(u: Vec, v: Vec) -> list[list]:
    """Coordinates of u + t v as polynomials in t."""
    return [[u[i], v[i]] for i in range(3)]


def rational_parametrization(poly: Poly, degree: int, through: Vec | None, others: Sequence[Vec] = ()) -> list[list]:
    """A parametrization of a line, conic (from a point on it) or nodal cubic (from its node)."""
    if degree == 1:
        a, b = others[0], others[1]
        return _linear(a, b)
    p = through
    u, v = _complement(p)
    w = _linear(u, v)
    if degree == 2:
        # second point on the line through p and w: -Q(w) p + 2 B(p, w) w
        qw = compose(poly, w)
        bw = _polar(poly, p, w)
        return [_padd([-x * p[i] for x in qw], _pmul([2 * y for y in bw], w[i])) for i in range(3)]
    # node at p: f(p + l w) = l^2 A2(w) + l^3 A3(w), so the third point is A3(w) p - A2(w) w
    a3 = compose(poly, w)
    a2 = _second_order(poly, p, w)
    return [_padd([x * p[i] for x in a3], _pmul([-y for y in a2], w[i])) for i in range(3)]


def _polar(poly: Poly, p: Vec, w: list[list]) -> list:
    """Coefficients of (1/2) grad f(p) . w(t) for a quadric f."""
    grad = [Fraction(0)] * 3
    for (a, b, c), coef in poly.items():
        e = (a, b, c)
        for k in range(3):
            if e[k]:
                f = list(e)
                f[k] -= 1
                grad[k] += coef * e[k] * p[0] ** f[0] * p[1] ** f[1] * p[2] ** f[2]
    out = [Fraction(0)]
    for k in range(3):
        out = _padd(out, [grad[k] / 2 * x for x in w[k]])
    return out


def _second_order(poly: Poly, p: Vec, w: list[list]) -> list:
    """Coefficients of (1/2) w^T Hess f(p) w."""
    hess = [[Fraction(0)] * 3 for _ in range(3)]
    for (a, b, c), coef in poly.items():
        e = (a, b, c)
        for i in range(3):
            for j in range(3):
                f = list(e)
                m = f[i]
                f[i] -= 1
                if m <= 0:
                    continue
                m2 = f[j]
                f[j] -= 1
                if m2 <= 0:
                    continue
                hess[i][j] += coef * m * m2 * p[0] ** f[0] * p[1] ** f[1] * p[2] ** f[2]
    out = [Fraction(0)]
    for i in range(3):
        for j in range(3):
            if hess[i][j]:
                out = _padd(out, [hess[i][j] / 2 * x for x in _pmul(w[i], w[j])])
    return out


def _matrix_poly(q) -> Poly:
    poly: Poly = {}
    for r in range(3):
        for s in range(3):
            e = [0, 0, 0]
            e[r] += 1
            e[s] += 1
            poly[tuple(e)] = poly.get(tuple(e), 0) + q[r][s]
    return poly


@dataclass
class PlaneForm:
    name: str
    degree: int
    poly: Poly
    param: list[list]


def plane_forms(config: PointConfig) -> list[PlaneForm]:
    """Lines, conics and (for seven points) nodal cubics with rational parametrizations."""
    n = config.n
    pts = {i: config.point(i) for i in range(1, n + 1)}
    out = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        nv = cross(pts[i], pts[j])
        poly = {(1, 0, 0): nv[0], (0, 1, 0): nv[1], (0, 0, 1): nv[2]}
        out.append(PlaneForm(f"F{i}{j}", 1, poly, rational_parametrization(poly, 1, None, (pts[i], pts[j]))))
    if n == 7:
        for i, j in itertools.combinations(range(1, 8), 2):
            rest = [k for k in pts if k not in (i, j)]
            poly = _matrix_poly(conic_through([pts[k] for k in rest]))
            out.append(PlaneForm(f"G{i}{j}", 2, poly, rational_parametrization(poly, 2, pts[rest[0]])))
        for i in range(1, 8):
            poly = nodal_cubic([pts[k] for k in range(1, 8)], i - 1)
            out.append(PlaneForm(f"H{i}", 3, poly, rational_parametrization(poly, 3, pts[i])))
    else:
        for c in build_curves(config).curves:
            if c.degree == 2:
                poly = _matrix_poly(c.coeffs)
                on = next(k for k in pts if poly_eval(poly, pts[k]) == 0)
                out.append(PlaneForm(c.name, 2, poly, rational_parametrization(poly, 2, pts[on])))
    return out


def _float_poly(poly: Poly):
    mons = np.array(list(poly.keys()))
    coefs = np.array([float(c) for c in poly.values()])
    return mons, coefs / np.abs(coefs).max()


def _evaluate_all(floats, x: np.ndarray) -> np.ndarray:
    vals = np.empty((len(x), len(floats)))
    for col, (mons, coefs) in enumerate(floats):
        vals[:, col] = (coefs * np.prod(x[:, None, :] ** mons[None, :, :], axis=2)).sum(axis=1)
    return vals


def _arc_samples(forms: list[PlaneForm], idx: int, offsets: Sequence[float]) -> np.ndarray:
    """Points just off both sides of every arc of one curve, between consecutive crossings."""
    f = forms[idx]
    deg = max(len(c) for c in f.param) - 1
    angles = []
    for k, g in enumerate(forms):
        if k == idx:
            continue
        coeffs = compose(g.poly, f.param)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        top = deg * g.degree
        if len(coeffs) - 1 < top:
            angles.append(np.pi / 2)  # crossing at the parameter point at infinity
        if len(coeffs) > 1:
            c = np.array([float(x) for x in coeffs])
            roots = np.roots(c[::-1] / np.abs(c).max())
            for r in roots:
                if abs(r.imag) <= 1e-6 * (1 + abs(r)):
                    angles.append(float(np.arctan(r.real)) % np.pi)
    angles = np.unique(np.round(np.sort(np.array(angles)), 12))
    if len(angles) == 0:
        return np.empty((0, 3))
    nxt = np.append(angles[1:], angles[0] + np.pi)
    keep = nxt - angles > 1e-10
    mids = ((angles + nxt) / 2)[keep]
    s, t = np.cos(mids), np.sin(mids)
    pts = np.zeros((len(mids), 3))
    for i in range(3):
        cs = np.array([float(x) for x in f.param[i]])
        # homogenize: sum c_k t^k s^(deg-k)
        for k, c in enumerate(cs):
            pts[:, i] += c * t**k * s ** (deg - k)
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    mons, coefs = _float_poly(f.poly)
    grad = np.zeros_like(pts)
    for k in range(3):
        dm = mons.copy()
        fac = dm[:, k].astype(float)
        dm[:, k] = np.maximum(dm[:, k] - 1, 0)
        grad[:, k] = (coefs * fac * np.prod(pts[:, None, :] ** dm[None, :, :], axis=2)).sum(axis=1)
    normal = grad - (grad * pts).sum(axis=1, keepdims=True) * pts
    normal /= np.linalg.norm(normal, axis=1, keepdims=True)
    out = [pts + sgn * eps * normal for eps in offsets for sgn in (1.0, -1.0)]
    return np.concatenate(out)


def sample_sign_vectors(config: PointConfig | Sequence[Sequence], random_samples: int = 200_000, seed: int = 0,
                        offsets: Sequence[float] = (1e-5, 1e-7, 1e-9), tol: float = 1e-13) -> int:
    """Distinct sign vectors of all curve forms at sample points of the sphere.

    Samples sit just off the midpoint of every arc of every curve (arcs end at the
    crossings with other curves, located as real roots of the restricted forms),
    on both sides and at both antipodes, plus uniform random points. Points where
    some form is numerically zero are dropped, so every recorded vector is realized
    by a face; tiny faces can still be missed, making the count a lower bound.
    """
    if not isinstance(config, PointConfig):
        config = parse_config(config)
    forms = plane_forms(config)
    floats = [_float_poly(f.poly) for f in forms]
    rng = np.random.default_rng(seed)
    chunks = [rng.normal(size=(random_samples, 3))]
    for idx in range(len(forms)):
        chunks.append(_arc_samples(forms, idx, offsets))
    x = np.concatenate(chunks)
    x /= np.linalg.norm(x, axis=1, keepdims=True)
    x = np.concatenate([x, -x])
    vals = _evaluate_all(floats, x)
    ok = np.all(np.abs(vals) > tol, axis=1)
    bits = (vals[ok] > 0).astype(np.uint64)
    weights = np.uint64(1) << np.arange(len(forms), dtype=np.uint64)
    return len(np.unique((bits * weights).sum(axis=1)))


# Euler-characteristic arithmetic


@dataclass
class LedgerLine:
    name: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def polygon_count(n: int) -> int:
    """p = e/2 + chi, with e the ordered incidence total and chi = 1 - n."""
    return fixtures.INCIDENCE_TOTALS[n] // 2 + (1 - n)


def euler_ledger(computed: dict[str, int] | None = None) -> list[LedgerLine]:
    chi_x = fixtures.CHI_X3N
    chi_y = fixtures.CHI_Y3N
    surf = fixtures.CHI_SURFACES
    lines = [
        LedgerLine("chi(S5 open) = 8 - 32 + 40", 8 - 32 + 40, surf[5]),
        LedgerLine("chi(S6 open) = 9 - 54 + 135", 9 - 54 + 135, surf[6]),
        LedgerLine("chi(Y(3,6)) = 16 * 2", 16 * 2, chi_y[6]),
        LedgerLine("chi(Y(3,7)) = 32*90 + 45*16", 32 * 90 + 45 * 16, chi_y[7]),
        LedgerLine("chi(X(3,6)) - chi(Y(3,6)) = chi(M0,6)", chi_x[6] - chi_y[6], -6),
        LedgerLine("chi(X(3,7)) - chi(Y(3,7)) = 7*(-312) - 6*24", chi_x[7] - chi_y[7],
                   7 * fixtures.CHI_CONIC_STRATUM_A - 6 * fixtures.CHI_CONIC_STRATUM_B),
        LedgerLine("chi(Y(3,7)) = 1272 + 7*312 + 144", chi_x[7] + 7 * 312 + 144, chi_y[7]),
        LedgerLine("chi(T) = 2*(-5) - 3*(-2)*1*(-1)", 2 * (-5) - 3 * (-2) * 1 * (-1), fixtures.CHI_TOP_STRATUM),
    ]
    for n in (4, 5, 6, 7):
        lines.append(LedgerLine(f"polygons n={n}: e/2 + (1-n)", polygon_count(n), fixtures.POLYGON_COUNTS[n]))
    for ell in range(0, 5):
        lines.append(LedgerLine(f"chi with {ell} Eckardt points = 90 - {ell}", 9 - 54 + 135 - ell, 90 - ell))
    for name, val in (computed or {}).items():
        lines.append(LedgerLine(name, val, val))
    return lines
