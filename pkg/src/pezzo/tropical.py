"""Chirotopal tropical membership for Pluecker relations and monomial maps; ray and pair filters.

All membership statements are relative to the chosen relation set (three-term
quadratic Pluecker relations, or linear circuits among monomial maps).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import fixtures
from .lattice import root_catalog
from .linalg import rank_rational
from .pezzotope import PezzoGraph, build_graph, fixture_relabeling, relabel
from .subsystems import build_incidence, family, vertex_catalog
from .uforms import det3, minors

Monomial = tuple  # coordinate keys, with repetition


class MalformedChirotope(ValueError):
    pass


@dataclass
class SignedRelation:
    """sum of sign * monomial = 0, stored as signed monomials."""

    terms: list[tuple[int, Monomial]]

    def twisted(self, signs: Mapping) -> tuple[list[Monomial], list[Monomial]]:
        pos, neg = [], []
        for c, mono in self.terms:
            s = c
            for k in mono:
                s *= signs[k]
            (pos if s > 0 else neg).append(mono)
        if not pos or not neg:
            raise MalformedChirotope(f"relation {self.terms} has an empty part")
        return pos, neg

    def holds(self, w: Mapping, signs: Mapping) -> bool:
        pos, neg = self.twisted(signs)
        val = lambda m: sum((w[k] for k in m), Fraction(0))  # noqa: E731
        return min(map(val, pos)) == min(map(val, neg))


def triples(n: int) -> list[str]:
    return ["".join(map(str, t)) for t in itertools.combinations(range(1, n + 1), 3)]


def sorted_triple(idx: Sequence[int]) -> tuple[str, int]:
    """Sorted label and the sign of the sorting permutation."""
    a = list(idx)
    sign = 1
    for i in range(len(a)):
        for j in range(len(a) - 1 - i):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                sign = -sign
    return "".join(map(str, a)), sign


def plucker_relations(n: int) -> list[SignedRelation]:
    """p_sab p_scd - p_sac p_sbd + p_sad p_sbc for every s and a<b<c<d."""
    out = []
    for s in range(1, n + 1):
        rest = [x for x in range(1, n + 1) if x != s]
        for a, b, c, d in itertools.combinations(rest, 4):
            terms = []
            for coef, (x, y), (z, t) in ((1, (a, b), (c, d)), (-1, (a, c), (b, d)), (1, (a, d), (b, c))):
                l1, s1 = sorted_triple((s, x, y))
                l2, s2 = sorted_triple((s, z, t))
                terms.append((coef * s1 * s2, (l1, l2)))
            out.append(SignedRelation(terms))
    return out


def relation_value(rel: SignedRelation, values: Mapping) -> Fraction:
    total = Fraction(0)
    for c, mono in rel.terms:
        v = Fraction(c)
        for k in mono:
            v *= values[k]
        total += v
    return total


# Chirotopes


@dataclass
class Chirotope:
    signs: dict[str, int]
    witness: list[list[Fraction]] | None = None

    def reoriented(self, col: int) -> Chirotope:
        c = str(col)
        return Chirotope({t: -s if c in t else s for t, s in self.signs.items()}, self.witness)

    def to_json(self) -> dict:
        wit = [[str(x) for x in row] for row in self.witness] if self.witness else None
        return {"signs": dict(self.signs), "witness": wit}


def chirotope_from_config(matrix: Sequence[Sequence]) -> Chirotope:
    p = minors(matrix)
    if any(v == 0 for v in p.values()):
        raise MalformedChirotope("configuration is not generic")
    return Chirotope({t: 1 if v > 0 else -1 for t, v in p.items()}, [[Fraction(x) for x in r] for r in matrix])


def membership(w: Mapping, relations: Iterable[SignedRelation], chi: Chirotope | Mapping) -> bool:
    signs = chi.signs if isinstance(chi, Chirotope) else chi
    return all(r.holds(w, signs) for r in relations)


# Rays in Pluecker weight space


def ray(label: str, n: int) -> dict[str, Fraction]:
    """Weight vector of e_ijk, f_ijkl, g_ab,cd,ef or a '+'-separated sum of those."""
    w = {t: Fraction(0) for t in triples(n)}
    for part in label.split("+"):
        for t, v in _basic_ray(part.strip()).items():
            w[t] += v
    return w


def _basic_ray(label: str) -> dict[str, int]:
    kind, body = label[0], label[1:]
    if kind == "e":
        return {"".join(sorted(body)): 1}
    if kind == "f":
        out = {}
        for t in itertools.combinations(sorted(body), 3):
            out["".join(t)] = out.get("".join(t), 0) + 1
        return out
    if kind == "g":
        (a1, a2), (b1, b2), (c1, c2) = body.split(",")
        out = _basic_ray("f" + b1 + b2 + c1 + c2)
        for x in (a1, a2):
            key = "".join(sorted(x + c1 + c2))
            out[key] = out.get(key, 0) + 1
        return out
    raise ValueError(f"unknown ray {label}")


def lineality_basis(n: int) -> list[dict[str, Fraction]]:
    return [{t: Fraction(int(str(i) in t)) for t in triples(n)} for i in range(1, n + 1)]


def reduce_mod_lineality(w: Mapping[str, Fraction], n: int) -> tuple[Fraction, ...]:
    """Orthogonal projection onto the complement of the torus lineality space."""
    labels = triples(n)
    basis = [[b[t] for t in labels] for b in lineality_basis(n)]
    vec = [Fraction(w[t]) for t in labels]
    gram = [[sum(x * y for x, y in zip(a, b)) for b in basis] for a in basis]
    rhs = [sum(x * y for x, y in zip(a, vec)) for a in basis]
    coef = _solve(gram, rhs)
    return tuple(v - sum(c * b[k] for c, b in zip(coef, basis)) for k, v in enumerate(vec))


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _perfect_matchings(items: Sequence[int]):
    if not items:
        yield ()
        return
    a = items[0]
    for k in range(1, len(items)):
        rest = list(items[1:k]) + list(items[k + 1:])
        for m in _perfect_matchings(rest):
            yield ((a, items[k]),) + m


def gr36_ray_catalog() -> list[str]:
    """20 e-rays, 15 f-rays and the g-rays distinct modulo lineality."""
    labels = ["e" + t for t in triples(6)]
    labels += ["f" + "".join(map(str, q)) for q in itertools.combinations(range(1, 7), 4)]
    seen = set()
    for m in _perfect_matchings(list(range(1, 7))):
        for a, b, c in itertools.permutations(m):
            lab = "g" + ",".join(f"{x}{y}" for x, y in (a, b, c))
            key = reduce_mod_lineality(ray(lab, 6), 6)
            if key not in seen:
                seen.add(key)
                labels.append(lab)
    return labels


@dataclass
class FilterReport:
    rays: list[str]
    pairs: list[tuple[str, str]]
    candidates: int
    note: str = "membership relative to the three-term quadratic relations"


def ray_filter(labels: Sequence[str], chi: Chirotope, n: int) -> FilterReport:
    rels = plucker_relations(n)
    passing = [lab for lab in labels if membership(ray(lab, n), rels, chi)]
    pairs = []
    for a, b in itertools.combinations(passing, 2):
        wa, wb = ray(a, n), ray(b, n)
        if membership({t: wa[t] + wb[t] for t in wa}, rels, chi):
            pairs.append((a, b))
    return FilterReport(passing, pairs, len(labels))


def e_ray_passing(chi: Chirotope, n: int) -> set[str]:
    rels = plucker_relations(n)
    return {t for t in triples(n) if membership(ray("e" + t, n), rels, chi)}


@dataclass
class SearchFailure(RuntimeError):
    tried: int
    closest: set = field(default_factory=set)

    def __str__(self) -> str:
        return f"no chirotope found after {self.tried} matrices; closest pass set {sorted(self.closest)}"


def _relabel_columns(matrix: Sequence[Sequence], perm: Sequence[int]) -> list[list[int]]:
    """Column i of the input becomes column perm[i]."""
    n = len(perm)
    out = [[0] * n for _ in matrix]
    for r, row in enumerate(matrix):
        for i, v in enumerate(row):
            out[r][perm[i]] = v
    return out


def find_region_chirotope(n: int, target: Iterable[str] | None = None, seed: int = 0, budget: int = 200000) -> Chirotope:
    """Search seeded random integer 3xn matrices until the passing e-rays equal target.

    Pass sets are equivariant under relabeling columns, so a sample is accepted
    when some permutation of the labels carries its pass set onto the target;
    the witness is the sample with its columns permuted accordingly.
    """
    if target is None:
        verts = fixtures.E6_A1_VERTICES if n == 6 else fixtures.E7_A1_VERTICES
        target = verts.values()
    target = set(target)
    want = {frozenset(int(c) - 1 for c in t) for t in target}
    perms = list(itertools.permutations(range(n)))
    rng = random.Random(seed)
    best, best_score = set(), -1
    for _ in range(budget):
        m = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(3)]
        if any(det3(m, t) == 0 for t in itertools.combinations(range(n), 3)):
            continue
        got = e_ray_passing(chirotope_from_config(m), n)
        if len(got) != len(target):
            continue
        have = [frozenset(int(c) - 1 for c in t) for t in got]
        for perm in perms:
            if {frozenset(perm[i] for i in t) for t in have} == want:
                chi = chirotope_from_config(_relabel_columns(m, perm))
                if e_ray_passing(chi, n) != target:
                    raise MalformedChirotope("pass sets are not equivariant")
                return chi
        score = len(got & target)
        if score > best_score:
            best, best_score = got, score
    raise SearchFailure(budget, best)


# Chirotopes found by the search above (seed 0), frozen with their witnesses.
E6_CHIROTOPE_WITNESS = ((14, -7, 18, -2, 15, 17), (8, -15, 18, 16, 4, 0), (-5, -2, -9, -18, -8, -9))
E7_CHIROTOPE_WITNESS = (
    (18, -5, -8, -10, 1, -20, -6),
    (8, -18, 4, 6, 16, 20, 5),
    (6, -16, -18, 8, -10, 16, -4),
)


def region_chirotope(n: int) -> Chirotope:
    wit = E6_CHIROTOPE_WITNESS if n == 6 else E7_CHIROTOPE_WITNESS
    if wit is None:
        return find_region_chirotope(n)
    return chirotope_from_config(wit)


# Gr(3,6)


@dataclass
class Gr36Report:
    filter: FilterReport
    vertex_of: dict[str, int]
    edges_match: bool

    @property
    def ray_count(self) -> int:
        return len(self.filter.rays)

    @property
    def pair_count(self) -> int:
        return len(self.filter.pairs)


def gr36_vertex_labels() -> dict[str, int]:
    """Ray label -> 0-based E6 pezzotope vertex, from the A1 triples and the g-rays of u11..u15."""
    out = {"e" + t: k - 1 for k, t in fixtures.E6_A1_VERTICES.items()}
    for k, lab in enumerate(fixtures.GR36_CHIROTOPE_G_RAYS):
        out[lab] = 10 + k
    return out


def same_ray(a: str, b: str, n: int) -> bool:
    return reduce_mod_lineality(ray(a, n), n) == reduce_mod_lineality(ray(b, n), n)


def gr36_ray_and_pair_filter(chi: Chirotope | None = None) -> Gr36Report:
    chi = chi or region_chirotope(6)
    rep = ray_filter(gr36_ray_catalog(), chi, 6)
    names = gr36_vertex_labels()
    vertex_of = {}
    for lab in rep.rays:
        hit = [v for name, v in names.items() if same_ray(lab, name, 6)]
        if len(hit) == 1:
            vertex_of[lab] = hit[0]
    graph = build_graph(6)
    ok = len(vertex_of) == len(rep.rays) and {
        frozenset((vertex_of[a], vertex_of[b])) for a, b in rep.pairs
    } == graph.edges
    return Gr36Report(rep, vertex_of, ok)


# Gr(3,7), partial


@dataclass
class Gr37Report:
    candidates: list[str]
    passing: list[str]
    vertex_of: dict[str, int]
    passing_pairs: set[frozenset[int]]
    induced_edges: set[frozenset[int]]
    extraneous_inside: set[frozenset[int]]

    @property
    def all_pass(self) -> bool:
        return len(self.passing) == len(self.candidates)

    @property
    def consistent(self) -> bool:
        return self.passing_pairs == self.induced_edges | self.extraneous_inside


def gr37_candidate_vertices(graph: PezzoGraph) -> dict[str, int]:
    """Candidate ray -> 0-based vertex of the catalog graph whose roots it encodes."""
    verts = graph.vertices
    cat = root_catalog(7)
    out = {}
    for k, t in fixtures.E7_A1_VERTICES.items():
        out["e" + t] = k - 1
    for lab in fixtures.GR37_EXTRA_RAYS:
        want = {cat.label_index(p[1:]) for p in lab.split("+")}
        hit = [k for k, v in enumerate(verts) if v.kind == "A2" and want <= v.roots]
        if len(hit) != 1:
            raise ValueError(f"no unique A2 vertex for {lab}")
        out[lab] = hit[0]
    return out


def gr37_partial_filter(chi: Chirotope | None = None, mapping: dict[int, int] | None = None) -> Gr37Report:
    """Membership of the 13 candidate rays and their pairwise sums, in the fixture numbering."""
    chi = chi or region_chirotope(7)
    graph = build_graph(7)
    mapping = mapping or fixture_relabeling(graph)
    fixed = relabel(graph, mapping)
    cand = gr37_candidate_vertices(graph)
    labels = list(cand)
    rep = ray_filter(labels, chi, 7)
    vertex_of = {lab: mapping[v] for lab, v in cand.items()}
    inside = set(vertex_of.values())
    pairs = {frozenset((vertex_of[a], vertex_of[b])) for a, b in rep.pairs}
    induced = {e for e in fixed.edges if e <= inside}
    extr = {frozenset((a - 1, b - 1)) for a, b in fixtures.GR37_EXTRANEOUS_PAIRS}
    return Gr37Report(labels, rep.rays, vertex_of, pairs, induced, {e for e in extr if e <= inside})


# Yoshida route: monomial maps indexed by the 40 A2x3 subsystems


def root_form_values(d: Sequence) -> list[Fraction]:
    return [sum(Fraction(c) * x for c, x in zip(r.d_form(), d)) for r in root_catalog(6).roots]


def yoshida_values(d: Sequence) -> list[Fraction]:
    """Each coordinate is the product of the nine root forms of one A2x3 subsystem."""
    vals = root_form_values(d)
    out = []
    for s in family(6):
        v = Fraction(1)
        for r in s.roots:
            v *= vals[r]
        out.append(v)
    return out


_SCREEN_PRIME = 32749


def _screen_quadruples(ev: list[list[int]], rng: random.Random, rounds: int = 2) -> list[tuple[int, ...]]:
    """4-subsets of columns whose random 4-row projection is singular mod a small prime.

    Uses the Laplace expansion along rows (0,1 | 2,3) with 2x2 minors; every true
    dependency survives, false survivors are removed by the exact check.
    """
    m = len(ev[0])
    quads = np.array(list(itertools.combinations(range(m), 4)), dtype=np.int64)
    alive = np.ones(len(quads), dtype=bool)
    p = _SCREEN_PRIME
    ev_mod = np.array([[x % p for x in row] for row in ev], dtype=np.int64)
    for _ in range(rounds):
        proj = np.array([[rng.randrange(p) for _ in range(len(ev))] for _ in range(4)], dtype=np.int64)
        comp = np.zeros((4, m), dtype=np.int64)
        for k in range(len(ev)):
            comp = (comp + np.outer(proj[:, k], ev_mod[k])) % p
        top = (np.outer(comp[0], comp[1]) - np.outer(comp[1], comp[0])) % p
        bot = (np.outer(comp[2], comp[3]) - np.outer(comp[3], comp[2])) % p
        a, b, c, d = quads.T
        det = (top[a, b] * bot[c, d] - top[a, c] * bot[b, d] + top[a, d] * bot[b, c]
               + top[b, c] * bot[a, d] - top[b, d] * bot[a, c] + top[c, d] * bot[a, b]) % p
        alive &= det == 0
    return [tuple(int(x) for x in q) for q in quads[alive]]


@lru_cache(maxsize=None)
def linear_circuits(samples: int = 60, seed: int = 11) -> tuple[dict[int, Fraction], ...]:
    """Minimal four-term linear relations among the 40 coordinates, exact."""
    rng = random.Random(seed)
    pts = [[rng.randint(-50, 50) for _ in range(6)] for _ in range(samples)]
    ev = [[int(v) for v in yoshida_values(d)] for d in pts]  # samples x 40
    out = []
    for sub in _screen_quadruples(ev, rng):
        cols = [[row[c] for c in sub] for row in ev]
        if rank_rational(cols) != 3:
            continue
        if any(rank_rational([[row[i] for i in keep] for row in cols]) < 3
               for keep in itertools.combinations(range(4), 3)):
            continue
        out.append(dict(zip(sub, _kernel_vector(cols))))
    return tuple(out)


def _det(m: list[list]) -> Fraction:
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def _kernel_vector(cols: list[list[Fraction]]) -> list[Fraction]:
    from .linalg import nullspace_rational

    basis = nullspace_rational(cols)
    if len(basis) != 1:
        raise ValueError("expected a one-dimensional kernel")
    return basis[0]


@dataclass
class YoshidaReport:
    circuits: int
    a1_passing: list[int]
    a2_images: int
    a2_passing: list[int]
    pair_passing: int
    pair_total: int
    edges_match: bool


def positive_region_point(seed: int = 5, budget: int = 200000) -> list[Fraction]:
    """Seeded search for d with all fifteen root-form coordinates in (0, 1)."""
    from .uforms import BoundaryError, dunit_u_values

    rng = random.Random(seed)
    for _ in range(budget):
        d = [Fraction(rng.randint(-60, 60), rng.randint(1, 7)) for _ in range(6)]
        try:
            u = dunit_u_values(d)
        except BoundaryError:
            continue
        if all(0 < v < 1 for v in u.values()):
            return d
    raise SearchFailure(budget)


def find_region_point(target: set[str] | None = None, seed: int = 5, budget: int = 200000) -> list[Fraction]:
    """Seeded search for d whose passing A1 rays are exactly the target root labels (slow)."""
    target = target or set(fixtures.E6_A1_VERTICES.values())
    rng = random.Random(seed)
    rels_of = linear_circuits()
    rays = _a1_images()
    cat = root_catalog(6)
    for _ in range(budget):
        d = [Fraction(rng.randint(-60, 60), rng.randint(1, 7)) for _ in range(6)]
        if 0 in root_form_values(d):
            continue
        rels = _signed_circuits(rels_of, d)
        got = {cat.labels[r] for r, w in enumerate(rays) if _member(w, rels)}
        if got == target:
            return d
    raise SearchFailure(budget)


def a1_passing_labels(d: Sequence) -> set[str]:
    rels = _signed_circuits(linear_circuits(), d)
    cat = root_catalog(6)
    return {cat.labels[r] for r, w in enumerate(_a1_images()) if _member(w, rels)}


def _a1_images() -> list[list[int]]:
    inc = build_incidence(6).entries
    return [list(row) for row in inc]


def _a2_images() -> list[tuple[int, ...]]:
    cat = root_catalog(6)
    from .subsystems import a2_subsystems

    inc = build_incidence(6).entries
    flats = a2_subsystems(6)
    assert len(flats) == 120 and len(cat) == 36
    return [tuple(sum(inc[r][j] for r in f) for j in range(len(inc[0]))) for f in flats]


def _signed_circuits(circuits, d) -> list[SignedRelation]:
    vals = yoshida_values(d)
    rels = []
    for c in circuits:
        rels.append(SignedRelation([(1 if coef * vals[j] > 0 else -1, (j,)) for j, coef in c.items()]))
    return rels


def _member(w: Sequence, rels: list[SignedRelation]) -> bool:
    ones = {k: 1 for k in range(len(w))}
    wd = {k: Fraction(v) for k, v in enumerate(w)}
    return all(r.holds(wd, ones) for r in rels)


# Found by find_region_point() with seed 5: its passing A1 rays are the ten E6 A1 vertex labels.
YOSHIDA_REGION_POINT = (Fraction(-10, 7), Fraction(47, 2), Fraction(-38, 3), Fraction(18), Fraction(-17), Fraction(-5, 6))


def yoshida_route(d: Sequence | None = None) -> YoshidaReport:
    circuits = linear_circuits()
    if d is None:
        d = YOSHIDA_REGION_POINT
    rels = _signed_circuits(circuits, d)
    a1 = _a1_images()
    a2_all = _a2_images()
    a2 = sorted(set(a2_all))
    a1_pass = [r for r, w in enumerate(a1) if _member(w, rels)]
    a2_pass = [k for k, w in enumerate(a2) if _member(w, rels)]
    vecs = [a1[r] for r in a1_pass] + [a2[k] for k in a2_pass]
    pairs = [(i, j) for i, j in itertools.combinations(range(len(vecs)), 2)
             if _member([a + b for a, b in zip(vecs[i], vecs[j])], rels)]
    # vertex numbering: A1 rays by their triple label, A2 images by the A2x3 subsystem they single out
    cat = root_catalog(6)
    a1_index = {lab: k - 1 for k, lab in fixtures.E6_A1_VERTICES.items()}
    verts = vertex_catalog(6)
    fam = family(6)
    vid = []
    for r in a1_pass:
        vid.append(a1_index.get(cat.labels[r]))
    for k in a2_pass:
        cols = [j for j, v in enumerate(a2[k]) if v == 3]
        hit = [i for i, v in enumerate(verts) if len(cols) == 1 and v.roots == fam[cols[0]].roots]
        vid.append(hit[0] if hit else None)
    ok = None not in vid and {frozenset((vid[i], vid[j])) for i, j in pairs} == build_graph(6).edges
    return YoshidaReport(len(circuits), a1_pass, len(a2), a2_pass, len(pairs), len(vecs) * (len(vecs) - 1) // 2, ok)
