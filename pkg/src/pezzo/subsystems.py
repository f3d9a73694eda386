"""Root subsystems labelling pezzotope vertices, incidence matrices and Eckardt triples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import fixtures
from .lattice import Catalogs, RootCatalog, build_catalogs, generators, line_action, orbit, root_catalog
from .linalg import rank_mod_p, rank_rational, TEST_PRIMES

# (positive roots, rank) of the irreducible factors we meet
FACTOR_SHAPES = {"A1": (1, 1), "A2": (3, 2), "A3": (6, 3), "A7": (28, 7)}
KIND_FACTORS = {
    "A1": ["A1"],
    "A2": ["A2"],
    "A2x3": ["A2", "A2", "A2"],
    "A1x7": ["A1"] * 7,
    "A3x2": ["A3", "A3"],
    "A7": ["A7"],
}


@dataclass(frozen=True)
class Subsystem:
    kind: str
    roots: frozenset[int]
    factors: tuple[frozenset[int], ...]

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.roots))


class SubsystemError(ValueError):
    pass


@lru_cache(maxsize=None)
def gram(n: int) -> tuple[tuple[int, ...], ...]:
    cat = root_catalog(n)
    return tuple(tuple(a.dot(b) for b in cat.roots) for a in cat.roots)


def closure(roots: set[int], n: int) -> set[int]:
    """Smallest set of positive roots containing roots and closed under r +- s."""
    cat = root_catalog(n)
    g = gram(n)
    out = set(roots)
    changed = True
    while changed:
        changed = False
        for i, j in itertools.combinations(sorted(out), 2):
            if g[i][j] == 0:
                continue
            sign = 1 if g[i][j] == 1 else -1
            v = tuple(a + sign * b for a, b in zip(cat.roots[i].coeffs, cat.roots[j].coeffs))
            k, _ = cat.signed_index(v)
            if k not in out:
                out.add(k)
                changed = True
    return out


def components(roots: set[int], n: int) -> list[frozenset[int]]:
    """Connected components of the non-orthogonality graph."""
    g = gram(n)
    left = set(roots)
    comps = []
    while left:
        seed = min(left)
        comp, queue = {seed}, [seed]
        for x in queue:
            for y in list(left):
                if y not in comp and g[x][y] != 0:
                    comp.add(y)
                    queue.append(y)
        left -= comp
        comps.append(frozenset(comp))
    return sorted(comps, key=lambda c: (len(c), sorted(c)))


def factor_type(comp: frozenset[int], n: int) -> str | None:
    cat = root_catalog(n)
    r = rank_rational([cat.roots[i].coeffs for i in comp])
    for name, shape in FACTOR_SHAPES.items():
        if shape == (len(comp), r):
            return name
    return None


def classify(roots: set[int], n: int) -> Subsystem:
    if closure(roots, n) != set(roots):
        raise SubsystemError("root set is not closed")
    comps = components(roots, n)
    types = [factor_type(c, n) for c in comps]
    if None in types:
        raise SubsystemError(f"unrecognized factor sizes {[len(c) for c in comps]}")
    for kind, want in KIND_FACTORS.items():
        if sorted(types) == sorted(want):
            return Subsystem(kind, frozenset(roots), tuple(comps))
    raise SubsystemError(f"unexpected factor types {types}")


def a2_subsystems(n: int) -> list[frozenset[int]]:
    g = gram(n)
    found = set()
    m = len(g)
    for i, j in itertools.combinations(range(m), 2):
        if g[i][j] != 0:
            found.add(frozenset(closure({i, j}, n)))
    return sorted(found, key=sorted)


def enumerate_a2x3_e6() -> list[Subsystem]:
    g = gram(6)
    a2s = a2_subsystems(6)

    def orth(a, b):
        return all(g[x][y] == 0 for x in a for y in b)

    out = []
    for a, b, c in itertools.combinations(a2s, 3):
        if orth(a, b) and orth(a, c) and orth(b, c):
            out.append(Subsystem("A2x3", a | b | c, (a, b, c)))
    return out


def orthogonal_frames(n: int, size: int) -> list[tuple[int, ...]]:
    """All sets of `size` pairwise orthogonal positive roots."""
    g = gram(n)
    m = len(g)
    out = []

    def extend(chosen: list[int], cands: list[int]):
        if len(chosen) == size:
            out.append(tuple(chosen))
            return
        for k, c in enumerate(cands):
            rest = [d for d in cands[k + 1:] if g[c][d] == 0]
            if len(chosen) + 1 + len(rest) >= size:
                extend(chosen + [c], rest)

    extend([], list(range(m)))
    return out


def enumerate_a1x7_e7() -> list[Subsystem]:
    return [
        Subsystem("A1x7", frozenset(f), tuple(frozenset([x]) for x in f))
        for f in orthogonal_frames(7, 7)
    ]


def family(n: int) -> list[Subsystem]:
    return enumerate_a2x3_e6() if n == 6 else enumerate_a1x7_e7()


def subsystem_closed_under_weyl(n: int) -> bool:
    """Every generator maps the enumerated family into itself."""
    cat = root_catalog(n)
    fam = {s.key for s in family(n)}
    for w in generators(n, cat):
        for key in fam:
            img = tuple(sorted(w.root_perm[i][0] for i in key))
            if img not in fam:
                return False
    return True


@dataclass
class IncidenceMatrix:
    n: int
    row_labels: list[str]
    columns: list[Subsystem]
    entries: list[list[int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.entries[0])

    def column_sums(self) -> list[int]:
        return [sum(row[j] for row in self.entries) for j in range(self.shape[1])]

    def rank(self) -> int:
        return rank_rational(self.entries)

    def rank_mod(self, p: int) -> int:
        return rank_mod_p(self.entries, p)

    def to_csv(self) -> str:
        lines = ["root," + ",".join(str(j + 1) for j in range(self.shape[1]))]
        for lab, row in zip(self.row_labels, self.entries):
            lines.append(lab + "," + ",".join(map(str, row)))
        return "\n".join(lines) + "\n"


def build_incidence(n: int) -> IncidenceMatrix:
    cat = root_catalog(n)
    cols = family(n)
    entries = [[1 if i in s.roots else 0 for s in cols] for i in range(len(cat))]
    return IncidenceMatrix(n, list(cat.labels), cols, entries)


@dataclass
class RankReport:
    shape: tuple[int, int]
    rank: int
    modular: dict[int, int]

    @property
    def consistent(self) -> bool:
        return all(r == self.rank for r in self.modular.values())


def incidence_rank(n: int) -> RankReport:
    m = build_incidence(n)
    return RankReport(m.shape, m.rank(), {p: m.rank_mod(p) for p in TEST_PRIMES})


# Vertex catalogs


def label_indices(labels, cat: RootCatalog) -> frozenset[int]:
    return frozenset(cat.label_index(s) for s in labels)


def vertex_catalog(n: int) -> list[Subsystem]:
    """Validated pezzotope vertices u1.. in order; raises naming the first bad vertex."""
    cat = root_catalog(n)
    if n == 6:
        raw = {k: [v] for k, v in fixtures.E6_A1_VERTICES.items()}
        raw.update(fixtures.E6_A2X3_VERTICES)
        kinds = {k: "A1" if k <= 10 else "A2x3" for k in raw}
    elif n == 7:
        raw = {k: [v] for k, v in fixtures.E7_A1_VERTICES.items()}
        raw.update(fixtures.E7_SYSTEM_VERTICES)
        kinds = {k: "A1" if k <= 10 else "A2" if k <= 22 else "A3x2" if k <= 31 else "A7" for k in raw}
    else:
        raise ValueError("n must be 6 or 7")
    out = []
    for k in sorted(raw):
        roots = label_indices(raw[k], cat)
        if len(roots) != len(raw[k]):
            raise SubsystemError(f"u{k}: repeated root")
        try:
            sub = classify(set(roots), n)
        except SubsystemError as exc:
            raise SubsystemError(f"u{k}: {exc}") from exc
        if sub.kind != kinds[k]:
            raise SubsystemError(f"u{k}: expected {kinds[k]}, found {sub.kind}")
        out.append(sub)
    return out


def a1_complement_check() -> bool:
    """The E6 A1 labels pick exactly one triple out of each complementary pair."""
    labels = set(fixtures.E6_A1_VERTICES.values())
    comp = {"".join(sorted(set("123456") - set(t))) for t in labels}
    return not (labels & comp) and len(labels) == 10


# Eckardt triples


@dataclass
class EckardtReport:
    triples: list[frozenset[str]]
    fff: int
    efg: int
    orbit_size: int
    tritangent_count: int


def eckardt_triples() -> EckardtReport:
    cat = build_catalogs(6)
    triples = []
    for a, b, c in _perfect_matchings("123456"):
        triples.append(frozenset({f"F{a}", f"F{b}", f"F{c}"}))
    for i, j in itertools.permutations("123456", 2):
        pair = "".join(sorted(i + j))
        triples.append(frozenset({f"E{i}", f"F{pair}", f"G{j}"}))
    perms, act = line_action(cat)
    size = orbit(triples[0], act, perms).size
    return EckardtReport(triples, 15, 30, size, len(tritangent_triples(cat)))


def tritangent_triples(cat: Catalogs) -> list[frozenset[str]]:
    """Triples of pairwise meeting lines (independent route to the 45)."""
    m = cat.intersections
    k = len(cat.lines)
    out = []
    for a, b, c in itertools.combinations(range(k), 3):
        if m[a][b] == 1 and m[a][c] == 1 and m[b][c] == 1:
            out.append(frozenset({cat.line_names[a], cat.line_names[b], cat.line_names[c]}))
    return out


def _perfect_matchings(s: str):
    if not s:
        yield ()
        return
    a = s[0]
    for k in range(1, len(s)):
        b = s[k]
        rest = s[1:k] + s[k + 1:]
        for m in _perfect_matchings(rest):
            yield (a + b,) + m


def is_eckardt_triple(text: str) -> bool:
    """Parse '(16)(25)(34)' into F-lines and check it is a listed triple."""
    pairs = [p for p in text.replace(")", "").split("(") if p]
    lines = frozenset(f"F{''.join(sorted(p))}" for p in pairs)
    return lines in eckardt_triples().triples


def strata_total() -> int:
    return sum(fixtures.ECKARDT_STRATA.values())
