"""Pezzotope graphs, clique complexes, homology certificates and the E6 convex realization."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from . import fixtures
from .lattice import generators, orbit, root_catalog
from .linalg import TEST_PRIMES, rank_mod_p, rank_rational
from .subsystems import Subsystem, gram, vertex_catalog

# Dual f-vectors of the link types.
ASSOCIAHEDRON_3 = (9, 21, 14)
OCTAHEDRON = (6, 12, 8)


@dataclass
class PezzoGraph:
    n: int
    vertices: list[Subsystem]
    edges: set[frozenset[int]]
    census: dict[str, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def neighbors(self, i: int) -> set[int]:
        return {j for e in self.edges if i in e for j in e if j != i}

    def non_edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in itertools.combinations(range(self.size), 2) if frozenset((i, j)) not in self.edges]


class CensusError(AssertionError):
    pass


E6_CENSUS = {"A1-A1": 30, "A1-A2x3": 30}


def _root_orthogonal(a: Subsystem, b: Subsystem, n: int) -> bool:
    g = gram(n)
    return all(g[x][y] == 0 for x in a.roots for y in b.roots)


def build_graph(n: int, check: bool = True) -> PezzoGraph:
    """Edges from the containment and orthogonality rules; vertex i is u_{i+1}."""
    verts = vertex_catalog(n)
    edges: dict[frozenset[int], str] = {}
    idx = {k: [i for i, v in enumerate(verts) if v.kind == k] for k in {v.kind for v in verts}}
    if n == 6:
        for i, j in itertools.combinations(idx["A1"], 2):
            if _root_orthogonal(verts[i], verts[j], n):
                edges[frozenset((i, j))] = "A1-A1"
        for i in idx["A1"]:
            for j in idx["A2x3"]:
                if verts[i].roots <= verts[j].roots:
                    edges[frozenset((i, j))] = "A1-A2x3"
        expected = E6_CENSUS
    else:
        edges = _e7_edges(verts, idx)
        expected = fixtures.E7_EDGE_GROUPS
    census = dict(Counter(edges.values()))
    if check:
        for key, want in expected.items():
            if census.get(key, 0) != want:
                raise CensusError(f"edge group {key}: found {census.get(key, 0)}, expected {want}")
    return PezzoGraph(n, verts, set(edges), census)


def _e7_edges(verts: list[Subsystem], idx: dict[str, list[int]]) -> dict[frozenset[int], str]:
    a1, a2, a3, a7 = idx["A1"], idx["A2"], idx["A3x2"], idx["A7"]
    edges: dict[frozenset[int], str] = {}

    def add(i, j, tag):
        edges.setdefault(frozenset((i, j)), tag)

    def within(i, j):
        return verts[i].roots <= verts[j].roots

    def common(i, j, pool):
        return any(verts[i].roots | verts[j].roots <= verts[k].roots for k in pool)

    def same_factor(i, j):
        return any(verts[i].roots | verts[j].roots <= f for k in a3 for f in verts[k].factors)

    for i, j in itertools.combinations(a1, 2):
        if _root_orthogonal(verts[i], verts[j], 7):
            add(i, j, "A1-A1")
    for i, j in itertools.combinations(a2, 2):
        if common(i, j, a3) and not same_factor(i, j):
            add(i, j, "A2-A2")
    for i in a1:
        for j in a2:
            if within(i, j):
                add(i, j, "A1-A2:inclusion")
            elif not same_factor(i, j):
                add(i, j, "A1-A2:separate")
    for i in a1:
        for j in a3:
            if within(i, j):
                add(i, j, "A1-A3x2:inclusion")
                continue
            containing = [k for k in a2 if within(i, k)]
            if not common(i, j, a7) and all(not (verts[k].roots & verts[j].roots) for k in containing):
                add(i, j, "A1-A3x2:exceptional")
    for small, big, tag in ((a1, a7, "A1-A7"), (a2, a3, "A2-A3x2"), (a2, a7, "A2-A7"), (a3, a7, "A3x2-A7")):
        for i in small:
            for j in big:
                if within(i, j):
                    add(i, j, tag)
    return edges


def u_supports(graph: PezzoGraph) -> dict[int, list[int]]:
    """Non-neighbors of each vertex, 1-based."""
    out = {}
    for i in range(graph.size):
        nb = graph.neighbors(i)
        out[i + 1] = [j + 1 for j in range(graph.size) if j != i and j not in nb]
    return out


# Clique complexes


@dataclass
class CliqueComplex:
    faces: list[list[tuple[int, ...]]]
    vertex_count: int

    @property
    def face_counts(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.faces)

    @property
    def dimension(self) -> int:
        return len(self.faces) - 1

    def facets(self) -> list[tuple[int, ...]]:
        contained = set()
        for level in self.faces[1:]:
            for f in level:
                for k in range(len(f)):
                    contained.add(f[:k] + f[k + 1:])
        return [f for level in self.faces for f in level if f not in contained]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.face_counts))

    def boundary_matrix(self, k: int) -> list[list[int]]:
        """Matrix of the boundary map from k-faces to (k-1)-faces, sorted-vertex orientation."""
        rows = {f: i for i, f in enumerate(self.faces[k - 1])}
        mat = [[0] * len(self.faces[k]) for _ in rows]
        for j, f in enumerate(self.faces[k]):
            for pos in range(len(f)):
                mat[rows[f[:pos] + f[pos + 1:]]][j] = (-1) ** pos
        return mat

    def link(self, v: int) -> CliqueComplex:
        faces = []
        for level in self.faces[1:]:
            lk = [tuple(x for x in f if x != v) for f in level if v in f]
            if lk:
                faces.append(lk)
        return CliqueComplex(faces, len(faces[0]) if faces else 0)


def clique_complex(graph: PezzoGraph | None = None, nvert: int | None = None, edges=None) -> CliqueComplex:
    if graph is not None:
        nvert, edges = graph.size, graph.edges
    adj = {i: set() for i in range(nvert)}
    for e in edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    faces = [[(i,) for i in range(nvert)]]
    while True:
        nxt = []
        for f in faces[-1]:
            common = set.intersection(*(adj[x] for x in f))
            for y in sorted(common):
                if y > f[-1]:
                    nxt.append(f + (y,))
        if not nxt:
            break
        faces.append(nxt)
    return CliqueComplex(faces, nvert)


def is_flag(cx: CliqueComplex, graph_edges: set[frozenset[int]]) -> bool:
    """Every face is a clique and every clique is a face."""
    faceset = {f for level in cx.faces for f in level}
    for f in faceset:
        if any(frozenset(p) not in graph_edges for p in itertools.combinations(f, 2)):
            return False
    return len(faceset) == sum(cx.face_counts)


# Homology


@dataclass
class HomologyReport:
    betti_mod_p: dict[int, tuple[int, ...]]
    betti_rational: tuple[int, ...] | None
    euler: int
    exact_ranks: bool

    @property
    def consistent(self) -> bool:
        vals = set(self.betti_mod_p.values())
        return len(vals) == 1 and (self.betti_rational is None or self.betti_rational in vals)


def _betti(counts: tuple[int, ...], ranks: dict[int, int]) -> tuple[int, ...]:
    return tuple(counts[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(len(counts)))


def homology(cx: CliqueComplex, primes=TEST_PRIMES, exact_limit: int = 400) -> HomologyReport:
    """Betti numbers mod several primes; exact rational ranks for small matrices.

    Over Q each boundary rank is at least its rank mod p, and raising the rank of the
    k-th boundary lowers both b_{k-1} and b_k. So when no two consecutive entries of the
    mod-p Betti vector are both positive, the rational Betti numbers equal it.
    """
    counts = cx.face_counts
    mats = {k: cx.boundary_matrix(k) for k in range(1, len(counts))}
    by_p = {}
    for p in primes:
        ranks = {k: rank_mod_p(m, p) if m and m[0] else 0 for k, m in mats.items()}
        by_p[p] = _betti(counts, ranks)
    euler = cx.euler_characteristic()
    small = all(len(m) * len(m[0]) <= exact_limit * exact_limit for m in mats.values())
    if small:
        ranks = {k: rank_rational(m) for k, m in mats.items()}
        rational = _betti(counts, ranks)
    else:
        bound = tuple(min(b[k] for b in by_p.values()) for k in range(len(counts)))
        rigid = all(min(bound[k - 1], bound[k]) == 0 for k in range(1, len(bound)))
        rational = bound if rigid else None
    return HomologyReport(by_p, rational, euler, small)


# Stanley-Reisner data


def stanley_reisner(graph: PezzoGraph) -> list[tuple[int, int]]:
    """Quadratic generators s_i s_j for non-edges, 1-based."""
    return [(i + 1, j + 1) for i, j in graph.non_edges()]


def alexander_dual(cx: CliqueComplex) -> list[tuple[int, ...]]:
    """Facet complements, 1-based."""
    every = set(range(cx.vertex_count))
    return [tuple(sorted(x + 1 for x in every - set(f))) for f in cx.facets()]


def sr_fixture_diff(graph: PezzoGraph) -> tuple[set, set]:
    mine = {frozenset(p) for p in stanley_reisner(graph)}
    theirs = {frozenset(p) for p in fixtures.E7_SR_PAIRS}
    return mine - theirs, theirs - mine


# Facet links


@dataclass
class FacetTypeReport:
    links: dict[int, tuple[int, ...]]
    classes: dict[tuple[int, ...], list[int]]
    unmatched: list[int]


def facet_links(cx: CliqueComplex, n: int) -> FacetTypeReport:
    links = {v + 1: cx.link(v).face_counts for v in range(cx.vertex_count)}
    classes: dict[tuple[int, ...], list[int]] = {}
    for v, f in links.items():
        classes.setdefault(tuple(reversed(f)), []).append(v)
    if n == 6:
        known = {tuple(reversed(ASSOCIAHEDRON_3)), tuple(reversed(OCTAHEDRON))}
    else:
        known = {tuple(f) for _, f in fixtures.E7_FACET_TYPES}
    unmatched = [v for v, f in links.items() if tuple(reversed(f)) not in known]
    return FacetTypeReport(links, classes, unmatched)


# Convex hull of the realization


def det_int(m: list[list[int]]) -> int:
    """Bareiss determinant of an integer matrix."""
    a = [list(r) for r in m]
    k = len(a)
    sign, prev = 1, 1
    for c in range(k - 1):
        piv = next((i for i in range(c, k) if a[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[k - 1][k - 1]


@dataclass
class HullReport:
    facets: list[tuple[int, ...]]
    f_vector: tuple[int, ...]
    simplicial: bool
    all_vertices: bool


def hull_check(matrix: list[list[int]] | None = None) -> HullReport:
    """Facets of the convex hull of the columns by exhaustive 4-subsets (dimension 4)."""
    matrix = matrix or fixtures.FIRSCHING_MATRIX
    pts = [tuple(col) for col in zip(*matrix)]
    d = len(matrix)
    m = len(pts)
    facets, degenerate = [], False
    for quad in itertools.combinations(range(m), d):
        base = [[1, *pts[i]] for i in quad]
        sides = set()
        zero = 0
        for j in range(m):
            if j in quad:
                continue
            s = det_int(base + [[1, *pts[j]]])
            if s == 0:
                zero += 1
            else:
                sides.add(s > 0)
        if len(sides) == 1:
            if zero:
                degenerate = True
            facets.append(quad)
    used = {i for f in facets for i in f}
    faces = [set() for _ in range(d)]
    for f in facets:
        for k in range(1, d + 1):
            for sub in itertools.combinations(f, k):
                faces[k - 1].add(sub)
    return HullReport(facets, tuple(len(x) for x in faces), not degenerate, used == set(range(m)))


# Weyl orbit of the vertex catalog


def region_orbit_count(n: int, budget: int = 10**6) -> int:
    """Orbit size of the whole vertex catalog (as a set of root sets) under W(E_n)."""
    cat = root_catalog(n)
    gens = [w.root_perm for w in generators(n, cat)]
    verts = [s.key for s in vertex_catalog(n)]
    ids: dict[tuple[int, ...], int] = {}
    queue = []
    for v in verts:
        if v not in ids:
            ids[v] = len(ids)
            queue.append(v)
    for v in queue:
        for g in gens:
            img = tuple(sorted(g[i][0] for i in v))
            if img not in ids:
                ids[img] = len(ids)
                queue.append(img)
    tables = [[0] * len(queue) for _ in gens]
    for k, v in enumerate(queue):
        for t, g in zip(tables, gens):
            t[k] = ids[tuple(sorted(g[i][0] for i in v))]
    seed = frozenset(ids[v] for v in verts)
    return orbit(seed, lambda t, s: frozenset(t[x] for x in s), tables, budget=budget).size


def amplitude_facets_match(hull: HullReport) -> bool:
    mine = {tuple(sorted(x + 1 for x in f)) for f in hull.facets}
    return mine == {tuple(t) for t in fixtures.E6_AMPLITUDE_TERMS}


def vector_f(cx: CliqueComplex) -> tuple[int, ...]:
    """Face counts reversed: the f-vector of the dual simple polytope."""
    return tuple(reversed(cx.face_counts))


def sample_flag_check(cx: CliqueComplex, graph: PezzoGraph, trials: int, rng: np.random.Generator) -> bool:
    faceset = {f for level in cx.faces for f in level}
    for _ in range(trials):
        k = int(rng.integers(2, len(cx.faces) + 2))
        sub = tuple(sorted(rng.choice(graph.size, size=min(k, graph.size), replace=False).tolist()))
        clique = all(frozenset(p) in graph.edges for p in itertools.combinations(sub, 2))
        if clique != (sub in faceset):
            return False
    return True


# The u-equation and Stanley-Reisner lists number the E7 vertices differently
# from the vertex catalog; comparisons go through a graph isomorphism.


def fixture_graph(n: int) -> PezzoGraph:
    """Graph whose non-edges are the supports of the transcribed u-equations."""
    sup = fixtures.E6_U_SUPPORTS if n == 6 else fixtures.E7_U_SUPPORTS
    m = len(sup)
    edges = {
        frozenset((i - 1, j - 1))
        for i in sup
        for j in range(1, m + 1)
        if j != i and j not in sup[i]
    }
    return PezzoGraph(n, [], edges)


def isomorphisms(g: PezzoGraph, h: PezzoGraph) -> list[dict[int, int]]:
    """All vertex bijections carrying the edges of g onto those of h."""
    import networkx as nx

    a, b = nx.Graph(), nx.Graph()
    a.add_nodes_from(range(len(g.vertices) or _vertex_count(g)))
    b.add_nodes_from(range(_vertex_count(h)))
    a.add_edges_from(tuple(e) for e in g.edges)
    b.add_edges_from(tuple(e) for e in h.edges)
    matcher = nx.isomorphism.GraphMatcher(a, b)
    return [dict(m) for m in matcher.isomorphisms_iter()]


def _vertex_count(g: PezzoGraph) -> int:
    return max(max(e) for e in g.edges) + 1


def fixture_relabeling(graph: PezzoGraph) -> dict[int, int] | None:
    """Catalog index -> fixture index (0-based); identity when the numberings agree."""
    target = fixture_graph(graph.n)
    if graph.edges == target.edges:
        return {i: i for i in range(graph.size)}
    isos = isomorphisms(graph, target)
    return min(isos, key=lambda m: sorted(m.items())) if isos else None


def relabel(graph: PezzoGraph, mapping: dict[int, int]) -> PezzoGraph:
    inv = {v: k for k, v in mapping.items()}
    verts = [graph.vertices[inv[i]] for i in range(graph.size)]
    edges = {frozenset(mapping[x] for x in e) for e in graph.edges}
    return PezzoGraph(graph.n, verts, edges, dict(graph.census))
