"""Covers of K_6 by triangles, disjoint edge pairs and 4-cycles.

Triangles are sorted 3-tuples of points 1..6; edges are sorted pairs.  The
S_6 action relabels points, and canonical forms are lexicographic minima
over all 720 relabelings.
"""

from __future__ import annotations

import functools
import itertools
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .fixtures import hemi_triangles
from .perm import ElementSet, Permutation, symmetric_group

N = 6
POINTS = tuple(range(1, N + 1))
EDGES: tuple[tuple[int, int], ...] = tuple(itertools.combinations(POINTS, 2))
TRIANGLES: tuple[tuple[int, int, int], ...] = tuple(itertools.combinations(POINTS, 3))
EDGE_INDEX = {e: i for i, e in enumerate(EDGES)}
TRIANGLE_INDEX = {t: i for i, t in enumerate(TRIANGLES)}

# triangle-edge incidence, 20 x 15
INCIDENCE = np.zeros((len(TRIANGLES), len(EDGES)), dtype=np.int64)
for _t, _tri in enumerate(TRIANGLES):
    for _e in itertools.combinations(_tri, 2):
        INCIDENCE[_t, EDGE_INDEX[_e]] = 1

# The hemi-icosahedron triangles as listed (one entry appears twice in the
# published list; the duplicate is dropped).
HEMI_LISTED: tuple[tuple[int, int, int], ...] = hemi_triangles()
HEMI_ORIENTED: tuple[tuple[int, int, int], ...] = tuple(dict.fromkeys(HEMI_LISTED))


class CoverError(ValueError):
    pass


def _relabel_tables() -> tuple[np.ndarray, np.ndarray]:
    """For every g in S_6, the induced permutation of triangles and of edges."""
    G = symmetric_group(N)
    img = G.images.astype(np.int64) + 1  # img[g, p-1] = g(p)
    tri = np.array(TRIANGLES)
    edge = np.array(EDGES)
    t_img = np.sort(img[:, tri - 1], axis=2)
    e_img = np.sort(img[:, edge - 1], axis=2)
    t_code = np.zeros(7 * 7 * 7, dtype=np.int64)
    for i, t in enumerate(TRIANGLES):
        t_code[(t[0] * 7 + t[1]) * 7 + t[2]] = i
    e_code = np.zeros(7 * 7, dtype=np.int64)
    for i, e in enumerate(EDGES):
        e_code[e[0] * 7 + e[1]] = i
    tmap = t_code[(t_img[..., 0] * 7 + t_img[..., 1]) * 7 + t_img[..., 2]]
    emap = e_code[e_img[..., 0] * 7 + e_img[..., 1]]
    return tmap, emap


_TMAP, _EMAP = _relabel_tables()


@dataclass(frozen=True, order=True)
class TriangleSet:
    """A set of distinct triangles of K_6."""

    triangles: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        tris = tuple(sorted(tuple(sorted(t)) for t in self.triangles))
        if len(set(tris)) != len(tris):
            raise ValueError("triangles must be distinct")
        for t in tris:
            if len(set(t)) != 3 or not set(t) <= set(POINTS):
                raise ValueError(f"bad triangle {t}")
        object.__setattr__(self, "triangles", tris)

    @classmethod
    def from_indices(cls, idx: Iterable[int]) -> TriangleSet:
        return cls(tuple(TRIANGLES[int(i)] for i in idx))

    def indices(self) -> np.ndarray:
        return np.array(sorted(TRIANGLE_INDEX[t] for t in self.triangles), dtype=np.int64)

    def __len__(self) -> int:
        return len(self.triangles)

    def edge_multiplicity(self) -> dict[tuple[int, int], int]:
        counts = INCIDENCE[self.indices()].sum(axis=0) if len(self) else np.zeros(len(EDGES), int)
        return {e: int(c) for e, c in zip(EDGES, counts)}

    def lam(self) -> int | None:
        """The constant edge multiplicity, or None."""
        vals = set(self.edge_multiplicity().values())
        return vals.pop() if len(vals) == 1 else None

    def relabel(self, g: Permutation) -> TriangleSet:
        return TriangleSet(tuple(tuple(g(p) for p in t) for t in self.triangles))

    def canonical(self) -> tuple[int, ...]:
        return canonical_triangle_code(self.indices())

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.triangles]


def canonical_triangle_code(idx: np.ndarray) -> tuple[int, ...]:
    images = np.sort(_TMAP[:, idx], axis=1)
    best = images[np.lexsort(images.T[::-1])[0]]
    return tuple(int(v) for v in best)


def triangle_set_stabilizer_order(T: TriangleSet) -> int:
    idx = T.indices()
    images = np.sort(_TMAP[:, idx], axis=1)
    return int(np.sum(np.all(images == idx[None, :], axis=1)))


@dataclass
class CoverOrbit:
    representative: TriangleSet
    lam: int
    orbit_size: int
    stabilizer_order: int
    members: list[TriangleSet] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "r": len(self.representative),
            "lambda": self.lam,
            "orbit_size": self.orbit_size,
            "stabilizer_order": self.stabilizer_order,
            "representative": self.representative.to_json(),
        }


def _group_orbits(found: list[np.ndarray], lam: int) -> list[CoverOrbit]:
    buckets: dict[tuple[int, ...], list[TriangleSet]] = {}
    for idx in found:
        buckets.setdefault(canonical_triangle_code(idx), []).append(TriangleSet.from_indices(idx))
    out = []
    for key in sorted(buckets):
        rep = TriangleSet.from_indices(key)
        stab = triangle_set_stabilizer_order(rep)
        out.append(CoverOrbit(rep, lam, 720 // stab, stab, sorted(buckets[key])))
    return out


def enumerate_triangle_covers(r: int) -> list[CoverOrbit]:
    """All sets of r distinct triangles covering every edge lam = r/5 times, by S_6-orbit."""
    if not 0 < r <= len(TRIANGLES):
        raise ValueError("r must be in 1..20")
    if (3 * r) % len(EDGES):
        return []
    lam = 3 * r // len(EDGES)
    found: list[np.ndarray] = []
    counts = np.zeros(len(EDGES), dtype=np.int64)
    chosen: list[int] = []

    # DFS over triangles in lexicographic order; the lowest-index edge that
    # is still short must be covered by a triangle not yet considered.
    def dfs(start: int) -> None:
        if len(chosen) == r:
            if np.all(counts == lam):
                found.append(np.array(chosen))
            return
        short = np.flatnonzero(counts < lam)
        if not short.size:
            return
        e = short[0]
        for t in range(start, len(TRIANGLES)):
            if len(TRIANGLES) - t < r - len(chosen):
                break
            row = INCIDENCE[t]
            if not row[e]:
                continue
            if np.any(counts + row > lam):
                continue
            np.add(counts, row, out=counts)
            chosen.append(t)
            dfs(t + 1)
            chosen.pop()
            np.subtract(counts, row, out=counts)

    dfs(0)
    return _group_orbits(found, lam)


def brute_force_triangle_covers(r: int) -> list[np.ndarray]:
    """Every r-subset with constant edge multiplicity, by plain enumeration."""
    combos = np.array(list(itertools.combinations(range(len(TRIANGLES)), r)), dtype=np.int64)
    if not len(combos):
        return []
    mult = INCIDENCE[combos].sum(axis=1)
    ok = np.all(mult == mult[:, :1], axis=1)
    return [c for c in combos[ok]]


# ---------------------------------------------------------------------------
# 3-cycle sets as triangle covers


@dataclass
class CycleCover:
    lam: int | None
    triangles: TriangleSet
    multiplicity: dict[tuple[int, int, int], int]


def _support_points(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted(q for c in p.cycles() for q in c if len(c) > 1))


def cover_of_3cycle_set(C: ElementSet) -> CycleCover:
    """The triangle multiset of a set of 3-cycles and its edge multiplicity."""
    mult: Counter = Counter()
    for p in C.perms():
        if sorted(len(c) for c in p.cycles() if len(c) > 1) != [3]:
            raise CoverError(f"{p} is not a 3-cycle")
        mult[_support_points(p)] += 1
    edge = Counter()
    for t, m in mult.items():
        for e in itertools.combinations(t, 2):
            edge[e] += m
    n = C.degree
    all_edges = list(itertools.combinations(range(1, n + 1), 2))
    vals = {edge.get(e, 0) for e in all_edges}
    lam = vals.pop() if len(vals) == 1 else None
    if lam is not None and 3 * len(C) != lam * len(all_edges):
        raise AssertionError("edge count identity failed")
    tris = TriangleSet(tuple(mult)) if n == N else None
    return CycleCover(lam, tris, dict(mult))


# ---------------------------------------------------------------------------
# the hemi-icosahedron and oriented triangles


def hemi_edge_triangles() -> dict[tuple[int, int], tuple[int, int]]:
    """Each edge of K_6 with the two hemi-icosahedron triangles containing it."""
    inc: dict[tuple[int, int], list[int]] = {e: [] for e in EDGES}
    for k, t in enumerate(HEMI_ORIENTED):
        for e in itertools.combinations(sorted(t), 2):
            inc[e].append(k)
    bad = [e for e, ts in inc.items() if len(ts) != 2]
    if bad:
        raise CoverError(f"edges {bad} do not lie in exactly two triangles")
    return {e: (ts[0], ts[1]) for e, ts in inc.items()}


_HEMI_EDGES = hemi_edge_triangles()


def _directs(cycle: tuple[int, int, int], u: int, v: int) -> bool:
    """True if the cyclic order a->b->c->a contains the step u->v."""
    a, b, c = cycle
    return (u, v) in ((a, b), (b, c), (c, a))


@dataclass(frozen=True)
class OrientedTriangleSet:
    """One orientation per hemi-icosahedron triangle; signs[k] = +1 keeps the listed order."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != len(HEMI_ORIENTED) or any(s not in (1, -1) for s in self.signs):
            raise ValueError("need ten signs in {+1, -1}")

    @classmethod
    def from_bits(cls, code: int) -> OrientedTriangleSet:
        return cls(tuple(-1 if (code >> k) & 1 else 1 for k in range(len(HEMI_ORIENTED))))

    def cycles(self) -> list[tuple[int, int, int]]:
        out = []
        for t, s in zip(HEMI_ORIENTED, self.signs):
            out.append(t if s == 1 else (t[0], t[2], t[1]))
        return out

    def element_set(self) -> ElementSet:
        perms = [Permutation.from_cycles([c], N) for c in self.cycles()]
        return ElementSet.from_perms(perms, N)

    @property
    def f_minus(self) -> int:
        return sum(1 for s in self.signs if s == -1)

    def underlying(self) -> set[frozenset[int]]:
        return {frozenset(t) for t in self.cycles()}


def opposite_edges(assignment: OrientedTriangleSet) -> list[tuple[int, int]]:
    """Edges whose two triangles induce opposite directions on them."""
    cyc = assignment.cycles()
    out = []
    for (u, v), (s, t) in _HEMI_EDGES.items():
        if _directs(cyc[s], u, v) != _directs(cyc[t], u, v):
            out.append((u, v))
    return out


def opposite_edge_count(assignment: OrientedTriangleSet) -> int:
    return len(opposite_edges(assignment))


def omega_vertices(assignment: OrientedTriangleSet) -> set[int]:
    return {p for e in opposite_edges(assignment) for p in e}


def all_orientations() -> list[OrientedTriangleSet]:
    return [OrientedTriangleSet.from_bits(c) for c in range(2 ** len(HEMI_ORIENTED))]


def hemi_automorphisms() -> ElementSet:
    """Relabelings of 1..6 mapping the hemi-icosahedron's triangles to themselves."""
    idx = TriangleSet(HEMI_ORIENTED).indices()
    images = np.sort(_TMAP[:, idx], axis=1)
    keep = np.flatnonzero(np.all(images == idx[None, :], axis=1))
    return ElementSet(N, keep)


@dataclass
class OrientationCensus:
    scanned: int
    by_f_minus_and_o: dict[tuple[int, int], int]
    classes: dict[int, list[list[OrientedTriangleSet]]]
    classes_with_inverse: dict[int, list[list[OrientedTriangleSet]]]

    def o_values(self) -> list[int]:
        return sorted({o for _, o in self.by_f_minus_and_o})


@functools.cache
def orientation_census() -> OrientationCensus:
    """Scan all 2^10 orientations; group by o(C) and by S_6-conjugacy of C.

    ``classes`` merges assignments whose 3-cycle sets are S_6-conjugate;
    ``classes_with_inverse`` also merges C with C^-1.
    """
    from .search import canonical_form

    census: Counter = Counter()
    groups: dict[int, dict[tuple[int, ...], list[OrientedTriangleSet]]] = {}
    inv_groups: dict[int, dict[tuple[int, ...], list[OrientedTriangleSet]]] = {}
    assignments = all_orientations()
    for a in assignments:
        o = opposite_edge_count(a)
        census[(a.f_minus, o)] += 1
        C = a.element_set()
        key = canonical_form(C)
        groups.setdefault(o, {}).setdefault(key, []).append(a)
        ikey = min(key, canonical_form(C.inverse()))
        inv_groups.setdefault(o, {}).setdefault(ikey, []).append(a)
    classes = {o: [g[k] for k in sorted(g)] for o, g in sorted(groups.items())}
    inv_classes = {o: [g[k] for k in sorted(g)] for o, g in sorted(inv_groups.items())}
    return OrientationCensus(len(assignments), dict(sorted(census.items())), classes, inv_classes)


def enumerate_o5_assignments() -> list[OrientedTriangleSet]:
    """One representative per S_6-conjugacy class (C ~ C^-1 identified) with o(C) = 5."""
    census = orientation_census()
    return [cls[0] for cls in census.classes_with_inverse.get(5, [])]


def pairwise_product_rule() -> int:
    """Max over 3-cycles a, b (distinct triangles) and c of how many of the
    eight products a^{+-1} b^{+-1}, b^{+-1} a^{+-1} equal c."""
    G = symmetric_group(N)
    C3 = G.class_ranks((3, 1, 1, 1))
    support = {int(r): frozenset(_support_points(G.elements[r])) for r in C3}
    worst = 0
    for a, b in itertools.combinations(C3, 2):
        if support[int(a)] == support[int(b)]:
            continue
        ai, bi = G.inv[a], G.inv[b]
        prods = [G.mul[x, y] for x in (a, ai) for y in (b, bi)] + [G.mul[y, x] for x in (a, ai) for y in (b, bi)]
        counts = Counter(int(p) for p in prods)
        worst = max(worst, max(counts[int(c)] for c in C3))
    return worst


# ---------------------------------------------------------------------------
# disjoint edge pairs: the graph K_6^e


def kneser_edges() -> list[tuple[int, int]]:
    """Adjacent vertex pairs of K_6^e (vertices are K_6-edges; adjacency = disjoint)."""
    return [(i, j) for i, j in itertools.combinations(range(len(EDGES)), 2) if not set(EDGES[i]) & set(EDGES[j])]


def edge_pair_of(p: Permutation) -> tuple[int, int]:
    """The K_6^e edge of a double transposition."""
    cyc = [c for c in p.cycles() if len(c) > 1]
    if sorted(len(c) for c in cyc) != [2, 2]:
        raise CoverError(f"{p} is not a product of two disjoint transpositions")
    a, b = sorted(EDGE_INDEX[tuple(sorted(c))] for c in cyc)
    return a, b


def double_transposition(i: int, j: int) -> Permutation:
    return Permutation.from_cycles([EDGES[i], EDGES[j]], N)


@dataclass
class EdgePairGraphPath:
    """A set of K_6^e edges and its cycle decomposition."""

    edges: list[tuple[int, int]]
    cycles: list[list[tuple[int, int]]]  # each cycle as its K_6-edges in order

    @property
    def lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)


def edgepair_cycle_decomposition(C: ElementSet) -> EdgePairGraphPath:
    """Cycles of the 2-regular structure a lam = 2 disjoint-edge-pair cover induces on K_6^e."""
    pairs = [edge_pair_of(p) for p in C.perms()]
    adj: dict[int, list[int]] = {}
    for a, b in pairs:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for v in range(len(EDGES)):
        d = len(adj.get(v, []))
        if d != 2:
            raise CoverError(f"K_6 edge {EDGES[v]} lies in {d} chosen pairs, not 2")
    seen: set[int] = set()
    cycles = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, adj[start][0]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append([EDGES[v] for v in cyc])
    return EdgePairGraphPath([(EDGES[a], EDGES[b]) for a, b in pairs], cycles)


def perfect_matchings() -> list[tuple[int, int, int]]:
    """Triangles of K_6^e: three pairwise disjoint K_6-edges."""
    out = []
    for a, b, c in itertools.combinations(range(len(EDGES)), 3):
        if len(set(EDGES[a]) | set(EDGES[b]) | set(EDGES[c])) == N:
            out.append((a, b, c))
    return out


def one_factorizations() -> list[list[tuple[int, int, int]]]:
    """Partitions of the 15 edges of K_6 into 5 perfect matchings."""
    matchings = perfect_matchings()
    by_edge: dict[int, list[tuple[int, int, int]]] = {e: [] for e in range(len(EDGES))}
    for m in matchings:
        for e in m:
            by_edge[e].append(m)
    out = []

    def dfs(used: set[int], chosen: list) -> None:
        if len(used) == len(EDGES):
            out.append(list(chosen))
            return
        e = min(set(range(len(EDGES))) - used)
        for m in by_edge[e]:
            if used.isdisjoint(m):
                chosen.append(m)
                dfs(used | set(m), chosen)
                chosen.pop()

    dfs(set(), [])
    return out


def factorization_element_set(factorization: Sequence[tuple[int, int, int]]) -> ElementSet:
    """The 15 double transpositions whose K_6^e edges are the matchings' triangles."""
    perms = []
    for m in factorization:
        for a, b in itertools.combinations(m, 2):
            perms.append(double_transposition(a, b))
    return ElementSet.from_perms(perms, N)


def enumerate_15element_edgepair_covers() -> list[list[ElementSet]]:
    """15-element lam = 2 covers whose cycles are all triangles, grouped by conjugacy."""
    from .search import canonical_form

    buckets: dict[tuple[int, ...], list[ElementSet]] = {}
    for f in one_factorizations():
        C = factorization_element_set(f)
        buckets.setdefault(canonical_form(C), []).append(C)
    return [sorted(buckets[k]) for k in sorted(buckets)]


# ---------------------------------------------------------------------------
# 4-cycles and their squares


def iota_squared(C: ElementSet) -> ElementSet:
    G = C.group
    for r in C.ranks:
        if sorted(len(c) for c in G.elements[r].cycles() if len(c) > 1) != [4]:
            raise CoverError(f"{G.elements[r]} is not a 4-cycle")
    return ElementSet(C.degree, G.mul[C.array(), C.array()])


def iota_squared_preimage(X: ElementSet) -> ElementSet:
    """All 4-cycles whose square lies in X."""
    G = X.group
    four = G.class_ranks(tuple([4] + [1] * (X.degree - 4)))
    sq = G.mul[four, four]
    return ElementSet(X.degree, four[X.mask()[sq]])
