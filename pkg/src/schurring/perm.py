"""Permutations of small degree, symmetric-group tables and conjugation orbits.

Composition is right-to-left everywhere in this package: ``p * q`` (or
``compose(p, q)``) applies ``q`` first and then ``p``, so
``(p * q)(i) == p(q(i))``.  Points are 1-based in every public interface;
storage is 0-based.
"""

from __future__ import annotations

import functools
import itertools
import re
from collections.abc import Iterable, Iterator, Sequence

import numpy as np

MAX_DEGREE = 7

CycleType = tuple[int, ...]


class DegreeError(ValueError):
    pass


class Permutation:
    """An element of S_n stored as a 0-based image table."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n < 1 or n > MAX_DEGREE:
            raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation image table: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_one_based(cls, images: Sequence[int]) -> Permutation:
        return cls([i - 1 for i in images])

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            if any(c < 1 or c > n for c in cyc):
                raise ValueError(f"cycle {tuple(cyc)} has a point outside 1..{n}")
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError("cycles must be disjoint")
            seen.update(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int = 6) -> Permutation:
        return parse_cycles(text, n)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = compose(base, result)
        return result

    def inverse(self) -> Permutation:
        return inverse(self)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point, sorted."""
        out = []
        seen = [False] * self.degree
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(c + 1 for c in cyc))
        return out

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def is_identity(self) -> bool:
        return self.images == tuple(range(self.degree))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return (self.degree, self.images) < (other.degree, other.images)

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, n={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``q`` first, then ``p``."""
    if p.degree != q.degree:
        raise DegreeError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation([p.images[i] for i in q.images])


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(inv)


def cycle_type(p: Permutation) -> CycleType:
    lengths = [len(c) for c in p.cycles()]
    lengths += [1] * (p.degree - sum(lengths))
    return tuple(sorted(lengths, reverse=True))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int = 6) -> Permutation:
    """Parse cycle notation such as ``"(1,4)(3,5)"``; ``"()"`` is the identity."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty permutation string")
    if _CYCLE_RE.sub("", compact):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(compact):
        if body:
            cycles.append([int(tok) for tok in body.split(",")])
    return Permutation.from_cycles(cycles, n)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def partitions(n: int, largest: int | None = None) -> list[CycleType]:
    """All partitions of n as weakly decreasing tuples, in reverse lex order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def normalize_cycle_type(mu: Iterable[int], n: int) -> CycleType:
    """Sort and pad with fixed points; ``(3,)`` in S6 becomes ``(3,1,1,1)``."""
    parts = sorted((int(m) for m in mu if m > 0), reverse=True)
    if sum(parts) > n:
        raise ValueError(f"{tuple(parts)} is not a partition of {n}")
    parts += [1] * (n - sum(parts))
    return tuple(parts)


class SymmetricGroup:
    """Dense tables for S_n with elements ranked lexicographically by image table.

    ``mul[x, y]`` is the rank of ``x * y``; ``ldiv[x, g]`` the rank of
    ``x^-1 * g``; ``inv[x]`` the rank of ``x^-1``.
    """

    def __init__(self, n: int):
        if n < 1 or n > MAX_DEGREE:
            raise DegreeError(f"degree must be in 1..{MAX_DEGREE}, got {n}")
        self.n = n
        table = np.array(list(itertools.permutations(range(n))), dtype=np.int8).reshape(-1, n)
        self.images = table
        self.order = len(table)
        self._weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self._keys = table.astype(np.int64) @ self._weights
        self.elements = [Permutation(row) for row in table.tolist()]
        self.identity = 0
        self.mul = self._build_mul()
        self.inv = np.argsort(self.mul, axis=1)[:, 0].astype(np.int32)
        self.ldiv = self.mul[self.inv]
        self.cycle_types = [cycle_type(p) for p in self.elements]
        self.class_types = partitions(n)
        index = {mu: k for k, mu in enumerate(self.class_types)}
        self.class_of = np.array([index[mu] for mu in self.cycle_types], dtype=np.int32)

    def _build_mul(self) -> np.ndarray:
        n, N = self.n, self.order
        mul = np.empty((N, N), dtype=np.int32)
        chunk = max(1, 2_000_000 // (N * n))
        for start in range(0, N, chunk):
            block = self.images[start:start + chunk].astype(np.int64)
            # composed[b, y, i] = block[b][images[y][i]], i.e. (x*y)(i)
            composed = block[:, self.images]
            mul[start:start + len(block)] = np.searchsorted(self._keys, composed @ self._weights)
        return mul

    def rank(self, p: Permutation) -> int:
        if p.degree != self.n:
            raise DegreeError(f"degree mismatch: {p.degree} vs {self.n}")
        key = int(np.dot(np.array(p.images, dtype=np.int64), self._weights))
        return int(np.searchsorted(self._keys, key))

    def element(self, r: int) -> Permutation:
        return self.elements[r]

    def parse(self, text: str) -> int:
        return self.rank(parse_cycles(text, self.n))

    def class_ranks(self, mu: CycleType) -> np.ndarray:
        mu = normalize_cycle_type(mu, self.n)
        return np.flatnonzero(self.class_of == self.class_types.index(mu))

    def conj(self, h: int | np.ndarray, g: int | np.ndarray):
        """Rank of ``h g h^-1`` (vectorised over numpy inputs)."""
        return self.mul[self.mul[h, g], self.inv[h]]

    def conjugation_table(self, hs: np.ndarray) -> np.ndarray:
        """``table[k, g]`` = rank of ``hs[k] g hs[k]^-1``."""
        hs = np.asarray(hs)
        return self.mul[self.mul[hs, :], self.inv[hs][:, None]]


@functools.lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


class ElementSet:
    """A set of elements of S_n, held as sorted ranks."""

    __slots__ = ("degree", "ranks", "_hash")

    def __init__(self, degree: int, ranks: Iterable[int] = ()):
        arr = np.unique(np.asarray(list(ranks) if not isinstance(ranks, np.ndarray) else ranks,
                                   dtype=np.int64))
        G = symmetric_group(degree)
        if arr.size and (arr[0] < 0 or arr[-1] >= G.order):
            raise ValueError("rank out of range")
        self.degree = degree
        self.ranks = tuple(int(r) for r in arr)
        self._hash = hash((degree, self.ranks))

    @classmethod
    def from_perms(cls, perms: Iterable[Permutation], degree: int | None = None) -> ElementSet:
        perms = list(perms)
        if degree is None:
            if not perms:
                raise ValueError("degree required for an empty set")
            degree = perms[0].degree
        G = symmetric_group(degree)
        return cls(degree, [G.rank(p) for p in perms])

    @classmethod
    def parse(cls, texts: Iterable[str], degree: int = 6) -> ElementSet:
        G = symmetric_group(degree)
        return cls(degree, [G.parse(t) for t in texts])

    @classmethod
    def from_mask(cls, degree: int, mask: np.ndarray) -> ElementSet:
        return cls(degree, np.flatnonzero(mask))

    @property
    def group(self) -> SymmetricGroup:
        return symmetric_group(self.degree)

    def array(self) -> np.ndarray:
        return np.array(self.ranks, dtype=np.int64)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.group.order, dtype=bool)
        m[list(self.ranks)] = True
        return m

    def perms(self) -> list[Permutation]:
        G = self.group
        return [G.elements[r] for r in self.ranks]

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.perms())

    def __len__(self) -> int:
        return len(self.ranks)

    def __contains__(self, item) -> bool:
        if isinstance(item, Permutation):
            item = self.group.rank(item)
        return int(item) in set(self.ranks)

    def __eq__(self, other) -> bool:
        return isinstance(other, ElementSet) and self.degree == other.degree and self.ranks == other.ranks

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: ElementSet) -> bool:
        return self.ranks < other.ranks

    def _check(self, other: ElementSet) -> None:
        if self.degree != other.degree:
            raise DegreeError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __or__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.degree, self.ranks + other.ranks)

    def __and__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.degree, set(self.ranks) & set(other.ranks))

    def __sub__(self, other: ElementSet) -> ElementSet:
        self._check(other)
        return ElementSet(self.degree, set(self.ranks) - set(other.ranks))

    def isdisjoint(self, other: ElementSet) -> bool:
        return not set(self.ranks) & set(other.ranks)

    def issubset(self, other: ElementSet) -> bool:
        return set(self.ranks) <= set(other.ranks)

    def inverse(self) -> ElementSet:
        return ElementSet(self.degree, self.group.inv[self.array()])

    def conjugate(self, g: Permutation | int) -> ElementSet:
        """``{g x g^-1 : x in self}``."""
        G = self.group
        if isinstance(g, Permutation):
            g = G.rank(g)
        return ElementSet(self.degree, G.conj(g, self.array()))

    def to_strings(self) -> list[str]:
        return [format_cycles(p) for p in self.perms()]

    def __repr__(self) -> str:
        shown = ", ".join(self.to_strings()[:4])
        more = ", ..." if len(self) > 4 else ""
        return f"ElementSet(n={self.degree}, size={len(self)}: {shown}{more})"


def conjugacy_class(n: int, mu: Iterable[int]) -> ElementSet:
    G = symmetric_group(n)
    return ElementSet(n, G.class_ranks(tuple(mu)))


def generate_subgroup(gens: Sequence[Permutation], n: int | None = None) -> ElementSet:
    """Closure of ``gens`` under composition, by breadth-first search."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("degree required when no generators are given")
        n = gens[0].degree
    if any(g.degree != n for g in gens):
        raise DegreeError("generators of different degree")
    G = symmetric_group(n)
    gen_ranks = np.array([G.rank(g) for g in gens], dtype=np.int64)
    seen = np.zeros(G.order, dtype=bool)
    seen[G.identity] = True
    frontier = np.array([G.identity])
    while frontier.size and gen_ranks.size:
        new = np.unique(G.mul[frontier[:, None], gen_ranks[None, :]])
        new = new[~seen[new]]
        seen[new] = True
        frontier = new
    return ElementSet(n, np.flatnonzero(seen))


def is_subgroup(H: ElementSet) -> bool:
    G = H.group
    h = H.array()
    if G.identity not in H.ranks:
        return False
    mask = H.mask()
    return bool(mask[G.mul[h[:, None], h[None, :]]].all())


def conjugation_orbit_labels(H: ElementSet) -> np.ndarray:
    """For each element g, the minimal rank in its H-conjugation orbit."""
    G = H.group
    return G.conjugation_table(H.array()).min(axis=0)


def conjugation_orbits(n: int, H: ElementSet) -> list[ElementSet]:
    """Orbits of S_n under conjugation by the subgroup H, identity orbit first."""
    if H.degree != n:
        raise DegreeError(f"degree mismatch: {H.degree} vs {n}")
    if not is_subgroup(H):
        raise ValueError("H is not closed under multiplication")
    labels = conjugation_orbit_labels(H)
    orbits = [ElementSet(n, np.flatnonzero(labels == lab)) for lab in np.unique(labels)]
    return sorted(orbits, key=lambda o: o.ranks[0])


def stabilizer(X: ElementSet) -> ElementSet:
    """Elements g of S_n with g X g^-1 = X."""
    G = X.group
    table = G.conjugation_table(np.arange(G.order))
    mask = X.mask()
    keep = mask[table[:, X.array()]].all(axis=1) if len(X) else np.ones(G.order, bool)
    return ElementSet(X.degree, np.flatnonzero(keep))


def set_orbit(X: ElementSet) -> list[ElementSet]:
    """Distinct S_n-conjugates of X, sorted."""
    G = X.group
    table = G.conjugation_table(np.arange(G.order))
    images = {tuple(np.sort(table[g, X.array()]).tolist()) for g in range(G.order)}
    return sorted(ElementSet(X.degree, im) for im in images)
