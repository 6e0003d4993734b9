"""Schur rings over S_n: verification, closure, orbit rings and conjugation.

An S-ring is stored as a vertex colouring of S_n (``labels[g]`` is the index
of the principal set containing g).  Principal sets are ordered by their
size and then smallest rank, so the identity set is always block 0.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraElement, indicator
from .perm import (
    DegreeError,
    ElementSet,
    Permutation,
    conjugation_orbits,
    format_cycles,
    is_subgroup,
    symmetric_group,
)


def _canonical_labels(labels: np.ndarray) -> np.ndarray:
    """Relabel so blocks are ordered by (size, smallest element)."""
    values, first, inverse, counts = np.unique(labels, return_index=True, return_inverse=True, return_counts=True)
    order = np.lexsort((first, counts))
    remap = np.empty(len(values), dtype=np.int64)
    remap[order] = np.arange(len(values))
    return remap[inverse.ravel()]


class SRing:
    """A partition of S_n into principal sets, identity set first."""

    def __init__(self, degree: int, labels: np.ndarray):
        G = symmetric_group(degree)
        labels = np.asarray(labels)
        if labels.shape != (G.order,):
            raise ValueError("labels must cover every group element")
        self.degree = degree
        self.labels = _canonical_labels(labels)
        self.labels.flags.writeable = False
        self.dimension = int(self.labels.max()) + 1
        order = np.argsort(self.labels, kind="stable")
        bounds = np.searchsorted(self.labels[order], np.arange(self.dimension + 1))
        self.principal_sets = [
            ElementSet(degree, order[bounds[k]:bounds[k + 1]]) for k in range(self.dimension)
        ]

    @classmethod
    def from_sets(cls, sets: Sequence[ElementSet]) -> SRing:
        degree = sets[0].degree
        G = symmetric_group(degree)
        labels = np.full(G.order, -1, dtype=np.int64)
        for k, s in enumerate(sets):
            if np.any(labels[s.array()] >= 0):
                raise ValueError("principal sets overlap")
            labels[s.array()] = k
        if np.any(labels < 0):
            raise ValueError("principal sets do not cover the group")
        return cls(degree, labels)

    @property
    def group(self):
        return symmetric_group(self.degree)

    def basis(self) -> list[AlgebraElement]:
        return [indicator(s) for s in self.principal_sets]

    def sizes(self) -> list[int]:
        return [len(s) for s in self.principal_sets]

    def size_set(self) -> list[int]:
        return sorted(set(self.sizes()))

    def contains(self, a: AlgebraElement) -> bool:
        """True iff a is constant on every principal set."""
        c = a.coeffs
        reps = np.array([s.ranks[0] for s in self.principal_sets])
        return bool(np.all(c == c[reps[self.labels]]))

    def block_of(self, g: Permutation | int) -> ElementSet:
        r = self.group.rank(g) if isinstance(g, Permutation) else int(g)
        return self.principal_sets[int(self.labels[r])]

    def refines(self, other: SRing) -> bool:
        """True iff every principal set of self lies in one of other's."""
        pairs = np.unique(np.stack([self.labels, other.labels]), axis=1)
        return pairs.shape[1] == self.dimension

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SRing)
            and self.degree == other.degree
            and bool(np.array_equal(self.labels, other.labels))
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.labels.tobytes()))

    def __repr__(self) -> str:
        return f"SRing(n={self.degree}, dimension={self.dimension})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "sizes": self.sizes(),
            "principal_sets": [s.to_strings() for s in self.principal_sets],
        }

    @classmethod
    def from_json(cls, data: dict) -> SRing:
        n = data["degree"]
        return cls.from_sets([ElementSet.parse(ps, n) for ps in data["principal_sets"]])


@dataclass
class SRingCheck:
    """Outcome of :func:`verify_sring`; truthy iff the partition is an S-ring."""

    ok: bool
    reason: str = ""
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _products_with(G, labels: np.ndarray, m: int, block: np.ndarray) -> np.ndarray:
    """``T[j, g]`` = coefficient of g in (block-bar)(Gamma_j-bar)."""
    N = G.order
    codes = labels[G.ldiv[block, :]]
    flat = (codes * N + np.arange(N)[None, :]).ravel()
    return np.bincount(flat, minlength=m * N).reshape(m, N)


def verify_sring(partition: Sequence[ElementSet]) -> SRingCheck:
    """Check the S-ring axioms for a list of disjoint sets.

    Raises ValueError if the sets overlap; otherwise reports the first
    failing condition (coverage, identity block, inverse closure, or the
    first pair (i, j) whose product is not a combination of the sets).
    Indices refer to the order of ``partition``.
    """
    if not partition:
        return SRingCheck(False, "empty partition")
    n = partition[0].degree
    if any(p.degree != n for p in partition):
        raise DegreeError("sets of different degree")
    G = symmetric_group(n)
    labels = np.full(G.order, -1, dtype=np.int64)
    for k, s in enumerate(partition):
        if not len(s):
            return SRingCheck(False, f"set {k} is empty")
        if np.any(labels[s.array()] >= 0):
            raise ValueError(f"set {k} overlaps an earlier set")
        labels[s.array()] = k
    if np.any(labels < 0):
        return SRingCheck(False, f"{int(np.sum(labels < 0))} elements are not covered")
    ident = int(labels[G.identity])
    if len(partition[ident]) != 1:
        return SRingCheck(False, "the identity is not a singleton set")
    for k, s in enumerate(partition):
        inv = s.inverse()
        j = int(labels[inv.ranks[0]])
        if partition[j] != inv:
            return SRingCheck(False, f"inverse of set {k} is not a set", (k, k))
    m = len(partition)
    reps = np.array([s.ranks[0] for s in partition])
    expected_at = reps[labels]
    for i, s in enumerate(partition):
        T = _products_with(G, labels, m, s.array())
        bad = np.flatnonzero(np.any(T != T[:, expected_at], axis=1))
        if bad.size:
            j = int(bad[0])
            return SRingCheck(False, f"product of sets {i} and {j} is not constant on the sets", (i, j))
    return SRingCheck(True)


def structure_constants(S: SRing) -> np.ndarray:
    """``lam[i, j, k]`` with Gamma_i Gamma_j = sum_k lam[i, j, k] Gamma_k."""
    m = S.dimension
    reps = np.array([s.ranks[0] for s in S.principal_sets])
    lam = np.empty((m, m, m), dtype=np.int64)
    for i, s in enumerate(S.principal_sets):
        lam[i] = _products_with(S.group, S.labels, m, s.array())[:, reps]
    return lam


def _pair_signature(G, labels: np.ndarray, swap: bool = False) -> np.ndarray:
    """Per g, the sorted codes of (label(x), label(x^-1 g)) over all x."""
    m = int(labels.max()) + 1
    left = labels[:, None]
    right = labels[G.ldiv]
    codes = right * m + left if swap else left * m + right
    return np.sort(codes, axis=0).T


def refine(degree: int, labels: np.ndarray) -> np.ndarray:
    """Coarsest refinement of a colouring that is an S-ring partition.

    Each round splits colour classes by the colour of g^-1 and by the
    multiset of colour pairs (label(x), label(x^-1 g)), i.e. by every
    coefficient of every product of two current sets.  Each split is forced
    by the Schur-Wielandt principle, so the fixed point is the smallest
    S-ring whose sets are unions of the initial colours' refinements.
    """
    G = symmetric_group(degree)
    labels = _canonical_labels(np.asarray(labels))
    while True:
        m = int(labels.max()) + 1
        key = np.column_stack([labels, labels[G.inv], _pair_signature(G, labels)])
        _, new = np.unique(key, axis=0, return_inverse=True)
        new = _canonical_labels(new.ravel())
        if int(new.max()) + 1 == m:
            return new
        labels = new


def _seed_labels(degree: int, seed: Iterable) -> np.ndarray:
    G = symmetric_group(degree)
    cols = [np.arange(G.order) == G.identity]
    for item in seed:
        if isinstance(item, SRing):
            cols.append(item.labels)
        elif isinstance(item, ElementSet):
            cols.append(item.mask())
        elif isinstance(item, AlgebraElement):
            vals = item.coeffs
            _, inv = np.unique(vals.astype(object) if vals.dtype == object else vals, return_inverse=True)
            cols.append(inv.ravel())
        else:
            raise TypeError(f"cannot seed a closure with {type(item).__name__}")
        if len(cols[-1]) != G.order:
            raise DegreeError("seed of wrong degree")
    key = np.column_stack([np.asarray(c, dtype=np.int64) for c in cols])
    _, labels = np.unique(key, axis=0, return_inverse=True)
    return labels.ravel()


def closure(seed: Sequence, degree: int | None = None) -> SRing:
    """Smallest S-ring containing every seed element.

    Seeds may be AlgebraElements, ElementSets (taken as their indicators) or
    SRings (all principal sets).
    """
    seed = list(seed)
    if not seed:
        raise ValueError("seed must be nonempty")
    if degree is None:
        degree = seed[0].degree
    labels = _seed_labels(degree, seed)
    return SRing(degree, refine(degree, labels))


def center(n: int) -> SRing:
    """Z(CS_n): the conjugacy classes."""
    G = symmetric_group(n)
    return SRing(n, G.class_of)


def closure_with_center(extra: Sequence, n: int = 6) -> SRing:
    return closure([center(n), *extra], degree=n)


def orbit_sring(n: int, H: ElementSet) -> SRing:
    """The S-ring of H-conjugation orbits on S_n."""
    if not is_subgroup(H):
        raise ValueError("H is not a subgroup")
    orbits = conjugation_orbits(n, H)
    S = SRing.from_sets(orbits)
    check = verify_sring(S.principal_sets)
    if not check:
        raise RuntimeError(f"orbit partition failed verification: {check.reason}")
    return S


def is_commutative(S: SRing) -> bool:
    """All principal-set sums commute pairwise."""
    G = S.group
    a = _pair_signature(G, S.labels)
    b = _pair_signature(G, S.labels, swap=True)
    return bool(np.array_equal(a, b))


def conjugate_sring(S: SRing, g: Permutation | int) -> SRing:
    G = S.group
    if isinstance(g, Permutation):
        g = G.rank(g)
    labels = np.empty(G.order, dtype=np.int64)
    labels[G.conj(g, np.arange(G.order))] = S.labels
    return SRing(S.degree, labels)


def has_principal_set(S: SRing, C: ElementSet) -> bool:
    if not len(C):
        return False
    return S.block_of(C.ranks[0]) == C


def join(*rings: SRing) -> SRing:
    """Smallest S-ring containing all the given S-rings."""
    return closure(list(rings), degree=rings[0].degree)


def conjugates_of_sring(S: SRing) -> list[SRing]:
    """Distinct S_n-conjugates of S in a deterministic order."""
    G = S.group
    seen: dict[bytes, SRing] = {}
    for g in range(G.order):
        T = conjugate_sring(S, g)
        seen.setdefault(T.labels.tobytes(), T)
    return [seen[k] for k in sorted(seen)]


def describe(S: SRing, limit: int = 3) -> str:
    lines = [f"S-ring over S{S.degree} of dimension {S.dimension}"]
    for k, s in enumerate(S.principal_sets):
        shown = ", ".join(format_cycles(p) for p in s.perms()[:limit])
        lines.append(f"  [{k}] size {len(s)}: {shown}{', ...' if len(s) > limit else ''}")
    return "\n".join(lines)
