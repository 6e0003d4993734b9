"""Integer group algebra ZS_n: dense coefficient vectors indexed by element rank."""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

import numpy as np

from .perm import (
    DegreeError,
    ElementSet,
    Permutation,
    format_cycles,
    parse_cycles,
    symmetric_group,
)

# int64 products stay exact while |a|_1 * |b|_inf stays below this
_INT64_SAFE = 2**62


class AlgebraElement:
    """An element sum_g c_g g of ZS_n with exact integer coefficients.

    Coefficients live in an immutable numpy array of length n!; it is int64
    unless values outgrow it, in which case Python integers are used.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        G = symmetric_group(degree)
        if coeffs is None:
            arr = np.zeros(G.order, dtype=np.int64)
        else:
            arr = np.asarray(coeffs)
            if arr.shape != (G.order,):
                raise ValueError(f"expected {G.order} coefficients, got shape {arr.shape}")
            if arr.dtype != object:
                if not np.issubdtype(arr.dtype, np.integer) and arr.dtype != bool:
                    raise TypeError("coefficients must be integers")
                arr = arr.astype(np.int64)
            elif all(abs(int(v)) < _INT64_SAFE for v in arr):
                arr = arr.astype(np.int64)
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @classmethod
    def zero(cls, degree: int) -> AlgebraElement:
        return cls(degree)

    @classmethod
    def from_dict(cls, degree: int, terms: Mapping[Permutation | int, int]) -> AlgebraElement:
        G = symmetric_group(degree)
        arr = np.zeros(G.order, dtype=object)
        for key, c in terms.items():
            r = G.rank(key) if isinstance(key, Permutation) else int(key)
            arr[r] += int(c)
        return cls(degree, arr)

    @classmethod
    def parse(cls, text: str, degree: int = 6) -> AlgebraElement:
        return parse_element(text, degree)

    @property
    def group(self):
        return symmetric_group(self.degree)

    def support(self) -> ElementSet:
        return ElementSet(self.degree, np.flatnonzero(self.coeffs != 0))

    def __getitem__(self, g: Permutation | int) -> int:
        r = self.group.rank(g) if isinstance(g, Permutation) else int(g)
        return int(self.coeffs[r])

    def is_zero(self) -> bool:
        return not np.any(self.coeffs != 0)

    def _check(self, other: AlgebraElement) -> None:
        if self.degree != other.degree:
            raise DegreeError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.degree, _exact(self.coeffs) + _exact(other.coeffs))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.degree, _exact(self.coeffs) - _exact(other.coeffs))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.degree, -_exact(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, np.integer)):
            return AlgebraElement(self.degree, _exact(self.coeffs) * int(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.degree == other.degree
            and bool(np.all(self.coeffs == other.coeffs))
        )

    def __hash__(self) -> int:
        return hash((self.degree, tuple(int(c) for c in self.coeffs)))

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"AlgebraElement({to_text(self)!r}, n={self.degree})"


def _exact(arr: np.ndarray) -> np.ndarray:
    """Widen to Python ints when int64 addition/scaling could overflow."""
    if arr.dtype == object:
        return arr
    if arr.size and np.abs(arr).max() >= 2**61:
        return arr.astype(object)
    return arr


def indicator(X: ElementSet) -> AlgebraElement:
    """The element X-bar = x_1 + ... + x_k."""
    arr = np.zeros(X.group.order, dtype=np.int64)
    arr[list(X.ranks)] = 1
    return AlgebraElement(X.degree, arr)


def class_sum(n: int, mu: Iterable[int]) -> AlgebraElement:
    G = symmetric_group(n)
    arr = np.zeros(G.order, dtype=np.int64)
    arr[G.class_ranks(tuple(mu))] = 1
    return AlgebraElement(n, arr)


def class_sums(n: int) -> list[AlgebraElement]:
    return [class_sum(n, mu) for mu in symmetric_group(n).class_types]


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Convolution: the coefficient of g is sum over x*y = g of a(x) b(y)."""
    a._check(b)
    G = a.group
    ca, cb = a.coeffs, b.coeffs
    sa, sb = np.flatnonzero(ca), np.flatnonzero(cb)
    if not sa.size or not sb.size:
        return AlgebraElement(a.degree)
    bound = max(abs(int(v)) for v in ca[sa]) * sum(abs(int(v)) for v in cb[sb])
    dtype = np.int64 if bound < _INT64_SAFE else object
    out = np.zeros(G.order, dtype=dtype)
    if sa.size <= sb.size:
        # shift b by each x in supp(a): x*y runs over mul[x, :]
        cbv = cb.astype(dtype)
        for x in sa:
            out[G.mul[x]] += int(ca[x]) * cbv
    else:
        cav = ca.astype(dtype)
        for y in sb:
            out[G.mul[:, y]] += cav * int(cb[y])
    return AlgebraElement(a.degree, out)


def restrict(a: AlgebraElement, mu: Iterable[int]) -> AlgebraElement:
    """Keep only the coefficients on the conjugacy class of cycle type mu."""
    G = a.group
    mask = np.zeros(G.order, dtype=bool)
    mask[G.class_ranks(tuple(mu))] = True
    out = np.where(mask, a.coeffs, 0)
    return AlgebraElement(a.degree, out.astype(a.coeffs.dtype))


def coefficient_fibers(a: AlgebraElement, C: ElementSet) -> list[tuple[int, ElementSet]]:
    """Split C by the coefficient each member carries in a, sorted by value."""
    if a.degree != C.degree:
        raise DegreeError(f"degree mismatch: {a.degree} vs {C.degree}")
    ranks = C.array()
    if not ranks.size:
        return []
    vals = a.coeffs[ranks]
    out = []
    for v in sorted({int(x) for x in vals}):
        out.append((v, ElementSet(C.degree, ranks[vals == v])))
    return out


def inverse_set(X: ElementSet) -> ElementSet:
    return X.inverse()


def commutes(a: AlgebraElement, b: AlgebraElement) -> bool:
    return multiply(a, b) == multiply(b, a)


def is_constant_on(a: AlgebraElement, X: ElementSet) -> bool:
    vals = a.coeffs[X.array()]
    return bool(vals.size == 0 or np.all(vals == vals[0]))


def is_scalar_multiple(a: AlgebraElement, X: ElementSet) -> int | None:
    """The m with a = m * X-bar, or None."""
    vals = a.coeffs[X.array()]
    if not vals.size:
        return 0 if a.is_zero() else None
    m = int(vals[0])
    if np.any(vals != m):
        return None
    mask = X.mask()
    if np.any(a.coeffs[~mask] != 0):
        return None
    return m


def conjugate_element(a: AlgebraElement, g: Permutation | int) -> AlgebraElement:
    """g a g^-1."""
    G = a.group
    if isinstance(g, Permutation):
        g = G.rank(g)
    out = np.zeros(G.order, dtype=a.coeffs.dtype)
    out[G.conj(g, np.arange(G.order))] = a.coeffs
    return AlgebraElement(a.degree, out)


def to_text(a: AlgebraElement) -> str:
    """``"c1*(cycles) + c2*(cycles)"`` in rank order; zero prints as ``"0"``."""
    G = a.group
    terms = []
    for r in np.flatnonzero(a.coeffs != 0):
        c = int(a.coeffs[r])
        terms.append(f"{c}*{format_cycles(G.elements[r])}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


_TERM_RE = re.compile(r"^(?:([+-]?\d+)\*?|([+-]?))((?:\([^()]*\))+)$")


def parse_element(text: str, degree: int = 6) -> AlgebraElement:
    """Inverse of :func:`to_text`; a bare permutation means coefficient 1."""
    s = text.strip()
    if s == "0":
        return AlgebraElement(degree)
    s = re.sub(r"\s+", "", s)
    s = re.sub(r"(?<=\))-", "+-", s)
    terms: dict[Permutation, int] = {}
    for tok in s.split("+"):
        if not tok:
            continue
        m = _TERM_RE.match(tok)
        if not m:
            raise ValueError(f"cannot parse term {tok!r}")
        c = int(m.group(1)) if m.group(1) is not None else (-1 if m.group(2) == "-" else 1)
        p = parse_cycles(m.group(3), degree)
        terms[p] = terms.get(p, 0) + c
    return AlgebraElement.from_dict(degree, terms)


def restrict_to_set(a: AlgebraElement, X: ElementSet) -> AlgebraElement:
    return AlgebraElement(a.degree, np.where(X.mask(), a.coeffs, 0).astype(a.coeffs.dtype))
