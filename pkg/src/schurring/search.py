"""Exact 0/1 enumeration for coefficient-matching systems over a conjugacy class.

A candidate principal set C inside a class K is encoded by one boolean per
inverse pair of K (symmetric systems, C = C^-1) or one per element with an
exclusion between each element and its inverse (asymmetric systems).
Restriction equations such as ``(C * K_nu)_mu = lam * K_mu`` compile to
linear rows; conditions on ``C^2`` compile to quadratic forms.  Solving is
bound propagation on the linear rows plus depth-first branching; quadratic
equalities are checked on complete assignments.
"""

from __future__ import annotations

import enum
import itertools
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .algebra import AlgebraElement, class_sum, indicator, is_scalar_multiple, multiply, restrict
from .perm import CycleType, ElementSet, normalize_cycle_type, symmetric_group


class Kind(enum.Enum):
    CARDINALITY = "cardinality"
    PAIR_EXCLUSION = "pair_exclusion"
    LINEAR_TARGET = "linear_target"
    QUADRATIC_EQUALITY = "quadratic_equality"
    SIGN_UNIT = "sign_unit"


@dataclass(frozen=True)
class QuadForm:
    """``const + sum_k coef[k] * v[I[k]] * v[J[k]]``; I == J gives a linear term."""

    I: np.ndarray
    J: np.ndarray
    coef: np.ndarray
    const: int = 0

    def evaluate(self, values: np.ndarray) -> np.ndarray:
        values = np.atleast_2d(values).astype(np.int64)
        return self.const + (values[:, self.I] * values[:, self.J]) @ self.coef

    def to_json(self) -> dict:
        return {"I": self.I.tolist(), "J": self.J.tolist(), "coef": self.coef.tolist(), "const": self.const}


@dataclass(frozen=True)
class Constraint:
    kind: Kind
    label: str = ""
    coeffs: np.ndarray | None = None
    target: int = 0
    pair: tuple[int, int] | None = None
    forms: tuple[QuadForm, QuadForm] | None = None
    guard: tuple[tuple[int, int], ...] = ()
    var: int | None = None

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value, "label": self.label}
        if self.coeffs is not None:
            nz = np.flatnonzero(self.coeffs)
            out["coeffs"] = {int(i): int(self.coeffs[i]) for i in nz}
            out["target"] = self.target
        if self.kind is Kind.CARDINALITY:
            out["target"] = self.target
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.forms is not None:
            out["forms"] = [f.to_json() for f in self.forms]
            out["guard"] = [list(g) for g in self.guard]
        if self.var is not None:
            out["var"] = self.var
        return out


# Restriction equations, the input language of build_system.

@dataclass(frozen=True)
class ProductCondition:
    """``(C * K_by)_target = multiplier * K_target``; multiplier derived from |C| if None."""

    by: CycleType
    target: CycleType
    multiplier: int | None = None
    label: str = ""


@dataclass(frozen=True)
class SquareConstant:
    """``(C^2 * K_times)_target`` is constant on K_target (K_times omitted if None)."""

    target: CycleType
    times: CycleType | None = None
    label: str = ""


@dataclass(frozen=True)
class SquareTwoValued:
    """``(C^2)_target = lam * C + mu * (K_target minus C)`` for some lam, mu."""

    target: CycleType
    label: str = ""


Condition = ProductCondition | SquareConstant | SquareTwoValued


class SystemError_(ValueError):
    pass


@dataclass
class BoolSystem:
    degree: int
    cls: CycleType
    var_meaning: list[tuple[int, ...]]
    constraints: list[Constraint] = field(default_factory=list)
    conditions: list[Condition] = field(default_factory=list)
    symmetric: bool = True
    size: int | None = None
    name: str = ""

    @property
    def var_count(self) -> int:
        return len(self.var_meaning)

    def add(self, c: Constraint) -> None:
        for v in _constraint_vars(c):
            if not 0 <= v < self.var_count:
                raise SystemError_(f"constraint {c.label!r} references undeclared variable {v}")
        self.constraints.append(c)

    def add_cardinality(self, total: int, label: str = "card") -> None:
        self.add(Constraint(Kind.CARDINALITY, label, np.ones(self.var_count, np.int64), total))

    def add_linear(self, coeffs: Sequence[int], target: int, label: str = "") -> None:
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.shape != (self.var_count,):
            raise SystemError_("coefficient vector has the wrong length")
        self.add(Constraint(Kind.LINEAR_TARGET, label, arr, int(target)))

    def add_exclusion(self, i: int, j: int, label: str = "excl") -> None:
        self.add(Constraint(Kind.PAIR_EXCLUSION, label, pair=(i, j)))

    def add_quadratic(self, f: QuadForm, g: QuadForm, label: str = "", guard=()) -> None:
        self.add(Constraint(Kind.QUADRATIC_EQUALITY, label, forms=(f, g), guard=tuple(guard)))

    def add_sign_unit(self, var: int, label: str = "sign") -> None:
        self.add(Constraint(Kind.SIGN_UNIT, label, var=var))

    def count(self, kind: Kind) -> int:
        return sum(1 for c in self.constraints if c.kind is kind)

    def decode(self, x: Sequence[int]) -> ElementSet:
        ranks = [r for v, bit in zip(self.var_meaning, x) if bit for r in v]
        return ElementSet(self.degree, ranks)

    def encode(self, C: ElementSet) -> np.ndarray:
        members = set(C.ranks)
        x = np.zeros(self.var_count, dtype=np.int8)
        for i, v in enumerate(self.var_meaning):
            hit = [r in members for r in v]
            if all(hit):
                x[i] = 1
            elif any(hit):
                raise SystemError_("set is not a union of variable blocks")
        if set(self.decode(x).ranks) != members:
            raise SystemError_("set has elements outside the system's class")
        return x

    def to_json(self) -> dict:
        G = symmetric_group(self.degree)
        from .perm import format_cycles
        return {
            "name": self.name,
            "class": list(self.cls),
            "size": self.size,
            "symmetric": self.symmetric,
            "var_count": self.var_count,
            "var_meaning": [[format_cycles(G.elements[r]) for r in v] for v in self.var_meaning],
            "conditions": [_condition_json(c) for c in self.conditions],
            "constraints": [c.to_json() for c in self.constraints],
        }


def _condition_json(c: Condition) -> dict:
    out = {"type": type(c).__name__, "label": c.label, "target": list(c.target)}
    if isinstance(c, ProductCondition):
        out["by"] = list(c.by)
        out["multiplier"] = c.multiplier
    if isinstance(c, SquareConstant) and c.times is not None:
        out["times"] = list(c.times)
    return out


def _constraint_vars(c: Constraint) -> list[int]:
    out: list[int] = []
    if c.coeffs is not None:
        out.extend(range(len(c.coeffs)))
    if c.pair is not None:
        out.extend(c.pair)
    if c.forms is not None:
        for f in c.forms:
            out.extend(int(v) for v in f.I)
            out.extend(int(v) for v in f.J)
        out.extend(v for v, _ in c.guard)
    if c.var is not None:
        out.append(c.var)
    return out


def inverse_pairs(n: int, mu: CycleType) -> list[tuple[int, ...]]:
    """Inverse-pair blocks of a class, each listed (minimal rank first), sorted."""
    G = symmetric_group(n)
    out = []
    for r in G.class_ranks(mu):
        s = int(G.inv[r])
        if r <= s:
            out.append((int(r),) if r == s else (int(r), s))
    return out


def product_multiplier(n: int, cls: CycleType, size: int, by: CycleType, target: CycleType) -> int | None:
    """lam in (C * K_by)_target = lam * K_target for |C| = size, or None if not integral."""
    G = symmetric_group(n)
    c = int(G.class_ranks(cls)[0])
    by_mask = np.zeros(G.order, bool)
    by_mask[G.class_ranks(by)] = True
    tgt = G.class_ranks(target)
    per_element = int(np.sum(by_mask[G.ldiv[c, tgt]]))
    num = size * per_element
    if num % len(tgt):
        return None
    return num // len(tgt)


def build_system(
    cls: Iterable[int],
    size: int,
    symmetric: bool,
    conditions: Sequence[Condition] = (),
    n: int = 6,
    name: str = "",
) -> BoolSystem:
    """Compile restriction equations on C (a subset of class ``cls``) to a BoolSystem."""
    cls = normalize_cycle_type(cls, n)
    G = symmetric_group(n)
    pairs = inverse_pairs(n, cls)
    if symmetric:
        meaning = pairs
        if size % 2 and all(len(p) == 2 for p in pairs):
            raise SystemError_(f"an inverse-closed subset of {cls} cannot have odd size {size}")
        # involution classes have singleton pairs: every subset is symmetric
        card = size if all(len(p) == 1 for p in pairs) else size // 2
    else:
        meaning = [(r,) for p in pairs for r in p]
        card = size
    system = BoolSystem(n, cls, list(meaning), symmetric=symmetric, size=size, name=name)
    system.add_cardinality(card, "cardinality")
    if not symmetric:
        for i, p in enumerate(pairs):
            if len(p) == 2:
                a = meaning.index((p[0],))
                system.add_exclusion(a, a + 1, "inverse pair excluded")
    elem = _var_matrix(meaning)
    for cond in conditions:
        system.conditions.append(cond)
        if isinstance(cond, ProductCondition):
            _compile_product(system, G, elem, cond)
        elif isinstance(cond, SquareConstant):
            _compile_square_constant(system, G, elem, cond)
        elif isinstance(cond, SquareTwoValued):
            _compile_two_valued(system, G, elem, cond)
        else:
            raise TypeError(f"unknown condition {cond!r}")
    return system


def _var_matrix(meaning: list[tuple[int, ...]]) -> np.ndarray:
    """Variables as rows of ranks, padded with -1."""
    width = max(len(v) for v in meaning)
    out = np.full((len(meaning), width), -1, dtype=np.int64)
    for i, v in enumerate(meaning):
        out[i, : len(v)] = v
    return out


def _compile_product(system: BoolSystem, G, elem: np.ndarray, cond: ProductCondition) -> None:
    n = system.degree
    by = normalize_cycle_type(cond.by, n)
    target = normalize_cycle_type(cond.target, n)
    lam = cond.multiplier
    if lam is None:
        lam = product_multiplier(n, system.cls, system.size, by, target)
        if lam is None:
            raise SystemError_(f"{cond.label}: no integral multiplier for |C|={system.size}")
        system.conditions[-1] = ProductCondition(by, target, lam, cond.label)
    by_mask = np.zeros(G.order, bool)
    by_mask[G.class_ranks(by)] = True
    tgt = G.class_ranks(target)
    rows = np.zeros((len(tgt), system.var_count), dtype=np.int64)
    for col in range(elem.shape[1]):
        a = elem[:, col]
        ok = a >= 0
        # coefficient of g in a * K_by is [a^-1 g in K_by]
        rows[:, ok] += by_mask[G.ldiv[a[ok]][:, tgt]].T
    for g, row in zip(tgt, rows):
        system.add_linear(row, lam, f"{cond.label} at {G.elements[g]}")


def _pair_products(G, elem: np.ndarray):
    """Ranks of all products a*b for a in var i, b in var j: shape (v, v, w, w)."""
    a = elem[:, None, :, None]
    b = elem[None, :, None, :]
    valid = (a >= 0) & (b >= 0)
    prod = G.mul[np.where(a >= 0, a, 0), np.where(b >= 0, b, 0)]
    return prod, valid


def _square_tensor(system: BoolSystem, G, elem: np.ndarray, target: CycleType, times: CycleType | None):
    """``Q[g, i, j]``: coefficient of g in (e_i e_j [* K_times]) for g in the target class."""
    tgt = G.class_ranks(target)
    prod, valid = _pair_products(G, elem)
    if times is None:
        weight = np.zeros((G.order, len(tgt)), dtype=np.int64)
        weight[tgt, np.arange(len(tgt))] = 1
    else:
        km = np.zeros(G.order, bool)
        km[G.class_ranks(times)] = True
        weight = km[G.ldiv[:, tgt]].astype(np.int64)
    Q = (weight[prod] * valid[..., None]).sum(axis=(2, 3))  # (v, v, |tgt|)
    return tgt, np.moveaxis(Q, 2, 0)


def _forms_from_tensor(Q: np.ndarray) -> list[QuadForm]:
    """Symmetrise each Q[g] into a QuadForm over booleans (x_i^2 = x_i)."""
    v = Q.shape[1]
    iu, ju = np.triu_indices(v)
    forms = []
    for q in Q:
        sym = q + q.T
        coef = np.where(iu == ju, np.diag(q)[iu], sym[iu, ju])
        keep = coef != 0
        forms.append(QuadForm(iu[keep], ju[keep], coef[keep].astype(np.int64)))
    return forms


def _compile_square_constant(system: BoolSystem, G, elem: np.ndarray, cond: SquareConstant) -> None:
    n = system.degree
    target = normalize_cycle_type(cond.target, n)
    times = normalize_cycle_type(cond.times, n) if cond.times is not None else None
    tgt, Q = _square_tensor(system, G, elem, target, times)
    forms = _forms_from_tensor(Q)
    for g, f in zip(tgt[1:], forms[1:]):
        system.add_quadratic(forms[0], f, f"{cond.label} at {G.elements[g]}")


def _compile_two_valued(system: BoolSystem, G, elem: np.ndarray, cond: SquareTwoValued) -> None:
    n = system.degree
    target = normalize_cycle_type(cond.target, n)
    if target != system.cls:
        raise SystemError_("two-valued square conditions must target the system's own class")
    tgt, Q = _square_tensor(system, G, elem, target, None)
    forms = _forms_from_tensor(Q)
    owner = {int(r): i for i, v in enumerate(system.var_meaning) for r in v}
    for a, b in itertools.combinations(range(len(tgt)), 2):
        va, vb = owner[int(tgt[a])], owner[int(tgt[b])]
        for bit in (0, 1):
            system.add_quadratic(
                forms[a], forms[b], f"{cond.label} on {'C' if bit else 'complement'}",
                guard=((va, bit), (vb, bit)),
            )


# ---------------------------------------------------------------------------
# solving


@dataclass
class SolveStats:
    nodes: int = 0
    leaves: int = 0
    linear_solutions: int = 0
    rejected_by: dict[str, int] = field(default_factory=dict)


class _Linear:
    def __init__(self, A: np.ndarray, t: np.ndarray):
        self.A = A
        self.t = t
        self.pos = np.where(A > 0, A, 0)
        self.neg = np.where(A < 0, A, 0)


def _collect(system: BoolSystem, anchor: tuple[int, int] | None):
    rows, targets = [], []
    partner = np.full(system.var_count, -1, dtype=np.int64)
    quads: list[Constraint] = []
    for c in system.constraints:
        if c.kind in (Kind.CARDINALITY, Kind.LINEAR_TARGET):
            rows.append(c.coeffs)
            targets.append(c.target)
        elif c.kind is Kind.PAIR_EXCLUSION:
            i, j = c.pair
            partner[i], partner[j] = j, i
        elif c.kind is Kind.QUADRATIC_EQUALITY:
            quads.append(c)
    if anchor is not None:
        row = np.zeros(system.var_count, np.int64)
        row[anchor[0]] = 1
        rows.append(row)
        targets.append(anchor[1])
    A = np.array(rows, dtype=np.int64).reshape(-1, system.var_count)
    t = np.array(targets, dtype=np.int64)
    if len(A):
        A, idx = np.unique(np.column_stack([A, t]), axis=0, return_index=True)
        A, t = A[:, :-1], A[:, -1]
    return _Linear(A, t), partner, quads


def _propagate(lin: _Linear, partner: np.ndarray, x: np.ndarray) -> bool:
    """Tighten x (-1 unassigned) in place; False on contradiction."""
    A, t = lin.A, lin.t
    while True:
        one = (x == 1).astype(np.int64)
        free = (x == -1).astype(np.int64)
        if partner.size:
            paired = partner >= 0
            both = paired & (x == 1) & (x[np.where(paired, partner, 0)] == 1)
            if both.any():
                return False
            force0 = paired & (x == -1) & (x[np.where(paired, partner, 0)] == 1)
            if force0.any():
                x[force0] = 0
                continue
        if not len(A):
            return True
        s = A @ one
        lo = s + lin.neg @ free
        hi = s + lin.pos @ free
        if np.any(t < lo) or np.any(t > hi):
            return False
        if not free.any():
            return True
        fm = free.astype(bool)
        Af = A[:, fm]
        # x_i = 1 needed if dropping it makes the target unreachable, etc.
        pos_need1 = (Af > 0) & ((hi[:, None] - Af) < t[:, None])
        pos_need0 = (Af > 0) & ((lo[:, None] + Af) > t[:, None])
        neg_need1 = (Af < 0) & ((lo[:, None] - Af) > t[:, None])
        neg_need0 = (Af < 0) & ((hi[:, None] + Af) < t[:, None])
        need1 = (pos_need1 | neg_need1).any(axis=0)
        need0 = (pos_need0 | neg_need0).any(axis=0)
        if np.any(need1 & need0):
            return False
        if not (need1.any() or need0.any()):
            return True
        idx = np.flatnonzero(fm)
        x[idx[need1]] = 1
        x[idx[need0]] = 0


def _branch_var(lin: _Linear, x: np.ndarray) -> int:
    free = x == -1
    if len(lin.A):
        active = (lin.A != 0) & free[None, :]
        counts = active.sum(axis=1)
        cand = np.flatnonzero(counts > 0)
        if cand.size:
            row = cand[np.argmin(counts[cand])]
            return int(np.flatnonzero(active[row])[0])
    return int(np.flatnonzero(free)[0])


def _quad_ok(quads: list[Constraint], X: np.ndarray, stats: SolveStats | None) -> np.ndarray:
    ok = np.ones(len(X), dtype=bool)
    for c in quads:
        if not ok.any():
            break
        f, g = c.forms
        sel = ok.copy()
        for v, bit in c.guard:
            sel &= X[:, v] == bit
        if not sel.any():
            continue
        bad = np.zeros(len(X), bool)
        rows = np.flatnonzero(sel)
        bad[rows] = f.evaluate(X[rows]) != g.evaluate(X[rows])
        if stats is not None and bad.any():
            key = c.label.split(" at ")[0].split(" on ")[0]
            stats.rejected_by[key] = stats.rejected_by.get(key, 0) + int(bad.sum())
        ok &= ~bad
    return ok


def _search(lin: _Linear, partner: np.ndarray, quads: list[Constraint], root: np.ndarray, stats: SolveStats):
    """Depth-first search below a partial assignment; quadratics checked in batches."""
    found: list[np.ndarray] = []
    pending: list[np.ndarray] = []

    def flush() -> None:
        if not pending:
            return
        X = np.array(pending, dtype=np.int8)
        keep = _quad_ok(quads, X, stats) if quads else np.ones(len(X), bool)
        found.extend(X[keep])
        pending.clear()

    stack = [root.copy()]
    while stack:
        x = stack.pop()
        stats.nodes += 1
        if not _propagate(lin, partner, x):
            continue
        if not (x == -1).any():
            stats.leaves += 1
            stats.linear_solutions += 1
            pending.append(x)
            if len(pending) >= 4096:
                flush()
            continue
        v = _branch_var(lin, x)
        for bit in (0, 1):
            y = x.copy()
            y[v] = bit
            stack.append(y)
    flush()
    return found


def _frontier(lin: _Linear, partner: np.ndarray, n: int, width: int) -> list[np.ndarray]:
    """Breadth-first split into at least ``width`` open subproblems (or fewer if exhausted)."""
    layer = [np.full(n, -1, dtype=np.int8)]
    while 0 < len(layer) < width:
        nxt = []
        for x in layer:
            if not _propagate(lin, partner, x):
                continue
            if not (x == -1).any():
                nxt.append(x)
                continue
            v = _branch_var(lin, x)
            for bit in (0, 1):
                y = x.copy()
                y[v] = bit
                nxt.append(y)
        if all(not (x == -1).any() for x in nxt):
            return nxt
        layer = nxt
    return layer


def _solve_subtree(args):
    lin, partner, quads, root = args
    stats = SolveStats()
    return _search(lin, partner, quads, root, stats), stats


def solve(
    system: BoolSystem,
    symmetry_anchor: tuple[int, int] | None = None,
    stats: SolveStats | None = None,
    linear_only: bool = False,
    jobs: int = 1,
) -> list[np.ndarray]:
    """All 0/1 solutions in a deterministic order (descending as bit tuples).

    ``symmetry_anchor=(var, value)`` fixes one variable.  ``linear_only``
    skips the quadratic equalities.  With ``jobs > 1`` independent subtrees
    run in worker processes; the merged result is identical.
    """
    if any(c.kind is Kind.SIGN_UNIT for c in system.constraints):
        raise SystemError_("sign systems are solved by solve_sign_system")
    stats = stats if stats is not None else SolveStats()
    lin, partner, quads = _collect(system, symmetry_anchor)
    if linear_only:
        quads = []
    root = np.full(system.var_count, -1, dtype=np.int8)
    if jobs <= 1:
        found = _search(lin, partner, quads, root, stats)
    else:
        from concurrent.futures import ProcessPoolExecutor

        roots = _frontier(lin, partner, system.var_count, 4 * jobs)
        found = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part, st in pool.map(_solve_subtree, [(lin, partner, quads, r) for r in roots]):
                found.extend(part)
                stats.nodes += st.nodes
                stats.leaves += st.leaves
                stats.linear_solutions += st.linear_solutions
                for k, v in st.rejected_by.items():
                    stats.rejected_by[k] = stats.rejected_by.get(k, 0) + v
    found.sort(key=lambda s: tuple(-s))
    return found


def brute_force(system: BoolSystem, symmetry_anchor: tuple[int, int] | None = None) -> list[np.ndarray]:
    """Naive 2^n enumeration; the oracle for small systems."""
    n = system.var_count
    if n > 22:
        raise SystemError_("too many variables for brute force")
    lin, partner, quads = _collect(system, symmetry_anchor)
    codes = np.arange(2**n, dtype=np.int64)
    X = ((codes[:, None] >> np.arange(n)[None, :]) & 1).astype(np.int8)
    ok = np.ones(len(X), bool)
    if len(lin.A):
        ok &= np.all(X.astype(np.int64) @ lin.A.T == lin.t[None, :], axis=1)
    for i in np.flatnonzero(partner >= 0):
        ok &= ~((X[:, i] == 1) & (X[:, partner[i]] == 1))
    if quads:
        idx = np.flatnonzero(ok)
        ok[idx] = _quad_ok(quads, X[idx], None)
    sols = [X[i] for i in np.flatnonzero(ok)]
    sols.sort(key=lambda s: tuple(-s))
    return sols


# ---------------------------------------------------------------------------
# conjugacy classification


def canonical_form(C: ElementSet) -> tuple[int, ...]:
    """Lexicographically least sorted image of C under S_n conjugation."""
    G = C.group
    table = G.conjugation_table(np.arange(G.order))
    images = np.sort(table[:, C.array()], axis=1)
    best = images[np.lexsort(images.T[::-1])[0]]
    return tuple(int(r) for r in best)


@dataclass
class SolutionClass:
    representative: ElementSet
    members: list[ElementSet]
    orbit_size: int

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def stabilizer_order(self) -> int:
        return symmetric_group(self.representative.degree).order // self.orbit_size


def classify_solutions(solutions: Sequence[ElementSet]) -> list[SolutionClass]:
    """Group solution sets into S_n-conjugacy classes.

    ``count`` is how many of the given solutions fall in the class and
    ``orbit_size`` the size of the full S_n-orbit.
    """
    if not solutions:
        return []
    G = solutions[0].group
    table = G.conjugation_table(np.arange(G.order))
    buckets: dict[tuple[int, ...], list[ElementSet]] = {}
    for C in solutions:
        buckets.setdefault(canonical_form(C), []).append(C)
    out = []
    for key in sorted(buckets):
        members = sorted(buckets[key])
        rep = members[0]
        images = {tuple(np.sort(table[g, rep.array()]).tolist()) for g in range(G.order)}
        out.append(SolutionClass(rep, members, len(images)))
    out.sort(key=lambda c: (c.count, c.orbit_size, c.representative.ranks))
    return out


# ---------------------------------------------------------------------------
# algebra-level re-check (independent of the compiled rows)


def recheck(system: BoolSystem, C: ElementSet) -> list[str]:
    """Conditions violated by C, evaluated by direct convolution; [] if none."""
    n = system.degree
    failures = []
    if len(C) != system.size:
        failures.append(f"size {len(C)} != {system.size}")
    K = ElementSet(n, symmetric_group(n).class_ranks(system.cls))
    if not C.issubset(K):
        failures.append("not inside the class")
    if system.symmetric and C.inverse() != C:
        failures.append("not inverse-closed")
    if not system.symmetric and not C.isdisjoint(C.inverse()):
        failures.append("meets its inverse")
    c = indicator(C)
    sq = None
    for cond in system.conditions:
        if isinstance(cond, ProductCondition):
            lhs = restrict(multiply(c, class_sum(n, cond.by)), cond.target)
            if lhs != class_sum(n, cond.target) * cond.multiplier:
                failures.append(cond.label)
        else:
            sq = sq if sq is not None else multiply(c, c)
            if isinstance(cond, SquareConstant):
                val = sq if cond.times is None else multiply(sq, class_sum(n, cond.times))
                vals = restrict(val, cond.target).coeffs[symmetric_group(n).class_ranks(cond.target)]
                if np.any(vals != vals[0]):
                    failures.append(cond.label)
            elif isinstance(cond, SquareTwoValued):
                tgt = ElementSet(n, symmetric_group(n).class_ranks(cond.target))
                on = sq.coeffs[C.array()]
                off = sq.coeffs[(tgt - C).array()]
                if (on.size and np.any(on != on[0])) or (off.size and np.any(off != off[0])):
                    failures.append(cond.label)
    return failures


def dump_solutions(system: BoolSystem, solutions: Sequence[np.ndarray]) -> str:
    payload = {
        "system": system.to_json(),
        "solutions": [system.decode(s).to_strings() for s in solutions],
    }
    return json.dumps(payload, indent=1, sort_keys=True)


def class_set(n: int, mu: Iterable[int]) -> ElementSet:
    return ElementSet(n, symmetric_group(n).class_ranks(tuple(mu)))


def as_element(C: ElementSet) -> AlgebraElement:
    return indicator(C)


# ---------------------------------------------------------------------------
# named systems


# Classes already known to be principal whenever C_2 is: every class sum
# lies in the ring, so (C * K_nu) restricted to these is a multiple of them.
PRINCIPAL_TARGETS: tuple[CycleType, ...] = ((2, 1, 1, 1, 1), (3, 1, 1, 1), (3, 2, 1))


def implied_conditions(
    cls: Iterable[int], size: int, targets: Sequence[CycleType] = PRINCIPAL_TARGETS, n: int = 6
) -> list[ProductCondition]:
    """``(C * K_nu)_mu = lam * K_mu`` for every class nu and every mu in targets.

    Rows that vanish identically are dropped.  A non-integral multiplier is
    kept (as multiplier None) so build_system reports the size as impossible.
    """
    cls = normalize_cycle_type(cls, n)
    out = []
    for nu in symmetric_group(n).class_types:
        for mu in targets:
            mu = normalize_cycle_type(mu, n)
            lam = product_multiplier(n, cls, size, nu, mu)
            if lam == 0:
                continue
            out.append(ProductCondition(nu, mu, lam, f"(implied) K{nu} -> K{mu}"))
    return out


@dataclass(frozen=True)
class NamedCase:
    case_id: str
    cls: CycleType
    size: int
    symmetric: bool
    conditions: tuple[Condition, ...]
    anchor: tuple[int, int] | None = (0, 0)
    implied: bool = True
    note: str = ""


def _c51(size: int, extra: tuple[Condition, ...] = ()) -> tuple[Condition, ...]:
    return (
        ProductCondition((2,), (3, 2, 1), label="(C*K(2))_(3,2,1)"),
        ProductCondition((3,), (3,), label="(C*K(3))_(3)"),
        *extra,
    )


_C51_CASE3 = (
    ProductCondition((4,), (2,), label="(C*K(4))_(2)"),
    SquareConstant((3,), label="(C^2)_(3)"),
)

_C6 = (
    ProductCondition((4, 1, 1), (3,), label="(C*K(4,1,1))_(3)"),
    ProductCondition((5, 1), (2,), label="(C*K(5,1))_(2)"),
    ProductCondition((3, 2, 1), (3,), label="(C*K(3,2,1))_(3)"),
    ProductCondition((2, 2), (3, 2, 1), label="(C*K(2,2))_(3,2,1)"),
    SquareConstant((3,), label="(C^2)_(3)"),
    SquareConstant((3,), (2, 2), label="(C^2*K(2,2))_(3)"),
)

NAMED_CASES: dict[str, NamedCase] = {
    c.case_id: c
    for c in [
        NamedCase("C51-case1-symmetric", (5, 1), 24, True, _c51(24)),
        NamedCase("C51-case1-asymmetric", (5, 1), 24, False, _c51(24), anchor=None),
        NamedCase("C51-case2-symmetric", (5, 1), 48, True, _c51(48),
                  note="the (C^2)_(3) constancy test is applied afterwards, see classification"),
        NamedCase("C51-case3-symmetric", (5, 1), 72, True, _c51(72, _C51_CASE3)),
        NamedCase("C51-case3-asymmetric", (5, 1), 72, False, _c51(72, _C51_CASE3), anchor=None),
        NamedCase("C6-size20-symmetric", (6,), 20, True, _C6),
        NamedCase("C6-size20-asymmetric", (6,), 20, False, _C6, anchor=None),
        NamedCase("C6-size40-symmetric", (6,), 40, True, _C6),
        NamedCase("C6-size40-asymmetric", (6,), 40, False, _C6, anchor=None),
        NamedCase("C6-size60-symmetric", (6,), 60, True, _C6),
        NamedCase("C6-size60-asymmetric", (6,), 60, False, _C6, anchor=None),
        NamedCase(
            "C33-symmetric", (3, 3), 20, True,
            (ProductCondition((3,), (3,), label="(C*K(3))_(3)"),
             SquareTwoValued((3, 3), label="(C^2)_(3,3) two-valued")),
            anchor=None, implied=False,
            note="anchor: the pair of (1,2,3)(4,5,6) is set to 1",
        ),
    ]
}


def build_named(case_id: str, implied: bool | None = None, skip: Sequence[str] = ()) -> tuple[BoolSystem, tuple[int, int] | None]:
    """The BoolSystem and anchor of a named case.

    ``implied`` overrides whether implied constancy conditions are added;
    ``skip`` drops conditions by label (the per-condition toggles).
    """
    if case_id not in NAMED_CASES:
        raise KeyError(f"unknown case {case_id!r}; known: {', '.join(NAMED_CASES)}")
    case = NAMED_CASES[case_id]
    conds = [c for c in case.conditions if c.label not in skip]
    use_implied = case.implied if implied is None else implied
    if use_implied:
        conds += implied_conditions(case.cls, case.size)
    system = build_system(case.cls, case.size, case.symmetric, conds, name=case_id)
    anchor = case.anchor
    if case_id == "C33-symmetric":
        G = symmetric_group(6)
        r = G.parse("(1,2,3)(4,5,6)")
        anchor = (next(i for i, v in enumerate(system.var_meaning) if r in v), 1)
    return system, anchor


@dataclass
class CaseResult:
    case_id: str
    system: BoolSystem
    anchor: tuple[int, int] | None
    solutions: list[np.ndarray]
    stats: SolveStats
    classes: list[SolutionClass]

    def sets(self) -> list[ElementSet]:
        return [self.system.decode(x) for x in self.solutions]

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "variables": self.system.var_count,
            "anchor": list(self.anchor) if self.anchor else None,
            "conditions": [c.label for c in self.system.conditions],
            "linear_solutions": self.stats.linear_solutions,
            "rejected_by": self.stats.rejected_by,
            "solutions": len(self.solutions),
            "classes": [
                {"count": c.count, "orbit_size": c.orbit_size, "representative": c.representative.to_strings()}
                for c in self.classes
            ],
        }


def run_case(case_id: str, implied: bool | None = None, skip: Sequence[str] = (), jobs: int = 1) -> CaseResult:
    system, anchor = build_named(case_id, implied, skip)
    stats = SolveStats()
    sols = solve(system, anchor, stats, jobs=jobs)
    sets = [system.decode(x) for x in sols]
    return CaseResult(case_id, system, anchor, sols, stats, classify_solutions(sets))


# ---------------------------------------------------------------------------
# the sign system over all twenty 3-cycles


@dataclass
class SignVerdict:
    scanned: int
    verbatim: list[dict[tuple[int, int, int], int]]
    satisfying: list[dict[tuple[int, int, int], int]]
    terms_per_triple: list[int]
    matches_convolution: bool
    rejected_by: dict[str, int] = field(default_factory=dict)

    @property
    def satisfiable(self) -> bool:
        return bool(self.satisfying)

    def to_json(self) -> dict:
        return {
            "scanned": self.scanned,
            "verbatim_solutions": len(self.verbatim),
            "solutions": len(self.satisfying),
            "terms_per_triple": sorted(set(self.terms_per_triple)),
            "matches_convolution": self.matches_convolution,
            "rejected_by": self.rejected_by,
        }


def _three_cycle(t: Sequence[int], sign: int, n: int = 6) -> int:
    from .perm import Permutation

    G = symmetric_group(n)
    cyc = tuple(t) if sign == 1 else (t[0], t[2], t[1])
    return G.rank(Permutation.from_cycles([cyc], n))


def sign_system_terms(n: int = 6):
    """For each triple T: the (A, delta1, B, delta2) with A^d1 B^d2 or B^d2 A^d1 = T^+."""
    G = symmetric_group(n)
    triples = list(itertools.combinations(range(1, n + 1), 3))
    signed = {(t, d): _three_cycle(t, d, n) for t in triples for d in (1, -1)}
    terms: list[list[tuple[int, int, int, int]]] = []
    for T in triples:
        c = signed[(T, 1)]
        found = []
        for (ia, A), (ib, B) in itertools.combinations(enumerate(triples), 2):
            for d1 in (1, -1):
                for d2 in (1, -1):
                    a, b = signed[(A, d1)], signed[(B, d2)]
                    if G.mul[a, b] == c or G.mul[b, a] == c:
                        found.append((ia, d1, ib, d2))
        terms.append(found)
    return triples, terms


def build_sign_system(n: int = 6) -> BoolSystem:
    """Twenty sign variables X(T) and the equalities 4 S(T) = 4 S(T0).

    Variable bits b encode X = 1 - 2b; forms are evaluated on X.
    """
    triples, terms = sign_system_terms(n)
    system = BoolSystem(n, (3, 1, 1, 1), [(_three_cycle(t, 1, n),) for t in triples], name="C3-signs", size=20)
    for v in range(len(triples)):
        system.add_sign_unit(v, f"X{triples[v]}^2 = 1")
    forms = []
    for t, found in enumerate(terms):
        I, J, coef = [], [], []
        for a, d1, b, d2 in found:
            # 4 S(a,b,c) = 1 + d1 X_a X_t + d2 X_b X_t + d1 d2 X_a X_b
            I += [a, b, a]
            J += [t, t, b]
            coef += [d1, d2, d1 * d2]
        forms.append(QuadForm(np.array(I), np.array(J), np.array(coef, dtype=np.int64), len(found)))
    for t in range(1, len(triples)):
        system.add_quadratic(forms[0], forms[t], f"S{triples[0]} = S{triples[t]}")
    for fixed in ((1, 2, 3), (4, 5, 6)):
        row = np.zeros(len(triples), dtype=np.int64)
        row[triples.index(fixed)] = 1
        system.add_linear(row, 0, f"X{fixed} = 1")
    return system


def solve_sign_system(system: BoolSystem, chunk: int = 1 << 16) -> tuple[int, list[np.ndarray]]:
    """Exhaust the free sign bits; returns (assignments scanned, satisfying X vectors)."""
    n = system.var_count
    fixed = {}
    for c in system.constraints:
        if c.kind is Kind.LINEAR_TARGET:
            (v,) = np.flatnonzero(c.coeffs)
            fixed[int(v)] = c.target
    free = [v for v in range(n) if v not in fixed]
    quads = [c for c in system.constraints if c.kind is Kind.QUADRATIC_EQUALITY]
    total = 1 << len(free)
    hits = []
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = np.zeros((len(codes), n), dtype=np.int64)
        bits[:, free] = (codes[:, None] >> np.arange(len(free))[None, :]) & 1
        for v, b in fixed.items():
            bits[:, v] = b
        X = 1 - 2 * bits
        ok = np.ones(len(X), bool)
        for c in quads:
            f, g = c.forms
            ok &= f.evaluate(X) == g.evaluate(X)
        hits.extend(X[ok])
    return total, hits


def implied_failure(C: ElementSet, targets: Sequence[CycleType] = ((2, 1, 1, 1, 1), (3, 2, 1))) -> str | None:
    """First class-sum product whose restriction to a target class is not constant."""
    n = C.degree
    G = symmetric_group(n)
    c = indicator(C)
    for nu in G.class_types:
        prod = multiply(c, class_sum(n, nu))
        for mu in targets:
            if is_scalar_multiple(restrict(prod, mu), class_set(n, mu)) is None:
                return f"(implied) K{nu} -> K{normalize_cycle_type(mu, n)}"
    return None


def sign_system_c3(samples: int = 64, seed: int = 0) -> SignVerdict:
    """Exhaust the sign system over all 2^18 free assignments.

    ``verbatim`` holds assignments meeting the S(c) equalities alone;
    ``satisfying`` those that also pass the implied constancy conditions on
    the transposition and (3,2,1) classes.  The compiled forms are compared
    with a direct convolution on random sign vectors.
    """
    system = build_sign_system()
    triples, terms = sign_system_terms()
    scanned, hits = solve_sign_system(system)
    rng = np.random.default_rng(seed)
    forms = [c.forms[1] for c in system.constraints if c.kind is Kind.QUADRATIC_EQUALITY]
    forms.insert(0, next(c.forms[0] for c in system.constraints if c.kind is Kind.QUADRATIC_EQUALITY))
    agree = True
    for _ in range(samples):
        X = rng.choice([-1, 1], size=len(triples))
        C = ElementSet(6, [_three_cycle(t, int(x)) for t, x in zip(triples, X)])
        sq = multiply(indicator(C), indicator(C)).coeffs
        for t, T in enumerate(triples):
            lhs = int(forms[t].evaluate(X)[0])
            agree &= lhs == 4 * int(sq[_three_cycle(T, int(X[t]))])
    verbatim = [{t: int(x) for t, x in zip(triples, h)} for h in hits]
    kept, rejected = [], {}
    for h in verbatim:
        why = implied_failure(sign_assignment_set(h))
        if why is None:
            kept.append(h)
        else:
            rejected[why] = rejected.get(why, 0) + 1
    return SignVerdict(scanned, verbatim, kept, [len(t) for t in terms], bool(agree), rejected)


def sign_assignment_set(assignment: dict[tuple[int, int, int], int]) -> ElementSet:
    return ElementSet(6, [_three_cycle(t, s) for t, s in assignment.items()])


# ---------------------------------------------------------------------------
# generic censuses under the implied conditions


def admissible_sizes(
    cls: Iterable[int], targets: Sequence[CycleType] = PRINCIPAL_TARGETS, n: int = 6, limit: int | None = None
) -> list[int]:
    """Sizes 0 < s < |K| (or <= limit) for which every implied multiplier is integral."""
    cls = normalize_cycle_type(cls, n)
    total = len(symmetric_group(n).class_ranks(cls))
    top = total - 1 if limit is None else limit
    G = symmetric_group(n)
    return [
        s for s in range(1, top + 1)
        if all(product_multiplier(n, cls, s, nu, normalize_cycle_type(mu, n)) is not None
               for nu in G.class_types for mu in targets)
    ]


def census_system(
    cls: Iterable[int],
    size: int,
    symmetric: bool,
    conditions: Sequence[Condition] = (),
    targets: Sequence[CycleType] = PRINCIPAL_TARGETS,
    name: str = "",
    n: int = 6,
) -> BoolSystem:
    """build_system with the implied constancy rows for ``targets`` appended."""
    conds = list(conditions) + implied_conditions(cls, size, targets, n)
    return build_system(cls, size, symmetric, conds, n=n, name=name)
