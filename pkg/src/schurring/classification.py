"""Commutative S-rings over S_6 whose transposition class is principal.

Pipeline:

* ``build_eight`` constructs the eight rings of the classification.
* ``verify_case(mu)`` enumerates the possible principal proper subsets of one
  class and closes every candidate with the class sums.
* ``verify_c2_principal_theorem`` joins the surviving candidate rings until
  nothing new appears.
* ``verify_split_cases`` handles the four ways the transposition class can
  split, using an exact commutant computation inside each orbit.

Every candidate ring carries the reason it survives or fails, and
``verify_all`` gathers everything into a ClassificationReport.
"""

from __future__ import annotations

import datetime
import functools
import itertools
import os
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from . import covers, fixtures, search
from .algebra import class_sum, coefficient_fibers, commutes, indicator, is_scalar_multiple, multiply, restrict
from .perm import (
    CycleType,
    ElementSet,
    conjugacy_class,
    conjugation_orbits,
    normalize_cycle_type,
    set_orbit,
    stabilizer,
    symmetric_group,
)
from .sring import (
    SRing,
    center,
    closure,
    closure_with_center,
    conjugates_of_sring,
    has_principal_set,
    is_commutative,
    join,
    orbit_sring,
    verify_sring,
)

N = 6
S_S6 = 76  # sum of the irreducible character degrees of S_6
DIMENSIONS = (11, 19, 12, 12, 34, 26, 34, 19)
RING_NAMES = (
    "Z(CS6)",
    "S(S6,H120)",
    "S(S6,A6)",
    "S36",
    "S(S6,S2xS4)",
    "S(S6,S3wrS2)",
    "S(S6,S2wrS3)",
    "S(S6,S5)",
)
C2_PRINCIPAL_RINGS = RING_NAMES[:4]
T2: CycleType = (2, 1, 1, 1, 1)
T3: CycleType = (3, 1, 1, 1)
T321: CycleType = (3, 2, 1)

# the order in which classes are settled: later ones may use earlier ones
NONTRIVIAL_CLASSES: tuple[CycleType, ...] = (
    T2,
    T3,
    T321,
    (2, 2, 1, 1),
    (2, 2, 2),
    (4, 1, 1),
    (4, 2),
    (3, 3),
    (5, 1),
    (6,),
)

_GENERATORS = {
    "S(S6,H120)": "gens_h120",
    "S(S6,S2xS4)": "gens_s2xs4",
    "S(S6,S3wrS2)": "gens_s3wrs2",
    "S(S6,S2wrS3)": "gens_s2wrs3",
    "S(S6,S5)": "gens_s5",
}

# transposition-class partitions and the orbit rings they should generate
SPLIT_CASES = {
    "S2xS4": "S(S6,S2xS4)",
    "S2wrS3": "S(S6,S2wrS3)",
    "S3wrS2": "S(S6,S3wrS2)",
    "S5": "S(S6,S5)",
}


class ClassificationError(RuntimeError):
    pass


def _key(mu: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in normalize_cycle_type(mu, N)) + ")"


def alternating_group(n: int = N) -> ElementSet:
    G = symmetric_group(n)
    even = [k for k, mu in enumerate(G.class_types) if (n - len(mu)) % 2 == 0]
    return ElementSet(n, np.flatnonzero(np.isin(G.class_of, even)))


# ---------------------------------------------------------------------------
# the eight rings


@dataclass(frozen=True)
class S36Construction:
    orbits: tuple[ElementSet, ...]  # O1..O4 in the chosen labelling
    c1: ElementSet
    c36: ElementSet
    ring: SRing
    alternative: SRing
    pair_dimensions: dict[tuple[int, int], int]  # over the raw orbit order

    def to_json(self) -> dict:
        return {
            "orbit_sizes": [len(o) for o in self.orbits],
            "c1_is_alternating_orbit": True,
            "dimension": self.ring.dimension,
            "commutative": is_commutative(self.ring),
            "c2_principal": has_principal_set(self.ring, conjugacy_class(N, T2)),
            "alternative_dimension": self.alternative.dimension,
            "alternative_commutative": is_commutative(self.alternative),
            "alternative_c2_principal": has_principal_set(self.alternative, conjugacy_class(N, T2)),
            "pair_dimensions": {f"{i}{j}": d for (i, j), d in sorted(self.pair_dimensions.items())},
        }


@functools.cache
def s36_construction() -> S36Construction:
    """Label the four H36-orbits on the 5-cycles and build the dimension-12 ring.

    O1 u O2 must be an A6-orbit; O1 u O3 must give a commutative ring of
    dimension 12 with C_2 principal that is not the alternating one.  The
    first labelling in lexicographic order meeting both is taken.
    """
    H36 = fixtures.subgroup("gens_h36")
    K = conjugacy_class(N, (5, 1))
    raw = sorted((o for o in conjugation_orbits(N, H36) if o.issubset(K)), key=lambda o: o.ranks[0])
    if len(raw) != 4 or any(len(o) != 36 for o in raw):
        raise ClassificationError(f"H36 orbits on the 5-cycles have sizes {[len(o) for o in raw]}")
    halves = [o for o in conjugation_orbits(N, alternating_group()) if o.issubset(K)]
    rings = {}
    for i, j in itertools.combinations(range(4), 2):
        rings[(i, j)] = closure_with_center([raw[i] | raw[j]])
    dims = {p: R.dimension for p, R in rings.items()}
    K2 = conjugacy_class(N, T2)
    for p in itertools.permutations(range(4)):
        O = [raw[k] for k in p]
        c1, c36 = O[0] | O[1], O[0] | O[2]
        R = rings[tuple(sorted((p[0], p[2])))]
        if c1 in halves and c36 not in halves and R.dimension == 12 and is_commutative(R) and has_principal_set(R, K2):
            alt = rings[tuple(sorted((p[0], p[3])))]
            return S36Construction(tuple(O), c1, c36, R, alt, dims)
    raise ClassificationError(f"no labelling of the H36 orbits gives a dimension-12 ring; pair dimensions {dims}")


def construct_s36() -> SRing:
    return s36_construction().ring


def _build(name: str) -> SRing:
    if name == "Z(CS6)":
        return center(N)
    if name == "S(S6,A6)":
        return orbit_sring(N, alternating_group())
    if name == "S36":
        return construct_s36()
    return orbit_sring(N, fixtures.subgroup(_GENERATORS[name]))


@functools.cache
def ring(name: str) -> SRing:
    return _build(name)


@dataclass(frozen=True)
class RingRecord:
    name: str
    recipe: str
    dimension: int
    commutative: bool
    c2_principal: bool
    sizes: tuple[int, ...]
    verified: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "recipe": self.recipe,
            "dimension": self.dimension,
            "commutative": self.commutative,
            "c2_principal": self.c2_principal,
            "sizes": list(self.sizes),
            "verified": self.verified,
        }


def _recipe(name: str) -> str:
    if name == "Z(CS6)":
        return "conjugacy classes"
    if name == "S(S6,A6)":
        return "orbit ring of the even permutations"
    if name == "S36":
        return "closure of the class sums and O1 u O3 (H36 orbits on the 5-cycles)"
    gens = fixtures.raw(_GENERATORS[name])["members"]
    return "orbit ring of <" + ", ".join(gens) + ">"


def build_eight() -> list[SRing]:
    out = []
    for name in RING_NAMES:
        R = ring(name)
        check = verify_sring(R.principal_sets)
        if not check:
            raise ClassificationError(f"{name} is not an S-ring: {check.reason}")
        out.append(R)
    return out


def ring_records() -> list[RingRecord]:
    K2 = conjugacy_class(N, T2)
    out = []
    for name, R in zip(RING_NAMES, build_eight()):
        out.append(RingRecord(
            name, _recipe(name), R.dimension, is_commutative(R), has_principal_set(R, K2),
            tuple(R.size_set()), bool(verify_sring(R.principal_sets)),
        ))
    return out


def _signature(R: SRing) -> tuple:
    return (R.dimension, tuple(sorted(R.sizes())))


@functools.cache
def _conjugate_keys(name: str) -> frozenset[bytes]:
    return frozenset(T.labels.tobytes() for T in conjugates_of_sring(ring(name)))


def identify(R: SRing) -> str | None:
    """Name of the listed ring R is conjugate to, or None."""
    for name in RING_NAMES:
        if DIMENSIONS[RING_NAMES.index(name)] != R.dimension:
            continue
        if _signature(ring(name)) != _signature(R):
            continue
        if R.labels.tobytes() in _conjugate_keys(name):
            return name
    return None


def ring_key(R: SRing) -> bytes:
    """Conjugation-invariant key: the least conjugate labelling."""
    return conjugates_of_sring(R)[0].labels.tobytes()


# ---------------------------------------------------------------------------
# per-class analysis


@dataclass
class Census:
    label: str
    size: int
    symmetric: bool
    conditions: list[str]
    solutions: int
    classes: list[tuple[int, int]]  # (solutions in class, S_6-orbit size)
    rechecked: int
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "size": self.size,
            "symmetric": self.symmetric,
            "conditions": self.conditions,
            "solutions": self.solutions,
            "classes": [list(c) for c in self.classes],
            "rechecked": self.rechecked,
            "failures": self.failures,
        }


@dataclass
class Candidate:
    origin: str
    members: ElementSet
    orbit_size: int
    dimension: int
    commutative: bool
    c2_principal: bool
    principal: bool
    ring: str | None

    @property
    def survives(self) -> bool:
        return self.commutative and self.c2_principal and self.principal

    def to_json(self) -> dict:
        return {
            "origin": self.origin,
            "size": len(self.members),
            "orbit_size": self.orbit_size,
            "dimension": self.dimension,
            "commutative": self.commutative,
            "c2_principal": self.c2_principal,
            "principal_in_closure": self.principal,
            "ring": self.ring,
            "survives": self.survives,
            "representative": self.members.to_strings(),
        }


def analyse_candidate(C: ElementSet, origin: str, orbit_size: int | None = None) -> Candidate:
    R = closure_with_center([C])
    if orbit_size is None:
        orbit_size = len(set_orbit(C))
    comm = is_commutative(R)
    return Candidate(
        origin, C, orbit_size, R.dimension, comm,
        has_principal_set(R, conjugacy_class(N, T2)), has_principal_set(R, C),
        identify(R) if comm else None,
    )


@dataclass
class CaseRecord:
    cls: CycleType
    expected: str
    verdict: str
    ok: bool
    censuses: list[Census] = field(default_factory=list)
    candidates: list[Candidate] = field(default_factory=list)
    checks: dict[str, object] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def survivors(self) -> list[Candidate]:
        return [c for c in self.candidates if c.survives]

    def to_json(self) -> dict:
        return {
            "class": list(self.cls),
            "expected": self.expected,
            "verdict": self.verdict,
            "ok": self.ok,
            "censuses": [c.to_json() for c in self.censuses],
            "candidates": [c.to_json() for c in self.candidates],
            "checks": self.checks,
            "notes": self.notes,
        }


def _run_census(system: search.BoolSystem, anchor, label: str) -> tuple[Census, list[search.SolutionClass]]:
    stats = search.SolveStats()
    sols = search.solve(system, anchor, stats)
    sets = [system.decode(x) for x in sols]
    failures = []
    for C in sets:
        bad = search.recheck(system, C)
        if bad:
            failures.append(f"{C.to_strings()[:2]}...: {bad}")
    classes = search.classify_solutions(sets)
    census = Census(
        label, system.size, system.symmetric, [c.label for c in system.conditions if not c.label.startswith("(implied)")]
        + ([f"{sum(1 for c in system.conditions if c.label.startswith('(implied)'))} implied rows"]),
        len(sets), [(c.count, c.orbit_size) for c in classes], len(sets) - len(failures), failures,
    )
    return census, classes


def _anchor(symmetric: bool) -> tuple[int, int] | None:
    # a symmetric candidate is a proper subset, so some conjugate misses the first pair
    return (0, 0) if symmetric else None


def _generic_censuses(
    record: CaseRecord, mu: CycleType, targets: Sequence[CycleType], skip_asym: Sequence[int] = ()
) -> None:
    """Census every admissible size up to half the class, both symmetries."""
    total = len(conjugacy_class(N, mu))
    involutions = all(len(p) == 1 for p in search.inverse_pairs(N, mu))
    sizes = search.admissible_sizes(mu, targets, limit=total // 2)
    record.checks["admissible_sizes"] = sizes
    for size in sizes:
        for symmetric in (True, False):
            if involutions and not symmetric:
                continue
            if symmetric and size % 2 and not involutions:
                continue
            if not symmetric and size in skip_asym:
                continue
            label = f"size {size} {'symmetric' if symmetric else 'asymmetric'}"
            system = search.census_system(mu, size, symmetric, targets=targets, name=f"{_key(mu)} {label}")
            census, classes = _run_census(system, _anchor(symmetric), label)
            record.censuses.append(census)
            for c in classes:
                record.candidates.append(analyse_candidate(c.representative, label, c.orbit_size))


def _named_census(record: CaseRecord, case_id: str) -> list[search.SolutionClass]:
    system, anchor = search.build_named(case_id)
    census, classes = _run_census(system, anchor, case_id)
    record.censuses.append(census)
    return classes


def _pairwise_noncommuting(C: ElementSet) -> bool:
    conj = set_orbit(C)
    return all(not commutes(indicator(a), indicator(b)) for a, b in itertools.combinations(conj, 2))


def _finish(record: CaseRecord, ok: bool, verdict: str) -> CaseRecord:
    bad = [f for c in record.censuses for f in c.failures]
    if bad:
        record.notes.append(f"{len(bad)} solutions failed the algebra-level recheck")
    record.ok = ok and not bad
    record.verdict = verdict
    return record


def _survivor_rings(record: CaseRecord) -> list[str | None]:
    return sorted({c.ring for c in record.survivors}, key=str)


def _case_transpositions(mu: CycleType) -> CaseRecord:
    record = CaseRecord(mu, "principal by hypothesis; splittings handled separately", "", True)
    record.notes.append("the split partitions are examined by verify_split_cases")
    return _finish(record, True, "principal by hypothesis")


def _case_three_cycles(mu: CycleType) -> CaseRecord:
    record = CaseRecord(mu, "no proper principal subset", "", False)
    targets = (T2,)
    tri = {r: covers.enumerate_triangle_covers(r) for r in (5, 10, 15, 20)}
    record.checks["triangle_cover_orbits"] = {str(r): [o.orbit_size for o in v] for r, v in tri.items()}
    hemi = covers.TriangleSet(tuple(sorted({tuple(sorted(t)) for t in fixtures.hemi_triangles()})))
    record.checks["hemi_in_r10_orbit"] = len(tri[10]) == 1 and tri[10][0].representative.canonical() == hemi.canonical()
    # every size up to 20 except the asymmetric 20, which is the sign system
    _generic_censuses(record, mu, targets, skip_asym=(20,))
    orient = covers.orientation_census()
    oriented_keys = {search.canonical_form(cls[0].element_set()) for v in orient.classes.values() for cls in v}
    found = {search.canonical_form(c.members) for c in record.candidates if c.origin == "size 10 asymmetric"}
    record.checks["asymmetric_10_are_hemi_orientations"] = found == oriented_keys
    record.checks["orientation_census"] = {f"{f},{o}": n for (f, o), n in orient.by_f_minus_and_o.items()}
    record.checks["orientation_o_values"] = orient.o_values()
    o5 = [analyse_candidate(a.element_set(), "orientation o=5") for a in covers.enumerate_o5_assignments()]
    record.checks["o5_classes"] = len(o5)
    record.checks["o5_closures_noncommutative"] = all(not c.commutative for c in o5)
    hemi_sym = [c for c in record.candidates if c.origin == "size 20 symmetric"]
    record.checks["hemi_symmetric_closure_noncommutative"] = bool(hemi_sym) and all(not c.commutative for c in hemi_sym)
    verdict = search.sign_system_c3()
    record.checks["sign_system"] = verdict.to_json()
    sign_reps = search.classify_solutions([search.sign_assignment_set(h) for h in verdict.verbatim])
    for c in sign_reps:
        record.candidates.append(analyse_candidate(c.representative, "sign system", c.orbit_size))
    # the (3,2,1) rows presuppose this class is settled, so the verdict rests on the closures
    record.notes.append(
        f"the sign equalities alone admit {len(verdict.verbatim)} anchored assignments, all with "
        f"non-commutative closures; {len(verdict.satisfying)} also pass the (3,2,1) constancy rows"
    )
    ok = (
        not record.survivors
        and record.checks["hemi_in_r10_orbit"]
        and record.checks["asymmetric_10_are_hemi_orientations"]
        and record.checks["o5_closures_noncommutative"]
        and record.checks["hemi_symmetric_closure_noncommutative"]
        and verdict.matches_convolution
        and [o for r in (5, 15) for o in tri[r]] == []
    )
    return _finish(record, ok, "no proper principal subset" if not record.survivors else "split survives")


def _case_321(mu: CycleType) -> CaseRecord:
    record = CaseRecord(mu, "no proper principal subset", "", False)
    sizes = search.admissible_sizes(mu, (T2, T3))
    record.checks["admissible_sizes"] = sizes
    record.checks["admissible_sizes_transpositions_only"] = search.admissible_sizes(mu, (T2,))
    record.notes.append("no size has integral multipliers once C_2 and C_3 are principal")
    return _finish(record, sizes == [], "no proper principal subset" if not sizes else "sizes remain")


def _restriction_fibers(C: ElementSet) -> dict[str, list[list[int]]]:
    """Coefficient fibers of (C * K_nu) on K_mu, nu in {(2), (2,2)}, mu in {(2), (2,2,2)}."""
    out = {}
    for nu in (T2, (2, 2, 1, 1)):
        prod = multiply(indicator(C), class_sum(N, nu))
        for mu in (T2, (2, 2, 2)):
            fibers = coefficient_fibers(prod, conjugacy_class(N, mu))
            out[f"K{_key(nu)}->{_key(mu)}"] = [[v, len(f)] for v, f in fibers]
    return out


def _fixture_case(mu: CycleType, fixture: str, record: CaseRecord) -> None:
    """Common tail for the classes whose only split is a listed H120-orbit."""
    F = fixtures.element_set(fixture)
    key = search.canonical_form(F)
    surv = [c for c in record.survivors]
    record.checks["fixture"] = fixture
    record.checks["fixture_is_survivor"] = any(search.canonical_form(c.members) == key for c in surv)
    record.checks["surviving_classes"] = len(surv)
    record.checks["conjugates"] = len(set_orbit(F))
    record.checks["conjugates_pairwise_noncommuting"] = _pairwise_noncommuting(F)
    record.checks["closure_is_h120_conjugate"] = identify(closure_with_center([F])) == "S(S6,H120)"


def _case_fixture_class(mu: CycleType, fixture: str) -> CaseRecord:
    record = CaseRecord(mu, f"only the conjugates of {fixture}", "", False)
    _generic_censuses(record, mu, search.PRINCIPAL_TARGETS)
    _fixture_case(mu, fixture, record)
    if mu == (2, 2, 1, 1):
        classes = covers.enumerate_15element_edgepair_covers()
        W = fixtures.element_set("w15")
        record.checks["edgepair_cover_classes"] = [len(c) for c in classes]
        record.checks["w15_stabilizer_order"] = len(stabilizer(W))
        record.checks["w15_closure_equals_h120_ring"] = closure_with_center([W]) == ring("S(S6,H120)")
        extra = (
            record.checks["edgepair_cover_classes"] == [6]
            and W in classes[0]
            and record.checks["w15_stabilizer_order"] == 120
            and record.checks["w15_closure_equals_h120_ring"]
        )
    elif mu == (2, 2, 2):
        fibers = _restriction_fibers(fixtures.element_set(fixture))
        record.checks["restriction_fibers"] = fibers
        # only the transposition restriction of C * K(2,2) is a multiple of the class sum
        extra = fibers["K(2,2,1,1)->(2,1,1,1,1)"] == [[1, 15]]
    else:
        extra = True
    ok = (
        extra
        and record.checks["fixture_is_survivor"]
        and record.checks["surviving_classes"] == 1
        and record.checks["conjugates"] == 6
        and record.checks["conjugates_pairwise_noncommuting"]
        and record.checks["closure_is_h120_conjugate"]
        and _survivor_rings(record) == ["S(S6,H120)"]
    )
    return _finish(record, ok, f"splits only as the conjugates of {fixture}" if ok else "unexpected split")


def _case_33(mu: CycleType) -> CaseRecord:
    record = CaseRecord(mu, "only the two listed 20-element sets", "", False)
    _generic_censuses(record, mu, search.PRINCIPAL_TARGETS)
    named = _named_census(record, "C33-symmetric")
    named_rings = [identify(closure_with_center([c.representative])) for c in named]
    record.checks["named_classes"] = [c.count for c in named]
    record.checks["named_classes_closing_to_h120"] = sum(r == "S(S6,H120)" for r in named_rings)
    a, b = fixtures.element_set("c33_split_a"), fixtures.element_set("c33_split_b")
    keys = {search.canonical_form(c.members) for c in record.survivors}
    record.checks["fixtures_are_the_survivors"] = keys == {search.canonical_form(a), search.canonical_form(b)}
    record.checks["fixtures_commute"] = commutes(indicator(a), indicator(b))
    partners = [d for d in set_orbit(b) if commutes(indicator(a), indicator(d))]
    record.checks["commuting_conjugates_of_b"] = len(partners)
    record.checks["commuting_conjugate_is_complement"] = len(partners) == 1 and partners[0] == conjugacy_class(N, mu) - a
    record.checks["conjugates_pairwise_noncommuting"] = _pairwise_noncommuting(a) and _pairwise_noncommuting(b)
    ok = (
        record.checks["fixtures_are_the_survivors"]
        and record.checks["named_classes"] == [3, 3, 6]
        and record.checks["named_classes_closing_to_h120"] == 2
        and record.checks["commuting_conjugates_of_b"] == 1
        and record.checks["conjugates_pairwise_noncommuting"]
        and _survivor_rings(record) == ["S(S6,H120)"]
    )
    if not record.checks["fixtures_commute"]:
        record.notes.append("the listed pair does not commute; the unique commuting conjugate of one is the complement of the other")
    return _finish(record, ok, "splits only into the two listed sets" if ok else "unexpected split")


def _case_51(mu: CycleType) -> CaseRecord:
    record = CaseRecord(mu, "H120-orbits of size 24, an A6-orbit, or a conjugate of C36", "", False)
    cases = ["C51-case1-symmetric", "C51-case1-asymmetric", "C51-case2-symmetric",
             "C51-case3-symmetric", "C51-case3-asymmetric"]
    found = {}
    for case_id in cases:
        found[case_id] = _named_census(record, case_id)
        for c in found[case_id]:
            record.candidates.append(analyse_candidate(c.representative, case_id, c.orbit_size))
    system = search.census_system(mu, 48, False, search._c51(48), name="C51-case2-asymmetric")
    census, classes = _run_census(system, None, "C51-case2-asymmetric")
    record.censuses.append(census)
    for c in classes:
        record.candidates.append(analyse_candidate(c.representative, "C51-case2-asymmetric", c.orbit_size))
    # the constant-(C^2)_(3) filter on the 48-element candidates
    case2 = [C for cls in found["C51-case2-symmetric"] for C in cls.members]
    K3 = conjugacy_class(N, T3)
    const = [C for C in case2 if is_scalar_multiple(restrict(multiply(indicator(C), indicator(C)), T3), K3) is not None]
    record.checks["case2_candidates"] = len(case2)
    record.checks["case2_constant_c3_square"] = len(const)
    case2_rings = [c for c in record.candidates if c.origin == "C51-case2-symmetric"]
    record.checks["case2_closure_dimensions"] = sorted(c.dimension for c in case2_rings)
    record.checks["case2_closures_split_c2"] = all(not c.c2_principal for c in case2_rings)
    record.checks["case2_closure_rings"] = sorted(str(c.ring) for c in case2_rings)
    case3 = found["C51-case3-symmetric"]
    record.checks["case3_class_sizes"] = sorted(c.orbit_size // 2 for c in case3)
    record.checks["case3_solutions"] = sum(c.count for c in case3)
    s36 = s36_construction()
    record.checks["c36_among_survivors"] = any(
        search.canonical_form(c.members) == search.canonical_form(s36.c36) for c in record.survivors
    )
    expected = {"S(S6,H120)", "S(S6,A6)", "S36"}
    ok = (
        set(_survivor_rings(record)) == expected
        and record.checks["case2_candidates"] == 30
        and record.checks["case2_closures_split_c2"]
        and record.checks["case3_solutions"] == 11
        and record.checks["c36_among_survivors"]
    )
    record.notes.append(
        f"{len(const)} of the {len(case2)} size-48 candidates have constant (C^2) on the 3-cycles"
    )
    return _finish(record, ok, "splits only as H120-orbits, A6-orbits or C36 conjugates" if ok else "unexpected split")


def _case_6(mu: CycleType) -> CaseRecord:
    record = CaseRecord(mu, "sizes 20, 40, 60 only, each closing to a conjugate of the H120 ring", "", False)
    for size in (20, 40, 60):
        for kind in ("symmetric", "asymmetric"):
            case_id = f"C6-size{size}-{kind}"
            for c in _named_census(record, case_id):
                record.candidates.append(analyse_candidate(c.representative, case_id, c.orbit_size))
    size20 = [c for c in record.survivors if len(c.members) == 20]
    sets20 = [s for c in size20 for s in set_orbit(c.members)]
    clash = [
        (a, b) for a, b in itertools.combinations(sets20, 2)
        if a.isdisjoint(b) and commutes(indicator(a), indicator(b))
    ]
    record.checks["surviving_sizes"] = sorted({len(c.members) for c in record.survivors})
    record.checks["commuting_disjoint_size20_pairs"] = len(clash)
    ok = (
        set(record.checks["surviving_sizes"]) <= {20, 40, 60}
        and _survivor_rings(record) == ["S(S6,H120)"]
        and not clash
    )
    return _finish(record, ok, "sizes 20/40/60, all H120 conjugates" if ok else "unexpected split")


_FIXTURE_CLASSES = {
    (2, 2, 1, 1): "w15",
    (2, 2, 2): "c222_split5",
    (4, 1, 1): "c4_split30",
    (4, 2): "c42_split30",
}


def verify_case(cls: Sequence[int]) -> CaseRecord:
    """Run one class's pipeline and compare with the expected verdict."""
    mu = normalize_cycle_type(cls, N)
    if mu not in NONTRIVIAL_CLASSES:
        raise ValueError(f"{mu} is not a nontrivial class of S6")
    if mu == T2:
        return _case_transpositions(mu)
    if mu == T3:
        return _case_three_cycles(mu)
    if mu == T321:
        return _case_321(mu)
    if mu in _FIXTURE_CLASSES:
        return _case_fixture_class(mu, _FIXTURE_CLASSES[mu])
    if mu == (3, 3):
        return _case_33(mu)
    if mu == (5, 1):
        return _case_51(mu)
    return _case_6(mu)


# ---------------------------------------------------------------------------
# assembling the C_2-principal classification


@dataclass
class TheoremVerdict:
    ok: bool
    rings: list[str]
    joins_computed: int
    candidate_rings: int
    complete: bool
    s36_a6_noncommutative: bool
    c36_commuting_h120_sets: list[list[int]]
    c36_commutes_only_with_class_sums: bool
    commuting_pairs: int
    candidate_sets: int
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "rings": self.rings,
            "joins_computed": self.joins_computed,
            "candidate_rings": self.candidate_rings,
            "complete": self.complete,
            "s36_a6_noncommutative": self.s36_a6_noncommutative,
            "c36_commuting_h120_sets": self.c36_commuting_h120_sets,
            "c36_commutes_only_with_class_sums": self.c36_commutes_only_with_class_sums,
            "candidate_sets": self.candidate_sets,
            "commuting_pairs": self.commuting_pairs,
            "failures": self.failures,
        }


def _is_admissible(R: SRing) -> bool:
    return is_commutative(R) and has_principal_set(R, conjugacy_class(N, T2))


def verify_c2_principal_theorem(records: Sequence[CaseRecord]) -> TheoremVerdict:
    """Join the surviving candidate rings until nothing new appears.

    A commutative S-ring S with C_2 principal contains the class sums and is
    the join of the closures of its principal split sets; dropping one
    largest piece per class leaves pieces of at most half the class, which
    are the censused candidates.  Sub-joins stay commutative with C_2
    principal, so closing the candidate rings under pairwise joins (keeping
    only such rings) reaches every S.
    """
    failures = [f"class {_key(r.cls)}: {r.verdict}" for r in records if not r.ok]
    if {r.cls for r in records} != set(NONTRIVIAL_CLASSES):
        failures.append("case records do not cover all ten classes")
    survivors = [c for r in records for c in r.survivors]
    # all conjugates of every surviving candidate's ring
    X: dict[bytes, SRing] = {}
    for c in survivors:
        for T in conjugates_of_sring(closure_with_center([c.members])):
            X.setdefault(T.labels.tobytes(), T)
    pool = [X[k] for k in sorted(X)]
    found: dict[bytes, SRing] = {ring_key(center(N)): center(N)}
    frontier = list(found.values())
    joins = 0
    while frontier:
        new = []
        for A in frontier:
            for B in pool:
                if B.refines(A) and A.refines(B):
                    continue
                J = join(A, B)
                joins += 1
                if not _is_admissible(J):
                    continue
                k = ring_key(J)
                if k not in found:
                    found[k] = J
                    new.append(J)
        frontier = new
    names = sorted(identify(R) or f"new ring of dimension {R.dimension}" for R in found.values())
    if sorted(names) != sorted(C2_PRINCIPAL_RINGS):
        failures.append(f"joins produced {names}")
    # each principal split set of the four rings must be a censused survivor
    keys: dict[CycleType, set] = {}
    for c in survivors:
        mu = symmetric_group(N).cycle_types[c.members.ranks[0]]
        keys.setdefault(mu, set()).add(search.canonical_form(c.members))
    complete = True
    for name in C2_PRINCIPAL_RINGS:
        R = ring(name)
        for mu in NONTRIVIAL_CLASSES:
            K = conjugacy_class(N, mu)
            pieces = [P for P in R.principal_sets if P.issubset(K)]
            if len(pieces) < 2:
                continue
            pieces.sort(key=len)
            for P in pieces[:-1]:
                if search.canonical_form(P) not in keys.get(mu, set()):
                    complete = False
                    failures.append(f"{name}: a {len(P)}-element piece of {_key(mu)} was not censused")
    s36 = ring("S36")
    a6 = ring("S(S6,A6)")
    s36_a6 = all(not is_commutative(join(T, a6)) for T in conjugates_of_sring(s36))
    if not s36_a6:
        failures.append("some conjugate of S36 joins the A6 ring commutatively")
    c36 = indicator(s36_construction().c36)
    hit: set[tuple[int, ...]] = set()
    only_classes = True
    G = symmetric_group(N)
    for T in conjugates_of_sring(ring("S(S6,H120)")):
        for P in T.principal_sets[1:]:
            if commutes(c36, indicator(P)):
                mu = G.cycle_types[P.ranks[0]]
                if P != conjugacy_class(N, mu):
                    only_classes = False
                hit.add(mu)
    c36_sets = sorted(list(m) for m in hit)
    if not only_classes:
        failures.append("C36 commutes with a proper split set of an H120 conjugate")
    # commutation graph over all conjugates of the surviving sets
    sets: dict[tuple[int, ...], ElementSet] = {}
    for c in survivors:
        for S in set_orbit(c.members):
            sets.setdefault(tuple(S.ranks), S)
    elems = [indicator(sets[k]) for k in sorted(sets)]
    pairs = sum(commutes(a, b) for a, b in itertools.combinations(elems, 2))
    return TheoremVerdict(
        not failures, names, joins, len(pool), complete, s36_a6, c36_sets, only_classes,
        int(pairs), len(elems), failures,
    )


# ---------------------------------------------------------------------------
# transposition class split: refinements of the four orbit rings

_PRIME = 2_147_483_629


def nullspace_mod(M: np.ndarray, p: int = _PRIME) -> list[np.ndarray]:
    """Basis of the right nullspace of an integer matrix over GF(p)."""
    M = np.asarray(M, dtype=np.int64) % p
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if not len(nz):
            continue
        k = r + int(nz[0])
        M[[r, k]] = M[[k, r]]
        M[r] = (M[r] * pow(int(M[r, c]), p - 2, p)) % p
        for o in np.flatnonzero(M[:, c]):
            if o != r:
                M[o] = (M[o] - M[o, c] * M[r]) % p
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(cols) if c not in pivots):
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-int(M[i, f])) % p
        basis.append(v)
    return basis


def commutant_atoms(R: SRing, k: int) -> tuple[list[np.ndarray], int]:
    """Split O_k into classes on which every element commuting with R is constant.

    Returns the atoms (as rank arrays) and the nullspace dimension of the
    system e*O_j = O_j*e for e supported on O_k.
    """
    G = R.group
    O = R.principal_sets[k].array()
    blocks = []
    for B in R.principal_sets:
        b = B.array()
        M = np.zeros((G.order, len(O)), dtype=np.int64)
        for col, a in enumerate(O):
            np.add.at(M[:, col], G.mul[a, b], 1)
            np.add.at(M[:, col], G.mul[b, a], -1)
        blocks.append(M[np.any(M != 0, axis=1)])
    M = np.unique(np.vstack(blocks), axis=0)
    basis = nullspace_mod(M) if len(M) else [np.eye(len(O), dtype=np.int64)[i] for i in range(len(O))]
    signature: dict[tuple[int, ...], list[int]] = {}
    for col in range(len(O)):
        signature.setdefault(tuple(int(v[col]) for v in basis), []).append(int(O[col]))
    atoms = [np.array(a) for a in sorted(signature.values())]
    return atoms, len(basis)


def refinement_candidates(R: SRing, k: int, atoms: list[np.ndarray], fixed: Sequence[int]) -> list[ElementSet]:
    """Unions Y of atoms of O_k (up to half of them, atom 0 included) with
    (Y O_j)|_T and (O_j Y)|_T constant for every block O_j and fixed block T.
    """
    G = R.group
    d = len(atoms)
    sizes = {len(a) for a in atoms}
    if len(sizes) != 1:
        raise ClassificationError(f"atoms of block {k} have unequal sizes {sorted(sizes)}")
    rows = []  # (coefficient matrix, per-atom total, |T|)
    for B in R.principal_sets:
        b = B.array()
        for t in fixed:
            T = R.principal_sets[t]
            tmask = T.mask()
            pos = np.full(G.order, -1, dtype=np.int64)
            pos[T.array()] = np.arange(len(T))
            for left in (True, False):
                M = np.zeros((len(T), d), dtype=np.int64)
                for a, atom in enumerate(atoms):
                    prod = (G.mul[atom[:, None], b[None, :]] if left else G.mul[b[None, :], atom[:, None]]).ravel()
                    hit = prod[tmask[prod]]
                    np.add.at(M[:, a], pos[hit], 1)
                per_atom = M.sum(axis=0)
                if not per_atom.any():
                    continue
                if np.any(per_atom != per_atom[0]):
                    raise ClassificationError("atoms contribute unequally to a fixed block")
                rows.append((np.unique(M, axis=0), int(per_atom[0]), len(T)))
    found = []
    for size in range(1, d // 2 + 1):
        system = search.BoolSystem(N, (), [tuple(int(x) for x in a) for a in atoms], size=size, name=f"block {k}")
        system.add_cardinality(size)
        feasible = True
        for M, per, t in rows:
            if (per * size) % t:
                feasible = False
                break
            for row in M:
                system.add_linear(row, per * size // t)
        if not feasible:
            continue
        for x in search.solve(system, (0, 1)):
            found.append(system.decode(x))
    return found


@dataclass
class SplitRecord:
    label: str
    ring: str
    closure_matches: bool
    dimension: int
    sizes: list[int]
    splittable_blocks: int
    max_nullity: int
    candidates: int
    commutative_refinements: list[list[str]]

    @property
    def ok(self) -> bool:
        return self.closure_matches and not self.commutative_refinements

    def to_json(self) -> dict:
        return {
            "partition": self.label,
            "ring": self.ring,
            "closure_matches": self.closure_matches,
            "dimension": self.dimension,
            "sizes": self.sizes,
            "splittable_blocks": self.splittable_blocks,
            "max_nullity": self.max_nullity,
            "candidates": self.candidates,
            "commutative_refinements": self.commutative_refinements,
            "ok": self.ok,
        }


def verify_split_case(label: str) -> SplitRecord:
    name = SPLIT_CASES[label]
    R = ring(name)
    generated = closure_with_center(fixtures.c2_partition(label))
    nullity = {}
    atoms = {}
    for k, O in enumerate(R.principal_sets):
        if len(O) == 1:
            nullity[k] = 1
            continue
        atoms[k], nullity[k] = commutant_atoms(R, k)
    fixed = [k for k, v in nullity.items() if v == 1]
    witnesses = []
    count = 0
    for k in sorted(atoms):
        if nullity[k] == 1:
            continue
        for Y in refinement_candidates(R, k, atoms[k], fixed):
            count += 1
            S = closure([R, Y])
            if is_commutative(S):
                witnesses.append(Y.to_strings())
    return SplitRecord(
        label, name, generated == R, R.dimension, R.size_set(),
        sum(1 for v in nullity.values() if v > 1), max(nullity.values()), count, witnesses,
    )


def verify_split_cases(jobs: int = 1) -> list[SplitRecord]:
    return list(_map(verify_split_case, list(SPLIT_CASES), jobs))


# ---------------------------------------------------------------------------
# the dimension bound and the report


@dataclass
class CorollaryRecord:
    s_s6: int
    max_dimension: int
    attained: bool
    center_in_all: bool

    @property
    def ok(self) -> bool:
        return self.s_s6 == S_S6 and self.max_dimension == max(DIMENSIONS) and not self.attained and self.center_in_all

    def to_json(self) -> dict:
        return {
            "s_s6": self.s_s6,
            "max_dimension": self.max_dimension,
            "attained": self.attained,
            "center_in_all": self.center_in_all,
            "ok": self.ok,
        }


def character_degree_sum(n: int = N) -> int:
    """Sum of the irreducible character degrees of S_n.

    Every representation of S_n is real, so the sum equals the number of
    solutions of g^2 = 1 (Frobenius-Schur).
    """
    G = symmetric_group(n)
    return int(np.sum(G.mul[np.arange(G.order), np.arange(G.order)] == G.identity))


def verify_corollary_76(rings: Sequence[SRing] | None = None) -> CorollaryRecord:
    rings = build_eight() if rings is None else rings
    Z = center(N)
    top = max(R.dimension for R in rings)
    return CorollaryRecord(
        character_degree_sum(), top, any(R.dimension == S_S6 for R in rings), all(R.refines(Z) for R in rings)
    )


@dataclass
class ClassificationReport:
    rings: list[RingRecord]
    cases: list[CaseRecord]
    theorem: TheoremVerdict
    splits: list[SplitRecord]
    corollary: CorollaryRecord
    timestamp: str = ""

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(r.dimension for r in self.rings)

    @property
    def ok(self) -> bool:
        return (
            len(self.rings) == 8
            and self.dimensions == DIMENSIONS
            and all(r.commutative for r in self.rings)
            and [r.name for r in self.rings if r.c2_principal] == list(C2_PRINCIPAL_RINGS)
            and all(c.ok for c in self.cases)
            and self.theorem.ok
            and all(s.ok for s in self.splits)
            and self.corollary.ok
        )

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "dimensions": list(self.dimensions),
            "rings": [r.to_json() for r in self.rings],
            "s36": s36_construction().to_json(),
            "cases": [c.to_json() for c in self.cases],
            "theorem": self.theorem.to_json(),
            "splits": [s.to_json() for s in self.splits],
            "corollary": self.corollary.to_json(),
            "timestamp": self.timestamp,
        }

    def summary(self) -> str:
        mark = {True: "ok  ", False: "FAIL"}
        lines = [f"dimensions {self.dimensions} (expected {DIMENSIONS})"]
        for r in self.rings:
            lines.append(
                f"  {r.name:<14} dim {r.dimension:>2}  commutative={r.commutative}  C2 principal={r.c2_principal}"
            )
        for c in self.cases:
            lines.append(f"{mark[c.ok]} class {_key(c.cls):<14} {c.verdict}")
        t = self.theorem
        lines.append(f"{mark[t.ok]} C2-principal rings: {', '.join(t.rings)} ({t.joins_computed} joins)")
        for s in self.splits:
            lines.append(
                f"{mark[s.ok]} split {s.label:<7} -> {s.ring}: dim {s.dimension}, "
                f"{s.candidates} refinement candidates, {len(s.commutative_refinements)} commutative"
            )
        c = self.corollary
        lines.append(f"{mark[c.ok]} max dimension {c.max_dimension} < s(S6) = {c.s_s6}")
        lines.append("ALL VERDICTS MATCH" if self.ok else "VERDICT MISMATCH")
        return "\n".join(lines)


def _map(fn, items, jobs: int):
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def _task(item):
    kind, arg = item
    if kind == "rings":
        return ring_records()
    if kind == "case":
        return verify_case(arg)
    return verify_split_case(arg)


# longest jobs first so the pool stays busy
_TASK_ORDER = (
    [("case", T3), ("case", (6,)), ("split", "S3wrS2"), ("case", (3, 3)), ("case", (5, 1))]
    + [("split", s) for s in ("S2xS4", "S2wrS3", "S5")]
    + [("case", mu) for mu in NONTRIVIAL_CLASSES if mu not in (T3, (6,), (3, 3), (5, 1))]
    + [("rings", None)]
)


def verify_all(jobs: int | None = None) -> ClassificationReport:
    """Run every check; the result does not depend on ``jobs``."""
    if jobs is None:
        jobs = os.cpu_count() or 1
    results = dict(zip(_TASK_ORDER, _map(_task, _TASK_ORDER, jobs)))
    rings = results[("rings", None)]
    cases = [results[("case", mu)] for mu in NONTRIVIAL_CLASSES]
    splits = [results[("split", s)] for s in SPLIT_CASES]
    theorem = verify_c2_principal_theorem(cases)
    corollary = verify_corollary_76()
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    return ClassificationReport(rings, cases, theorem, splits, corollary, stamp)
