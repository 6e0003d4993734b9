"""The ten acceptance criteria, one test each.

Each test records a one-line verdict that the terminal summary prints as
PASS/FAIL, then asserts it.  The heavy data comes from the session-wide
classification report (see conftest.py).
"""

from __future__ import annotations

import itertools

import numpy as np

from conftest import ACCEPTANCE
from test_sring import all_srings, per_product_closure, s4_srings
from schurring import classification as cl
from schurring import covers, fixtures, search
from schurring.algebra import AlgebraElement, coefficient_fibers, indicator, multiply
from schurring.perm import ElementSet, Permutation, conjugacy_class, cycle_type, stabilizer
from schurring.sring import closure, closure_with_center, is_commutative, verify_sring


def record(k: int, parts: dict[str, bool], detail: str = "") -> None:
    ok = all(parts.values())
    failed = [name for name, v in parts.items() if not v]
    text = detail if ok else f"failed: {', '.join(failed)}" + (f" ({detail})" if detail else "")
    ACCEPTANCE[k] = (ok, text)
    print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {text}")
    assert ok, text


def case_record(report, mu):
    return next(c for c in report.cases if c.cls == mu)


def test_criterion_01_dimensions():
    dims = tuple(R.dimension for R in cl.build_eight())
    record(1, {"dimension tuple": dims == (11, 19, 12, 12, 34, 26, 34, 19)}, f"dimensions {dims}")


def test_criterion_02_no_dimension_76(report):
    c = report.corollary
    parts = {
        "s(S6) computed as 76": c.s_s6 == 76,
        "max surviving dimension 34": c.max_dimension == 34,
        "76 not attained": not c.attained,
        "centre in every ring": c.center_in_all,
    }
    record(2, parts, f"max dimension {c.max_dimension}, s(S6) = {c.s_s6}")


def test_criterion_03_triangle_covers():
    hemi = covers.TriangleSet(tuple(sorted({tuple(sorted(t)) for t in fixtures.hemi_triangles()})))
    orbits = {r: covers.enumerate_triangle_covers(r) for r in (5, 10, 15, 20)}
    parts = {
        "r=5 empty": orbits[5] == [],
        "r=15 empty": orbits[15] == [],
        "r=10 one orbit": len(orbits[10]) == 1,
        "r=10 orbit holds the hemi cover": bool(orbits[10]) and hemi in orbits[10][0].members,
        "r=20 one cover": len(orbits[20]) == 1 and orbits[20][0].orbit_size == 1,
    }
    record(3, parts, f"orbit sizes {{r: sizes}} = { {r: [o.orbit_size for o in v] for r, v in orbits.items()} }")


def test_criterion_04_w15():
    classes = covers.enumerate_15element_edgepair_covers()
    W = fixtures.element_set("w15")
    parts = {
        "one class": len(classes) == 1,
        "six conjugates": len(classes) == 1 and len(classes[0]) == 6 and W in classes[0],
        "stabilizer order 120": len(stabilizer(W)) == 120,
        "closure is the H120 ring": closure_with_center([W]) == cl.ring("S(S6,H120)"),
    }
    record(4, parts, f"{len(classes)} class of {len(classes[0]) if classes else 0}")


def test_criterion_05_three_cycles(report):
    rec = case_record(report, (3, 1, 1, 1))
    sign = rec.checks["sign_system"]
    sign_candidates = [c for c in rec.candidates if c.origin == "sign system"]
    parts = {
        "symmetric hemi closure non-commutative": rec.checks["hemi_symmetric_closure_noncommutative"],
        "two o=5 classes": rec.checks["o5_classes"] == 2,
        "o=5 closures non-commutative": rec.checks["o5_closures_noncommutative"],
        "2^18 sign assignments scanned": sign["scanned"] == 2**18,
        "sign system unsatisfiable": sign["solutions"] == 0,
        "verbatim survivors close non-commutatively": all(not c.commutative for c in sign_candidates),
    }
    detail = (
        f"{sign['verbatim_solutions']} assignments satisfy the sign equalities alone, "
        f"{sign['solutions']} once the (3,2,1) constancy rows are added"
    )
    record(5, parts, detail)


def test_criterion_06_constraint_censuses(report, case):
    c33 = case("C33-symmetric")
    c33_rings = [cl.identify(closure_with_center([k.representative])) for k in c33.classes]
    case2 = case("C51-case2-symmetric")
    case2_sets = case2.sets()
    K3 = conjugacy_class(6, (3,))
    constant = [
        C for C in case2_sets
        if len(coefficient_fibers(multiply(indicator(C), indicator(C)), K3)) == 1
    ]
    ten = [k for k in case2.classes if k.count == 10]
    ten_ring = closure_with_center([ten[0].representative]) if ten else None
    case3 = case("C51-case3-symmetric")
    parts = {
        "C(3,3): 12 survivors": len(c33.solutions) == 12,
        "C(3,3): 3 classes": len(c33.classes) == 3,
        "C(3,3): 2 classes close to H120": c33_rings.count("S(S6,H120)") == 2,
        "C(5,1) size 48: 30 candidates": len(case2_sets) == 30,
        "C(5,1) size 48: 10 with constant C3 restriction": len(constant) == 10,
        "C(5,1) size 48: a single conjugacy class of 10": len(ten) == 1,
        "that class closes to dim 34 without C2 principal": ten_ring is not None
        and ten_ring.dimension == 34 and is_commutative(ten_ring)
        and not any(len(P) == 15 and P == conjugacy_class(6, (2,)) for P in ten_ring.principal_sets),
        "C(5,1) size 72: 11 survivors": len(case3.solutions) == 11,
        "C(5,1) size 72: classes 1 and 10": sorted(k.count for k in case3.classes) == [1, 10],
        "C(5,1) size 24 asymmetric: none": case("C51-case1-asymmetric").solutions == [],
        "C(6) size 40 asymmetric: none": case("C6-size40-asymmetric").solutions == [],
        "C(6) size 60 asymmetric: none": case("C6-size60-asymmetric").solutions == [],
    }
    detail = (
        f"{len(constant)} of 30 size-48 candidates have constant (C^2) on the 3-cycles; "
        f"classes {[(k.count, k.orbit_size) for k in case2.classes]}"
    )
    record(6, parts, detail)


def test_criterion_07_s36():
    s = cl.s36_construction()
    K2 = conjugacy_class(6, (2,))
    alt_split = not any(P == K2 for P in s.alternative.principal_sets)
    parts = {
        "dimension 12": s.ring.dimension == 12,
        "commutative": is_commutative(s.ring),
        "C2 principal": any(P == K2 for P in s.ring.principal_sets),
        "alternative dimension 26": s.alternative.dimension == 26,
        "alternative commutative": is_commutative(s.alternative),
        "C2 splits in the alternative": alt_split,
    }
    record(7, parts, f"dims {s.ring.dimension} / {s.alternative.dimension}")


def test_criterion_08_split_censuses(report):
    by = {s.label: s for s in report.splits}
    parts = {
        "S2xS4: 34 sets": by["S2xS4"].dimension == 34,
        "S2xS4: sizes": by["S2xS4"].sizes == [1, 3, 6, 8, 12, 16, 24, 48],
        "S3wrS2: 26 sets": by["S3wrS2"].dimension == 26,
        "S3wrS2: sizes": by["S3wrS2"].sizes == [1, 4, 6, 9, 12, 18, 36, 72],
        "S5: 19 sets": by["S5"].dimension == 19,
        "S5: sizes": by["S5"].sizes == [1, 5, 10, 15, 20, 24, 30, 40, 60, 120],
        "partitions close to the orbit rings": all(s.closure_matches for s in report.splits),
        "no new commutative ring": all(not s.commutative_refinements for s in report.splits),
    }
    detail = ", ".join(
        f"{s.label}: {s.splittable_blocks} splittable sets, {s.candidates} candidates" for s in report.splits
    )
    record(8, parts, detail)


def test_criterion_09_property_suites():
    rng = np.random.default_rng(2024)
    parts = {}

    # closure idempotence and minimality against every S-ring of S3
    rings = all_srings(3)
    ok = True
    for bits in range(1 << 6):
        X = indicator(ElementSet.from_mask(3, np.array([bits >> r & 1 for r in range(6)], dtype=bool)))
        S = closure([X], degree=3)
        ok &= S in rings and closure(S.basis(), degree=3) == S
        ok &= all(R.refines(S) for R in rings if R.contains(X))
    parts["S3 exhaustive minimality and idempotence"] = ok

    # S4: minimality against every S-ring of S4; batch refinement = per-product loop
    s4 = s4_srings()
    ok = len(s4) > 0 and all(verify_sring(R.principal_sets) for R in s4)
    for _ in range(20):
        a = AlgebraElement(4, rng.integers(-1, 2, 24) * (rng.random(24) < 0.3))
        S = closure([a], degree=4)
        ok &= S in s4 and S.contains(a) and closure(S.basis(), degree=4) == S
        ok &= all(R.refines(S) for R in s4 if R.contains(a))
        ok &= S == per_product_closure(4, [a])
    parts["S4 exhaustive minimality and idempotence"] = ok

    ok = True
    for _ in range(100):
        x, y, z = (AlgebraElement(5, rng.integers(-3, 4, 120) * (rng.random(120) < 0.05)) for _ in range(3))
        ok &= multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    parts["associativity"] = ok

    # products of principal sets are constant on every principal set
    ok = True
    H = cl.ring("S(S6,H120)")
    for i, j in itertools.combinations(range(1, H.dimension), 2):
        prod = multiply(indicator(H.principal_sets[i]), indicator(H.principal_sets[j]))
        ok &= all(len(coefficient_fibers(prod, P)) == 1 for P in H.principal_sets)
    parts["Schur-Wielandt fiber laws"] = ok

    ok = True
    for _ in range(500):
        g, h = (Permutation(rng.permutation(6)) for _ in range(2))
        ok &= cycle_type(h * g * h.inverse()) == cycle_type(g)
    parts["cycle type conjugation invariance"] = ok
    record(9, parts, f"S3 exhaustive, {len(s4)} S4 rings, 100 triples, H120 fibers, 500 conjugations")


def test_criterion_10_oracle_equivalence(report, case):
    censuses = [c for r in report.cases for c in r.censuses]
    discrepancies = sum(len(c.failures) for c in censuses)
    rechecked = sum(c.rechecked for c in censuses)
    total = sum(c.solutions for c in censuses)
    named_bad = 0
    for case_id in search.NAMED_CASES:
        res = case(case_id)
        named_bad += sum(1 for C in res.sets() if search.recheck(res.system, C))
    sign = case_record(report, (3, 1, 1, 1)).checks["sign_system"]
    parts = {
        "every census solution rechecked": rechecked == total,
        "zero census discrepancies": discrepancies == 0,
        "zero named-case discrepancies": named_bad == 0,
        "sign terms match convolution": sign["matches_convolution"],
    }
    record(10, parts, f"{total} solutions over {len(censuses)} censuses re-validated by convolution")
