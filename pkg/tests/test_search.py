from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from schurring import search
from schurring.perm import set_orbit, symmetric_group
from schurring.search import (
    Kind,
    ProductCondition,
    SquareConstant,
    SquareTwoValued,
    SystemError_,
    brute_force,
    build_system,
    classify_solutions,
    recheck,
    solve,
)

# -- build_system ------------------------------------------------------------


def test_symmetric_five_one_system_shape():
    s = build_system((5, 1), 24, True)
    assert s.var_count == 72
    (card,) = [c for c in s.constraints if c.kind is Kind.CARDINALITY]
    assert card.target == 12


def test_symmetric_six_cycle_system_shape():
    s = build_system((6,), 20, True)
    assert s.var_count == 60
    (card,) = [c for c in s.constraints if c.kind is Kind.CARDINALITY]
    assert card.target == 10


def test_asymmetric_five_one_system_shape():
    s = build_system((5, 1), 24, False)
    assert s.var_count == 144
    assert s.count(Kind.PAIR_EXCLUSION) == 72


def test_odd_symmetric_size_rejected():
    with pytest.raises(SystemError_):
        build_system((5, 1), 25, True)


def test_non_integral_multiplier_rejected():
    with pytest.raises(SystemError_):
        build_system((5, 1), 2, True, [ProductCondition((2,), (3, 2, 1))])


def test_constraints_reference_declared_variables():
    s, _ = search.build_named("C51-case3-symmetric")
    for c in s.constraints:
        assert all(0 <= v < s.var_count for v in search._constraint_vars(c))


def test_encode_decode_round_trip(case):
    res = case("C51-case3-symmetric")
    for x in res.solutions:
        C = res.system.decode(x)
        assert np.array_equal(res.system.encode(C), x)


def test_system_dump_is_json():
    s, _ = search.build_named("C6-size20-symmetric")
    payload = json.loads(search.dump_solutions(s, search.solve(s, (0, 0))))
    assert payload["system"]["var_count"] == 60
    assert len(payload["solutions"]) == 5


# -- named censuses ----------------------------------------------------------


def test_five_one_size_24_asymmetric_has_no_solutions(case):
    assert case("C51-case1-asymmetric").solutions == []


def test_five_one_size_48_symmetric_has_30_candidates(case):
    res = case("C51-case2-symmetric")
    assert len(res.solutions) == 30
    assert [(c.count, c.orbit_size) for c in res.classes] == [(10, 15), (20, 30)]


def test_six_cycle_size_40_asymmetric_has_no_solutions(case):
    assert case("C6-size40-asymmetric").solutions == []


def test_five_one_size_72_classes(case):
    res = case("C51-case3-symmetric")
    assert len(res.solutions) == 11
    assert sorted(c.count for c in res.classes) == [1, 10]


def test_three_three_survivors(case):
    res = case("C33-symmetric")
    assert len(res.solutions) == 12
    assert len(res.classes) == 3


def test_six_cycle_size_20_is_one_class_of_five(case):
    res = case("C6-size20-symmetric")
    assert len(res.solutions) == 5
    assert len(res.classes) == 1 and res.classes[0].orbit_size == 6


def test_six_cycle_size_60_symmetric(case):
    # six solutions in two conjugacy classes
    res = case("C6-size60-symmetric")
    assert len(res.solutions) == 6
    assert len(res.classes) == 2


@pytest.mark.parametrize("case_id", sorted(search.NAMED_CASES))
def test_every_solution_rechecks(case, case_id):
    res = case(case_id)
    for C in res.sets():
        assert recheck(res.system, C) == []


def test_recheck_catches_a_wrong_set():
    s, _ = search.build_named("C6-size20-symmetric")
    K = search.class_set(6, (6,))
    wrong = search.ElementSet(6, K.ranks[:20])
    assert recheck(s, wrong)


def test_skipping_a_condition_only_adds_solutions(case):
    full = case("C51-case3-symmetric")
    loose = search.run_case("C51-case3-symmetric", skip=["(C^2)_(3)"])
    got = {tuple(x) for x in loose.solutions}
    assert {tuple(x) for x in full.solutions} <= got
    assert "(C^2)_(3)" not in [c.label for c in loose.system.conditions]


# -- anchoring and parallel determinism -------------------------------------


def test_anchor_soundness_on_six_cycle_system():
    s, anchor = search.build_named("C6-size20-symmetric")
    anchored = [s.decode(x) for x in solve(s, anchor)]
    free = {s.decode(x) for x in solve(s, None)}
    orbits = {D for C in anchored for D in set_orbit(C)}
    # the system is conjugation-invariant, so the orbits are exactly the solutions
    assert orbits == free and len(free) == 6


def test_parallel_solve_is_identical():
    s, anchor = search.build_named("C51-case3-symmetric")
    one = solve(s, anchor, jobs=1)
    two = solve(s, anchor, jobs=2)
    assert [x.tolist() for x in one] == [x.tolist() for x in two]


# -- solver versus the 2^k oracle --------------------------------------------

SMALL = [
    ((3, 1, 1), True),
    ((3, 1, 1), False),
    ((5,), True),
    ((2, 2, 1), True),
    ((4, 1), True),
    ((3, 2), True),
]


@st.composite
def small_systems(draw):
    cls, symmetric = draw(st.sampled_from(SMALL))
    G = symmetric_group(5)
    K = len(G.class_ranks(cls))
    involution = all(len(p) == 1 for p in search.inverse_pairs(5, cls))
    step = 1 if involution or not symmetric else 2
    size = draw(st.integers(1, K // step)) * step
    conds = []
    for _ in range(draw(st.integers(0, 2))):
        by = draw(st.sampled_from(G.class_types[1:]))
        tgt = draw(st.sampled_from(G.class_types[1:]))
        conds.append(ProductCondition(by, tgt, label=f"{by}->{tgt}"))
    if draw(st.booleans()):
        conds.append(SquareConstant(draw(st.sampled_from(G.class_types[1:])), label="sq"))
    if draw(st.booleans()):
        conds.append(SquareTwoValued(cls, label="two"))
    try:
        system = build_system(cls, size, symmetric, conds, n=5)
    except SystemError_:
        assume(False)
    assume(system.var_count <= 20)
    anchor = draw(st.sampled_from([None, (0, 0), (0, 1)]))
    return system, anchor


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(small_systems())
def test_solver_matches_brute_force(data):
    system, anchor = data
    got = [x.tolist() for x in solve(system, anchor)]
    want = [x.tolist() for x in brute_force(system, anchor)]
    assert got == want
    for x in got:
        assert recheck(system, system.decode(x)) == []


# -- classification of solutions --------------------------------------------


def test_classify_counts_and_orbits():
    K = search.class_set(6, (2, 2, 2))
    C = search.ElementSet(6, K.ranks[:5])
    orbit = set_orbit(C)
    classes = classify_solutions(orbit[:4] + [K])
    assert [(c.count, c.orbit_size) for c in classes] == [(1, 1), (4, len(orbit))]


def test_canonical_form_is_conjugation_invariant():
    C = search.class_set(6, (3, 3))
    X = search.ElementSet(6, C.ranks[:7])
    assert search.canonical_form(X) == search.canonical_form(X.conjugate(5))


# -- the three-cycle sign system ---------------------------------------------


@pytest.fixture(scope="module")
def signs():
    return search.sign_system_c3()


def test_sign_system_scans_every_assignment(signs):
    assert signs.scanned == 2**18


def test_each_sum_has_nine_terms(signs):
    assert set(signs.terms_per_triple) == {9}
    assert signs.matches_convolution


def test_sign_system_unsatisfiable_after_constancy_rows(signs):
    assert not signs.satisfiable
    # the equalities on their own leave a handful of assignments
    assert len(signs.verbatim) == 30
    for a in signs.verbatim:
        C = search.sign_assignment_set(a)
        assert search.implied_failure(C) is not None
