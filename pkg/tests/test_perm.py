from __future__ import annotations

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurring import fixtures
from schurring.perm import (
    DegreeError,
    ElementSet,
    Permutation,
    compose,
    conjugacy_class,
    conjugation_orbits,
    cycle_type,
    format_cycles,
    generate_subgroup,
    inverse,
    parse_cycles,
    symmetric_group,
)

P = parse_cycles


def perms(n: int = 6):
    return st.permutations(range(n)).map(Permutation)


# -- compose ---------------------------------------------------------------


def test_transposition_squares_to_identity():
    assert compose(P("(1,2)"), P("(1,2)")).is_identity()


def test_compose_right_to_left_against_s3_oracle():
    p, q = P("(1,2,3)", 3), P("(1,2)", 3)
    # oracle: apply q, then p, pointwise
    expected = Permutation.from_one_based([p(q(i)) for i in (1, 2, 3)])
    got = compose(p, q)
    assert got == expected
    assert cycle_type(got) == (2, 1)
    assert got == P("(1,3)", 3)


def test_identity_is_neutral():
    g = P("(1,4,6,2,5,3)")
    assert compose(Permutation.identity(6), g) == g
    assert compose(g, Permutation.identity(6)) == g


def test_degree_mismatch_raises():
    with pytest.raises(DegreeError):
        compose(P("(1,2)", 3), P("(1,2)", 4))


def test_degree_cap():
    with pytest.raises(DegreeError):
        Permutation(range(8))


def test_convention_checked_on_three_cycle_identity():
    # (i,j,k) times the sum of its three transpositions permutes those transpositions
    c = P("(1,2,3)")
    ts = {P("(1,2)"), P("(2,3)"), P("(1,3)")}
    assert all(cycle_type(compose(c, t)) == (2, 1, 1, 1, 1) for t in ts)
    assert {compose(c, t) for t in ts} == ts


# -- cycle_type ------------------------------------------------------------


@pytest.mark.parametrize(
    "text, expected",
    [("(1,2)(3,4)", (2, 2, 1, 1)), ("()", (1,) * 6), ("(1,4,6,2,5,3)", (6,))],
)
def test_cycle_type_examples(text, expected):
    assert cycle_type(P(text)) == expected


@settings(max_examples=200, deadline=None)
@given(perms(), perms())
def test_cycle_type_is_a_class_function(g, h):
    assert cycle_type(h * g * h.inverse()) == cycle_type(g)


@settings(max_examples=100, deadline=None)
@given(perms())
def test_inverse_law(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


@settings(max_examples=100, deadline=None)
@given(perms(6))
def test_print_parse_round_trip(p):
    assert parse_cycles(format_cycles(p)) == p


def test_parser_is_whitespace_insensitive():
    assert P(" ( 1 , 4 ) ( 3,5 ) ") == P("(1,4)(3,5)")
    assert format_cycles(P("(3,5)(4,1)")) == "(1,4)(3,5)"
    assert format_cycles(Permutation.identity(6)) == "()"


@pytest.mark.parametrize("bad", ["(1,2", "1,2)", "(1,7)", "(1,1)", "(1,2)(2,3)", ""])
def test_parser_rejects_malformed(bad):
    with pytest.raises(ValueError):
        P(bad)


# -- conjugacy classes and subgroups ----------------------------------------


@pytest.mark.parametrize("mu, size", [((2,), 15), ((2, 2, 1, 1), 45), ((4, 1, 1), 90)])
def test_class_sizes(mu, size):
    assert len(conjugacy_class(6, mu)) == size


def test_class_sizes_sum_to_group_order():
    G = symmetric_group(6)
    assert sum(len(conjugacy_class(6, mu)) for mu in G.class_types) == 720


def test_h120_and_h36_orders():
    h120 = generate_subgroup([P("(1,4)(3,5)"), P("(1,4,6,2,5,3)")])
    h36 = generate_subgroup([P("(1,6)(2,3,4,5)"), P("(1,2,5,4)(3,6)")])
    assert len(h120) == 120
    assert len(h36) == 36
    assert h120 == fixtures.subgroup("gens_h120")
    assert h36 == fixtures.subgroup("gens_h36")


def test_empty_generators_give_identity():
    H = generate_subgroup([], 6)
    assert len(H) == 1 and Permutation.identity(6) in H


@settings(max_examples=40, deadline=None)
@given(st.lists(perms(5), max_size=3))
def test_lagrange(gens):
    H = generate_subgroup(gens, 5)
    assert math.factorial(5) % len(H) == 0


def _check_orbit_partition(n, H, orbits):
    G = symmetric_group(n)
    seen = set()
    for O in orbits:
        assert seen.isdisjoint(O.ranks)
        seen.update(O.ranks)
        for h in H.ranks:
            assert O.conjugate(h) == O
    assert len(seen) == G.order
    assert orbits[0] == ElementSet(n, [G.identity])


@pytest.mark.parametrize("name, count", [("full", 11), ("gens_h120", 19), ("trivial", 720)])
def test_conjugation_orbit_counts(name, count):
    G = symmetric_group(6)
    if name == "full":
        H = ElementSet(6, range(720))
    elif name == "trivial":
        H = ElementSet(6, [G.identity])
    else:
        H = fixtures.subgroup(name)
    orbits = conjugation_orbits(6, H)
    assert len(orbits) == count
    _check_orbit_partition(6, H, orbits)


def test_conjugation_orbits_reject_non_subgroup():
    with pytest.raises(ValueError):
        conjugation_orbits(6, ElementSet.parse(["()", "(1,2,3)"]))


@settings(max_examples=25, deadline=None)
@given(st.lists(perms(4), min_size=1, max_size=2), st.lists(perms(4), max_size=2))
def test_orbit_refinement_monotone(gens_h, extra):
    H = generate_subgroup(gens_h, 4)
    K = generate_subgroup(list(gens_h) + list(extra), 4)
    fine = conjugation_orbits(4, H)
    for O in conjugation_orbits(4, K):
        parts = [F for F in fine if not F.isdisjoint(O)]
        assert all(F.issubset(O) for F in parts)
        assert sum(len(F) for F in parts) == len(O)


def test_element_set_order_is_canonical():
    a = ElementSet.parse(["(1,2)", "()", "(1,2,3)"])
    b = ElementSet.parse(["(1,2,3)", "(1,2)", "()"])
    assert a == b and a.ranks == tuple(sorted(a.ranks))
    assert [str(p) for p in a] == a.to_strings()


def test_symmetric_group_tables_agree_with_compose():
    G = symmetric_group(4)
    for x, y in itertools.product(range(G.order), repeat=2):
        assert G.elements[G.mul[x, y]] == G.elements[x] * G.elements[y]
