from __future__ import annotations

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurring import fixtures
from schurring.algebra import (
    AlgebraElement,
    class_sum,
    coefficient_fibers,
    commutes,
    conjugate_element,
    indicator,
    inverse_set,
    is_scalar_multiple,
    multiply,
    parse_element,
    restrict,
    to_text,
)
from schurring.perm import ElementSet, conjugacy_class, parse_cycles, set_orbit, symmetric_group

K2 = conjugacy_class(6, (2,))
ID = ElementSet.parse(["()"])


def naive_product(a: AlgebraElement, b: AlgebraElement) -> Counter:
    """Convolution straight from the definition, on Permutation objects."""
    G = a.group
    out: Counter = Counter()
    for x in np.flatnonzero(a.coeffs):
        for y in np.flatnonzero(b.coeffs):
            g = G.elements[x] * G.elements[y]
            out[g] += int(a.coeffs[x]) * int(b.coeffs[y])
    return Counter({g: c for g, c in out.items() if c})


def as_counter(a: AlgebraElement) -> Counter:
    G = a.group
    return Counter({G.elements[r]: int(a.coeffs[r]) for r in np.flatnonzero(a.coeffs)})


def sparse(n: int, max_terms: int = 6):
    order = symmetric_group(n).order
    terms = st.dictionaries(st.integers(0, order - 1), st.integers(-3, 3), max_size=max_terms)
    return terms.map(lambda d: AlgebraElement.from_dict(n, d))


# -- indicator -------------------------------------------------------------


def test_indicator_examples():
    assert indicator(ElementSet(6, [])).is_zero()
    e = indicator(K2)
    assert int(e.coeffs.sum()) == 15 and set(e.coeffs.tolist()) == {0, 1}
    assert multiply(e, indicator(ID)) == e


# -- multiply --------------------------------------------------------------


def test_identity_coefficient_of_transposition_square():
    sq = multiply(indicator(K2), indicator(K2))
    assert sq[parse_cycles("()")] == 15
    assert as_counter(sq) == naive_product(indicator(K2), indicator(K2))


def test_three_cycle_times_its_transpositions():
    c = indicator(ElementSet.parse(["(1,2,3)"]))
    got = restrict(multiply(c, indicator(K2)), (2, 1, 1, 1, 1))
    assert got == indicator(ElementSet.parse(["(1,2)", "(2,3)", "(1,3)"]))


def test_zero_annihilates():
    b = class_sum(6, (3,))
    assert multiply(AlgebraElement.zero(6), b).is_zero()
    assert multiply(b, AlgebraElement.zero(6)).is_zero()


def test_large_coefficients_stay_exact():
    big = AlgebraElement.from_dict(6, {parse_cycles("(1,2)"): 2**40})
    sq = multiply(big, big)
    assert sq[parse_cycles("()")] == 2**80


@settings(max_examples=100, deadline=None)
@given(sparse(4), sparse(4), sparse(4))
def test_associativity(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@settings(max_examples=60, deadline=None)
@given(sparse(4), sparse(4), sparse(4))
def test_distributivity(a, b, c):
    assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)


@settings(max_examples=60, deadline=None)
@given(sparse(5), sparse(5))
def test_multiply_matches_naive_oracle(a, b):
    assert as_counter(multiply(a, b)) == naive_product(a, b)


def test_class_sums_are_central():
    G = symmetric_group(5)
    sums = [class_sum(5, mu) for mu in G.class_types]
    for x in sums:
        for y in sums:
            assert multiply(x, y) == multiply(y, x)


# -- restrict --------------------------------------------------------------


def test_restrict_examples():
    e = indicator(K2)
    assert restrict(e, (2, 1, 1, 1, 1)) == e
    assert restrict(e, (6,)).is_zero()


def test_c36_square_is_constant_on_three_cycles():
    from schurring.classification import s36_construction

    C = s36_construction().c36
    sq = restrict(multiply(indicator(C), indicator(C)), (3, 1, 1, 1))
    assert is_scalar_multiple(sq, conjugacy_class(6, (3,))) is not None


@settings(max_examples=50, deadline=None)
@given(sparse(5, 12))
def test_restrictions_reconstruct(a):
    total = AlgebraElement.zero(5)
    for mu in symmetric_group(5).class_types:
        total = total + restrict(a, mu)
    assert total == a


# -- coefficient fibers ----------------------------------------------------


def test_fibers_read_off_coefficients():
    a = parse_element("2*(1,2) + 2*(3,4) + 5*(5,6)")
    fibers = dict(coefficient_fibers(a, K2))
    assert fibers[2] == ElementSet.parse(["(1,2)", "(3,4)"])
    assert fibers[5] == ElementSet.parse(["(5,6)"])
    assert len(fibers[0]) == 12


def test_fibers_of_class_sum():
    assert coefficient_fibers(indicator(K2), K2) == [(1, K2)]


def test_c222_fixture_products_on_both_restriction_targets():
    # the product with the (2,2) class is a multiple of K2 on the transpositions,
    # but takes two values on the (2,2,2) class itself
    C = fixtures.element_set("c222_split5")
    prod = multiply(indicator(C), class_sum(6, (2, 2)))
    on_t = coefficient_fibers(prod, K2)
    assert [(v, len(f)) for v, f in on_t] == [(1, 15)]
    on_222 = coefficient_fibers(prod, conjugacy_class(6, (2, 2, 2)))
    assert [(v, len(f)) for v, f in on_222] == [(0, 5), (3, 10)]
    assert dict(on_222)[0] == C


@settings(max_examples=60, deadline=None)
@given(sparse(4, 10), st.sets(st.integers(0, 23)))
def test_fiber_laws(a, members):
    C = ElementSet(4, members)
    fibers = coefficient_fibers(a, C)
    seen: set[int] = set()
    for _, f in fibers:
        assert seen.isdisjoint(f.ranks)
        seen.update(f.ranks)
    assert seen == set(C.ranks)
    expected = int(a.coeffs[list(C.ranks)].sum()) if len(C) else 0
    assert sum(v * len(f) for v, f in fibers) == expected


# -- inverse_set and commutes ----------------------------------------------


def test_inverse_set_examples():
    from schurring.classification import s36_construction

    assert inverse_set(K2) == K2
    assert inverse_set(ElementSet.parse(["(1,2,3)"])) == ElementSet.parse(["(1,3,2)"])
    C = s36_construction().c36
    assert inverse_set(C) == C


def test_commutes_examples():
    a = parse_element("(1,2,3) + 2*(1,4)")
    assert commutes(a, a)
    assert commutes(indicator(K2), class_sum(6, (3,)))


def test_w15_conjugates_do_not_commute():
    W = fixtures.element_set("w15")
    moved = [D for D in set_orbit(W) if D != W]
    assert len(moved) == 5
    for D in moved:
        assert not commutes(indicator(W), indicator(D))


def test_conjugate_element_matches_set_conjugation():
    W = fixtures.element_set("w15")
    g = parse_cycles("(1,2)")
    assert conjugate_element(indicator(W), g) == indicator(W.conjugate(g))


# -- text form -------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(sparse(6, 8))
def test_text_round_trip(a):
    assert parse_element(to_text(a)) == a


@pytest.mark.parametrize("bad", ["2*", "x*(1,2)", "2*(1,2)+*(3,4)"])
def test_text_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_element(bad)
