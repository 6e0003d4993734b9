from __future__ import annotations

import json

import pytest

from schurring import fixtures
from schurring.algebra import commutes, indicator
from schurring.perm import Permutation, conjugacy_class, set_orbit


def test_all_fixture_checks_pass():
    assert set(fixtures.load()) == set(fixtures.CHECKS)


def test_expected_fixtures_present():
    names = set(fixtures.names())
    for name in ("hemi_c3", "w15", "c4_split30", "c42_split30", "c33_split_a", "c33_split_b",
                 "c222_split5", "gens_h120", "gens_h36", "gens_s2xs4", "gens_s2wrs3",
                 "gens_s3wrs2", "gens_s5", "c2_partitions"):
        assert name in names


@pytest.mark.parametrize("name, order", [("gens_h120", 120), ("gens_h36", 36), ("gens_s2xs4", 48),
                                         ("gens_s2wrs3", 48), ("gens_s3wrs2", 72), ("gens_s5", 120)])
def test_group_orders(name, order):
    assert len(fixtures.subgroup(name)) == order


def test_four_cycle_sets():
    A = fixtures.element_set("c4_split30")
    B = fixtures.element_set("c42_split30")
    assert len(A) == 30 and A.inverse() == A
    projected = set()
    for p in B:
        four = next(c for c in p.cycles() if len(c) == 4)
        projected.add(Permutation.from_cycles([four], 6))
    assert projected == set(A)


def test_three_three_pair_commutation_census():
    # the listed pair does not commute; the second set commutes with exactly one
    # conjugate of the first, namely its complement in the class
    a = fixtures.element_set("c33_split_a")
    b = fixtures.element_set("c33_split_b")
    assert not commutes(indicator(a), indicator(b))
    K = conjugacy_class(6, (3, 3))
    partners = [d for d in set_orbit(a) if commutes(indicator(b), indicator(d))]
    assert partners == [K - b]


def test_c2_partitions_cover_the_class():
    for label in ("S2xS4", "S2wrS3", "S3wrS2", "S5"):
        blocks = fixtures.c2_partition(label)
        assert sum(len(b) for b in blocks) == 15


def test_checksum_mismatch_detected():
    table = json.loads(json.dumps(fixtures._table()))
    table["w15"]["members"] = table["w15"]["members"][:-1]
    assert fixtures._digest(table["w15"]) != table["w15"]["sha256"]


def test_unknown_fixture():
    with pytest.raises(fixtures.FixtureError):
        fixtures.raw("nope")
