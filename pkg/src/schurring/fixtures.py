"""Transcribed element lists and generator sets, checksummed and self-validating.

``raw(name)`` returns the stored entry after its sha256 check; ``load()``
additionally runs every defining-property check and raises FixtureError on
the first failure.
"""

from __future__ import annotations

import functools
import hashlib
import json
from importlib import resources

from .perm import ElementSet, conjugacy_class, generate_subgroup, parse_cycles


class FixtureError(ValueError):
    pass


def _digest(entry: dict) -> str:
    body = {k: v for k, v in entry.items() if k != "sha256"}
    return hashlib.sha256(json.dumps(body, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


@functools.cache
def _table() -> dict:
    text = resources.files(__package__).joinpath("data/fixtures.json").read_text()
    table = json.loads(text)["fixtures"]
    for name, entry in table.items():
        if _digest(entry) != entry["sha256"]:
            raise FixtureError(f"checksum mismatch for fixture {name!r}")
    return table


def names() -> list[str]:
    return list(_table())


def raw(name: str) -> dict:
    try:
        return _table()[name]
    except KeyError:
        raise FixtureError(f"unknown fixture {name!r}") from None


def element_set(name: str) -> ElementSet:
    entry = raw(name)
    return ElementSet.parse(entry["members"], entry["degree"])


def generators(name: str):
    entry = raw(name)
    return [parse_cycles(g, entry["degree"]) for g in entry["members"]]


def subgroup(name: str) -> ElementSet:
    return generate_subgroup(generators(name), raw(name)["degree"])


def c2_partition(label: str) -> list[ElementSet]:
    """One of the five transposition-class partitions, remainder block last."""
    entry = raw("c2_partitions")
    blocks = [ElementSet.parse(b, entry["degree"]) for b in entry["members"][label]]
    rest = conjugacy_class(entry["degree"], (2,))
    for b in blocks:
        rest = rest - b
    return blocks + ([rest] if len(rest) else [])


def hemi_triangles() -> tuple[tuple[int, int, int], ...]:
    """The listed hemi-icosahedron triples, duplicates included."""
    return tuple(tuple(p.cycles()[0]) for p in (parse_cycles(m) for m in raw("hemi_c3")["members"]))


# ---------------------------------------------------------------------------
# defining-property checks


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise FixtureError(message)


def _check_hemi() -> None:
    from .covers import TriangleSet

    tris = hemi_triangles()
    distinct = TriangleSet(tuple(sorted(set(tuple(sorted(t)) for t in tris))))
    _require(len(distinct) == 10, "hemi_c3: expected ten distinct triangles")
    _require(distinct.lam() == 2, "hemi_c3: not a lambda=2 triangle cover")


def _check_w15() -> None:
    from .covers import edgepair_cycle_decomposition
    from .perm import stabilizer

    W = element_set("w15")
    _require(len(W) == 15 and W.issubset(conjugacy_class(6, (2, 2))), "w15: not 15 double transpositions")
    _require(edgepair_cycle_decomposition(W).lengths == [3] * 5, "w15: components are not five triangles")
    _require(stabilizer(W) == subgroup("gens_h120"), "w15: stabilizer is not the listed H120")


def _check_four_cycles() -> None:
    from .covers import iota_squared
    from .perm import Permutation

    A = element_set("c4_split30")
    _require(len(A) == 30 and A.issubset(conjugacy_class(6, (4,))), "c4_split30: not 30 four-cycles")
    _require(A.inverse() == A, "c4_split30: not inverse-closed")
    _require(iota_squared(A) == element_set("w15"), "c4_split30: squares are not W15")
    B = element_set("c42_split30")
    _require(len(B) == 30 and B.issubset(conjugacy_class(6, (4, 2))), "c42_split30: not 30 elements of type (4,2)")
    proj = []
    for p in B:
        four = next(c for c in p.cycles() if len(c) == 4)
        proj.append(Permutation.from_cycles([four], 6))
    _require(ElementSet.from_perms(proj, 6) == A, "c42_split30: 4-cycle projection is not c4_split30")


def _check_c33() -> None:
    from .algebra import commutes, indicator
    from .perm import set_orbit

    K = conjugacy_class(6, (3, 3))
    c1, c2 = element_set("c33_split_a"), element_set("c33_split_b")
    for name, c in (("c1", c1), ("c2", c2)):
        _require(len(c) == 20 and c.issubset(K) and c.inverse() == c, f"c33_split_{name}: bad shape")
    partners = [d for d in set_orbit(c2) if commutes(indicator(c1), indicator(d))]
    _require(len(partners) == 1, "c33_split: C1 should commute with exactly one conjugate of C2")
    _require(partners[0] == K - c1, "c33_split: the commuting conjugate of C2 is not the complement of C1")


def _check_c222() -> None:
    from .algebra import class_sum, indicator, is_scalar_multiple, multiply, restrict

    C = element_set("c222_split5")
    _require(len(C) == 5 and C.issubset(conjugacy_class(6, (2, 2, 2))), "c222_split5: not 5 elements of type (2,2,2)")
    prod = restrict(multiply(indicator(C), class_sum(6, (2, 2))), (2,))
    _require(is_scalar_multiple(prod, conjugacy_class(6, (2,))) == 1, "c222_split5: product restriction is not K2")


def _check_groups() -> None:
    for name in names():
        entry = raw(name)
        if entry["kind"] == "generators":
            _require(len(subgroup(name)) == entry["order"], f"{name}: group order is not {entry['order']}")


def _check_partitions() -> None:
    K2 = conjugacy_class(6, (2,))
    for label in raw("c2_partitions")["members"]:
        blocks = c2_partition(label)
        _require(sum(len(b) for b in blocks) == 15, f"c2 partition {label}: blocks do not cover the class")
        for b in blocks:
            _require(b.issubset(K2), f"c2 partition {label}: non-transposition member")


CHECKS = {
    "hemi_c3": _check_hemi,
    "w15": _check_w15,
    "c4_split30/c42_split30": _check_four_cycles,
    "c33_split": _check_c33,
    "c222_split5": _check_c222,
    "generators": _check_groups,
    "c2_partitions": _check_partitions,
}


@functools.cache
def load() -> tuple[str, ...]:
    """Validate every fixture; returns the names of the checks that ran."""
    _table()
    for check in CHECKS.values():
        check()
    return tuple(CHECKS)
