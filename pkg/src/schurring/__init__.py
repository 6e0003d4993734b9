"""Schur rings over symmetric groups, with a verification suite for S6."""

from __future__ import annotations

from .algebra import AlgebraElement, class_sum, coefficient_fibers, indicator, multiply, parse_element, restrict, to_text
from .perm import ElementSet, Permutation, compose, conjugacy_class, cycle_type, generate_subgroup, inverse, parse_cycles
from .sring import SRing, center, closure, closure_with_center, is_commutative, join, orbit_sring, verify_sring

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "ElementSet",
    "Permutation",
    "SRing",
    "center",
    "class_sum",
    "closure",
    "closure_with_center",
    "coefficient_fibers",
    "compose",
    "conjugacy_class",
    "cycle_type",
    "generate_subgroup",
    "indicator",
    "inverse",
    "is_commutative",
    "join",
    "multiply",
    "orbit_sring",
    "parse_cycles",
    "parse_element",
    "restrict",
    "to_text",
    "verify_sring",
]
