"""
Exact arithmetic in the group algebra ZS6
=========================================

Elements are integer vectors indexed by rank; products are convolutions.
"""

from __future__ import annotations

from schurring import fixtures
from schurring.algebra import (
    class_sum,
    coefficient_fibers,
    commutes,
    indicator,
    multiply,
    parse_element,
    restrict,
    to_text,
)
from schurring.perm import conjugacy_class

# parse a short element and square it
x = parse_element("(1,2) + (2,3)")
print("x^2 =", to_text(multiply(x, x)))

# class sums are central
K2 = class_sum(6, (2,))
print("K2 commutes with x:", commutes(K2, x))

# K2^2 restricted to the 3-cycles is constant 3
sq = multiply(K2, K2)
print("(K2^2) on 3-cycles:", [(v, len(f)) for v, f in coefficient_fibers(sq, conjugacy_class(6, (3,)))])
print("(K2^2) on (2,2):", to_text(restrict(sq, (2, 2)))[:60], "...")

# five pairwise disjoint perfect matchings: no product lands on a (2,2)-cycle
C = indicator(fixtures.element_set("c222_split5"))
print("fibres of C^2 on the double transpositions:",
      [(v, len(f)) for v, f in coefficient_fibers(multiply(C, C), conjugacy_class(6, (2, 2)))])
