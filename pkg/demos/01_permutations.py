"""
Permutations and conjugacy classes of S6
========================================

Permutations compose right to left and are ranked lexicographically, so a
subset of S6 is just a sorted tuple of integers in 0..719.
"""

from __future__ import annotations

from schurring import fixtures
from schurring.perm import (
    conjugacy_class,
    cycle_type,
    generate_subgroup,
    parse_cycles,
    partitions,
    stabilizer,
    symmetric_group,
)

G = symmetric_group(6)
p = parse_cycles("(1,2,3)")
q = parse_cycles("(3,4)")

# (pq)(x) = p(q(x))
print("p*q =", p * q, " q*p =", q * p)
print("rank of p:", G.rank(p), " cycle type:", cycle_type(p))

# the eleven classes and their sizes
for mu in partitions(6):
    print(f"  {str(mu):<20} {len(conjugacy_class(6, mu)):>4}")

# a subgroup from generators, and a setwise stabilizer
H = generate_subgroup([parse_cycles("(1,4)(3,5)"), parse_cycles("(1,4,6,2,5,3)")], 6)
print("|H| =", len(H))
hemi = fixtures.element_set("hemi_c3")
print("ten oriented hemi-icosahedron 3-cycles, stabilizer order:", len(stabilizer(hemi)))
