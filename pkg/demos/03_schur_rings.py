"""
Building and checking Schur rings
=================================

Orbit rings come from a subgroup; the closure of any seed is the least
S-ring containing it, found by refining a partition until it is stable.
"""

from __future__ import annotations

from schurring import classification as cl
from schurring.algebra import parse_element
from schurring.perm import ElementSet, conjugacy_class
from schurring.sring import (
    closure_with_center,
    has_principal_set,
    is_commutative,
    verify_sring,
)

K2 = conjugacy_class(6, (2,))

# the eight commutative rings
for name, R in zip(cl.RING_NAMES, cl.build_eight()):
    print(f"{name:<14} dim {R.dimension:>2}  commutative={is_commutative(R)}  "
          f"C2 principal={has_principal_set(R, K2)}")

# a single transposition on top of the class sums
S = closure_with_center([parse_element("(1,2)")])
print("closure of Z and (1,2):", S.dimension, "sets of sizes", S.size_set())

# {id}, transpositions, everything else: K2^2 is 15 on id, 3 on 3-cycles, 2 on (2,2)
ident, K2_set = conjugacy_class(6, ()), conjugacy_class(6, (2,))
rest = ElementSet(6, sorted(set(range(720)) - set(ident.ranks) - set(K2_set.ranks)))
check = verify_sring([ident, K2_set, rest])
print("identity / transpositions / rest is an S-ring:", bool(check), "-", check.reason)

# the dimension-12 ring built from the H36 orbits
s = cl.s36_construction()
print("S36:", s.ring.dimension, " the other pairing:", s.alternative.dimension)
