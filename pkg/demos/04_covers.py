"""
Covers of the complete graph K6
===============================

Sets of triangles covering every edge equally often, their orientations,
and the perfect-matching picture behind the 15-element sets of (2,2)-cycles.
"""

from __future__ import annotations

from schurring import covers

for r in (5, 10, 15, 20):
    orbits = covers.enumerate_triangle_covers(r)
    print(f"r={r:>2}: orbits {[o.orbit_size for o in orbits]}")

# orientations of the 10-triangle cover, by number of opposite edges
census = covers.orientation_census()
print("opposite-edge counts:", census.o_values())
print("classes with o=5:", len(covers.enumerate_o5_assignments()))

# one 1-factorization of K6 per class
classes = covers.enumerate_15element_edgepair_covers()
print("15-element edge-pair covers:", [len(c) for c in classes])
path = covers.edgepair_cycle_decomposition(classes[0][0])
print("Kneser-graph cycle lengths:", path.lengths)
