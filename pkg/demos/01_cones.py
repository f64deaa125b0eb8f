"""
Polyhedral cones and their predicates
=====================================

A cone can be given by inward normals (H-rep) or by generators (V-rep).
"""
import numpy as np

from asymnorm.cone import (GeneratorCone, HalfspaceCone, contains, eliminate_redundancy,
                           interior_point, is_pointed, is_proper_cone, leq_cone, on_boundary)

# the wedge {x2 <= -|x1|} in both representations
wedge_h = HalfspaceCone([[-1, -1], [1, -1]])
wedge_v = GeneratorCone([[-1, -1], [1, -1]])
print(wedge_h.normals)                   # rows are normalised on construction

for x in ([0, -2], [0, 2], [1, -1]):
    print(x, contains(wedge_h, x), contains(wedge_v, x))

# pointed + full-dimensional = proper
halfplane = HalfspaceCone([[1, 0]])
print("wedge proper:", is_proper_cone(wedge_h), " halfplane pointed:", is_pointed(halfplane))
print("interior point of wedge (H):", interior_point(wedge_h))
print("interior point of wedge (V):", interior_point(wedge_v))

# (1, -1) lies on an edge, (0, -1) does not
print(on_boundary(wedge_h, [1, -1]), on_boundary(wedge_h, [0, -1]))

# the cone order: x <=_K y  iff  y - x in K
print(leq_cone([0, 0], [0, -3], wedge_h), leq_cone([0, 0], [3, 0], wedge_h))

# an implied facet is dropped
orth = HalfspaceCone([[-1, 0], [0, -1], [-1, -1]])
print(eliminate_redundancy(orth).normals)
