"""
Mutually polar retractions
==========================

R x = q(x) u projects onto the ray through u, Q = I - R onto the cone.
"""
import numpy as np

from asymnorm.cone import HalfspaceCone
from asymnorm.retraction import audit_retraction, build_pair, subadditivity_certificate

pair = build_pair(HalfspaceCone([[-1, 0], [0, -1]]), minus_u=[-1, -1])
x = np.array([-3.0, 2.0])
print("Qx =", pair.apply_Q(x), " Rx =", pair.apply_R(x))

# Qx lands on the boundary of the cone when x is outside it
print(pair.boundary_cone.normals @ pair.apply_Q(x))

# Q(x + y) <=_M Qx + Qy, with the gap along -u
cert = subadditivity_certificate(pair, [1, 0], [0, 1])
print(cert.difference, cert.slack, cert.member)

print(audit_retraction(pair, samples=3000, seed=0).summary())
