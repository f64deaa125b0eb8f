"""
Which asymmetric norms are proper?
==================================

A gauge built from a proper cone passes every characterisation; a symmetric
norm fails all of them, whatever apex is tried.
"""
import numpy as np

from asymnorm.gauge import FunctionalHandle, euclidean_norm
from asymnorm.oracle import get_fixture
from asymnorm.properness import verify_equivalence

f = get_fixture("circular16")
print(verify_equivalence(f.gauge(), f.apex, samples=3000).summary())

# Euclidean norm with u = e1: q(x - q(x) u) is far from zero
report = verify_equivalence(euclidean_norm(2), [1.0, 0.0], samples=3000)
print(report.summary())
print("witness:", report.condition_i.witness, "consistent:", report.consistent)

# any black-box callable with a dim can be checked
p = FunctionalHandle(2, lambda x: max(0.0, x[1] + abs(x[0])), "wedge by hand")
print(verify_equivalence(p, [0.0, 1.0], samples=3000).verdicts)
