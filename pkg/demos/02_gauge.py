"""
Gauges of translated cones
==========================

q(x) = inf{t >= 0 : x - t u in K} for a proper cone K with -u interior.
"""
import numpy as np

from asymnorm.gauge import (GaugeNorm, check_axioms, gauge_eval, gauge_eval_oracle,
                            kernel_contains, sphere_sample, symmetrize, unit_ball_contains)
from asymnorm.oracle import gauge_by_bisection, get_fixture

f = get_fixture("orthant2")       # K = nonpositive quadrant, u = (1, 1)
q = f.gauge()
x = np.array([-3.0, 2.0])

# three independent routes to the same number
print(gauge_eval(q, x), gauge_eval_oracle(q, x), gauge_by_bisection(f.cone_h, f.apex, x))

# the closed form for this cone is max(0, max_i x_i)
print(f.closed_form(x))

# asymmetry: q(-x) differs from q(x); the symmetrisation is a norm
ps = symmetrize(q)
print(q(x), q(-x), ps(x))

# the kernel of q is the cone itself, and q(u) = 1
print(kernel_contains(q, [-1, -5]), kernel_contains(q, f.apex), q(f.apex))
print(unit_ball_contains(q, f.apex), unit_ball_contains(q, f.apex, strict=True))

# a few points of the unit sphere {q = 1}
print(sphere_sample(q, 5, seed=0))

# the sampled axiom check reports a worst-case violation per axiom
print(check_axioms(q, samples=2000, seed=1).summary())

# generator form gives the same gauge (evaluated by LP)
qv = f.gauge("V")
print(qv(x))
