"""
The LP kernel
=============

A dense two-phase simplex with Bland's rule, used for V-rep membership,
interior points, redundancy elimination and the gauge LP.
"""
import numpy as np

from asymnorm.numeric import LpProblem, lp_solve

# min t  s.t.  (0, -3) + t (0, 1) = lam1 e1 + lam2 e2,  t, lam >= 0
A = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, -1.0]])
sol = lp_solve(LpProblem([1.0, 0.0, 0.0], A, [0.0, 3.0]))
print(sol.status, sol.z, sol.objective_value)

# free variables are split internally
print(lp_solve(LpProblem([1.0], [[2.0]], [-4.0], free=[True])).z)

print(lp_solve(LpProblem([1.0], [[1.0]], [-1.0])).status)
print(lp_solve(LpProblem([-1.0, 0.0], [[1.0, -1.0]], [0.0])).status)
