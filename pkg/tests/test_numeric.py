import numpy as np
import pytest
from scipy.optimize import linprog

from asymnorm.numeric import (DimensionError, LpProblem, LpStalled, as_vector, dot,
                              lp_residual, lp_solve)


def test_dot_examples():
    assert dot([1, 2], [3, 4]) == 11
    assert dot([1.5, -2.0, 7.0], np.zeros(3)) == 0
    eye = np.eye(4)
    for i in range(4):
        for j in range(4):
            assert dot(eye[i], eye[j]) == (1.0 if i == j else 0.0)


def test_dot_dimension_mismatch():
    with pytest.raises(DimensionError):
        dot([1, 2], [1, 2, 3])


@pytest.mark.parametrize("bad", [[1.0, np.nan], [np.inf], []])
def test_as_vector_rejects(bad):
    with pytest.raises(ValueError):
        as_vector(bad)


def test_lp_single_equality():
    sol = lp_solve(LpProblem([1.0], [[1.0]], [5.0]))
    assert sol.status == "optimal"
    assert sol.z[0] == pytest.approx(5.0)


def _gauge_lp(x):
    # variables (t, lam1, lam2):  x + t e2 = lam1 e1 + lam2 e2
    A = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, -1.0]])
    return LpProblem([1.0, 0.0, 0.0], A, -np.asarray(x, dtype=float))


def test_lp_point_already_in_cone():
    sol = lp_solve(_gauge_lp([1.0, 1.0]))
    assert sol.status == "optimal"
    assert sol.objective_value == pytest.approx(0.0, abs=1e-12)


def test_lp_shift_matches_bisection():
    # independent oracle: bisect on membership of (0, -3) + t (0, 1) in the orthant
    lo, hi = 0.0, 8.0
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        if min(0.0, -3.0 + mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    sol = lp_solve(_gauge_lp([0.0, -3.0]))
    assert sol.status == "optimal"
    assert sol.objective_value == pytest.approx(hi, abs=1e-9)
    assert sol.objective_value == pytest.approx(3.0, abs=1e-12)


def test_infeasible_and_unbounded():
    assert lp_solve(LpProblem([1.0], [[1.0]], [-1.0])).status == "infeasible"
    # min -z1  s.t.  z1 - z2 = 0
    assert lp_solve(LpProblem([-1.0, 0.0], [[1.0, -1.0]], [0.0])).status == "unbounded"


def test_free_variable():
    sol = lp_solve(LpProblem([1.0, 0.0], [[1.0, 1.0]], [-2.0], free=[True, False]))
    # z1 free, z2 >= 0: z1 = -2 - z2, so min z1 is unbounded below
    assert sol.status == "unbounded"
    sol = lp_solve(LpProblem([1.0], [[1.0]], [-2.0], free=[True]))
    assert sol.status == "optimal"
    assert sol.z[0] == pytest.approx(-2.0)


def test_redundant_rows():
    A = [[1.0, 1.0], [2.0, 2.0]]
    sol = lp_solve(LpProblem([1.0, 2.0], A, [1.0, 2.0]))
    assert sol.status == "optimal"
    assert sol.objective_value == pytest.approx(1.0)


def test_beale_cycling_example_terminates():
    # Classic instance on which the textbook largest-coefficient rule cycles.
    c = [0, 0, 0, -0.75, 20, -0.5, 6]
    A = [[1, 0, 0, 0.25, -8, -1, 9],
         [0, 1, 0, 0.5, -12, -0.5, 3],
         [0, 0, 1, 0, 0, 1, 0]]
    sol = lp_solve(LpProblem(c, A, [0, 0, 1]))
    assert sol.status == "optimal"
    # optimum from HiGHS: z4 = 1, z6 = 1
    assert sol.objective_value == pytest.approx(-1.25)


def test_iteration_cap_raises():
    # z1 seeds the basis, so reaching z2 needs one pivot
    prob = LpProblem([0.0, -1.0], [[1.0, 1.0]], [1.0])
    assert lp_solve(prob, max_iter=1).status == "optimal"
    with pytest.raises(LpStalled):
        lp_solve(prob, max_iter=0)


def _random_lp(rng):
    m = int(rng.integers(1, 6))
    k = int(rng.integers(m, m + 6))
    A = rng.normal(size=(m, k))
    z0 = rng.uniform(0, 2, size=k) * (rng.uniform(size=k) < 0.7)
    c = rng.uniform(0, 3, size=k)
    return LpProblem(c, A, A @ z0)


@pytest.mark.parametrize("seed", range(40))
def test_random_lps_against_highs(seed):
    prob = _random_lp(np.random.default_rng(seed))
    sol = lp_solve(prob)
    ref = linprog(prob.c, A_eq=prob.A, b_eq=prob.b, bounds=(0, None), method="highs")
    assert sol.status == "optimal" and ref.status == 0
    assert sol.objective_value == pytest.approx(ref.fun, abs=1e-7 * (1 + abs(ref.fun)))
    assert lp_residual(prob, sol.z) <= 1e-9 * max(1.0, np.abs(prob.b).max())


@pytest.mark.parametrize("seed", range(40))
def test_optimality_certificate(seed):
    prob = _random_lp(np.random.default_rng(seed))
    v = lp_solve(prob).objective_value
    eps = 1e-6 * (1 + abs(v))
    # add  c.z + s = v - eps,  s >= 0
    m, k = prob.A.shape
    A = np.block([[prob.A, np.zeros((m, 1))], [prob.c[None, :], np.ones((1, 1))]])
    tighter = LpProblem(np.zeros(k + 1), A, np.append(prob.b, v - eps))
    assert lp_solve(tighter).status == "infeasible"


def test_deterministic_bitwise():
    prob = _random_lp(np.random.default_rng(7))
    a, b = lp_solve(prob), lp_solve(prob)
    assert a.z.tobytes() == b.z.tobytes()
    assert a.objective_value == b.objective_value
