"""Dense vector helpers and a small two-phase simplex solver.

Every LP in the package is tiny (a few dozen rows at most), so the solver
favours determinism over speed: a dense tableau, Bland's rule for both the
entering and the leaving variable, and a hard iteration cap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

#: Absolute tolerance on constraint residuals, shared by every module.
FEAS_TOL = 1e-9
#: Relative tolerance for comparing computed values.
REL_TOL = 1e-8
#: Total pivot budget over both phases.
MAX_ITER = 10_000

_PIVOT_EPS = 1e-11
_COST_EPS = 1e-11

#: A point of R^n, stored as a 1-D float64 array.
Vector = np.ndarray


class DimensionError(ValueError):
    """Operands live in spaces of different dimension."""


class LpStalled(RuntimeError):
    """The simplex method hit the iteration cap."""


def as_vector(x, dim: Optional[int] = None) -> Vector:
    """Coerce `x` to a finite 1-D float array, optionally of length `dim`.

    Float64 1-D arrays are returned as is (no copy); treat the result as read-only.
    """
    if type(x) is np.ndarray and x.dtype == np.float64 and x.ndim == 1 and x.size:
        v = x
    else:
        v = np.array(x, dtype=float)
        if v.ndim == 0:
            v = v.reshape(1)
        if v.ndim != 1 or v.size == 0:
            raise DimensionError("expected a non-empty 1-D vector, got shape %s" % (v.shape,))
    if not np.isfinite(v).all():
        raise ValueError("vector has non-finite coordinates: %r" % (v,))
    if dim is not None and v.size != dim:
        raise DimensionError("expected dimension %d, got %d" % (dim, v.size))
    return v


def dot(x, y) -> float:
    x = as_vector(x)
    y = as_vector(y)
    if x.size != y.size:
        raise DimensionError("dot of vectors with lengths %d and %d" % (x.size, y.size))
    return float(x @ y)


@dataclass(frozen=True)
class LpProblem:
    """minimize c.z  subject to  A z = b,  z_j >= 0 unless `free[j]`."""

    c: np.ndarray
    A: np.ndarray
    b: np.ndarray
    free: np.ndarray = field(default=None)

    def __post_init__(self):
        c = as_vector(self.c).copy()
        A = np.atleast_2d(np.array(self.A, dtype=float))
        b = np.array(self.b, dtype=float).reshape(-1)
        if A.shape != (b.size, c.size):
            raise DimensionError(
                "constraint matrix has shape %s, expected (%d, %d)" % (A.shape, b.size, c.size))
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise ValueError("LP data must be finite")
        free = (np.zeros(c.size, dtype=bool) if self.free is None
                else np.array(self.free, dtype=bool).reshape(-1))
        if free.size != c.size:
            raise DimensionError("free mask has length %d, expected %d" % (free.size, c.size))
        for name, arr in (("c", c), ("A", A), ("b", b), ("free", free)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n_vars(self) -> int:
        return self.c.size

    @property
    def n_rows(self) -> int:
        return self.b.size


@dataclass(frozen=True)
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    z: Optional[np.ndarray]
    objective_value: float
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    """Dense simplex tableau; last row holds reduced costs, last column the rhs."""

    def __init__(self, A, b, basis, budget):
        m, k = A.shape
        self.T = np.zeros((m + 1, k + 1))
        self.T[:m, :k] = A
        self.T[:m, k] = b
        self.basis = list(basis)
        self.iterations = 0
        self.budget = budget

    @property
    def m(self):
        return len(self.basis)

    def set_objective(self, c):
        T = self.T
        T[-1, :] = 0.0
        T[-1, :c.size] = c
        for i, j in enumerate(self.basis):
            if T[-1, j] != 0.0:
                T[-1] -= T[-1, j] * T[i]

    def pivot(self, r, c):
        T = self.T
        T[r] /= T[r, c]
        col = T[:, c].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r])
        T[:, c] = 0.0
        T[r, c] = 1.0
        self.basis[r] = c
        self.iterations += 1
        if self.iterations > self.budget:
            raise LpStalled("simplex exceeded %d pivots" % self.budget)

    def run(self, n_allowed) -> str:
        T = self.T
        while True:
            costs = T[-1, :n_allowed]
            scale = 1.0 + np.abs(costs).max(initial=0.0)
            entering = np.flatnonzero(costs < -_COST_EPS * scale)
            if entering.size == 0:
                return "optimal"
            c = int(entering[0])
            column = T[:-1, c]
            rows = np.flatnonzero(column > _PIVOT_EPS)
            if rows.size == 0:
                return "unbounded"
            ratios = T[rows, -1] / column[rows]
            best = ratios.min()
            tied = rows[ratios <= best + 1e-12 * (1.0 + abs(best))]
            r = min(tied, key=lambda i: self.basis[i])
            self.pivot(int(r), c)

    def drop_row(self, r):
        self.T = np.delete(self.T, r, axis=0)
        del self.basis[r]

    def values(self, k):
        z = np.zeros(k)
        for i, j in enumerate(self.basis):
            if j < k:
                z[j] = self.T[i, -1]
        return z


def _crash_basis(A):
    """Pick existing unit columns (+1 in row i, zero elsewhere) as initial basics."""
    m, k = A.shape
    basis = [-1] * m
    for j in range(k):
        col = A[:, j]
        nz = np.flatnonzero(col)
        if nz.size == 1 and col[nz[0]] == 1.0 and basis[nz[0]] < 0:
            basis[nz[0]] = j
    return basis


def lp_solve(problem: LpProblem, max_iter: int = MAX_ITER) -> LpSolution:
    """Solve `problem` with a deterministic two-phase simplex.

    Free variables are split into positive and negative parts. Rows are
    sign-normalised so that b >= 0, existing slack columns seed the basis,
    and artificials cover the remaining rows. Raises `LpStalled` if the
    pivot count exceeds `max_iter`.
    """
    n_orig = problem.n_vars
    free_idx = np.flatnonzero(problem.free)
    A = np.hstack([problem.A, -problem.A[:, free_idx]])
    c = np.concatenate([problem.c, -problem.c[free_idx]])
    b = problem.b.copy()
    neg = b < 0
    A[neg] *= -1.0
    b[neg] *= -1.0
    m, k = A.shape

    basis = _crash_basis(A)
    missing = [i for i in range(m) if basis[i] < 0]
    art = np.zeros((m, len(missing)))
    for a, i in enumerate(missing):
        art[i, a] = 1.0
        basis[i] = k + a
    tab = _Tableau(np.hstack([A, art]), b, basis, max_iter)

    if missing:
        tab.set_objective(np.concatenate([np.zeros(k), np.ones(len(missing))]))
        tab.run(k + len(missing))
        residual = -tab.T[-1, -1]
        if residual > FEAS_TOL * max(1.0, float(np.abs(b).max(initial=0.0))):
            return LpSolution("infeasible", None, float("inf"), tab.iterations)
        # Drive artificials out of the basis; rows where that fails are redundant.
        r = 0
        while r < tab.m:
            if tab.basis[r] >= k:
                candidates = np.flatnonzero(np.abs(tab.T[r, :k]) > _PIVOT_EPS)
                if candidates.size:
                    tab.pivot(r, int(candidates[0]))
                else:
                    tab.drop_row(r)
                    continue
            r += 1
        tab.T = np.delete(tab.T, np.s_[k:k + len(missing)], axis=1)

    tab.set_objective(c)
    status = tab.run(k)
    if status == "unbounded":
        return LpSolution("unbounded", None, float("-inf"), tab.iterations)
    z_split = tab.values(k)
    z = z_split[:n_orig].copy()
    z[free_idx] -= z_split[n_orig:]
    return LpSolution("optimal", z, float(problem.c @ z), tab.iterations)


def lp_residual(problem: LpProblem, z: Sequence[float]) -> float:
    """Largest violation of the equality rows and nonnegativity bounds at `z`."""
    z = np.asarray(z, dtype=float)
    eq = np.abs(problem.A @ z - problem.b).max(initial=0.0)
    bounded = z[~problem.free]
    return float(max(eq, -bounded.min(initial=0.0)))
