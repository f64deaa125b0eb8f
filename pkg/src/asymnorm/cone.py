"""Polyhedral convex cones in halfspace (H) and generator (V) form.

H-rep:  K = {x : a_i . x >= 0 for all i}   (inward unit normals a_i)
V-rep:  K = {sum_j lam_j g_j : lam_j >= 0}  (unit generators g_j)

Both representations are closed and convex by construction, so the
interesting predicates are membership, pointedness and full-dimensionality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .numeric import (FEAS_TOL, DimensionError, LpProblem, Vector, as_vector,
                      lp_solve)


class NotFullDimensional(ValueError):
    """The cone has empty interior."""


class ConeFormatError(ValueError):
    """A cone file or row list is malformed."""


def _unit_rows(rows, what):
    R = np.array(rows, dtype=float)
    if R.ndim == 1:
        R = R.reshape(1, -1)
    if R.ndim != 2 or R.shape[0] == 0 or R.shape[1] == 0:
        raise ConeFormatError("%s must be a non-empty list of equal-length rows" % what)
    if not np.all(np.isfinite(R)):
        raise ConeFormatError("%s contain non-finite entries" % what)
    norms = np.linalg.norm(R, axis=1)
    if np.any(norms == 0.0):
        raise ConeFormatError("%s must be nonzero" % what)
    R = R / norms[:, None]
    R.setflags(write=False)
    return R


@dataclass(frozen=True, eq=False)
class HalfspaceCone:
    normals: np.ndarray
    irredundant: bool = False
    rep = "H"

    def __post_init__(self):
        object.__setattr__(self, "normals", _unit_rows(self.normals, "normals"))

    @property
    def dim(self) -> int:
        return self.normals.shape[1]

    @property
    def rows(self) -> np.ndarray:
        return self.normals

    def __repr__(self):
        return "HalfspaceCone(dim=%d, facets=%d, irredundant=%s)" % (
            self.dim, len(self.normals), self.irredundant)


@dataclass(frozen=True, eq=False)
class GeneratorCone:
    generators: np.ndarray
    rep = "V"

    def __post_init__(self):
        object.__setattr__(self, "generators", _unit_rows(self.generators, "generators"))

    @property
    def dim(self) -> int:
        return self.generators.shape[1]

    @property
    def rows(self) -> np.ndarray:
        return self.generators

    def __repr__(self):
        return "GeneratorCone(dim=%d, generators=%d)" % (self.dim, len(self.generators))


Cone = Union[HalfspaceCone, GeneratorCone]


@dataclass(frozen=True)
class ConeOrderWitness:
    """Outcome of testing x <=_K y, i.e. y - x in K."""

    x: Vector
    y: Vector
    difference: Vector
    member: bool


def _check_dim(cone, x):
    try:
        return as_vector(x, cone.dim)
    except DimensionError as exc:
        raise DimensionError("point does not match cone dimension %d: %s" % (cone.dim, exc))


def generator_residual(cone: GeneratorCone, x) -> float:
    """L1 distance from `x` to the nearest conic combination of the generators.

    Solved as  min sum(e+ + e-)  s.t.  G^T lam + e+ - e- = x,  lam, e+, e- >= 0.
    """
    x = _check_dim(cone, x)
    n = cone.dim
    r = len(cone.generators)
    A = np.hstack([cone.generators.T, np.eye(n), -np.eye(n)])
    c = np.concatenate([np.zeros(r), np.ones(2 * n)])
    sol = lp_solve(LpProblem(c, A, x))
    return max(0.0, sol.objective_value)


def contains(cone: Cone, x, tol: float = FEAS_TOL) -> bool:
    if isinstance(cone, HalfspaceCone):
        x = _check_dim(cone, x)
        return bool((cone.normals @ x).min() >= -tol)
    return generator_residual(cone, x) <= tol


def is_pointed(cone: Cone, tol: float = FEAS_TOL) -> bool:
    """True iff K contains no line, i.e. K ∩ (-K) = {0}."""
    if isinstance(cone, HalfspaceCone):
        return int(np.linalg.matrix_rank(cone.normals)) == cone.dim
    # max sum(mu)  s.t.  G^T mu = 0,  0 <= mu <= 1  (box via slacks w = 1 - mu)
    G = cone.generators
    r, n = G.shape
    A = np.block([[G.T, np.zeros((n, r))], [np.eye(r), np.eye(r)]])
    b = np.concatenate([np.zeros(n), np.ones(r)])
    c = np.concatenate([-np.ones(r), np.zeros(r)])
    sol = lp_solve(LpProblem(c, A, b))
    return -sol.objective_value <= tol


def chebyshev_point(cone: HalfspaceCone):
    """Return (x, s) maximising s subject to a_i . x >= s and ||x||_inf <= 1.

    Uses the shift y = x + 1 so every LP variable is nonnegative.
    """
    N = cone.normals
    m, n = N.shape
    # variables: y (n), s (1), slack_i (m), w_j (n)
    A = np.zeros((m + n, 2 * n + m + 1))
    A[:m, :n] = N
    A[:m, n] = -1.0
    A[:m, n + 1:n + 1 + m] = -np.eye(m)
    A[m:, :n] = np.eye(n)
    A[m:, n + 1 + m:] = np.eye(n)
    b = np.concatenate([N.sum(axis=1), 2.0 * np.ones(n)])
    c = np.zeros(A.shape[1])
    c[n] = -1.0
    sol = lp_solve(LpProblem(c, A, b))
    return sol.z[:n] - 1.0, float(sol.z[n])


def interior_point(cone: Cone, tol: float = FEAS_TOL) -> Vector:
    if isinstance(cone, HalfspaceCone):
        x, s = chebyshev_point(cone)
        if s <= tol:
            raise NotFullDimensional("cone is not full-dimensional (margin %.3g)" % s)
        return x
    if int(np.linalg.matrix_rank(cone.generators)) < cone.dim:
        raise NotFullDimensional("cone is not full-dimensional (generator rank %d < %d)"
                                 % (np.linalg.matrix_rank(cone.generators), cone.dim))
    return cone.generators.sum(axis=0)


def is_proper_cone(cone: Cone, tol: float = FEAS_TOL) -> bool:
    if not is_pointed(cone, tol):
        return False
    try:
        interior_point(cone, tol)
    except NotFullDimensional:
        return False
    return True


def active_facets(cone: HalfspaceCone, x, tol: float = FEAS_TOL) -> np.ndarray:
    """Indices of the normals with a_i . x <= tol."""
    x = _check_dim(cone, x)
    return np.flatnonzero(cone.normals @ x <= tol)


def on_boundary(cone: HalfspaceCone, x, tol: float = FEAS_TOL) -> bool:
    """True iff `x` (a member of the cone) has some facet active.

    A cone not yet marked irredundant is reduced first.
    """
    if not isinstance(cone, HalfspaceCone):
        raise TypeError("on_boundary needs a halfspace representation")
    if not cone.irredundant:
        cone = eliminate_redundancy(cone)
    x = _check_dim(cone, x)
    slack = cone.normals @ x
    if slack.min() < -tol:
        raise ValueError("point lies outside the cone (violation %.3g)" % -slack.min())
    return bool(slack.min() <= tol)


def order_witness(x, y, cone: Cone, tol: float = FEAS_TOL) -> ConeOrderWitness:
    x = _check_dim(cone, x)
    y = _check_dim(cone, y)
    d = y - x
    return ConeOrderWitness(x, y, d, contains(cone, d, tol))


def leq_cone(x, y, cone: Cone, tol: float = FEAS_TOL) -> bool:
    """x <=_K y."""
    return order_witness(x, y, cone, tol).member


def _min_over_rest(N, i, keep):
    """min a_i . x  s.t.  a_j . x >= 0 (j in keep),  ||x||_inf <= 1."""
    a = N[i]
    n = N.shape[1]
    rest = N[keep]
    k = len(keep)
    # y = x + 1 in [0, 2];  a_j . y - s_j = a_j . 1
    A = np.zeros((k + n, 2 * n + k))
    A[:k, :n] = rest
    A[:k, n:n + k] = -np.eye(k)
    A[k:, :n] = np.eye(n)
    A[k:, n + k:] = np.eye(n)
    b = np.concatenate([rest.sum(axis=1), 2.0 * np.ones(n)])
    c = np.concatenate([a, np.zeros(n + k)])
    sol = lp_solve(LpProblem(c, A, b))
    return sol.objective_value - a.sum()


def eliminate_redundancy(cone: HalfspaceCone, tol: float = FEAS_TOL) -> HalfspaceCone:
    """Drop normals implied by the others. Duplicates keep their first occurrence."""
    N = cone.normals
    keep = []
    for i, a in enumerate(N):
        if not any(np.abs(a - N[j]).max() <= tol for j in keep):
            keep.append(i)
    # Walk backwards so that, among mutually implied normals, earlier ones survive.
    for i in reversed(list(keep)):
        rest = [j for j in keep if j != i]
        if rest and _min_over_rest(N, i, rest) >= -tol:
            keep = rest
    return HalfspaceCone(N[sorted(keep)], irredundant=True)


def sample_members(cone: Cone, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draw `count` points of the cone with radii spread over [0, 10].

    V-rep: random nonnegative combinations of the generators. H-rep: half the
    points come from rejection sampling of Gaussian draws, the rest from a
    ball around the Chebyshev point that fits inside the cone.
    """
    n = cone.dim
    radii = rng.uniform(0.0, 10.0, size=count)
    if isinstance(cone, GeneratorCone):
        lam = rng.exponential(size=(count, len(cone.generators)))
        pts = lam @ cone.generators
    else:
        center, margin = chebyshev_point(cone)
        draws = rng.standard_normal((4 * count, n))
        accepted = draws[(draws @ cone.normals.T).min(axis=1) >= 0.0][:count // 2]
        rest = count - len(accepted)
        w = rng.standard_normal((rest, n))
        w *= (rng.uniform(size=rest) ** (1.0 / n) / np.linalg.norm(w, axis=1))[:, None]
        ball = center + 0.999 * max(margin, 0.0) * w
        pts = np.vstack([accepted, ball]) if len(accepted) else ball
    norms = np.linalg.norm(pts, axis=1)
    norms[norms == 0.0] = 1.0
    return pts * (radii / norms)[:, None]


# JSON cone format: {"dim": n, "rep": "H"|"V", "rows": [[...], ...]}

def cone_from_dict(data) -> Cone:
    if not isinstance(data, dict) or not {"dim", "rep", "rows"} <= set(data):
        raise ConeFormatError("cone JSON needs keys 'dim', 'rep' and 'rows'")
    dim, rep, rows = data["dim"], data["rep"], data["rows"]
    if not isinstance(dim, int) or dim < 1:
        raise ConeFormatError("'dim' must be a positive integer")
    if not isinstance(rows, list) or not rows or not all(
            isinstance(r, list) and len(r) == dim for r in rows):
        raise ConeFormatError("every row must be a list of length dim=%d" % dim)
    try:
        if rep == "H":
            return HalfspaceCone(rows)
        if rep == "V":
            return GeneratorCone(rows)
    except (TypeError, ValueError) as exc:
        raise ConeFormatError(str(exc))
    raise ConeFormatError("'rep' must be 'H' or 'V', got %r" % (rep,))


def cone_to_dict(cone: Cone) -> dict:
    # + 0.0 folds -0.0 into 0.0
    rows = [[float(v) + 0.0 for v in r] for r in cone.rows]
    return {"dim": cone.dim, "rep": cone.rep, "rows": rows}


def load_cone(path) -> Cone:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConeFormatError("malformed cone JSON in %s: %s" % (path, exc))
    return cone_from_dict(data)


def dump_cone(cone: Cone, path) -> None:
    data = cone_to_dict(cone)
    rows = ",\n  ".join(json.dumps(r) for r in data["rows"])
    with open(path, "w") as fh:
        fh.write('{"dim": %d, "rep": "%s", "rows": [\n  %s\n]}\n' % (data["dim"], data["rep"], rows))
