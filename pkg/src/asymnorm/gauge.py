"""Asymmetric norms: cone gauges, black-box functionals and axiom checks.

The central object is `GaugeNorm`, the gauge of the translated cone K + u,

    q(x) = inf{t > 0 : x in t(K + u)} = inf{t >= 0 : x - t u in K},

which is a proper asymmetric norm whenever K is a proper cone and -u lies in
its interior. For a halfspace cone x - t u in K reads a_i.x >= t d_i with
d_i = a_i.u < 0, which gives the closed form

    q(x) = max(0, max_i (a_i . x) / d_i).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .cone import Cone, GeneratorCone, HalfspaceCone
from .numeric import (FEAS_TOL, DimensionError, LpProblem, Vector, as_vector,
                      lp_solve)
from .report import CheckReport, Worst

#: Apexes closer than this to the cone boundary are rejected.
MIN_APEX_MARGIN = 1e-6


class ApexNotInterior(ValueError):
    """-u is not (robustly) inside the cone."""


class GaugeInvariantError(RuntimeError):
    """The gauge LP was infeasible although -u is interior."""


class SamplingStarved(RuntimeError):
    """Too few random directions had positive functional value."""


def _vrep_apex_margin(cone: GeneratorCone, minus_u) -> float:
    """max s such that -u = sum_j lam_j g_j with every lam_j >= s."""
    G = cone.generators
    A = np.hstack([G.sum(axis=0)[:, None], G.T])
    c = np.zeros(A.shape[1])
    c[0] = -1.0
    sol = lp_solve(LpProblem(c, A, minus_u))
    if sol.status == "infeasible":
        return -np.inf
    if sol.status == "unbounded":
        return np.inf
    return float(sol.z[0])


@dataclass(frozen=True, eq=False)
class GaugeNorm:
    """The gauge of `cone` with respect to its interior point `-apex`."""

    cone: Cone
    apex: Vector
    min_margin: float = MIN_APEX_MARGIN
    denominators: Optional[np.ndarray] = field(init=False, default=None)
    margin: float = field(init=False, default=0.0)

    def __post_init__(self):
        try:
            u = as_vector(self.apex, self.cone.dim).copy()
        except DimensionError as exc:
            raise DimensionError("apex: %s" % exc)
        u.setflags(write=False)
        object.__setattr__(self, "apex", u)
        if isinstance(self.cone, HalfspaceCone):
            d = self.cone.normals @ u
            d.setflags(write=False)
            object.__setattr__(self, "denominators", d)
            margin = float((-d).min())
        else:
            margin = _vrep_apex_margin(self.cone, -u)
        object.__setattr__(self, "margin", margin)
        if not margin >= self.min_margin:
            raise ApexNotInterior(
                "-apex is not interior to the cone: margin %.3g < %.1g" % (margin, self.min_margin))

    @property
    def dim(self) -> int:
        return self.cone.dim

    @property
    def name(self) -> str:
        return "gauge"

    def __call__(self, x) -> float:
        return gauge_eval(self, x)

    def values(self, X) -> np.ndarray:
        """Gauge of every row of `X`."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        if isinstance(self.cone, HalfspaceCone):
            ratios = (X @ self.cone.normals.T) / self.denominators
            return np.maximum(0.0, ratios.max(axis=1))
        return np.array([gauge_eval_oracle(self, x) for x in X])

    def lipschitz_bound(self) -> float:
        """max_i ||a_i|| / |d_i|; a Lipschitz constant of q w.r.t. the Euclidean norm."""
        if self.denominators is None:
            raise TypeError("Lipschitz bound is only available for halfspace cones")
        return float(1.0 / np.abs(self.denominators).min())


def gauge_eval(g: GaugeNorm, x) -> float:
    x = as_vector(x, g.dim)
    if isinstance(g.cone, HalfspaceCone):
        ratios = (g.cone.normals @ x) / g.denominators
        return float(max(0.0, ratios.max()))
    return gauge_eval_oracle(g, x)


def gauge_eval_oracle(g: GaugeNorm, x) -> float:
    """min t >= 0 subject to x - t u in K, solved as an LP."""
    x = as_vector(x, g.dim)
    u = g.apex
    if isinstance(g.cone, HalfspaceCone):
        # -d_i t - s_i = -a_i . x
        m = len(g.cone.normals)
        A = np.hstack([-g.denominators[:, None], -np.eye(m)])
        b = -(g.cone.normals @ x)
    else:
        A = np.hstack([u[:, None], g.cone.generators.T])
        b = x
    c = np.zeros(A.shape[1])
    c[0] = 1.0
    sol = lp_solve(LpProblem(c, A, b))
    if not sol.optimal:
        raise GaugeInvariantError("gauge LP returned %s for x=%r" % (sol.status, x))
    return float(max(0.0, sol.z[0]))


@dataclass(frozen=True)
class FunctionalHandle:
    """A black-box functional R^dim -> R."""

    dim: int
    fn: Callable[[np.ndarray], float]
    name: str = "p"

    def __call__(self, x) -> float:
        return float(self.fn(as_vector(x, self.dim)))


def as_functional(p) -> FunctionalHandle:
    if isinstance(p, FunctionalHandle):
        return p
    if hasattr(p, "dim") and callable(p):
        return FunctionalHandle(p.dim, p, getattr(p, "name", "p"))
    raise TypeError("expected a FunctionalHandle or a callable with a 'dim' attribute")


def euclidean_norm(dim: int) -> FunctionalHandle:
    return FunctionalHandle(dim, lambda x: float(np.linalg.norm(x)), "euclidean")


def linear_functional(c) -> FunctionalHandle:
    c = as_vector(c)
    return FunctionalHandle(c.size, lambda x: float(c @ x), "linear")


def symmetrize(p) -> FunctionalHandle:
    """x -> max(p(x), p(-x)), the norm induced by an asymmetric norm."""
    p = as_functional(p)
    return FunctionalHandle(p.dim, lambda x: max(p(x), p(-x)), "sym(%s)" % p.name)


def kernel_contains(p, x, tol: float = FEAS_TOL) -> bool:
    return p(x) <= tol


def unit_ball_contains(p, x, strict: bool = False, tol: float = FEAS_TOL) -> bool:
    value = p(x)
    return value < 1.0 - tol if strict else value <= 1.0 + tol


def sample_points(rng: np.random.Generator, count: int, dim: int,
                  max_radius: float = 10.0) -> np.ndarray:
    """Gaussian directions scaled to radii uniform on [0, max_radius]."""
    v = rng.standard_normal((count, dim))
    norms = np.linalg.norm(v, axis=1)
    norms[norms == 0.0] = 1.0
    radii = rng.uniform(0.0, max_radius, size=count)
    return v * (radii / norms)[:, None]


def sphere_sample(p, count: int, seed: int, tol: float = FEAS_TOL) -> np.ndarray:
    """`count` points with p(x) = 1, from rescaled Gaussian directions."""
    if count < 1:
        raise ValueError("count must be at least 1")
    p = as_functional(p)
    rng = np.random.default_rng(seed)
    out = []
    draws = 0
    while len(out) < count:
        if draws >= 100 * count:
            raise SamplingStarved("sphere sampling starved: %d of %d points after %d draws"
                                  % (len(out), count, draws))
        v = rng.standard_normal(p.dim)
        draws += 1
        value = p(v)
        if value > tol:
            out.append(v / value)
    return np.array(out)


def stencil(p, extra=()) -> np.ndarray:
    """Deterministic probe points: 0, +-e_i, and for gauges the apex pair and cone rows."""
    n = p.dim
    eye = np.eye(n)
    pts = [np.zeros((1, n)), eye, -eye]
    if isinstance(p, GaugeNorm):
        pts += [p.apex[None, :], -p.apex[None, :], p.cone.rows]
    for e in extra:
        pts.append(np.atleast_2d(np.asarray(e, dtype=float)))
    return np.vstack(pts)


def check_axioms(p, samples: int = 10_000, seed: int = 42, tol: float = FEAS_TOL) -> CheckReport:
    """Sampled test of nonnegativity, positive homogeneity, subadditivity, definiteness."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    f = as_functional(p)
    rng = np.random.default_rng(seed)
    n = f.dim
    X = sample_points(rng, samples, n)
    Y = sample_points(rng, samples, n)
    T = rng.uniform(0.0, 10.0, size=samples)
    S = stencil(p)

    nonneg = Worst("nonnegativity", tol)
    homog = Worst("homogeneity", tol)
    subadd = Worst("subadditivity", tol)
    definite = Worst("definiteness", 10.0 * tol)

    def probe(x, y, t):
        px, py, pmx = f(x), f(y), f(-x)
        nonneg.update(-min(px, py, pmx, 0.0), x if min(px, pmx) <= py else y)
        homog.update(abs(f(t * x) - t * px) / (1.0 + abs(px)), x)
        subadd.update(f(x + y) - px - py, np.concatenate([x, y]))
        norm = float(np.linalg.norm(x))
        definite.update(norm if (px <= tol and pmx <= tol and norm > 10.0 * tol) else 0.0, x)

    for x, y, t in zip(X, Y, T):
        probe(x, y, t)
    for i, x in enumerate(S):
        for j, y in enumerate(S):
            probe(x, y, (1.0 + i + j) / 4.0)

    checks = {c.name: c.result() for c in (nonneg, homog, subadd, definite)}
    return CheckReport("axioms(%s)" % f.name, checks, seed=seed, samples=samples)
