"""Mutually polar retraction pairs onto a ray and a proper cone.

Given a gauge q of K + u, the pair

    R x = q(x) u            (onto the ray N = {t u : t >= 0})
    Q x = x - q(x) u        (onto the cone M = K)

satisfies Q + R = I and QR = RQ = 0, and both maps are subadditive in the
order of their range. `audit_retraction` samples every one of these
properties; it also accepts black-box pairs (`OperatorPair`) as long as a
cone for the range of Q and the ray direction are supplied.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .cone import (Cone, ConeOrderWitness, HalfspaceCone, eliminate_redundancy,
                   generator_residual, is_proper_cone)
from .gauge import FunctionalHandle, GaugeNorm, sample_points, stencil
from .numeric import FEAS_TOL, Vector, as_vector
from .report import CheckReport, CheckResult, Worst

#: Points with q(x) at or below this are not treated as exterior to M.
EXTERIOR_THRESHOLD = 1e-3
#: Tolerance for "some facet of M is active at Qx".
BOUNDARY_TOL = 1e-8


class ConeNotProper(ValueError):
    pass


class RetractionPair:
    """R x = q(x) u and Q = I - R for a gauge q with apex u."""

    def __init__(self, gauge: GaugeNorm):
        self.gauge = gauge
        self.ray_direction = gauge.apex
        self.cone = gauge.cone
        self.boundary_cone = (eliminate_redundancy(gauge.cone)
                              if isinstance(gauge.cone, HalfspaceCone) else None)

    @property
    def dim(self) -> int:
        return self.gauge.dim

    @property
    def functional(self):
        return self.gauge

    def apply_R(self, x) -> Vector:
        return self.gauge(x) * self.ray_direction

    def apply_Q(self, x) -> Vector:
        x = as_vector(x, self.dim)
        return x - self.gauge(x) * self.ray_direction

    def __repr__(self):
        return "RetractionPair(%r, u=%s)" % (self.cone, self.ray_direction)


def apply_R(pair, x) -> Vector:
    return pair.apply_R(x)


def apply_Q(pair, x) -> Vector:
    return pair.apply_Q(x)


def build_pair(cone: Cone, minus_u) -> RetractionPair:
    """Retraction pair for the proper cone `cone` with interior point `minus_u`."""
    if not is_proper_cone(cone):
        raise ConeNotProper("cone not proper: it must be pointed and full-dimensional")
    return RetractionPair(GaugeNorm(cone, -as_vector(minus_u, cone.dim)))


def recover_functional(R: Callable, u, samples: int = 200, seed: int = 0,
                       tol: float = 1e-8) -> FunctionalHandle:
    """Recover q from a map R x = q(x) u.

    Only done once sampled images of R are certified to span at most the
    line through u; otherwise ValueError.
    """
    u = as_vector(u)
    rng = np.random.default_rng(seed)
    X = sample_points(rng, samples, u.size)
    images = np.array([as_vector(R(x), u.size) for x in X])
    stacked = np.vstack([u[None, :], images])
    if np.linalg.matrix_rank(stacked, tol=tol * max(1.0, np.abs(stacked).max())) > 1:
        raise ValueError("range of R is not one-dimensional along u")
    uu = float(u @ u)
    return FunctionalHandle(u.size, lambda x: float(as_vector(R(x)) @ u) / uu, "recovered")


class OperatorPair:
    """Arbitrary maps Q, R to be audited against a cone M and a ray direction u."""

    def __init__(self, Q: Callable, R: Callable, cone: Cone, u,
                 functional: Optional[Callable] = None):
        self.cone = cone
        self.ray_direction = as_vector(u, cone.dim)
        self._Q, self._R = Q, R
        self.boundary_cone = (eliminate_redundancy(cone)
                              if isinstance(cone, HalfspaceCone) else None)
        self.functional = functional or recover_functional(R, self.ray_direction)

    @property
    def dim(self) -> int:
        return self.cone.dim

    def apply_Q(self, x) -> Vector:
        return as_vector(self._Q(as_vector(x, self.dim)), self.dim)

    def apply_R(self, x) -> Vector:
        return as_vector(self._R(as_vector(x, self.dim)), self.dim)


def _outside(cone, z) -> float:
    """How far `z` is from satisfying membership in `cone`."""
    if isinstance(cone, HalfspaceCone):
        return max(0.0, -float((cone.normals @ z).min()))
    return generator_residual(cone, z)


def _off_ray(u, z) -> float:
    t = max(0.0, float(z @ u) / float(u @ u))
    return float(np.linalg.norm(z - t * u))


@dataclass
class RetractionAuditReport(CheckReport):
    NAMES = ("idempotence_Q", "idempotence_R", "polarity_QR", "polarity_RQ", "range_Q",
             "range_R", "boundary_Q", "homogeneity", "subadditivity_Q", "subadditivity_R")

    def __getattr__(self, name):
        if name in RetractionAuditReport.NAMES or name in ("decomposition", "continuity"):
            return self.checks[name]
        raise AttributeError(name)


def audit_retraction(pair, samples: int = 10_000, seed: int = 42, tol: float = FEAS_TOL,
                     boundary_tol: float = BOUNDARY_TOL,
                     exterior_threshold: float = EXTERIOR_THRESHOLD) -> RetractionAuditReport:
    """Sample every retraction-pair property on seeded x, y, t.

    Vector-valued residuals are Euclidean norms. Homogeneity is measured
    relative to 1 + ||T x||. Subadditivity of R is read off q:
    q(x + y) <= q(x) + q(y). Extra checks: `decomposition` (Q + R = I) and,
    for halfspace gauges, `continuity` (Lipschitz probe).
    """
    q = pair.functional
    u = pair.ray_direction
    M = pair.cone
    n = pair.dim
    rng = np.random.default_rng(seed)
    X = sample_points(rng, samples, n)
    Y = sample_points(rng, samples, n)
    T = rng.uniform(0.0, 10.0, size=samples)
    S = stencil(pair.gauge) if isinstance(pair, RetractionPair) else stencil(q)
    Sy = np.roll(S, 1, axis=0)
    X = np.vstack([X, S])
    Y = np.vstack([Y, Sy])
    T = np.concatenate([T, np.full(len(S), 2.5)])

    w = {name: Worst(name, tol) for name in RetractionAuditReport.NAMES}
    w["boundary_Q"].tolerance = boundary_tol
    w["decomposition"] = Worst("decomposition", tol)
    lipschitz = None
    if isinstance(pair, RetractionPair) and pair.gauge.denominators is not None:
        lipschitz = pair.gauge.lipschitz_bound()
        w["continuity"] = Worst("continuity", tol)
    bcone = pair.boundary_cone
    norm = np.linalg.norm

    for x, y, t in zip(X, Y, T):
        Qx, Rx = pair.apply_Q(x), pair.apply_R(x)
        Qy, Ry = pair.apply_Q(y), pair.apply_R(y)
        qx, qy = q(x), q(y)
        w["decomposition"].update(norm(Qx + Rx - x), x)
        w["idempotence_Q"].update(norm(pair.apply_Q(Qx) - Qx), x)
        w["idempotence_R"].update(norm(pair.apply_R(Rx) - Rx), x)
        w["polarity_QR"].update(norm(pair.apply_Q(Rx)), x)
        w["polarity_RQ"].update(norm(pair.apply_R(Qx)), x)
        w["range_Q"].update(_outside(M, Qx), x)
        w["range_R"].update(_off_ray(u, Rx), x)
        if bcone is not None and qx > exterior_threshold:
            w["boundary_Q"].update(max(0.0, float((bcone.normals @ Qx).min())), x)
        hq = norm(pair.apply_Q(t * x) - t * Qx) / (1.0 + norm(Qx))
        hr = norm(pair.apply_R(t * x) - t * Rx) / (1.0 + norm(Rx))
        w["homogeneity"].update(max(hq, hr), x)
        s = x + y
        w["subadditivity_Q"].update(_outside(M, Qx + Qy - pair.apply_Q(s)), np.concatenate([x, y]))
        w["subadditivity_R"].update(q(s) - qx - qy, np.concatenate([x, y]))
        if lipschitz is not None:
            w["continuity"].update(abs(qx - qy) - lipschitz * norm(x - y), np.concatenate([x, y]))

    notices = []
    checks = {}
    for name, worst in w.items():
        if name == "boundary_Q" and bcone is None:
            msg = "boundary check skipped: range cone has no halfspace representation"
            notices.append(msg)
            checks[name] = worst.result(skipped=True, notice=msg)
        else:
            checks[name] = worst.result()
    return RetractionAuditReport("retraction audit", checks, seed=seed, samples=samples,
                                 notices=notices)


@dataclass(frozen=True)
class SubadditivityCertificate(ConeOrderWitness):
    """Q(x + y) <=_M Qx + Qy, with s = q(x) + q(y) - q(x + y).

    `identity_residual` is ||difference - s (-u)||, which vanishes because
    Qx + Qy - Q(x + y) = R(x + y) - Rx - Ry.
    """

    slack: float = 0.0
    identity_residual: float = 0.0


def subadditivity_certificate(pair, x, y, tol: float = FEAS_TOL) -> SubadditivityCertificate:
    x = as_vector(x, pair.dim)
    y = as_vector(y, pair.dim)
    q = pair.functional
    lower = pair.apply_Q(x + y)
    upper = pair.apply_Q(x) + pair.apply_Q(y)
    d = upper - lower
    s = q(x) + q(y) - q(x + y)
    member = _outside(pair.cone, d) <= tol and s >= -tol
    resid = float(np.linalg.norm(d + s * pair.ray_direction))
    return SubadditivityCertificate(lower, upper, d, bool(member), float(s), resid)
