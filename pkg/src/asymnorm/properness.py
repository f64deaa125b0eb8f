"""Sampled checks of the equivalent characterisations of a proper asymmetric norm.

For an asymmetric norm p and a candidate apex u with p(u) = 1:

  (i)    p(x - p(x) u) = 0 for every x
  (ii)   p(x - u) = 0 for every x with p(x) = 1
  (iii)  {x - p(x) u : x} equals the kernel {x : p(x) = 0}

Universal quantifiers are replaced by seeded random samples plus the
deterministic stencil from `gauge.stencil`. Existence of a generating cone
is not checked for black-box functionals; gauges built from proper cones
exercise that direction constructively.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cone import sample_members
from .gauge import (GaugeNorm, SamplingStarved, as_functional, sample_points,
                    sphere_sample, stencil)
from .numeric import FEAS_TOL, as_vector
from .report import CheckReport, CheckResult, Worst


class ApexError(ValueError):
    """The candidate apex does not satisfy p(u) = 1."""


def _prepare(p, u, tol):
    f = as_functional(p)
    u = as_vector(u, f.dim)
    pu = f(u)
    if abs(pu - 1.0) > tol:
        raise ApexError("candidate apex has p(u) = %.12g, expected 1" % pu)
    return f, u


def _points(p, u, samples, seed):
    rng = np.random.default_rng(seed)
    return np.vstack([sample_points(rng, samples, p.dim), stencil(p, extra=[u])])


def check_condition_i(p, u, samples: int = 10_000, seed: int = 42,
                      tol: float = FEAS_TOL) -> CheckResult:
    """max over sampled x of p(x - p(x) u)."""
    f, u = _prepare(p, u, tol)
    worst = Worst("condition_i", tol)
    for x in _points(p, u, samples, seed):
        worst.update(f(x - f(x) * u), x)
    return worst.result()


def _sphere_points(p, f, samples, seed, tol):
    """Points with p(x) = 1: sampled directions rescaled, plus the rescaled stencil."""
    if isinstance(p, GaugeNorm):
        pts = sphere_sample(p, samples, seed, tol)
    else:
        rng = np.random.default_rng(seed)
        pts = []
        draws = 0
        while len(pts) < samples:
            if draws >= 100 * samples:
                raise SamplingStarved("no directions with p > tol after %d draws" % draws)
            v = rng.standard_normal(f.dim)
            draws += 1
            value = f(v)
            if value > tol:
                pts.append(v / value)
        pts = np.array(pts)
    extra = [x / f(x) for x in stencil(p) if f(x) > tol]
    return np.vstack([pts] + [np.atleast_2d(e) for e in extra])


def check_condition_ii(p, u, samples: int = 10_000, seed: int = 42,
                       tol: float = FEAS_TOL) -> CheckResult:
    """max over sampled x on the unit sphere {p = 1} of p(x - u)."""
    f, u = _prepare(p, u, tol)
    worst = Worst("condition_ii", tol)
    for x in np.vstack([_sphere_points(p, f, samples, seed, tol), u[None, :]]):
        worst.update(f(x - u), x)
    return worst.result()


def _kernel_samples(p, f, u, samples, seed, tol):
    rng = np.random.default_rng(seed + 1)
    if isinstance(p, GaugeNorm):
        return np.vstack([np.zeros((1, f.dim)), sample_members(p.cone, samples, rng)])
    # Black box: keep whichever random points the functional annihilates.
    cands = np.vstack([sample_points(rng, samples, f.dim), stencil(p, extra=[-u])])
    return np.array([x for x in cands if f(x) <= tol] or [np.zeros(f.dim)])


def check_condition_iii(p, u, samples: int = 10_000, seed: int = 42,
                        tol: float = FEAS_TOL):
    """Return (forward, backward) results for {x - p(x) u} = kernel.

    Forward: every x - p(x) u lands in the kernel. Backward: every sampled
    kernel member k is attained, with x = k as preimage; the violation is
    the larger of p(k) and ||(k - p(k) u) - k||.
    """
    f, u = _prepare(p, u, tol)
    fwd = Worst("condition_iii_fwd", tol)
    for x in _points(p, u, samples, seed):
        fwd.update(f(x - f(x) * u), x)
    bwd = Worst("condition_iii_bwd", tol)
    for k in _kernel_samples(p, f, u, samples, seed, tol):
        pk = f(k)
        image = k - pk * u
        bwd.update(max(pk, float(np.linalg.norm(image - k))), k)
    return fwd.result(), bwd.result()


@dataclass
class PropernessReport(CheckReport):
    candidate_apex: np.ndarray = None
    consistent: bool = True

    @property
    def condition_i(self) -> CheckResult:
        return self.checks["condition_i"]

    @property
    def condition_ii(self) -> CheckResult:
        return self.checks["condition_ii"]

    @property
    def condition_iii_fwd(self) -> CheckResult:
        return self.checks["condition_iii_fwd"]

    @property
    def condition_iii_bwd(self) -> CheckResult:
        return self.checks["condition_iii_bwd"]

    @property
    def verdicts(self):
        """Pass/fail of (i), (ii) and (iii) as a triple."""
        return (self.condition_i.passed, self.condition_ii.passed,
                self.condition_iii_fwd.passed and self.condition_iii_bwd.passed)

    def to_dict(self) -> dict:
        out = super().to_dict()
        out["candidate_apex"] = [float(v) for v in self.candidate_apex]
        out["consistent"] = self.consistent
        return out


def verify_equivalence(p, u, samples: int = 10_000, seed: int = 42,
                       tol: float = FEAS_TOL) -> PropernessReport:
    """Run (i), (ii), (iii) and flag disagreement among them as a meta-failure."""
    c1 = check_condition_i(p, u, samples, seed, tol)
    c2 = check_condition_ii(p, u, samples, seed, tol)
    c3f, c3b = check_condition_iii(p, u, samples, seed, tol)
    checks = {c.name: c for c in (c1, c2, c3f, c3b)}
    report = PropernessReport("properness(%s)" % as_functional(p).name, checks, seed=seed,
                              samples=samples, candidate_apex=as_vector(u))
    report.consistent = len(set(report.verdicts)) == 1
    if not report.consistent:
        report.notices.append("conditions disagree %s; tolerance likely miscalibrated"
                              % (report.verdicts,))
    return report
