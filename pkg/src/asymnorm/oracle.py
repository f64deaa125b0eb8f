"""Brute-force gauge evaluation and the reference cone fixtures.

`gauge_by_bisection` only ever asks "is x - t u in K?", so it shares no code
path with the closed form or the LP used by `gauge_eval_oracle`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from .cone import Cone, GeneratorCone, HalfspaceCone, contains
from .gauge import GaugeNorm
from .numeric import Vector, as_vector

BISECTION_TOL = 1e-10


def gauge_by_bisection(cone: Cone, u, x, tol: float = BISECTION_TOL,
                       membership_tol: float = 0.0, trace: Optional[list] = None) -> float:
    """inf{t >= 0 : x - t u in K} by doubling then bisection.

    The feasible t form an upward-closed ray, so the bracket [lo, hi] keeps
    lo infeasible and hi feasible throughout. If `trace` is a list, every
    bracket is appended to it. Returns the feasible endpoint.
    """
    u = as_vector(u, cone.dim)
    x = as_vector(x, cone.dim)

    def feasible(t):
        return contains(cone, x - t * u, membership_tol)

    if feasible(0.0):
        return 0.0
    hi = 1.0
    while not feasible(hi):
        hi *= 2.0
        if hi > 1e300:
            raise RuntimeError("no feasible t found; is -u interior?")
    lo = 0.0 if hi == 1.0 else hi / 2.0
    if trace is not None:
        trace.append((lo, hi))
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if feasible(mid):
            hi = mid
        else:
            lo = mid
        if trace is not None:
            trace.append((lo, hi))
    return hi


@dataclass(frozen=True, eq=False)
class Fixture:
    name: str
    cone_h: HalfspaceCone
    cone_v: GeneratorCone
    apex: Vector
    closed_form: Optional[Callable[[np.ndarray], float]] = None
    description: str = ""

    @property
    def dim(self) -> int:
        return self.cone_h.dim

    def gauge(self, rep: str = "H") -> GaugeNorm:
        return GaugeNorm(self.cone_h if rep == "H" else self.cone_v, self.apex)


def _max_coord(x):
    return max(0.0, float(np.max(x)))


def _wedge_form(x):
    return max(0.0, float(x[1] + abs(x[0])))


def halfline() -> Fixture:
    return Fixture("halfline", HalfspaceCone([[-1.0]], irredundant=True), GeneratorCone([[-1.0]]),
                   np.array([1.0]), _max_coord, "K = (-inf, 0], u = 1, q(x) = max(0, x)")


def orthant(n: int) -> Fixture:
    eye = np.eye(n)
    return Fixture("orthant%d" % n, HalfspaceCone(-eye, irredundant=True), GeneratorCone(-eye),
                   np.ones(n), _max_coord,
                   "K = nonpositive orthant of R^%d, u = ones, q(x) = max(0, max_i x_i)" % n)


def wedge() -> Fixture:
    return Fixture("wedge",
                   HalfspaceCone([[-1.0, -1.0], [1.0, -1.0]], irredundant=True),
                   GeneratorCone([[1.0, -1.0], [-1.0, -1.0]]),
                   np.array([0.0, 1.0]), _wedge_form,
                   "K = {x2 <= -|x1|}, u = (0, 1), q(x) = max(0, x2 + |x1|)")


def polygonal_cone(facets: int = 16, half_angle: float = np.pi / 4) -> Fixture:
    """Regular `facets`-sided pyramid around the -e3 axis, inscribed in a circular cone.

    Edges sit at equal angles 2 pi k / facets; each facet normal is the
    inward normal of the plane through two neighbouring edges.
    """
    r = np.tan(half_angle)
    theta = 2.0 * np.pi * np.arange(facets) / facets
    edges = np.column_stack([r * np.cos(theta), r * np.sin(theta), -np.ones(facets)])
    normals = np.cross(edges, np.roll(edges, -1, axis=0))
    axis = np.array([0.0, 0.0, -1.0])
    normals *= np.sign(normals @ axis)[:, None]
    return Fixture("circular%d" % facets, HalfspaceCone(normals, irredundant=True),
                   GeneratorCone(edges), np.array([0.0, 0.0, 1.0]), None,
                   "%d-facet pyramid approximating a circular cone in R^3 (no closed form)" % facets)


def fixture_suite() -> List[Fixture]:
    return [halfline(), orthant(2), orthant(3), orthant(6), wedge(), polygonal_cone(16)]


def get_fixture(name: str) -> Fixture:
    for f in fixture_suite():
        if f.name == name:
            return f
    raise KeyError("unknown fixture %r; known: %s"
                   % (name, ", ".join(f.name for f in fixture_suite())))
