"""Pass/fail records produced by the sampled property checkers."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional

import numpy as np


def _floats(v):
    return None if v is None else [float(t) for t in np.asarray(v).reshape(-1)]


@dataclass
class CheckResult:
    name: str
    max_violation: float
    tolerance: float
    witness: Optional[np.ndarray] = None
    evaluated: int = 0
    skipped: bool = False
    notice: str = ""

    @property
    def passed(self) -> bool:
        return self.skipped or self.max_violation <= self.tolerance

    def to_dict(self) -> dict:
        out = {
            "pass": self.passed,
            "max_violation": float(self.max_violation),
            "tolerance": float(self.tolerance),
            "witness": _floats(self.witness),
            "evaluated": int(self.evaluated),
        }
        if self.skipped:
            out["skipped"] = True
        if self.notice:
            out["notice"] = self.notice
        return out


class Worst:
    """Running maximum of a violation measure together with its argmax point.

    Ties keep the earliest point, so results depend only on sample order.
    """

    def __init__(self, name: str, tolerance: float):
        self.name = name
        self.tolerance = tolerance
        self.value = 0.0
        self.witness = None
        self.count = 0

    def update(self, violation: float, point) -> None:
        self.count += 1
        violation = float(violation)
        if violation > self.value:
            self.value = violation
            self.witness = np.array(point, dtype=float)

    def result(self, **extra) -> CheckResult:
        witness = self.witness if self.value > self.tolerance else None
        return CheckResult(self.name, self.value, self.tolerance, witness, self.count, **extra)


@dataclass
class CheckReport:
    """A named collection of check results from one seeded run."""

    title: str
    checks: Dict[str, CheckResult]
    seed: Optional[int] = None
    samples: Optional[int] = None
    notices: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def __getitem__(self, name: str) -> CheckResult:
        return self.checks[name]

    def failures(self) -> Iterable[CheckResult]:
        return [c for c in self.checks.values() if not c.passed]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "pass": self.passed,
            "seed": self.seed,
            "samples": self.samples,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
            "notices": list(self.notices),
        }

    def summary(self) -> str:
        lines = ["%s: %s" % (self.title, "PASS" if self.passed else "FAIL")]
        for name, c in self.checks.items():
            state = "skip" if c.skipped else ("ok" if c.passed else "FAIL")
            lines.append("  %-20s %-4s max_violation=%.3e" % (name, state, c.max_violation))
        return "\n".join(lines)
