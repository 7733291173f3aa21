"""Check and report containers shared by the verification layers.

A Check records one numerical comparison (lhs vs rhs) together with the
mathematical statement it instantiates.  A VerificationReport bundles the
checks of one named suite.  Reports serialize to plain dicts so that two
runs with identical inputs produce byte-identical JSON.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Tolerances:
    """Pass policy for inequality checks: lhs <= rhs*(1+rtol) + atol + err."""

    rtol: float = 1e-6
    atol: float = 1e-9

    def leq(self, lhs: float, rhs: float, err: float = 0.0) -> bool:
        return lhs <= rhs * (1.0 + self.rtol) + self.atol + err


@dataclass
class Check:
    """One verification item.

    passed is True/False for asserted inequalities and None for
    informational rows (measured constants, sequences) that carry data
    but assert nothing.
    """

    name: str
    statement: str
    lhs: float = math.nan
    rhs: float = math.nan
    passed: bool | None = None
    skipped: bool = False
    reason: str = ""
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "statement": self.statement,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "pass": self.passed,
            "skipped": self.skipped,
            "reason": self.reason,
            "detail": {k: _jsonable(v) for k, v in sorted(self.detail.items())},
        }


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    tolerances: Tolerances = field(default_factory=Tolerances)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    @property
    def n_pass(self) -> int:
        return sum(1 for c in self.checks if c.passed is True)

    @property
    def n_fail(self) -> int:
        return sum(1 for c in self.checks if c.passed is False)

    @property
    def n_skip(self) -> int:
        return sum(1 for c in self.checks if c.skipped)

    @property
    def n_info(self) -> int:
        return sum(1 for c in self.checks if c.passed is None and not c.skipped)

    @property
    def all_passed(self) -> bool:
        return self.n_fail == 0

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "suite": self.suite,
            "tolerances": {"rtol": self.tolerances.rtol, "atol": self.tolerances.atol},
            "summary": {
                "pass": self.n_pass,
                "fail": self.n_fail,
                "skip": self.n_skip,
                "info": self.n_info,
            },
            "checks": [c.to_dict() for c in self.sorted_checks()],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def to_table(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.sorted_checks():
            if c.skipped:
                status = "SKIP"
            elif c.passed is None:
                status = "INFO"
            else:
                status = "PASS" if c.passed else "FAIL"
            lhs = "" if math.isnan(c.lhs) else f"lhs={c.lhs:.6g}"
            rhs = "" if math.isnan(c.rhs) else f"rhs={c.rhs:.6g}"
            extra = f"  ({c.reason})" if c.reason else ""
            lines.append(f"[{status}] {c.name}: {c.statement}  {lhs} {rhs}{extra}".rstrip())
        lines.append(
            f"summary: {self.n_pass} pass, {self.n_fail} fail, "
            f"{self.n_skip} skip, {self.n_info} info"
        )
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in sorted(v.items())}
    return v
