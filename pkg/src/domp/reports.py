"""Check results shared by the verification layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""
    residual: Optional[Any] = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.residual is not None:
            out["residual"] = self.residual
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other) -> None:
        """Append the checks of another Report or of a list of checks."""
        self.checks.extend(other.checks if isinstance(other, Report) else other)

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def all_pass(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def failed(self) -> list:
        return [c.name for c in self.checks if c.status == FAIL]

    def to_json(self) -> list:
        return [c.to_json() for c in self.checks]


def status_of(flag: bool) -> str:
    return PASS if flag else FAIL
