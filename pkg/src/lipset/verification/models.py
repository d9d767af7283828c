"""
Verification result models.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..utils.json import json_pretty, load_json, stable_hash, write_text


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass
class CheckResult:
    """
    Outcome of one invariant check.

    `condition` names the violated condition of a failed check.
    """

    name: str
    suite: str
    status: CheckStatus
    condition: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "suite": self.suite,
            "status": self.status.value,
            "condition": self.condition,
            "details": self.details,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> CheckResult:
        return cls(
            name=data["name"],
            suite=data["suite"],
            status=CheckStatus(data["status"]),
            condition=data.get("condition"),
            details=data.get("details", {}),
        )

    def __str__(self) -> str:
        parts = [f"[{self.status.value}]", f"{self.suite}/{self.name}"]
        if self.condition:
            parts.append(f"condition={self.condition}")
        return " ".join(parts)


class VerificationReport:
    """
    Ordered collection of check results with a content fingerprint.

    Two runs with the same parameters produce the same fingerprint.
    """

    def __init__(self, suite: str, seed: int, parameters: Optional[Dict[str, Any]] = None) -> None:
        self.suite = suite
        self.seed = seed
        self.parameters = parameters or {}
        self.results: List[CheckResult] = []

    def record(self, result: CheckResult) -> None:
        self.results.append(result)

    def get_by_suite(self, suite: str) -> List[CheckResult]:
        return [r for r in self.results if r.suite == suite]

    def get_failed(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.get_failed()

    def _body(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "parameters": self.parameters,
            "passed": self.passed,
            "checks": [r.to_dict() for r in self.results],
        }

    @property
    def fingerprint(self) -> str:
        return stable_hash(self._body())

    def to_dict(self) -> Dict[str, Any]:
        body = self._body()
        body["fingerprint"] = self.fingerprint
        return body

    def save(self, path: Path) -> None:
        write_text(path, json_pretty(self.to_dict()) + "\n")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> VerificationReport:
        report = cls(data["suite"], data["seed"], data.get("parameters", {}))
        for item in data.get("checks", []):
            report.record(CheckResult.from_dict(item))
        return report

    @classmethod
    def load(cls, path: Path) -> VerificationReport:
        return cls.from_dict(load_json(path))
