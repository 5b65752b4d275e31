"""Uniform result object for the consistency checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one checker run.

    failures holds JSON-serializable witness records; empty means the check
    passed.  Serialization schema is fixed: {check, parameters, failures,
    elapsed} with elapsed in seconds.
    """

    check: str
    parameters: dict
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 6),
        }

    def summary_line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{status} {self.check} [{params}] failures={len(self.failures)} elapsed={self.elapsed:.3f}s"
