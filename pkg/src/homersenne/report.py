from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity at one parameter point.

    ``lhs`` and ``rhs`` are computed by separate code paths; ``holds`` is
    their exact equality.
    """

    name: str
    params: dict[str, int] = field(hash=False)
    lhs: Fraction
    rhs: Fraction
    holds: bool

    @classmethod
    def compare(cls, name: str, params: dict[str, int], lhs, rhs) -> IdentityReport:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(name, dict(params), lhs, rhs, lhs == rhs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(self.params),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "holds": self.holds,
        }

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        status = "holds" if self.holds else "FAILS"
        return f"{self.name}({args}): lhs={self.lhs} rhs={self.rhs} [{status}]"
