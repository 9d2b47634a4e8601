"""Result types shared by the invariant computations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..groebner import Verdict

KINDS = ("rank", "subrank", "geometric_rank")


@dataclass(frozen=True)
class InvariantValue:
    """An exact value (``lo == hi``) or an interval left open by the budget."""

    kind: str
    lo: int
    hi: int
    steps: int = 0
    certificate: Any = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown invariant kind {self.kind!r}")
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def status(self) -> str:
        return "exact" if self.exact else "unknown"

    @property
    def value(self):
        return self.lo if self.exact else None

    def __str__(self):
        if self.exact:
            return f"{self.kind} = {self.lo}"
        return f"{self.kind} in [{self.lo}, {self.hi}] (unknown)"


@dataclass(frozen=True)
class Decision:
    """Outcome of a rank or subrank decision. ``how`` names the deciding argument."""

    verdict: Verdict
    certificate: Any = None
    steps: int = 0
    how: str = ""

    @property
    def feasible(self):
        return self.verdict is Verdict.FEASIBLE

    @property
    def infeasible(self):
        return self.verdict is Verdict.INFEASIBLE
