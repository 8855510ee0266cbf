from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

VERIFICATION_MODES = ('pkme', 'pme', 'ame')


@dataclass(frozen=True)
class CheckResult:
    subset: str
    positions: Tuple[int, ...]
    deviation: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    mode: str
    parameters: Dict[str, Any]
    checks: Tuple[CheckResult, ...]
    tolerance: float
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        assert self.mode in VERIFICATION_MODES, f'unknown verification mode {self.mode}'
        assert all(c.deviation >= 0 for c in self.checks), 'deviations are norms and cannot be negative'

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def num_checks(self) -> int:
        return len(self.checks)

    @property
    def worst(self) -> Optional[CheckResult]:
        # first one wins on ties so the result follows check order
        worst = None
        for c in self.checks:
            if worst is None or c.deviation > worst.deviation:
                worst = c
        return worst

    @property
    def max_deviation(self) -> float:
        return 0. if self.worst is None else self.worst.deviation
