"""Validation of numeric command inputs."""

import math
from typing import List, Optional, Sequence, Tuple

from algebra import UsageError
from systems import build_system

from .helpers import Number


class InputValidator:
    """Validate a parameter point, an initial state and a time interval for one system."""

    def __init__(self, sys_id: str):
        self.system = build_system(sys_id)
        self.sys_id = sys_id

    def validate_params(self, params: Sequence[Number]) -> List[str]:
        expected = len(self.system.params)
        if len(params) != expected:
            return [f"{self.sys_id} takes {expected} parameters "
                    f"({', '.join(self.system.params)}), got {len(params)}"]
        return []

    def validate_initial(self, initial: Sequence[Number]) -> List[str]:
        issues = []
        expected = len(self.system.phase_vars)
        if len(initial) != expected:
            issues.append(f"{self.sys_id} needs {expected} initial values "
                          f"({', '.join(self.system.phase_vars)}), got {len(initial)}")
        for name, value in zip(self.system.phase_vars, initial):
            z = complex(value)
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                issues.append(f"initial value of {name} is not finite")
        return issues

    def validate_interval(self, t0: float, t1: float) -> List[str]:
        issues = []
        if not (math.isfinite(t0) and math.isfinite(t1)):
            issues.append("time endpoints must be finite")
        elif t0 == 0 or t1 == 0:
            issues.append("t = 0 is a fixed singularity")
        elif (t0 > 0) != (t1 > 0):
            issues.append("the interval may not cross t = 0")
        return issues

    def validate(self, params: Sequence[Number], initial: Optional[Sequence[Number]] = None,
                 interval: Optional[Tuple[float, float]] = None) -> Tuple[bool, List[str]]:
        issues = self.validate_params(params)
        if initial is not None:
            issues += self.validate_initial(initial)
        if interval is not None:
            issues += self.validate_interval(*interval)
        return len(issues) == 0, issues

    def require(self, params, initial=None, interval=None) -> None:
        ok, issues = self.validate(params, initial, interval)
        if not ok:
            raise UsageError("; ".join(issues))
