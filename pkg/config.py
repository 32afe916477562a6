"""Configuration settings for the coupled Painlevé III verification lab."""

from dataclasses import dataclass, replace
from typing import Dict

from algebra.errors import UsageError


@dataclass
class NumericConfig:
    """Configuration for the adaptive integrator."""

    # Error control
    REL_TOL: float = 1e-10
    ABS_TOL: float = 1e-12

    # Step bounds
    MAX_STEP: float = 0.5
    MIN_STEP: float = 1e-12
    MAX_STEPS: int = 200000

    # Step size controller
    SAFETY: float = 0.9
    MIN_FACTOR: float = 0.2
    MAX_FACTOR: float = 5.0

    # Abort when a denominator gets this small
    POLE_GUARD: float = 1e-9

    # Least error reduction per halving of the tolerance
    ORDER_FACTOR: float = 2.0

    def validate(self) -> "NumericConfig":
        if not (self.REL_TOL > 0 and self.ABS_TOL > 0):
            raise UsageError("tolerances must be positive")
        if not (0 < self.MIN_STEP <= self.MAX_STEP):
            raise UsageError("need 0 < min_step <= max_step")
        if self.POLE_GUARD <= 0:
            raise UsageError("pole_guard must be positive")
        if self.ORDER_FACTOR <= 1:
            raise UsageError("order_factor must exceed 1")
        return self

    def with_tolerance(self, tol: float) -> "NumericConfig":
        """Copy with relative tolerance ``tol`` and absolute tolerance ``tol/100``."""
        return replace(self, REL_TOL=tol, ABS_TOL=tol / 100).validate()


@dataclass
class VerificationConfig:
    """Thresholds and bounds of the verification suites."""

    MAX_MAP_ORDER: int = 12
    COMMUTE_THRESHOLD: float = 1e-6
    DRIFT_THRESHOLD: float = 1e-8
    REPORT_SCHEMA: int = 1


# Command-line aliases of the systems
SYSTEM_ALIASES: Dict[str, str] = {
    "d6": "D6",
    "b5": "B5",
    "d52": "D52",
    "d51": "D51",
    "a1d7": "A1_D7",
}

# Display names used in reports
SYSTEM_TITLES: Dict[str, str] = {
    "D6": "coupled P_III system of type D6(1)",
    "B5": "degenerate system of type B5(1)",
    "D52": "degenerate system of type D5(2)",
    "D51": "system of type D5(1) (birational image of B5)",
    "A1_D7": "P_III(D7) system with A1(1) symmetry",
}

CONFLUENCE_CHECKS = ["d6-b5", "d6-d52", "b5-d51", "tr", "uv", "a1"]

SOLUTION_IDS = ["D6_fixed", "D6_alg1", "D6_alg2", "D52_alg"]

FIRST_INTEGRAL_IDS = ["I1", "I2", "I3", "I4", "I5"]
