"""Exception hierarchy shared by every lab package."""

from typing import Any, Optional


class LabError(Exception):
    """Base class for all errors raised by the lab."""


class DomainError(LabError):
    """A rational function would get an identically zero denominator."""


class UsageError(LabError):
    """Unknown system, generator, chart or malformed user input."""


class VerificationFailure(LabError):
    """An identity that must hold exactly did not; carries the witness."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.witness = witness


class PoleError(LabError):
    """Numeric integration came closer to a pole than the configured guard."""

    def __init__(self, message: str, t: Optional[float] = None):
        super().__init__(message)
        self.t = t


class StepUnderflow(LabError):
    """The adaptive integrator needed a step below the configured minimum."""

    def __init__(self, message: str, t: Optional[float] = None):
        super().__init__(message)
        self.t = t
