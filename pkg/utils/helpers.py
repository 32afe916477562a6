"""Helper utility functions."""

import json
from fractions import Fraction
from typing import Any, List, Sequence, Union

from algebra import UsageError
from config import SYSTEM_ALIASES

Number = Union[complex, Fraction]


def format_seconds(seconds: float) -> str:
    """Convert seconds to a short human readable string."""
    if seconds is None or seconds != seconds:  # NaN
        return "N/A"
    if seconds < 1e-3:
        return f"{seconds * 1e6:.0f} us"
    if seconds < 1:
        return f"{seconds * 1e3:.1f} ms"
    return f"{seconds:.2f} s"


def format_complex(z: complex, digits: int = 12) -> str:
    if z.imag == 0:
        return f"{z.real:.{digits}g}"
    return f"{z.real:.{digits}g}{z.imag:+.{digits}g}j"


def complex_pairs(values: Sequence[complex]) -> List[List[float]]:
    """JSON-friendly [re, im] pairs."""
    return [[complex(v).real, complex(v).imag] for v in values]


def truncate_text(text: Any, max_length: int = 100) -> str:
    """Truncate text to specified length with ellipsis."""
    if not isinstance(text, str):
        text = str(text)
    if len(text) <= max_length:
        return text
    return text[:max_length - 3] + "..."


def resolve_system(name: str) -> str:
    """Map a command-line alias (d6, b5, ...) or a canonical id to the canonical id."""
    key = name.strip().lower().replace("_", "")
    if key in SYSTEM_ALIASES:
        return SYSTEM_ALIASES[key]
    raise UsageError(f"Unknown system '{name}'; expected one of {', '.join(SYSTEM_ALIASES)}")


def _number(item: Any, rational: bool) -> Number:
    if isinstance(item, (list, tuple)):
        if len(item) != 2:
            raise UsageError(f"complex values are [re, im] pairs, got {item!r}")
        re, im = item
        if rational:
            if Fraction(str(im)) != 0:
                raise UsageError(f"--rational values must be real, got {item!r}")
            return Fraction(str(re))
        return complex(float(re), float(im))
    if isinstance(item, bool) or not isinstance(item, (int, float, str)):
        raise UsageError(f"not a number: {item!r}")
    if rational:
        try:
            return Fraction(str(item))
        except ValueError:
            raise UsageError(f"not a rational number: {item!r}") from None
    try:
        return complex(float(Fraction(item))) if isinstance(item, str) else complex(item)
    except ValueError:
        raise UsageError(f"not a number: {item!r}") from None


def parse_values(text: str, rational: bool = False) -> List[Number]:
    """Parse a JSON array whose entries are numbers, "p/q" strings or [re, im] pairs.

    With ``rational`` every entry becomes an exact Fraction.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON array: {e.msg}") from None
    if not isinstance(data, list):
        raise UsageError("expected a JSON array")
    return [_number(item, rational) for item in data]
