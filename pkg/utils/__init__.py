"""Utility functions package."""

from .helpers import (format_seconds, format_complex, complex_pairs, truncate_text,
                      resolve_system, parse_values)
from .validators import InputValidator

__all__ = ['InputValidator', 'format_seconds', 'format_complex', 'complex_pairs',
           'truncate_text', 'resolve_system', 'parse_values']
