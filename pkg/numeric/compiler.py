"""Compile exact rational functions into numpy callables for fixed parameter values."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Mapping, Sequence, Union

import numpy as np
import sympy

from algebra import RatFn, UsageError
from systems import HamiltonianSystem, vector_field

logger = logging.getLogger(__name__)

Numeric = Union[complex, Fraction]


def _symbols(names: Sequence[str]):
    return [sympy.Symbol(n) for n in names]


def _value(v) -> sympy.Expr:
    if isinstance(v, Fraction):
        return sympy.Rational(v.numerator, v.denominator)
    return sympy.sympify(v)


def _specialize(f: RatFn, values: Mapping[str, Numeric]) -> sympy.Expr:
    """sympy form of f with the parameter values plugged in."""
    return f.as_expr().subs({sympy.Symbol(k): _value(v) for k, v in values.items()})


def compile_functions(functions: Sequence[RatFn], arguments: Sequence[str],
                      values: Mapping[str, Numeric]) -> Callable[..., np.ndarray]:
    """One numpy callable returning all ``functions`` at once.

    Remaining free symbols must be among ``arguments``; shared subexpressions
    are eliminated once.
    """
    exprs = [_specialize(f, values) for f in functions]
    allowed = set(arguments)
    for expr in exprs:
        extra = {str(s) for s in expr.free_symbols} - allowed
        if extra:
            raise UsageError(f"values missing for {sorted(extra)}")
    compiled = sympy.lambdify(_symbols(arguments), exprs, modules="numpy", cse=True)

    def evaluate(*args) -> np.ndarray:
        return np.asarray(compiled(*args), dtype=complex)

    return evaluate


@dataclass
class CompiledField:
    """Right-hand side and its denominators for one parameter point."""

    names: Sequence[str]
    rhs: Callable[..., np.ndarray]
    denominators: Callable[..., np.ndarray]

    def __call__(self, t: float, state: np.ndarray) -> np.ndarray:
        return self.rhs(t, *state)

    def smallest_denominator(self, t: float, state: np.ndarray) -> float:
        return float(np.min(np.abs(self.denominators(t, *state))))


def param_values(system: HamiltonianSystem, params: Sequence[Numeric]) -> Dict[str, Numeric]:
    if len(params) != len(system.params):
        raise UsageError(f"{system.id} takes {len(system.params)} parameters, got {len(params)}")
    return dict(zip(system.params, params))


def compile_field(system: HamiltonianSystem, params: Sequence[Numeric]) -> CompiledField:
    field = vector_field(system)
    values = param_values(system, params)
    arguments = ("t",) + tuple(system.phase_vars)
    rhs = compile_functions(field.components, arguments, values)
    denominators = compile_functions([RatFn(f.den) for f in field.components], arguments, values)
    logger.debug(f"Compiled {system.id} vector field")
    return CompiledField(system.phase_vars, rhs, denominators)
