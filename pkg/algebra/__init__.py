"""Exact algebra: sparse polynomials and rational functions over Q(i)."""

from .errors import (LabError, DomainError, UsageError, VerificationFailure,
                     PoleError, StepUnderflow)
from .ring import (VARIABLE_ORDER, PHASE_VARIABLES, REAL_RING, GAUSSIAN_RING,
                   GaussianRational, gaussian)
from .ratfn import RatFn, gens, I, ONE, ZERO, normalize, ratfn, substitute, rename
from .constraint import ConstraintIdeal, equals_mod_constraint
from .calculus import (differentiate, is_polynomial, degree_in, jacobian, matmul,
                       is_symplectic, antiderivative, laurent_leading,
                       limit_at_zero)

__all__ = [
    'LabError', 'DomainError', 'UsageError', 'VerificationFailure', 'PoleError',
    'StepUnderflow', 'VARIABLE_ORDER', 'PHASE_VARIABLES', 'REAL_RING', 'GAUSSIAN_RING',
    'GaussianRational', 'gaussian', 'RatFn', 'gens', 'I', 'ONE', 'ZERO', 'normalize',
    'ratfn', 'substitute', 'rename', 'ConstraintIdeal', 'equals_mod_constraint',
    'differentiate', 'is_polynomial', 'degree_in', 'jacobian', 'matmul',
    'is_symplectic', 'antiderivative', 'laurent_leading',
    'limit_at_zero',
]
