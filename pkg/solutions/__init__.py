"""Closed-form solutions and first integrals."""

from .seeds import (ClosedFormSolution, seed_solution, residuals, verify_solution,
                    perturbed_control, fixed_point_check, verify_solutions, SEED_IDS)
from .integrals import (FirstIntegral, FIRST_INTEGRALS, first_integral, integral_derivative,
                        scaling_residual, verify_first_integral, verify_integrals)

__all__ = [
    'ClosedFormSolution', 'seed_solution', 'residuals', 'verify_solution', 'perturbed_control',
    'fixed_point_check', 'verify_solutions', 'SEED_IDS', 'FirstIntegral', 'FIRST_INTEGRALS',
    'first_integral', 'integral_derivative', 'scaling_residual', 'verify_first_integral',
    'verify_integrals',
]
