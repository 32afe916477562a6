"""Numeric integration of the flows and trajectory-level cross-checks."""

from .compiler import CompiledField, compile_field, compile_functions
from .integrator import AdaptiveIntegrator, Trajectory, integrate, check_params
from .checks import (NumericMap, symmetry_commute_check, integral_drift, integral_drift_check,
                     trajectory_frame, export_csv, round_trip_check, closed_form_check,
                     closed_form_error, convergence_check, CLOSED_FORM_PARAMS,
                     CLOSED_FORM_INITIAL, generic_d6_point, GENERIC_D6_INITIAL, DRIFT_CASES,
                     verify_numeric)

__all__ = [
    'CompiledField', 'compile_field', 'compile_functions', 'AdaptiveIntegrator', 'Trajectory',
    'integrate', 'check_params', 'NumericMap', 'symmetry_commute_check', 'integral_drift',
    'integral_drift_check', 'trajectory_frame', 'export_csv', 'round_trip_check',
    'closed_form_check', 'closed_form_error', 'convergence_check', 'CLOSED_FORM_PARAMS',
    'CLOSED_FORM_INITIAL', 'generic_d6_point', 'GENERIC_D6_INITIAL', 'DRIFT_CASES', 'verify_numeric',
]
