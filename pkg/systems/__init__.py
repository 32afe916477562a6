"""Hamiltonian systems of types D6(1), B5(1), D5(2), D5(1) and their building blocks."""

from .hamiltonians import (SubsystemHamiltonian, subsystem, SUBSYSTEM_IDS, h_iii, h_iii_tilde,
                           gamma1, h_iii_d7, h1, h2, h3, h4, h5, k1, k2, k5)
from .catalog import (HamiltonianSystem, VectorField, build_system, vector_field,
                      vector_field_of, phase_degree, MAIN_SYSTEMS)
from .printed import printed_system, transcription_check, erratum, ERRATA
from .checks import (decomposition, hamiltonian_decomposition_check, scalar_piii_coefficients,
                     hamiltonian_from_vector_field,
                     scalar_piii_reduction_check)

__all__ = [
    'SubsystemHamiltonian', 'subsystem', 'SUBSYSTEM_IDS', 'h_iii', 'h_iii_tilde', 'gamma1',
    'h_iii_d7', 'h1', 'h2', 'h3', 'h4', 'h5', 'k1', 'k2', 'k5', 'HamiltonianSystem',
    'VectorField', 'build_system', 'vector_field', 'vector_field_of', 'phase_degree',
    'MAIN_SYSTEMS', 'printed_system', 'transcription_check', 'erratum', 'ERRATA',
    'decomposition', 'hamiltonian_decomposition_check', 'scalar_piii_coefficients',
    'scalar_piii_reduction_check', 'hamiltonian_from_vector_field',
]
