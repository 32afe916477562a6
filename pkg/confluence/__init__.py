"""Degenerations, the B5 to D5(1) equivalence and the small symplectic transformations."""

from .degeneration import (Degeneration, DEGENERATIONS, degeneration, degenerate,
                           transformed_field, constraint_image, limits)
from .transforms import (PairTransform, TRANSFORMS, transport, symplectic_tr,
                         transformed_hamiltonian, printed_hamiltonian, verify_tk_relations,
                         verify_uv_correspondence, verify_a1_symmetry, equivalence_B5_to_D51)
from .suite import CONFLUENCE_SUITES, verify_confluence

__all__ = [
    'Degeneration', 'DEGENERATIONS', 'degeneration', 'degenerate', 'transformed_field',
    'constraint_image', 'limits', 'PairTransform', 'TRANSFORMS', 'transport', 'symplectic_tr',
    'transformed_hamiltonian', 'printed_hamiltonian', 'verify_tk_relations',
    'verify_uv_correspondence', 'verify_a1_symmetry', 'equivalence_B5_to_D51',
    'CONFLUENCE_SUITES', 'verify_confluence',
]
