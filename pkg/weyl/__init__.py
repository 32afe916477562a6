"""Backlund transformation groups: generators, relations, symmetry checks, translations."""

from .birational import (BirationalMap, make_map, identity, compose, word, power, is_identity,
                         equal_maps, map_order, inverse)
from .generators import generator, roster, roster_names, reflections, automorphisms
from .cartan import CartanData, cartan_data, DIAGRAMS
from .relations import (verify_relations, verify_symmetry, pullback_residuals, map_is_symmetry,
                        conjugation_permutation, verify_conjugations)
from .translations import (translation, translation_names, parameter_shift, parameter_action,
                           verify_translations, verify_printed_words, WORDS, SHIFTS,
                           PRINTED_WORDS)

__all__ = [
    'BirationalMap', 'make_map', 'identity', 'compose', 'word', 'power', 'is_identity',
    'equal_maps', 'map_order', 'inverse', 'generator', 'roster', 'roster_names', 'reflections',
    'automorphisms', 'CartanData', 'cartan_data', 'DIAGRAMS', 'verify_relations',
    'verify_symmetry', 'pullback_residuals', 'map_is_symmetry', 'conjugation_permutation',
    'verify_conjugations', 'translation', 'translation_names', 'parameter_shift',
    'parameter_action', 'verify_translations', 'verify_printed_words', 'WORDS', 'SHIFTS',
    'PRINTED_WORDS',
]
