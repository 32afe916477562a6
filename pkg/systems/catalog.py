"""Canonical Hamiltonian systems and Hamilton's equations."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from algebra import (ConstraintIdeal, RatFn, UsageError, degree_in, differentiate,
                     equals_mod_constraint, gens)

from .hamiltonians import SUBSYSTEM_IDS, subsystem

logger = logging.getLogger(__name__)

x, y, z, w, q, p, t = gens("x y z w q p t")
a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")

MAIN_PAIRS = (("x", "y"), ("z", "w"), ("q", "p"))


@dataclass(frozen=True)
class HamiltonianSystem:
    """A Hamiltonian with its canonical pairs, parameters and constraint."""

    id: str
    hamiltonian: RatFn
    pairs: Tuple[Tuple[str, str], ...]
    params: Tuple[str, ...]
    constraint: Optional[ConstraintIdeal] = None

    @property
    def phase_vars(self) -> Tuple[str, ...]:
        return tuple(name for pair in self.pairs for name in pair)

    def reduce(self, f: RatFn) -> RatFn:
        return self.constraint.reduce(f) if self.constraint else f

    def equal(self, a: RatFn, b: RatFn) -> bool:
        """Equality of two expressions on this system's constraint surface."""
        return equals_mod_constraint(a, b, self.constraint)


@dataclass(frozen=True)
class VectorField:
    """Right-hand sides in phase-variable order."""

    names: Tuple[str, ...]
    components: Tuple[RatFn, ...]

    def component(self, name: str) -> RatFn:
        return self.components[self.names.index(name)]

    def as_dict(self) -> Dict[str, RatFn]:
        return dict(zip(self.names, self.components))


def _d6() -> HamiltonianSystem:
    h = ((x**2 * (y - 1) * y + x * ((a0 + a1) * y - a1) + t * y) / t
         + (z**2 * (w - 1) * w + z * ((a0 + a1 + 2 * a2 + 2 * a3) * w - a3) + t * w) / t
         + (q**2 * (p - t) * p + q * ((a5 + a6 - 1) * p - t * a5) + p) / t
         + 2 * y * z * (z * w + a3) / t - 2 * (y + w) * p / t)
    relation = a0 + a1 + 2 * a2 + 2 * a3 + 2 * a4 + a5 + a6 - 1
    return HamiltonianSystem("D6", h, MAIN_PAIRS, ("a0", "a1", "a2", "a3", "a4", "a5", "a6"),
                             ConstraintIdeal(relation, "a6"))


def _b5() -> HamiltonianSystem:
    h = ((x**2 * y**2 + 2 * a0 * x * y + x + t * y) / t
         + (z**2 * w**2 + 2 * (a0 + a1 + a2) * z * w + t * w) / t
         + (q**2 * p**2 - t * q**2 * p + (a4 + a5 - 1) * q * p - a4 * t * q) / t
         + 2 * y * z * (z * w + a2) / t - 2 * (y + w) * p / t)
    relation = 2 * a0 + 2 * a1 + 2 * a2 + 2 * a3 + a4 + a5 - 1
    return HamiltonianSystem("B5", h, MAIN_PAIRS, ("a0", "a1", "a2", "a3", "a4", "a5"),
                             ConstraintIdeal(relation, "a5"))


def _d52() -> HamiltonianSystem:
    h = ((x**2 * y**2 + 2 * a0 * x * y + x) / (2 * t)
         + (z**2 * w**2 + 2 * (a0 + a1 + a2) * z * w) / (2 * t)
         + (q**2 * p**2 + 2 * (a4 - 1) * q * p - t * q) / (2 * t)
         + y * z * (z * w + a2) / t - (y + w) * p / t)
    relation = a0 + a1 + a2 + a3 + a4 - 1
    return HamiltonianSystem("D52", h, MAIN_PAIRS, ("a0", "a1", "a2", "a3", "a4"),
                             ConstraintIdeal(relation, "a4"))


def _d51() -> HamiltonianSystem:
    h = ((x**2 * y**2 + x * y**2 - (a0 + a1) * x * y - a0 * y) / t
         + (z**2 * w**2 + (a0 + a1 + 2 * a2) * z * w + z + t * w) / t
         + (q**2 * p**2 - t * q**2 * p - (1 - a4 - a5) * q * p - a4 * t * q) / t
         + 2 * (x * z - w * p) / t)
    relation = a0 + a1 + 2 * a2 + 2 * a3 + a4 + a5 - 1
    return HamiltonianSystem("D51", h, MAIN_PAIRS, ("a0", "a1", "a2", "a3", "a4", "a5"),
                             ConstraintIdeal(relation, "a5"))


def _a1_d7() -> HamiltonianSystem:
    sub = subsystem("HIII_D7")
    return HamiltonianSystem("A1_D7", sub.expression, (sub.pair,), sub.params, sub.side_relation)


_BUILDERS = {
    "D6": _d6,
    "B5": _b5,
    "D52": _d52,
    "D51": _d51,
    "A1_D7": _a1_d7,
}

MAIN_SYSTEMS = ("D6", "B5", "D52", "D51")

_CACHE: Dict[str, HamiltonianSystem] = {}


def build_system(id: str) -> HamiltonianSystem:
    """Hamiltonian system by id: a main system, A1_D7 or a subsystem Hamiltonian."""
    if id in _CACHE:
        return _CACHE[id]
    if id in _BUILDERS:
        system = _BUILDERS[id]()
    elif id in SUBSYSTEM_IDS:
        sub = subsystem(id)
        system = HamiltonianSystem(id, sub.expression, (sub.pair,), sub.params,
                                   sub.side_relation)
    else:
        raise UsageError(f"Unknown system '{id}'")
    logger.debug(f"Built system {id}")
    _CACHE[id] = system
    return system


def vector_field_of(hamiltonian: RatFn, pairs: Sequence[Tuple[str, str]]) -> VectorField:
    """Hamilton's equations du/dt = dH/dv, dv/dt = -dH/du for each pair."""
    names: List[str] = []
    components: List[RatFn] = []
    for u, v in pairs:
        names.extend((u, v))
        components.append(differentiate(hamiltonian, v))
        components.append(-differentiate(hamiltonian, u))
    return VectorField(tuple(names), tuple(components))


def vector_field(system: HamiltonianSystem) -> VectorField:
    return vector_field_of(system.hamiltonian, system.pairs)


def phase_degree(system: HamiltonianSystem) -> int:
    """Total degree in the phase variables of the numerator of t*H."""
    return degree_in(system.hamiltonian * t, system.phase_vars)
