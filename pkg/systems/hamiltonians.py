"""Building-block Hamiltonians of the coupled systems and their subsystems."""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from algebra import ConstraintIdeal, RatFn, UsageError, gens

t, = gens("t")
u, v, U, V, q, p = gens("u v U V q p")
g0, g2, b0, b1, al, be = gens("g0 g2 b0 b1 al be")


def h_iii(u, v, t, gamma0, gamma2) -> RatFn:
    """H_III(u, v, t; gamma0, gamma2); gamma1 = (1 - gamma0 - gamma2)/2."""
    return (u**2 * v * (v - 1) + u * ((gamma0 + gamma2) * v - gamma0) + t * v) / t


def h_iii_tilde(U, V, t, gamma0, gamma2) -> RatFn:
    return (U**2 * V * (V - t) - U * ((-gamma0 + gamma2) * V + gamma0 * t) + V) / t


def gamma1(gamma0, gamma2) -> RatFn:
    return (1 - gamma0 - gamma2) / 2


def h_iii_d7(q, p, t, beta1) -> RatFn:
    return (q**2 * p**2 + beta1 * q * p + q + t * p) / t


def h1(q, p, t, alpha) -> RatFn:
    return (q**2 * p**2 + alpha * q * p + t * p) / t


def h2(q, p, t, alpha, beta) -> RatFn:
    return (q**2 * p**2 - t * q**2 * p + alpha * q * p + beta * t * q) / t


def h3(q, p, t, alpha) -> RatFn:
    return (q**2 * p**2 + alpha * q * p + q) / (2 * t)


def h4(q, p, t, alpha) -> RatFn:
    return (q**2 * p**2 + alpha * q * p) / (2 * t)


def h5(q, p, t, alpha) -> RatFn:
    # printed signature also lists an unused beta
    return (q**2 * p**2 + alpha * q * p - t * q) / (2 * t)


def k1(q, p, t, alpha) -> RatFn:
    return (q**2 * p**2 + (alpha - 1) * q * p + p) / t


def k2(q, p, t, alpha, beta) -> RatFn:
    return (q**2 * p**2 + q * p**2 - (alpha + 1) * q * p + beta * p) / t


def k5(q, p, t, alpha) -> RatFn:
    return (q**2 * p**2 + alpha * q * p - q) / (2 * t)


@dataclass(frozen=True)
class SubsystemHamiltonian:
    """One-degree-of-freedom Hamiltonian with its default symbols."""

    id: str
    expression: RatFn
    pair: Tuple[str, str]
    params: Tuple[str, ...]
    side_relation: Optional[ConstraintIdeal] = None


_SUBSYSTEMS: Dict[str, Callable[[], SubsystemHamiltonian]] = {
    "HIII": lambda: SubsystemHamiltonian(
        "HIII", h_iii(u, v, t, g0, g2), ("u", "v"), ("g0", "g2")),
    "HtildeIII": lambda: SubsystemHamiltonian(
        "HtildeIII", h_iii_tilde(U, V, t, g0, g2), ("U", "V"), ("g0", "g2")),
    "HIII_D7": lambda: SubsystemHamiltonian(
        "HIII_D7", h_iii_d7(q, p, t, b1), ("q", "p"), ("b0", "b1"),
        ConstraintIdeal(b0 + b1 - 1, "b1")),
    "H1": lambda: SubsystemHamiltonian("H1", h1(q, p, t, al), ("q", "p"), ("al",)),
    "H2": lambda: SubsystemHamiltonian("H2", h2(q, p, t, al, be), ("q", "p"), ("al", "be")),
    "H3": lambda: SubsystemHamiltonian("H3", h3(q, p, t, al), ("q", "p"), ("al",)),
    "H4": lambda: SubsystemHamiltonian("H4", h4(q, p, t, al), ("q", "p"), ("al",)),
    "H5": lambda: SubsystemHamiltonian("H5", h5(q, p, t, al), ("q", "p"), ("al",)),
    "K1": lambda: SubsystemHamiltonian("K1", k1(q, p, t, al), ("q", "p"), ("al",)),
    "K2": lambda: SubsystemHamiltonian("K2", k2(q, p, t, al, be), ("q", "p"), ("al", "be")),
    "K5": lambda: SubsystemHamiltonian("K5", k5(q, p, t, al), ("q", "p"), ("al",)),
}

SUBSYSTEM_IDS = tuple(_SUBSYSTEMS)


def subsystem(id: str) -> SubsystemHamiltonian:
    try:
        return _SUBSYSTEMS[id]()
    except KeyError:
        raise UsageError(f"Unknown subsystem Hamiltonian '{id}'") from None
