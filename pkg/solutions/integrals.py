"""First integrals of the decoupled subsystems."""

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Optional

from algebra import RatFn, UsageError, differentiate, gens
from config import FIRST_INTEGRAL_IDS
from reporting import CheckRecord, verdict
from systems import build_system

logger = logging.getLogger(__name__)

q, p, t = gens("q p t")
al, be = gens("al be")


@dataclass(frozen=True)
class FirstIntegral:
    id: str
    hamiltonian_id: str
    expression: RatFn
    # t * K = I where printed
    scaled_by_t: bool = False


FIRST_INTEGRALS: Dict[str, FirstIntegral] = {
    "I1": FirstIntegral("I1", "K1", q**2 * p**2 + (al - 1) * q * p + p, scaled_by_t=True),
    "I2": FirstIntegral("I2", "K2", q**2 * p**2 + q * p**2 - (al + 1) * q * p + be * p,
                        scaled_by_t=True),
    "I3": FirstIntegral("I3", "H3", q**2 * p**2 + al * q * p + q),
    "I4": FirstIntegral("I4", "H4", q * p),
    "I5": FirstIntegral("I5", "K5", q**2 * p**2 + al * q * p - q),
}


def first_integral(id: str) -> FirstIntegral:
    if id not in FIRST_INTEGRALS:
        raise UsageError(f"Unknown first integral '{id}'; "
                         f"expected one of {', '.join(FIRST_INTEGRAL_IDS)}")
    return FIRST_INTEGRALS[id]


def integral_derivative(integral: FirstIntegral) -> RatFn:
    """dI/dt = {I, K} + dI/dt|explicit along the flow of K."""
    k = build_system(integral.hamiltonian_id).hamiltonian
    i = integral.expression
    return (differentiate(i, "q") * differentiate(k, "p")
            - differentiate(i, "p") * differentiate(k, "q")
            + differentiate(i, "t"))


def scaling_residual(integral: FirstIntegral) -> Optional[RatFn]:
    """t*K - I, or None when no scaling relation is printed."""
    if not integral.scaled_by_t:
        return None
    return t * build_system(integral.hamiltonian_id).hamiltonian - integral.expression


def verify_first_integral(id: str) -> List[CheckRecord]:
    integral = first_integral(id)
    started = time.perf_counter()
    derivative = integral_derivative(integral)
    records = [verdict(f"{id} conserved along {integral.hamiltonian_id}", derivative.is_zero,
                       witness=derivative, started=started)]
    residual = scaling_residual(integral)
    if residual is not None:
        records.append(verdict(f"t*{integral.hamiltonian_id} = {id}", residual.is_zero,
                               witness=residual))
    return records


def verify_integrals() -> List[CheckRecord]:
    records = []
    for id in FIRST_INTEGRAL_IDS:
        records.extend(verify_first_integral(id))
    logger.info(f"Checked {len(FIRST_INTEGRAL_IDS)} first integrals")
    return records
