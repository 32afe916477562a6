"""Scaling limits D6 -> B5 and D6 -> D5(2) as eps -> 0."""

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Tuple

from algebra import (ConstraintIdeal, RatFn, UsageError, VerificationFailure, gens,
                     laurent_leading, rename, substitute)
from reporting import CheckRecord, verdict
from systems import build_system, vector_field

logger = logging.getLogger(__name__)

eps, = gens("eps")
X, Y, Z, W, Q, P, T = gens("X Y Z W Q P T")
A0, A1, A2, A3, A4, A5 = gens("A0 A1 A2 A3 A4 A5")

LOWER = ("x", "y", "z", "w", "q", "p", "t")
UPPER = ("X", "Y", "Z", "W", "Q", "P", "T")


def to_upper(f: RatFn, params: Tuple[str, ...]) -> RatFn:
    """Rename (x, ..., t; a_i) to (X, ..., T; A_i)."""
    mapping = dict(zip(LOWER, UPPER))
    mapping.update({a: "A" + a[1:] for a in params})
    return rename(f, mapping)


@dataclass(frozen=True)
class Degeneration:
    """Old variables and parameters written in the new ones and eps."""

    id: str
    source: str
    target: str
    params: Dict[str, RatFn]
    variables: Dict[str, RatFn]

    def scale(self, name: str) -> RatFn:
        """s with old = s * new."""
        return self.variables[name] / RatFn.var(name.upper())

    @property
    def bindings(self) -> Dict[str, RatFn]:
        out = dict(self.variables)
        out.update(self.params)
        return out

    def target_constraint(self) -> ConstraintIdeal:
        ideal = build_system(self.target).constraint
        return ConstraintIdeal(to_upper(ideal.relation, build_system(self.target).params),
                               "A" + ideal.eliminated[1:])


DEGENERATIONS: Dict[str, Degeneration] = {
    "D6_to_B5": Degeneration(
        "D6_to_B5", "D6", "B5",
        params={"a0": 1 / eps + 2 * A0, "a1": -1 / eps, "a2": A1, "a3": A2, "a4": A3,
                "a5": A4, "a6": A5},
        variables={"t": eps * T, "x": eps * X, "y": Y / eps, "z": eps * Z, "w": W / eps,
                   "q": Q / eps, "p": eps * P},
    ),
    "D6_to_D52": Degeneration(
        "D6_to_D52", "D6", "D52",
        params={"a0": -1 / eps + A0, "a1": 1 / eps, "a2": A1 / 2, "a3": A2 / 2, "a4": A3 / 2,
                "a5": 1 / eps, "a6": -1 / eps + A4},
        variables={"t": eps**2 * T / 16, "x": eps * X / 4, "y": 2 * Y / eps, "z": eps * Z / 4,
                   "w": 2 * W / eps, "q": 4 * Q / eps, "p": eps * P / 8},
    ),
}


def degeneration(id: str) -> Degeneration:
    if id not in DEGENERATIONS:
        raise UsageError(f"Unknown degeneration '{id}'; "
                         f"expected one of {', '.join(DEGENERATIONS)}")
    return DEGENERATIONS[id]


def transformed_field(d: Degeneration) -> Dict[str, RatFn]:
    """dNew/dT for each new phase variable, in new variables, A and eps."""
    source = build_system(d.source)
    field = vector_field(source)
    ideal = d.target_constraint()
    dt_dT = d.scale("t")
    out = {}
    for name in source.phase_vars:
        component = substitute(field.component(name), d.bindings)
        out[name.upper()] = ideal.reduce(component * dt_dT / d.scale(name))
    return out


def constraint_image(d: Degeneration) -> bool:
    """The source relation, rewritten in A, cuts out the target constraint surface."""
    relation = build_system(d.source).constraint.relation
    return d.target_constraint().contains(substitute(relation, d.params))


def limits(d: Degeneration) -> Dict[str, Tuple[int, RatFn]]:
    return {name: laurent_leading(f, "eps") for name, f in transformed_field(d).items()}


def degenerate(id: str, strict: bool = False) -> List[CheckRecord]:
    """Negative eps powers vanish and the eps^0 part is the target vector field."""
    d = degeneration(id)
    target = build_system(d.target)
    target_field = vector_field(target)
    ideal = d.target_constraint()
    records: List[CheckRecord] = []

    started = time.perf_counter()
    records.append(verdict(f"{id} constraint image", constraint_image(d), started=started,
                           witness=substitute(build_system(d.source).constraint.relation,
                                              d.params)))

    started = time.perf_counter()
    for name, (order, lead) in limits(d).items():
        if order < 0:
            message = f"{id}: d{name}/dT has an eps^{order} term"
            if strict:
                raise VerificationFailure(message, lead)
            logger.error(message)
            records.append(verdict(f"{id} d{name}/dT regular at eps=0", False, witness=lead,
                                   started=started))
            started = time.perf_counter()
            continue
        records.append(verdict(f"{id} d{name}/dT regular at eps=0", True, started=started))
        limit = lead if order == 0 else RatFn.constant(0)
        expected = to_upper(target_field.component(name.lower()), target.params)
        residual = ideal.reduce(limit - expected)
        if strict and not residual.is_zero:
            raise VerificationFailure(f"{id}: eps^0 part of d{name}/dT differs", residual)
        records.append(verdict(f"{id} d{name}/dT limit", residual.is_zero, witness=residual,
                               started=started))
        started = time.perf_counter()
    return records
