"""Closed-form rational and algebraic solutions, checked by exact substitution.

Root functions of t are handled by writing t = s**k: sqrt(t) = s for k = 2,
and t**(1/4) = s, sqrt(t) = s**2 for k = 4. The square root of -1 is the
Gaussian unit I.
"""

import logging
import time
from dataclasses import dataclass, replace
from typing import Dict, List, Tuple

from algebra import I, RatFn, UsageError, VerificationFailure, differentiate, gens, substitute
from config import SOLUTION_IDS
from reporting import CheckRecord, verdict
from systems import build_system, vector_field
from weyl import generator

logger = logging.getLogger(__name__)

s, = gens("s")
a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")


@dataclass(frozen=True)
class ClosedFormSolution:
    id: str
    sys_id: str
    root_exponent: int
    phase_exprs: Tuple[RatFn, ...]
    param_values: Tuple[RatFn, ...]
    free_params: Tuple[str, ...]

    @property
    def t(self) -> RatFn:
        return s**self.root_exponent

    def bindings(self) -> Dict[str, RatFn]:
        system = build_system(self.sys_id)
        out = dict(zip(system.phase_vars, self.phase_exprs))
        out.update(zip(system.params, self.param_values))
        out["t"] = self.t
        return out

    def with_component(self, name: str, value) -> "ClosedFormSolution":
        system = build_system(self.sys_id)
        exprs = list(self.phase_exprs)
        exprs[system.phase_vars.index(name)] = RatFn.coerce(value)
        return replace(self, id=f"{self.id}[{name}={value}]", phase_exprs=tuple(exprs))


def _d6_fixed() -> ClosedFormSolution:
    half = RatFn.constant(1) / 2
    a01 = half - a2 - a3 - a4 - a6
    return ClosedFormSolution(
        "D6_fixed", "D6", 1,
        (RatFn.constant(0), half, RatFn.constant(0), RatFn.constant(0), RatFn.constant(0), s / 2),
        (a01, a01, a2, a3, a4, a6, a6),
        ("a2", "a3", "a4", "a6"),
    )


def _d6_alg1() -> ClosedFormSolution:
    zero = RatFn.constant(0)
    return ClosedFormSolution(
        "D6_alg1", "D6", 2,
        (s, zero, s, -a3 / (2 * s), 1 / s, zero),
        ((1 - 2 * a3) / 2, zero, zero, a3, zero, zero, (1 - 2 * a3) / 2),
        ("a3",),
    )


def _d6_alg2() -> ClosedFormSolution:
    zero = RatFn.constant(0)
    return ClosedFormSolution(
        "D6_alg2", "D6", 2,
        (-s, RatFn.constant(1), s, -a3 / (2 * s), -1 / s, s**2),
        (zero, (1 + 2 * a3) / 2, -a3, a3, -a3, (1 + 2 * a3) / 2, zero),
        ("a3",),
    )


def _d52_alg() -> ClosedFormSolution:
    # t = s**4; sqrt(-t) is taken as I * s**2
    return ClosedFormSolution(
        "D52_alg", "D52", 4,
        (-((1 + I) / 4) * (s + 2 * (1 + I) * s**2),
         -(1 - I) / (2 * s),
         I * s**2,
         -I * (2 * a0 + 2 * a1 - 1) / (2 * s**2),
         ((1 + I) + 4 * I * s) / (4 * s**3),
         (1 - I) / 2 * s**3),
        (a0, a1, 1 - 2 * a0 - 2 * a1, a1, a0),
        ("a0", "a1"),
    )


_SEEDS = {
    "D6_fixed": _d6_fixed,
    "D6_alg1": _d6_alg1,
    "D6_alg2": _d6_alg2,
    "D52_alg": _d52_alg,
}

SEED_IDS = tuple(SOLUTION_IDS)


def seed_solution(id: str) -> ClosedFormSolution:
    for key, build in _SEEDS.items():
        if key.lower() == id.lower():
            return build()
    raise UsageError(f"Unknown solution '{id}'; expected one of {', '.join(SOLUTION_IDS)}")


def residuals(sol: ClosedFormSolution) -> Dict[str, RatFn]:
    """d(phase)/dt minus the vector field, with d/dt = (1/(k s^(k-1))) d/ds."""
    system = build_system(sol.sys_id)
    field = vector_field(system)
    bindings = sol.bindings()
    dt_ds = differentiate(sol.t, "s")
    out = {}
    for name, expr in zip(system.phase_vars, sol.phase_exprs):
        lhs = differentiate(expr, "s") / dt_ds
        out[name] = lhs - substitute(field.component(name), bindings)
    return out


def verify_solution(sol: ClosedFormSolution, strict: bool = False) -> List[CheckRecord]:
    started = time.perf_counter()
    system = build_system(sol.sys_id)
    constraint = substitute(system.constraint.relation, dict(zip(system.params, sol.param_values)))
    records = [verdict(f"{sol.id} parameters on the constraint", constraint.is_zero,
                       witness=constraint, started=started)]
    started = time.perf_counter()
    for name, residual in residuals(sol).items():
        if strict and not residual.is_zero:
            raise VerificationFailure(f"{sol.id}: d{name}/dt residual does not vanish", residual)
        records.append(verdict(f"{sol.id} d{name}/dt", residual.is_zero, witness=residual,
                               started=started))
        started = time.perf_counter()
    return records


def perturbed_control(sol: ClosedFormSolution = None, name: str = "y",
                      value=RatFn.constant(1) / 3) -> CheckRecord:
    """A wrong point must leave a nonzero residual."""
    sol = sol or seed_solution("D6_fixed")
    wrong = sol.with_component(name, value)
    started = time.perf_counter()
    nonzero = any(not r.is_zero for r in residuals(wrong).values())
    return verdict(f"{wrong.id} is rejected", nonzero, started=started)


def fixed_point_check() -> CheckRecord:
    """pi1 maps the D6 fixed solution, parameters included, to itself."""
    sol = seed_solution("D6_fixed")
    pi1 = generator("D6", "pi1")
    bindings = sol.bindings()
    started = time.perf_counter()
    moved = [substitute(image, bindings) for image in pi1.phase_images]
    moved_params = [substitute(image, bindings) for image in pi1.param_images]
    same = (all(m == e for m, e in zip(moved, sol.phase_exprs))
            and all(m == e for m, e in zip(moved_params, sol.param_values))
            and substitute(pi1.t_image, bindings) == sol.t)
    return verdict("D6_fixed is fixed by pi1", same, started=started,
                   witness=", ".join(map(str, moved)))


def verify_solutions(id: str = None) -> List[CheckRecord]:
    ids = [id] if id else list(SEED_IDS)
    records: List[CheckRecord] = []
    for key in ids:
        records.extend(verify_solution(seed_solution(key)))
    if id is None or seed_solution(id).id == "D6_fixed":
        records.append(perturbed_control())
        records.append(fixed_point_check())
    logger.info(f"Checked {len(ids)} closed-form solutions")
    return records
