"""Trajectory-level checks: Backlund maps commute with the flow, integrals stay constant."""

import logging
import time
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from algebra import PoleError, UsageError
from config import NumericConfig, VerificationConfig
from reporting import CheckRecord, verdict
from solutions import FIRST_INTEGRALS
from systems import build_system
from weyl import BirationalMap, generator

from .compiler import Numeric, compile_functions
from .integrator import Trajectory, integrate

logger = logging.getLogger(__name__)


class NumericMap:
    """A birational map evaluated at complex points."""

    def __init__(self, g: BirationalMap):
        system = g.system
        arguments = ("t",) + tuple(system.phase_vars) + tuple(system.params)
        self.name = g.name
        self.n_params = len(system.params)
        self._phase = compile_functions(g.phase_images, arguments, {})
        self._time = compile_functions([g.t_image], arguments, {})
        self._params = compile_functions(g.param_images, arguments, {})

    def __call__(self, t: float, state: np.ndarray, params: Sequence[complex]
                 ) -> Tuple[float, np.ndarray, np.ndarray]:
        args = (t, *state, *params)
        with np.errstate(divide="ignore", invalid="ignore"):
            image = self._phase(*args)
        if not np.all(np.isfinite(image)):
            raise PoleError(f"{self.name} is singular at t={t}", t)
        new_t = self._time(*args)[0]
        return float(new_t.real), image, self._params(*args)


def symmetry_commute_check(sys_id: str, map_name: str, params: Sequence[Numeric],
                           initial: Sequence[complex], t0: float, t1: float,
                           config: Optional[NumericConfig] = None) -> CheckRecord:
    """Integrate-then-map against map-then-integrate; max componentwise discrepancy."""
    started = time.perf_counter()
    g = NumericMap(generator(sys_id, map_name))
    values = [complex(a) for a in params]

    path_a = integrate(sys_id, values, initial, t0, t1, config)
    s1, end_a, _ = g(t1, path_a.final, values)
    s0, start_b, params_b = g(t0, np.asarray(initial, dtype=complex), values)
    path_b = integrate(sys_id, list(params_b), start_b, s0, s1, config)

    discrepancy = float(np.max(np.abs(end_a - path_b.final)))
    ok = discrepancy < VerificationConfig.COMMUTE_THRESHOLD
    if not ok:
        logger.warning(f"{sys_id} {map_name} does not commute with the flow: {discrepancy:.3e}")
    return verdict(f"{sys_id} {map_name} commutes with the flow", ok,
                   witness=f"{discrepancy:.3e}", started=started, discrepancy=discrepancy)


def integral_drift(hamiltonian_id: str, params: Sequence[Numeric], initial: Sequence[complex],
                   t0: float, t1: float, config: Optional[NumericConfig] = None
                   ) -> Tuple[float, Trajectory]:
    """Relative drift of the first integral of ``hamiltonian_id`` along a numeric trajectory."""
    integral = next((i for i in FIRST_INTEGRALS.values() if i.hamiltonian_id == hamiltonian_id),
                    None)
    if integral is None:
        raise UsageError(f"No first integral known for '{hamiltonian_id}'")
    system = build_system(hamiltonian_id)
    values = dict(zip(system.params, params))
    arguments = ("t",) + tuple(system.phase_vars)
    compiled = compile_functions([integral.expression], arguments, values)

    def monitor(t, y):
        return compiled(t, *y)[0]

    trajectory = integrate(hamiltonian_id, params, initial, t0, t1, config, monitor=monitor)
    watched = trajectory.monitored
    drift = float(np.max(np.abs(watched - watched[0])) / max(1.0, abs(watched[0])))
    return drift, trajectory


def integral_drift_check(hamiltonian_id: str, params: Sequence[Numeric],
                         initial: Sequence[complex], t0: float, t1: float,
                         config: Optional[NumericConfig] = None) -> CheckRecord:
    started = time.perf_counter()
    drift, _ = integral_drift(hamiltonian_id, params, initial, t0, t1, config)
    return verdict(f"{hamiltonian_id} integral drift on [{t0}, {t1}]",
                   drift < VerificationConfig.DRIFT_THRESHOLD, witness=f"{drift:.3e}",
                   started=started, drift=drift)


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    columns = {"t": trajectory.times}
    for i, name in enumerate(trajectory.names):
        columns[f"{name}_re"] = trajectory.states[:, i].real
        columns[f"{name}_im"] = trajectory.states[:, i].imag
    return pd.DataFrame(columns)


def export_csv(trajectory: Trajectory, path: str) -> str:
    """Write one row per accepted step: t, x_re, x_im, ..., p_re, p_im."""
    trajectory_frame(trajectory).to_csv(path, index=False, float_format="%.17g")
    logger.info(f"Wrote {len(trajectory.times)} rows to {path}")
    return path


def round_trip_check(sys_id: str, params: Sequence[Numeric], initial: Sequence[complex],
                     t0: float, t1: float, config: Optional[NumericConfig] = None) -> CheckRecord:
    """t0 -> t1 -> t0 returns within 10x tolerance of the start (relative to its size)."""
    config = config or NumericConfig()
    started = time.perf_counter()
    forward = integrate(sys_id, params, initial, t0, t1, config)
    back = integrate(sys_id, params, forward.final, t1, t0, config)
    start = np.asarray(initial, dtype=complex)
    error = float(np.max(np.abs(back.final - start)))
    bound = 10 * max(config.REL_TOL, config.ABS_TOL) * max(1.0, float(np.max(np.abs(start))))
    return verdict(f"{sys_id} round trip {t0} -> {t1} -> {t0}", error <= bound,
                   witness=f"{error:.3e}", started=started, error=error, bound=bound)


# x = sqrt(t) on the first algebraic solution of D6 with a3 = 1/4
CLOSED_FORM_PARAMS = (0.25, 0, 0, 0.25, 0, 0, 0.25)
CLOSED_FORM_INITIAL = (1, 0, 1, -0.125, 1, 0)


def closed_form_error(t1: float = 4.0, config: Optional[NumericConfig] = None) -> float:
    trajectory = integrate("D6", CLOSED_FORM_PARAMS, CLOSED_FORM_INITIAL, 1.0, t1, config)
    return float(abs(trajectory.final[0] - np.sqrt(t1)))


def closed_form_check(t1: float = 4.0, config: Optional[NumericConfig] = None,
                      threshold: float = 1e-8) -> CheckRecord:
    started = time.perf_counter()
    error = closed_form_error(t1, config)
    return verdict(f"D6 x({t1}) = sqrt({t1}) on the algebraic solution", error < threshold,
                   witness=f"{error:.3e}", started=started, error=error)


ROUND_OFF = 1e-13


def convergence_check(tolerance: float = 1e-6,
                      config: Optional[NumericConfig] = None) -> CheckRecord:
    """Halving the tolerance must cut the closed-form endpoint error by ORDER_FACTOR."""
    started = time.perf_counter()
    base = (config or NumericConfig()).with_tolerance(tolerance)
    coarse = closed_form_error(config=base)
    fine = closed_form_error(config=base.with_tolerance(tolerance / 2))
    ratio = coarse / fine if fine > 0 else float("inf")
    ok = coarse < ROUND_OFF or ratio >= base.ORDER_FACTOR
    return verdict(f"closed-form error shrinks by {base.ORDER_FACTOR:g}x when tolerance "
                   f"{tolerance:g} is halved", ok,
                   witness=f"{coarse:.3e} -> {fine:.3e} (ratio {ratio:.2f})",
                   started=started, coarse=coarse, fine=fine, ratio=ratio)


def generic_d6_point() -> Tuple[Fraction, ...]:
    """A rational D6 parameter point off every reflection wall; a6 from the constraint."""
    head = [Fraction(1, 10), Fraction(1, 5), Fraction(1, 7), Fraction(1, 9), Fraction(1, 11),
            Fraction(1, 6)]
    a6 = 1 - head[0] - head[1] - 2 * (head[2] + head[3] + head[4]) - head[5]
    return tuple(head) + (a6,)


GENERIC_D6_INITIAL = (0.7 + 0.1j, 0.3, 0.5 - 0.2j, 0.4, 0.6, 0.2 + 0.1j)
DRIFT_CASES = (("H3", (Fraction(1, 3),), (0.1 + 0.05j, 0.1)),
               ("H4", (Fraction(1, 3),), (0.3 + 0.1j, 0.2)),
               ("K5", (Fraction(2, 5),), (0.1, 0.1 - 0.05j)))


def verify_numeric(config: Optional[NumericConfig] = None) -> List[CheckRecord]:
    records = [closed_form_check(config=config), convergence_check(),
               round_trip_check("D6", generic_d6_point(), GENERIC_D6_INITIAL, 1.0, 1.5, config)]
    for hamiltonian_id, params, initial in DRIFT_CASES:
        records.append(integral_drift_check(hamiltonian_id, params, initial, 1.0, 10.0, config))
    for name in ("s0", "s1", "s2", "s3", "s4", "s5", "s6"):
        records.append(symmetry_commute_check("D6", name, generic_d6_point(), GENERIC_D6_INITIAL,
                                              1.0, 1.3, config))
    logger.info(f"Ran {len(records)} numeric checks")
    return records
