"""Dormand-Prince 5(4) integration of complex Hamiltonian flows along real time paths."""

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from algebra import PoleError, StepUnderflow, UsageError
from config import NumericConfig
from systems import build_system

from .compiler import CompiledField, Numeric, compile_field, compile_functions, param_values

logger = logging.getLogger(__name__)

# Dormand-Prince tableau
C = np.array([0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1, 1])
A = [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]
B = np.array([35 / 384, 0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0])
B_LOW = np.array([5179 / 57600, 0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])
E = B - B_LOW
ORDER = 5


@dataclass
class Trajectory:
    """Accepted steps of one integration."""

    system_id: str
    names: Sequence[str]
    times: np.ndarray
    states: np.ndarray
    accepted: int = 0
    rejected: int = 0
    monitored: Optional[np.ndarray] = None

    @property
    def final(self) -> np.ndarray:
        return self.states[-1]

    def component(self, name: str) -> np.ndarray:
        return self.states[:, list(self.names).index(name)]


@dataclass
class _Step:
    t: float
    y: np.ndarray
    f: np.ndarray


class AdaptiveIntegrator:
    """Embedded 5(4) pair with FSAL, Hairer's error norm and a pole guard."""

    def __init__(self, rhs: CompiledField, config: Optional[NumericConfig] = None):
        self.rhs = rhs
        self.config = (config or NumericConfig()).validate()
        self.logger = logging.getLogger(__name__)

    def _norm(self, error: np.ndarray, y: np.ndarray, y_new: np.ndarray) -> float:
        cfg = self.config
        scale = cfg.ABS_TOL + cfg.REL_TOL * np.maximum(np.abs(y), np.abs(y_new))
        return float(np.sqrt(np.mean((np.abs(error) / scale) ** 2)))

    def _guard(self, t: float, y: np.ndarray) -> None:
        if self.rhs.smallest_denominator(t, y) < self.config.POLE_GUARD:
            raise PoleError(f"denominator below {self.config.POLE_GUARD} at t={t}", t)
        if not np.all(np.isfinite(y)):
            raise PoleError(f"state left the finite range at t={t}", t)

    def _initial_step(self, t0: float, y0: np.ndarray, f0: np.ndarray, span: float) -> float:
        cfg = self.config
        d0 = np.linalg.norm(y0) / np.sqrt(len(y0))
        d1 = np.linalg.norm(f0) / np.sqrt(len(y0))
        h = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
        return float(min(h, cfg.MAX_STEP, span))

    def _attempt(self, step: _Step, h: float):
        k = [step.f]
        for i in range(1, 7):
            y_stage = step.y + h * sum(a * k[j] for j, a in enumerate(A[i]) if a)
            k.append(self.rhs(step.t + C[i] * h, y_stage))
        y_new = step.y + h * sum(b * kj for b, kj in zip(B, k) if b)
        error = h * sum(e * kj for e, kj in zip(E, k) if e)
        return y_new, k[-1], error

    def run(self, t0: float, t1: float, y0: Sequence[complex],
            monitor: Optional[Callable[[float, np.ndarray], complex]] = None) -> Trajectory:
        cfg = self.config
        y = np.asarray(y0, dtype=complex)
        times: List[float] = [t0]
        states: List[np.ndarray] = [y.copy()]
        watched = [monitor(t0, y)] if monitor else None
        accepted = rejected = 0
        if t0 == t1:
            return self._trajectory(times, states, accepted, rejected, watched)

        self._guard(t0, y)
        direction = 1.0 if t1 > t0 else -1.0
        step = _Step(t0, y, self.rhs(t0, y))
        span = abs(t1 - t0)
        h = self._initial_step(t0, y, step.f, span)

        while direction * (t1 - step.t) > 0:
            if accepted + rejected >= cfg.MAX_STEPS:
                raise StepUnderflow(f"more than {cfg.MAX_STEPS} steps before t={t1}", step.t)
            h = min(h, abs(t1 - step.t))
            y_new, f_new, error = self._attempt(step, direction * h)
            err = self._norm(error, step.y, y_new) if np.all(np.isfinite(y_new)) else np.inf

            if err <= 1.0:
                t_new = step.t + direction * h
                if abs(t1 - t_new) < 1e-14 * max(1.0, abs(t1)):
                    t_new = t1
                self._guard(t_new, y_new)
                step = _Step(t_new, y_new, f_new)
                accepted += 1
                times.append(t_new)
                states.append(y_new)
                if monitor:
                    watched.append(monitor(t_new, y_new))
                factor = cfg.MAX_FACTOR if err == 0 else min(
                    cfg.MAX_FACTOR, max(cfg.MIN_FACTOR, cfg.SAFETY * err ** (-1 / ORDER)))
                h = min(h * factor, cfg.MAX_STEP)
            else:
                rejected += 1
                factor = cfg.MIN_FACTOR if not np.isfinite(err) else max(
                    cfg.MIN_FACTOR, cfg.SAFETY * err ** (-1 / ORDER))
                h *= factor
                if h < cfg.MIN_STEP:
                    raise StepUnderflow(f"step {h:.3e} below minimum at t={step.t}", step.t)

        self.logger.debug(f"{accepted} accepted, {rejected} rejected steps")
        return self._trajectory(times, states, accepted, rejected, watched)

    def _trajectory(self, times, states, accepted, rejected, watched) -> Trajectory:
        return Trajectory(
            system_id="",
            names=tuple(self.rhs.names),
            times=np.asarray(times, dtype=float),
            states=np.vstack(states),
            accepted=accepted,
            rejected=rejected,
            monitored=np.asarray(watched, dtype=complex) if watched is not None else None,
        )


def check_params(sys_id: str, params: Sequence[Numeric], tolerance: float = 1e-9) -> None:
    """The parameter point must lie on the constraint surface."""
    system = build_system(sys_id)
    if system.constraint is None:
        return
    relation = compile_functions([system.constraint.relation], (), param_values(system, params))
    residual = abs(relation()[0])
    if residual > tolerance:
        raise UsageError(f"{sys_id} parameters miss the constraint {system.constraint} "
                         f"by {residual:.3e}")


def integrate(sys_id: str, params: Sequence[Numeric], initial: Sequence[complex], t0: float,
              t1: float, config: Optional[NumericConfig] = None,
              monitor: Optional[Callable[[float, np.ndarray], complex]] = None) -> Trajectory:
    """Integrate the system's flow from t0 to t1; the path may not cross t = 0."""
    system = build_system(sys_id)
    if len(initial) != len(system.phase_vars):
        raise UsageError(f"{sys_id} needs {len(system.phase_vars)} initial values")
    if t0 == 0 or t1 == 0 or (t0 > 0) != (t1 > 0):
        raise UsageError("t0 and t1 must be nonzero and of the same sign")
    check_params(sys_id, params)
    integrator = AdaptiveIntegrator(compile_field(system, params), config)
    trajectory = integrator.run(float(t0), float(t1), [complex(v) for v in initial], monitor)
    trajectory.system_id = sys_id
    logger.info(f"{sys_id}: t={t0} -> {t1} in {trajectory.accepted} steps "
                f"({trajectory.rejected} rejected)")
    return trajectory
