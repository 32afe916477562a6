"""Holomorphy charts r_i and the polynomiality conditions that characterize each system."""

import logging
import time
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from algebra import RatFn, UsageError, is_polynomial, substitute, gens
from reporting import CheckRecord, verdict
from systems import build_system

logger = logging.getLogger(__name__)

x, y, z, w, q, p, t = gens("x y z w q p t")
a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")

TARGETS: Dict[str, Callable[[RatFn], RatFn]] = {
    "H": lambda h: h,
    "H+q": lambda h: h + q,
    "H+1/p": lambda h: h + 1 / p,
}


@dataclass(frozen=True)
class Chart:
    """New coordinates as functions of the old ones, with the explicit inverse.

    New coordinates reuse the old variable names, so ``inverse`` maps each
    old name to an expression in the new coordinates. Variables missing
    from both maps are unchanged; t is never moved.
    """

    id: str
    system_id: str
    forward: Dict[str, RatFn]
    inverse: Dict[str, RatFn]
    target: str = "H"
    parent: Optional[str] = None

    def pull(self, f: RatFn) -> RatFn:
        """Express ``f`` in this chart's coordinates."""
        return substitute(f, self.inverse)

    def push(self, f: RatFn) -> RatFn:
        """Express a function of the chart coordinates in the old ones."""
        return substitute(f, self.forward)


def _pole(sys_id, id, un, vn, shift, param, **extra):
    """u' = 1/u, v' = -((v - shift) u + param) u."""
    u, v = RatFn.var(un), RatFn.var(vn)
    forward = {un: 1 / u, vn: -((v - shift) * u + param) * u}
    inverse = {un: 1 / u, vn: shift - (u * v + param) * u}
    return Chart(id, sys_id, forward, inverse, **extra)


def _swap(sys_id, id, un, vn, partner, sn, param, **extra):
    """u' = -((u - partner) v - param) v, v' = 1/v, shear' = shear + v."""
    u, v, shear = RatFn.var(un), RatFn.var(vn), RatFn.var(sn)
    forward = {un: -((u - partner) * v - param) * v, vn: 1 / v, sn: shear + v}
    inverse = {un: partner + (param - u * v) * v, vn: 1 / v, sn: shear - 1 / v}
    return Chart(id, sys_id, forward, inverse, **extra)


def _shift(sys_id, id, un, images, **extra):
    """u' = u + f with f free of u."""
    u = RatFn.var(un)
    forward = {un: u + images}
    inverse = {un: u - images}
    return Chart(id, sys_id, forward, inverse, **extra)


def _d6():
    return [
        _pole("D6", "r0", "x", "y", 1, a0),
        _pole("D6", "r1", "x", "y", 0, a1),
        _swap("D6", "r2", "x", "y", z, "w", a2),
        _pole("D6", "r3", "z", "w", 0, a3),
        _swap("D6", "r4", "z", "w", q, "p", a4, parent="r3"),
        _pole("D6", "r5", "q", "p", 0, a5),
        _pole("D6", "r6", "q", "p", t, a6, target="H+q"),
    ]


def _b5():
    return [
        _shift("B5", "r0", "x", 2 * a0 / y + 1 / y**2),
        _swap("B5", "r1", "x", "y", z, "w", a1),
        _pole("B5", "r2", "z", "w", 0, a2),
        _swap("B5", "r3", "z", "w", q, "p", a3, parent="r4"),
        _pole("B5", "r4", "q", "p", 0, a4),
        _pole("B5", "r5", "q", "p", t, a5, target="H+q"),
    ]


def _d52():
    return [
        _shift("D52", "r0", "x", 2 * a0 / y + 1 / y**2),
        _swap("D52", "r1", "x", "y", z, "w", a1),
        _pole("D52", "r2", "z", "w", 0, a2),
        _swap("D52", "r3", "z", "w", q, "p", a3, parent="r2"),
        _shift("D52", "r4", "q", 2 * a4 / p - t / p**2, target="H+1/p"),
    ]


_ATLASES = {"D6": _d6, "B5": _b5, "D52": _d52}


@lru_cache(maxsize=None)
def atlas(sys_id: str) -> Mapping[str, Chart]:
    if sys_id not in _ATLASES:
        raise UsageError(f"No holomorphy charts for system '{sys_id}'")
    return MappingProxyType({c.id: c for c in _ATLASES[sys_id]()})


def chart_ids(sys_id: str) -> Tuple[str, ...]:
    return tuple(atlas(sys_id))


def chart(sys_id: str, chart_id: str) -> Chart:
    charts = atlas(sys_id)
    if chart_id not in charts:
        raise UsageError(f"Unknown chart '{chart_id}' for {sys_id}; "
                         f"expected one of {', '.join(charts)}")
    return charts[chart_id]


def chart_expression(sys_id: str, chart_id: str, target: Optional[str] = None) -> RatFn:
    """The designated expression written in the chart's coordinates.

    Composite charts first pass through their parent chart.
    """
    system = build_system(sys_id)
    c = chart(sys_id, chart_id)
    expression = TARGETS[target or c.target](system.hamiltonian)
    if c.parent:
        expression = chart(sys_id, c.parent).pull(expression)
    return system.reduce(c.pull(expression))


def check_polynomiality(sys_id: str, chart_id: str) -> CheckRecord:
    started = time.perf_counter()
    c = chart(sys_id, chart_id)
    expression = chart_expression(sys_id, chart_id)
    label = f"{c.id}({c.parent}({c.target}))" if c.parent else f"{c.id}({c.target})"
    ok = is_polynomial(expression, build_system(sys_id).phase_vars)
    if not ok:
        logger.warning(f"{sys_id} {label} keeps a pole: denominator {expression.den}")
    return verdict(f"{sys_id} {label} polynomial", ok, witness=f"denominator {expression.den}",
                   started=started)


def verify_charts(sys_id: str) -> List[CheckRecord]:
    return [check_polynomiality(sys_id, chart_id) for chart_id in chart_ids(sys_id)]


def chart_round_trip(sys_id: str, chart_id: str) -> bool:
    """forward after inverse and inverse after forward are both the identity."""
    c = chart(sys_id, chart_id)
    for name in set(c.forward) | set(c.inverse):
        var = RatFn.var(name)
        if c.push(c.inverse.get(name, var)) != var:
            return False
        if c.pull(c.forward.get(name, var)) != var:
            return False
    return True


def negative_control() -> CheckRecord:
    """r6(H) for D6 without the +q correction must keep a pole."""
    started = time.perf_counter()
    expression = chart_expression("D6", "r6", target="H")
    polynomial = is_polynomial(expression, build_system("D6").phase_vars)
    return verdict("D6 r6(H) is not polynomial", not polynomial, witness=expression,
                   started=started)
