"""Generators of the Backlund symmetry groups, as printed with each system."""

import logging
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Dict, Mapping, Tuple

from algebra import UsageError, gens

from .birational import BirationalMap, compose, make_map

logger = logging.getLogger(__name__)

x, y, z, w, q, p, t = gens("x y z w q p t")
a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")
b0, b1 = gens("b0 b1")


def _d6() -> Dict[str, BirationalMap]:
    m = lambda name, images, params: make_map("D6", name, images, params)
    return {
        "s0": m("s0", {"x": x + a0 / (y - 1)}, (-a0, a1, a2 + a0, a3, a4, a5, a6)),
        "s1": m("s1", {"x": x + a1 / y}, (a0, -a1, a2 + a1, a3, a4, a5, a6)),
        "s2": m("s2", {"y": y - a2 / (x - z), "w": w + a2 / (x - z)},
                (a0 + a2, a1 + a2, -a2, a3 + a2, a4, a5, a6)),
        "s3": m("s3", {"z": z + a3 / w}, (a0, a1, a2 + a3, -a3, a4 + a3, a5, a6)),
        "s4": m("s4", {"w": w - a4 * q / (z * q - 1), "p": p - a4 * z / (z * q - 1)},
                (a0, a1, a2, a3 + a4, -a4, a5 + a4, a6 + a4)),
        "s5": m("s5", {"q": q + a5 / p}, (a0, a1, a2, a3, a4 + a5, -a5, a6)),
        "s6": m("s6", {"q": q + a6 / (p - t)}, (a0, a1, a2, a3, a4 + a6, a5, -a6)),
        "pi1": m("pi1", {"x": -x, "y": 1 - y, "z": -z, "w": -w, "q": -q, "p": t - p},
                 (a1, a0, a2, a3, a4, a6, a5)),
        "pi2": m("pi2", {"x": t * q, "y": p / t, "z": t / z, "w": -(z * w + a3) * z / t,
                         "q": x / t, "p": t * y},
                 (a6, a5, a4, a3, a2, a1, a0)),
        "pi3": m("pi3", {"p": p - t, "t": -t}, (a0, a1, a2, a3, a4, a6, a5)),
        "pi4": m("pi4", {"x": -x, "y": 1 - y, "z": -z, "w": -w, "q": -q, "p": -p, "t": -t},
                 (a1, a0, a2, a3, a4, a5, a6)),
    }


def _b5() -> Dict[str, BirationalMap]:
    m = lambda name, images, params: make_map("B5", name, images, params)
    return {
        "s0": m("s0", {"x": -x - 2 * a0 / y - 1 / y**2, "y": -y, "z": -z, "w": -w,
                       "q": -q, "p": -p, "t": -t},
                (-a0, a1 + 2 * a0, a2, a3, a4, a5)),
        "s1": m("s1", {"y": y - a1 / (x - z), "w": w + a1 / (x - z)},
                (a0 + a1, -a1, a2 + a1, a3, a4, a5)),
        "s2": m("s2", {"z": z + a2 / w}, (a0, a1 + a2, -a2, a3 + a2, a4, a5)),
        "s3": m("s3", {"w": w - a3 * q / (z * q - 1), "p": p - a3 * z / (z * q - 1)},
                (a0, a1, a2 + a3, -a3, a4 + a3, a5 + a3)),
        "s4": m("s4", {"q": q + a4 / p}, (a0, a1, a2, a3 + a4, -a4, a5)),
        "s5": m("s5", {"q": q + a5 / (p - t)}, (a0, a1, a2, a3 + a5, a4, -a5)),
        "pi": m("pi", {"p": p - t, "t": -t}, (a0, a1, a2, a3, a5, a4)),
    }


def _d52() -> Dict[str, BirationalMap]:
    m = lambda name, images, params: make_map("D52", name, images, params)
    return {
        "s0": m("s0", {"x": -x - 2 * a0 / y - 1 / y**2, "y": -y, "z": -z, "w": -w,
                       "q": -q, "p": -p, "t": -t},
                (-a0, a1 + 2 * a0, a2, a3, a4)),
        "s1": m("s1", {"y": y - a1 / (x - z), "w": w + a1 / (x - z)},
                (a0 + a1, -a1, a2 + a1, a3, a4)),
        "s2": m("s2", {"z": z + a2 / w}, (a0, a1 + a2, -a2, a3 + a2, a4)),
        "s3": m("s3", {"w": w - a3 * q / (z * q - 1), "p": p - a3 * z / (z * q - 1)},
                (a0, a1, a2 + a3, -a3, a4 + a3)),
        "s4": m("s4", {"q": q + 2 * a4 / p - t / p**2, "t": -t},
                (a0, a1, a2, a3 + 2 * a4, -a4)),
        "pi": m("pi", {"x": -t * q, "y": -p / t, "z": -t / z, "w": (z * w + a2) * z / t,
                       "q": -x / t, "p": -t * y},
                (a4, a3, a2, a1, a0)),
    }


def _d51() -> Dict[str, BirationalMap]:
    m = lambda name, images, params: make_map("D51", name, images, params)
    return {
        "s0": m("s0", {"y": y - a0 / x}, (-a0, a1, a2 + a0, a3, a4, a5)),
        "s1": m("s1", {"y": y - a1 / (x + 1)}, (a0, -a1, a2 + a1, a3, a4, a5)),
        "s2": m("s2", {"x": x + a2 * w / (y * w + 1), "z": z + a2 * y / (y * w + 1)},
                (a0 + a2, a1 + a2, -a2, a3 + a2, a4, a5)),
        "s3": m("s3", {"w": w - a3 * q / (z * q - 1), "p": p - a3 * z / (z * q - 1)},
                (a0, a1, a2 + a3, -a3, a4 + a3, a5 + a3)),
        "s4": m("s4", {"q": q + a4 / p}, (a0, a1, a2, a3 + a4, -a4, a5)),
        "s5": m("s5", {"q": q + a5 / (p - t)}, (a0, a1, a2, a3 + a5, a4, -a5)),
        "pi1": m("pi1", {"x": -x - 1, "y": -y, "z": -z, "w": -w, "q": -q, "p": -p, "t": -t},
                 (a1, a0, a2, a3, a4, a5)),
        "pi2": m("pi2", {"p": p - t, "t": -t}, (a0, a1, a2, a3, a5, a4)),
        "pi3": m("pi3", {"x": (p - t) / t, "y": -t * q, "z": -t * w, "w": z / t,
                         "q": y / t, "p": -t * (x + 1), "t": -t},
                 (a5, a4, a3, a2, a1, a0)),
    }


def _a1_d7() -> Dict[str, BirationalMap]:
    m = lambda name, images, params: make_map("A1_D7", name, images, params)
    s0 = m("s0", {"p": p + b0 / q - t / q**2, "t": -t}, (-b0, b1 + 2 * b0))
    s1 = m("s1", {"q": -q + b1 / p + 1 / p**2, "p": -p, "t": -t}, (b0 + 2 * b1, -b1))
    sigma = m("sigma", {"q": t * p, "p": -q / t, "t": -t}, (b1, b0))
    return {"s0": s0, "s1": s1, "sigma": sigma, "pi": compose(sigma, s1, name="pi")}


_ROSTERS: Dict[str, Callable[[], Dict[str, BirationalMap]]] = {
    "D6": _d6,
    "B5": _b5,
    "D52": _d52,
    "D51": _d51,
    "A1_D7": _a1_d7,
}


@lru_cache(maxsize=None)
def roster(sys_id: str) -> Mapping[str, BirationalMap]:
    """Read-only name -> map registry of one system."""
    if sys_id not in _ROSTERS:
        raise UsageError(f"No symmetry group for system '{sys_id}'")
    maps = _ROSTERS[sys_id]()
    logger.debug(f"{sys_id} roster: {', '.join(maps)}")
    return MappingProxyType(maps)


def roster_names(sys_id: str) -> Tuple[str, ...]:
    return tuple(roster(sys_id))


def reflections(sys_id: str) -> Tuple[str, ...]:
    """Names s0, s1, ... in node order."""
    return tuple(n for n in roster(sys_id) if n.startswith("s") and n[1:].isdigit())


def automorphisms(sys_id: str) -> Tuple[str, ...]:
    return tuple(n for n in roster(sys_id) if n not in reflections(sys_id))


def generator(sys_id: str, name: str) -> BirationalMap:
    maps = roster(sys_id)
    if name not in maps:
        raise UsageError(f"Unknown generator '{name}' for {sys_id}; "
                         f"expected one of {', '.join(maps)}")
    return maps[name]
