"""Birational maps acting on phase variables, time and parameters."""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Mapping, Optional, Sequence, Tuple

from algebra import RatFn, UsageError, substitute
from config import VerificationConfig
from systems import HamiltonianSystem, build_system

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BirationalMap:
    """An automorphism of the function field in (phase vars, t, params).

    Images are stored in the system's variable order. Composition follows
    the word convention: compose(g, h) is the word "g h", whose images are
    h's images with g's images substituted in.
    """

    name: str
    system_id: str
    phase_images: Tuple[RatFn, ...]
    t_image: RatFn
    param_images: Tuple[RatFn, ...]

    @property
    def system(self) -> HamiltonianSystem:
        return build_system(self.system_id)

    def bindings(self) -> Dict[str, RatFn]:
        system = self.system
        out = dict(zip(system.phase_vars, self.phase_images))
        out["t"] = self.t_image
        out.update(zip(system.params, self.param_images))
        return out

    def image(self, name: str) -> RatFn:
        return self.bindings()[name]

    def apply(self, f: RatFn) -> RatFn:
        """The action on a function: substitute every image simultaneously."""
        return substitute(f, self.bindings())

    def reduced(self) -> "BirationalMap":
        system = self.system
        return replace(
            self,
            phase_images=tuple(system.reduce(f) for f in self.phase_images),
            t_image=system.reduce(self.t_image),
            param_images=tuple(system.reduce(f) for f in self.param_images),
        )

    def param_shift(self) -> Tuple[RatFn, ...]:
        """g(a_i) - a_i on the constraint surface."""
        system = self.system
        return tuple(system.reduce(image - RatFn.var(name))
                     for name, image in zip(system.params, self.param_images))

    def __str__(self):
        return f"{self.system_id}:{self.name}"


def make_map(system_id: str, name: str, images: Mapping[str, RatFn],
             params: Optional[Sequence[RatFn]] = None) -> BirationalMap:
    """Build a map from its non-trivial images; unspecified coordinates map identically."""
    system = build_system(system_id)
    unknown = set(images) - set(system.phase_vars) - {"t"}
    if unknown:
        raise UsageError(f"{system_id}:{name} has images for unknown variables {sorted(unknown)}")
    phase = tuple(RatFn.coerce(images.get(v, RatFn.var(v))) for v in system.phase_vars)
    t_image = RatFn.coerce(images.get("t", RatFn.var("t")))
    if params is None:
        param_images = tuple(RatFn.var(a) for a in system.params)
    else:
        if len(params) != len(system.params):
            raise UsageError(f"{system_id}:{name} needs {len(system.params)} parameter images")
        param_images = tuple(RatFn.coerce(a) for a in params)
    return BirationalMap(name, system_id, phase, t_image, param_images)


def identity(system_id: str) -> BirationalMap:
    return make_map(system_id, "id", {})


def compose(g: BirationalMap, h: BirationalMap, name: Optional[str] = None) -> BirationalMap:
    """The word "g h": every image of h with g's images substituted, then normalized."""
    if g.system_id != h.system_id:
        raise UsageError(f"Cannot compose {g} with {h}: different systems")
    system = g.system
    bindings = g.bindings()

    def push(f: RatFn) -> RatFn:
        return system.reduce(substitute(f, bindings))

    return BirationalMap(
        name=name or _join(g.name, h.name),
        system_id=g.system_id,
        phase_images=tuple(push(f) for f in h.phase_images),
        t_image=push(h.t_image),
        param_images=tuple(push(f) for f in h.param_images),
    )


def _join(left: str, right: str) -> str:
    if left == "id":
        return right
    if right == "id":
        return left
    return f"{left} {right}"


def word(system_id: str, maps: Sequence[BirationalMap], name: Optional[str] = None) -> BirationalMap:
    """Left-to-right product of a word of maps."""
    result = identity(system_id)
    for m in maps:
        result = compose(result, m)
    if name:
        result = replace(result, name=name)
    return result


def power(g: BirationalMap, n: int) -> BirationalMap:
    if n < 0:
        raise UsageError("Negative powers need an explicit inverse")
    result = identity(g.system_id)
    for _ in range(n):
        result = compose(result, g)
    return replace(result, name=f"({g.name})^{n}")


def is_identity(g: BirationalMap) -> bool:
    """Identity on phase variables, t and parameters, modulo the constraint."""
    system = g.system
    for name, image in g.bindings().items():
        if not system.equal(image, RatFn.var(name)):
            return False
    return True


def equal_maps(g: BirationalMap, h: BirationalMap) -> bool:
    if g.system_id != h.system_id:
        return False
    system = g.system
    left, right = g.bindings(), h.bindings()
    return all(system.equal(left[k], right[k]) for k in left)


def map_order(g: BirationalMap, max_order: int = VerificationConfig.MAX_MAP_ORDER) -> Optional[int]:
    """Smallest n <= max_order with g^n = id, or None."""
    current = g
    for n in range(1, max_order + 1):
        if is_identity(current):
            return n
        current = compose(current, g)
    logger.info(f"{g} has no order up to {max_order}")
    return None


def inverse(g: BirationalMap, max_order: int = VerificationConfig.MAX_MAP_ORDER) -> BirationalMap:
    """Inverse of a map of finite order, as g^(n-1)."""
    order = map_order(g, max_order)
    if order is None:
        raise UsageError(f"{g} has no finite order up to {max_order}; no inverse available")
    result = power(g, order - 1)
    return replace(result, name=f"({g.name})^-1")
