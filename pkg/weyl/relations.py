"""Group relations and the symmetry property of every roster map."""

import logging
import time
from typing import Dict, List, Optional

from algebra import RatFn, differentiate
from config import VerificationConfig
from reporting import CheckRecord, recorded, verdict
from systems import vector_field

from .birational import (BirationalMap, compose, equal_maps, inverse, is_identity, map_order,
                         power)
from .cartan import cartan_data
from .generators import automorphisms, generator, reflections, roster

logger = logging.getLogger(__name__)


def _witness(g: BirationalMap) -> str:
    system = g.system
    moved = [f"{name} -> {image}" for name, image in g.bindings().items()
             if not system.equal(image, RatFn.var(name))]
    return "; ".join(moved[:2])


def verify_relations(sys_id: str) -> List[CheckRecord]:
    """Involutions, braid relations from the derived Cartan data, and automorphism orders."""
    records: List[CheckRecord] = []
    cartan = cartan_data(sys_id)
    nodes = reflections(sys_id)

    started = time.perf_counter()
    records.append(verdict(f"{sys_id} cartan data", cartan.is_consistent() and cartan.matches_diagram(),
                           witness=cartan.matrix, started=started,
                           matrix=[list(row) for row in cartan.matrix]))

    for name in nodes:
        started = time.perf_counter()
        square = power(generator(sys_id, name), 2)
        records.append(verdict(f"{sys_id} {name}^2 = id", is_identity(square),
                               witness=_witness(square), started=started))

    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            m = cartan.braid_order(i, j)
            label = f"{sys_id} ({nodes[i]} {nodes[j]})^m"
            if m is None:
                records.append(recorded(label, "no braid relation (infinite order)"))
                continue
            started = time.perf_counter()
            pair = compose(generator(sys_id, nodes[i]), generator(sys_id, nodes[j]))
            result = power(pair, m)
            records.append(verdict(label.replace("^m", f"^{m} = id"), is_identity(result),
                                   witness=_witness(result), started=started, order=m))
    logger.info(f"{sys_id}: checked {len(nodes)} involutions and braid relations")

    for name in automorphisms(sys_id):
        started = time.perf_counter()
        order = map_order(generator(sys_id, name))
        if order is None:
            records.append(recorded(f"{sys_id} order of {name}",
                                    f"> {VerificationConfig.MAX_MAP_ORDER}", started=started))
        else:
            records.append(verdict(f"{sys_id} {name}^{order} = id", True, started=started,
                                   order=order))
    return records


def pullback_residuals(g: BirationalMap) -> Dict[str, RatFn]:
    """Per phase variable: (J_g F + dg/dt) dt/dt' - F(g(X), g(t); g(a)) modulo the constraint."""
    system = g.system
    field = vector_field(system)
    names = system.phase_vars
    dt_ratio = differentiate(g.t_image, "t")
    residuals: Dict[str, RatFn] = {}
    for name, image in zip(names, g.phase_images):
        transported = differentiate(image, "t")
        for var, component in zip(names, field.components):
            partial = differentiate(image, var)
            if not partial.is_zero:
                transported = transported + partial * component
        expected = g.apply(field.component(name))
        residuals[name] = system.reduce(transported / dt_ratio - expected)
    return residuals


def verify_symmetry(sys_id: str, map_name: Optional[str] = None) -> List[CheckRecord]:
    """Pullback identity for one map, or for every roster map when no name is given."""
    names = [map_name] if map_name else list(roster(sys_id))
    records: List[CheckRecord] = []
    for name in names:
        g = generator(sys_id, name)
        started = time.perf_counter()
        residuals = pullback_residuals(g)
        for var, residual in residuals.items():
            records.append(verdict(f"{sys_id} {name} d{var}/dt", residual.is_zero,
                                   witness=residual, started=started))
            started = time.perf_counter()
        bad = [v for v, r in residuals.items() if not r.is_zero]
        if bad:
            logger.warning(f"{sys_id} {name} fails on {', '.join(bad)}")
    return records


def map_is_symmetry(g: BirationalMap) -> bool:
    return all(r.is_zero for r in pullback_residuals(g).values())


def conjugation_permutation(sys_id: str, pi_name: str) -> Dict[str, Optional[str]]:
    """For each reflection s_i, the roster reflection equal to pi s_i pi^-1 (or None)."""
    pi = generator(sys_id, pi_name)
    pi_inv = inverse(pi)
    nodes = reflections(sys_id)
    permutation: Dict[str, Optional[str]] = {}
    for name in nodes:
        conjugate = compose(compose(pi, generator(sys_id, name)), pi_inv)
        permutation[name] = next((other for other in nodes
                                  if equal_maps(conjugate, generator(sys_id, other))), None)
    logger.debug(f"{sys_id} {pi_name} permutes nodes {permutation}")
    return permutation


def verify_conjugations(sys_id: str) -> List[CheckRecord]:
    records = []
    for name in automorphisms(sys_id):
        started = time.perf_counter()
        if map_order(generator(sys_id, name)) is None:
            records.append(recorded(f"{sys_id} {name} node permutation", "no finite order",
                                    started=started))
            continue
        permutation = conjugation_permutation(sys_id, name)
        text = " ".join(f"{k}->{v or '?'}" for k, v in permutation.items())
        records.append(recorded(f"{sys_id} {name} node permutation", text, started=started))
    return records
