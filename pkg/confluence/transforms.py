"""Symplectic changes of variables: tr1, tr2, tr5, the (u,v) <-> (U,V) map and B5 -> D5(1)."""

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from algebra import (ConstraintIdeal, RatFn, UsageError, differentiate, gens, is_symplectic,
                     rename, substitute)
from config import VerificationConfig
from reporting import CheckRecord, recorded, verdict
from solutions.integrals import FIRST_INTEGRALS, scaling_residual
from systems import VectorField, build_system, hamiltonian_from_vector_field, vector_field
from weyl import generator, is_identity, map_order, power, verify_symmetry

logger = logging.getLogger(__name__)

q, p, t, Q, P = gens("q p t Q P")
u, v, g0 = gens("u v g0")
x, y, z, w = gens("x y z w")
a1, = gens("a1")
A0, A1, A2, A3, A4, A5 = gens("A0 A1 A2 A3 A4 A5")
al, be = gens("al be")


def transport(field: VectorField, images: Dict[str, RatFn]) -> Dict[str, RatFn]:
    """d/dt of each image along ``field``, in the old coordinates."""
    out = {}
    for name, image in images.items():
        total = differentiate(image, "t")
        for var, component in zip(field.names, field.components):
            partial = differentiate(image, var)
            if not partial.is_zero:
                total = total + partial * component
        out[name] = total
    return out


@dataclass(frozen=True)
class PairTransform:
    """(Q, P) as functions of (q, p, t), with the explicit inverse."""

    id: str
    source: str
    images: Tuple[RatFn, RatFn]
    inverse: Tuple[RatFn, RatFn]
    printed: str
    # parameter renaming from the source Hamiltonian to the printed one
    params: Dict[str, RatFn]


TRANSFORMS: Dict[str, PairTransform] = {
    "tr1": PairTransform("tr1", "H1", (q / t, t * p), (t * Q, P / t), "K1", {"al": al}),
    "tr2": PairTransform("tr2", "H2", (-p / t, t * q), (P / t, -t * Q), "K2",
                         {"al": al, "be": be}),
    # the printed K5 carries alpha + 2 in the symbol alpha
    "tr5": PairTransform("tr5", "H5", (t * q, p / t), (Q / t, t * P), "K5", {"al": al + 2}),
}


def transformed_hamiltonian(tr: PairTransform) -> RatFn:
    """Hamiltonian of the transformed system in (Q, P), up to a function of t."""
    field = vector_field(build_system(tr.source))
    moved = transport(field, {"Q": tr.images[0], "P": tr.images[1]})
    back = {"q": tr.inverse[0], "p": tr.inverse[1]}
    dQ = substitute(moved["Q"], back)
    dP = substitute(moved["P"], back)
    return hamiltonian_from_vector_field(dQ, dP, ("Q", "P"))


def printed_hamiltonian(tr: PairTransform) -> RatFn:
    k = build_system(tr.printed).hamiltonian
    return substitute(rename(k, {"q": "Q", "p": "P"}), tr.params)


def symplectic_tr(id: str) -> List[CheckRecord]:
    if id not in TRANSFORMS:
        raise UsageError(f"Unknown transformation '{id}'; "
                         f"expected one of {', '.join(TRANSFORMS)}")
    tr = TRANSFORMS[id]
    started = time.perf_counter()
    difference = transformed_hamiltonian(tr) - printed_hamiltonian(tr)
    records = [verdict(f"{id}({tr.source}) = {tr.printed}", difference.free_of(["Q", "P"]),
                       witness=difference, started=started)]

    started = time.perf_counter()
    ok, _ = is_symplectic(list(tr.images), ["q", "p"])
    records.append(verdict(f"{id} preserves dq^dp", ok, started=started))

    # the bare substitution H o tr^-1, without the time-derivative correction
    source = build_system(tr.source).hamiltonian
    naive = substitute(source, {"q": tr.inverse[0], "p": tr.inverse[1]})
    records.append(recorded(f"{id} substitution {tr.source} o {id}^-1", naive))
    return records


def verify_tk_relations() -> List[CheckRecord]:
    """t*K1 = I1 and t*K2 = I2."""
    records = []
    for integral in FIRST_INTEGRALS.values():
        residual = scaling_residual(integral)
        if residual is not None:
            records.append(verdict(f"t*{integral.hamiltonian_id} = {integral.id}",
                                   residual.is_zero, witness=residual))
    return records


UV_IMAGES = {"U": 1 / u, "V": -u * (v * u + g0)}


def verify_uv_correspondence() -> List[CheckRecord]:
    """(U, V) = (1/u, -u(vu + g0)) carries the H_III flow to the tilde-H_III flow."""
    source = build_system("HIII")
    target = build_system("HtildeIII")
    started = time.perf_counter()
    moved = transport(vector_field(source), UV_IMAGES)
    target_field = vector_field(target)
    records = []
    for name in ("U", "V"):
        residual = moved[name] - substitute(target_field.component(name), UV_IMAGES)
        records.append(verdict(f"uv map d{name}/dt", residual.is_zero, witness=residual,
                               started=started))
        started = time.perf_counter()

    ok, _ = is_symplectic([UV_IMAGES["U"], UV_IMAGES["V"]], ["u", "v"])
    records.append(verdict("uv map preserves du^dv", ok, started=started))

    started = time.perf_counter()
    order = _pair_map_order(UV_IMAGES, ("u", "v"), ("U", "V"))
    records.append(recorded("uv map order", order if order else "> max", started=started))
    return records


def _pair_map_order(images: Dict[str, RatFn], old: Sequence[str], new: Sequence[str],
                    max_order: int = VerificationConfig.MAX_MAP_ORDER):
    """Order of the self-map obtained by reading the new coordinates as the old ones."""
    step = {o: images[n] for o, n in zip(old, new)}
    current = dict(step)
    for n in range(1, max_order + 1):
        if all(current[o] == RatFn.var(o) for o in old):
            return n
        current = {o: substitute(current[o], step) for o in old}
    return None


def verify_a1_symmetry() -> List[CheckRecord]:
    """Symmetry of s0, s1, sigma for H_III^{D7}, involutions and the order of sigma."""
    records = []
    for name in ("s0", "s1", "sigma"):
        records.extend(verify_symmetry("A1_D7", name))
    for name in ("s0", "s1"):
        started = time.perf_counter()
        records.append(verdict(f"A1_D7 {name}^2 = id",
                               is_identity(power(generator("A1_D7", name), 2)), started=started))
    started = time.perf_counter()
    sigma = generator("A1_D7", "sigma")
    order = map_order(sigma)
    records.append(recorded("A1_D7 order of sigma", order if order else "> max", started=started))
    ok, _ = is_symplectic(list(sigma.phase_images), ["q", "p"])
    records.append(verdict("A1_D7 sigma preserves dq^dp", ok))
    return records


B5_TO_D51_PARAMS = {"a0": (A0 - A1) / 2, "a1": A1, "a2": A2, "a3": A3, "a4": A4, "a5": A5}
B5_TO_D51_IMAGES = {"X": ((x - z) * y - a1) * y, "Y": -1 / y, "Z": z, "W": w + y,
                    "Q": q, "P": p}


def equivalence_B5_to_D51() -> List[CheckRecord]:
    """Exact pullback of the B5 flow to the D5(1) flow, plus symplecticity of the map."""
    d51 = build_system("D51")
    upper = {n: n.upper() for n in d51.phase_vars}
    upper.update({a: "A" + a[1:] for a in d51.params})
    ideal = ConstraintIdeal(rename(d51.constraint.relation, upper), "A5")
    target_field = vector_field(d51)

    started = time.perf_counter()
    moved = transport(vector_field(build_system("B5")), B5_TO_D51_IMAGES)
    records = []
    for name in d51.phase_vars:
        lhs = substitute(moved[name.upper()], B5_TO_D51_PARAMS)
        rhs = substitute(rename(target_field.component(name), upper), B5_TO_D51_IMAGES)
        rhs = substitute(rhs, B5_TO_D51_PARAMS)
        residual = ideal.reduce(lhs - rhs)
        records.append(verdict(f"B5_to_D51 d{name.upper()}/dt", residual.is_zero,
                               witness=residual, started=started))
        started = time.perf_counter()

    b5_relation = substitute(build_system("B5").constraint.relation, B5_TO_D51_PARAMS)
    records.append(verdict("B5_to_D51 constraint image", ideal.contains(b5_relation),
                           witness=b5_relation))

    images = [B5_TO_D51_IMAGES[n.upper()] for n in d51.phase_vars]
    ok, _ = is_symplectic(images, list(d51.phase_vars))
    records.append(verdict("B5_to_D51 symplectic", ok, started=started))
    return records
