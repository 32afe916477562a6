"""Right-hand sides exactly as displayed for the D6, B5 and D5(2) systems."""

from typing import Dict

from algebra import UsageError, gens

from .catalog import HamiltonianSystem, VectorField, vector_field

x, y, z, w, q, p, t = gens("x y z w q p t")
a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")

NAMES = ("x", "y", "z", "w", "q", "p")

# Components whose display differs from Hamilton's equations of the printed H.
# The stored right-hand side is the corrected one.
ERRATA: Dict[tuple, str] = {
    ("D6", "x"): "displayed with -(a0+a1)*x; dH/dy gives +(a0+a1)*x, "
                 "and the algebraic solutions satisfy only the + sign",
}


def _d6() -> VectorField:
    return VectorField(NAMES, (
        (2 * x**2 * y + 2 * z**2 * w - x**2 + (a0 + a1) * x + 2 * a3 * z - 2 * p + t) / t,
        (-2 * x * y**2 + 2 * x * y - (a0 + a1) * y + a1) / t,
        (2 * z**2 * w + 2 * y * z**2 - z**2 - (2 * a4 - 1 + a5 + a6) * z - 2 * p + t) / t,
        (-2 * z * w**2 - 4 * y * z * w + 2 * z * w - 2 * a3 * y
         + (2 * a4 - 1 + a5 + a6) * w + a3) / t,
        (2 * q**2 * p - t * q**2 - 2 * y - 2 * w + (a5 + a6 - 1) * q + 1) / t,
        (-2 * q * p**2 + 2 * t * q * p - (a5 + a6 - 1) * p + t * a5) / t,
    ))


def _b5() -> VectorField:
    return VectorField(NAMES, (
        (2 * x**2 * y + 2 * z**2 * w + 2 * a0 * x + 2 * a2 * z - 2 * p + t) / t,
        (-2 * x * y**2 - 2 * a0 * y - 1) / t,
        (2 * z**2 * w + 2 * y * z**2 + 2 * (a0 + a1 + a2) * z - 2 * p + t) / t,
        (-2 * z * w**2 - 4 * y * z * w - 2 * a2 * y - 2 * (a0 + a1 + a2) * w) / t,
        (2 * q**2 * p - t * q**2 - 2 * y - 2 * w - 2 * (a0 + a1 + a2 + a3) * q) / t,
        (-2 * q * p**2 + 2 * t * q * p + 2 * (a0 + a1 + a2 + a3) * p + t * a4) / t,
    ))


def _d52() -> VectorField:
    return VectorField(NAMES, (
        (x**2 * y + z**2 * w + a0 * x + a2 * z - p) / t,
        (-2 * x * y**2 - 2 * a0 * y - 1) / (2 * t),
        (z**2 * w + y * z**2 + (a0 + a1 + a2) * z - p) / t,
        (-z * w**2 - 2 * y * z * w - a2 * y - (a0 + a1 + a2) * w) / t,
        (q**2 * p - y - w + (a4 - 1) * q) / t,
        (-2 * q * p**2 - 2 * (a4 - 1) * p + t) / (2 * t),
    ))


_PRINTED = {"D6": _d6, "B5": _b5, "D52": _d52}


def printed_system(id: str) -> VectorField:
    try:
        return _PRINTED[id]()
    except KeyError:
        raise UsageError(f"No displayed right-hand side for system '{id}'") from None


def transcription_check(system: HamiltonianSystem) -> Dict[str, bool]:
    """Compare the derived vector field with the displayed one, component by component."""
    derived = vector_field(system)
    shown = printed_system(system.id)
    return {name: system.equal(derived.component(name), shown.component(name))
            for name in NAMES}


def erratum(system_id: str, name: str) -> str:
    return ERRATA.get((system_id, name), "")

