"""Global polynomial rings over the rationals and the Gaussian rationals.

Every polynomial in the lab lives in one of two sympy sparse rings that share
the same generator sequence and the graded-lexicographic order.  The real ring
is used as long as all coefficients are rational; values are lifted to the
Gaussian ring only when a coefficient with nonzero imaginary part shows up.
"""

from typing import Dict, Tuple

from sympy import QQ
from sympy.polys.domains import QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

# Phase variables, time, root/degeneration variables, parameters of every
# system, renamed targets of the degenerations and the scalar subsystems.
VARIABLE_ORDER: Tuple[str, ...] = (
    "x", "y", "z", "w", "q", "p", "t", "s", "eps",
    "a0", "a1", "a2", "a3", "a4", "a5", "a6",
    "A0", "A1", "A2", "A3", "A4", "A5",
    "X", "Y", "Z", "W", "Q", "P", "T",
    "b0", "b1", "al", "be", "g0", "g2",
    "u", "v", "U", "V", "tau",
    "ca", "cb", "cc", "cd",
)

PHASE_VARIABLES: Tuple[str, ...] = ("x", "y", "z", "w", "q", "p")

REAL_RING, *_ = ring(",".join(VARIABLE_ORDER), QQ, grlex)
GAUSSIAN_RING = REAL_RING.clone(domain=QQ_I)

GaussianRational = QQ_I.dtype

INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLE_ORDER)}


def gaussian(re, im=0) -> GaussianRational:
    """Exact Gaussian rational ``re + im*i`` from ints, Fractions or strings."""
    return QQ_I(QQ.convert(_rational(re)), QQ.convert(_rational(im)))


def _rational(value):
    from fractions import Fraction

    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return value


def index_of(name: str) -> int:
    from .errors import UsageError

    try:
        return INDEX[name]
    except KeyError:
        raise UsageError(f"Unknown variable '{name}'") from None


def is_gaussian(poly: PolyElement) -> bool:
    return poly.ring.domain == QQ_I


def to_gaussian(poly: PolyElement) -> PolyElement:
    if is_gaussian(poly):
        return poly
    return GAUSSIAN_RING.from_dict({m: QQ_I(c, 0) for m, c in poly.items()})


def to_real_if_possible(poly: PolyElement) -> PolyElement:
    """Drop back to the rational ring when every imaginary part vanishes."""
    if not is_gaussian(poly):
        return poly
    if any(c.y for c in poly.values()):
        return poly
    return REAL_RING.from_dict({m: c.x for m, c in poly.items()})


def unify(a: PolyElement, b: PolyElement) -> Tuple[PolyElement, PolyElement]:
    if a.ring == b.ring:
        return a, b
    return to_gaussian(a), to_gaussian(b)


def support(poly: PolyElement) -> Tuple[int, ...]:
    """Indices of the generators that occur in ``poly``."""
    used = set()
    for monom in poly.itermonoms():
        used.update(i for i, e in enumerate(monom) if e)
    return tuple(sorted(used))
