"""Derivatives, Jacobians and series helpers on rational functions."""

from typing import Dict, Iterable, List, Sequence, Tuple

from .errors import DomainError
from .ratfn import RatFn, ZERO
from .ring import index_of


def differentiate(f: RatFn, var: str) -> RatFn:
    """Exact partial derivative by the quotient rule."""
    x = f.num.ring.gens[index_of(var)]
    num, den = f.num, f.den
    dnum = num.diff(x)
    if den == den.ring.one:
        return RatFn(dnum, den, reduced=True)
    dden = den.diff(x)
    if not dden:
        return RatFn(dnum, den)
    return RatFn(dnum * den - num * dden, den * den)


def is_polynomial(f: RatFn, names: Iterable[str]) -> bool:
    """True iff the denominator is free of every variable in ``names``."""
    indices = [index_of(n) for n in names]
    return all(m[i] == 0 for m in f.den.itermonoms() for i in indices)


def degree_in(f: RatFn, names: Iterable[str]) -> int:
    """Total degree of the numerator in the given variables."""
    indices = [index_of(n) for n in names]
    if f.is_zero:
        return -1
    return max(sum(m[i] for i in indices) for m in f.num.itermonoms())


def jacobian(images: Sequence[RatFn], names: Sequence[str]) -> List[List[RatFn]]:
    return [[differentiate(f, v) for v in names] for f in images]


def matmul(a: List[List[RatFn]], b: List[List[RatFn]]) -> List[List[RatFn]]:
    cols = len(b[0])
    out = []
    for row in a:
        out_row = []
        for j in range(cols):
            acc = ZERO
            for k, entry in enumerate(row):
                if entry.is_zero or b[k][j].is_zero:
                    continue
                acc = acc + entry * b[k][j]
            out_row.append(acc)
        out.append(out_row)
    return out


def symplectic_form(pairs: int) -> List[List[RatFn]]:
    size = 2 * pairs
    omega = [[ZERO] * size for _ in range(size)]
    for k in range(pairs):
        omega[2 * k][2 * k + 1] = RatFn.constant(1)
        omega[2 * k + 1][2 * k] = RatFn.constant(-1)
    return omega


def is_symplectic(images: Sequence[RatFn], names: Sequence[str]) -> Tuple[bool, List[List[RatFn]]]:
    """Check J^T Omega J == Omega for canonical pairs listed as (u1, v1, u2, v2, ...).

    Returns the verdict and the difference matrix (all zeros on success).
    """
    jac = jacobian(images, names)
    jac_t = [list(col) for col in zip(*jac)]
    omega = symplectic_form(len(names) // 2)
    pulled = matmul(matmul(jac_t, omega), jac)
    diff = [[pulled[i][j] - omega[i][j] for j in range(len(names))] for i in range(len(names))]
    return all(entry.is_zero for row in diff for entry in row), diff


def antiderivative(f: RatFn, var: str) -> RatFn:
    """Termwise integral in ``var``; the denominator must not involve ``var``."""
    i = index_of(var)
    if any(m[i] for m in f.den.itermonoms()):
        raise DomainError(f"cannot integrate {f} in {var}: denominator depends on it")
    ring = f.num.ring
    terms: Dict[tuple, object] = {}
    for monom, coeff in f.num.iterterms():
        raised = list(monom)
        raised[i] += 1
        terms[tuple(raised)] = coeff / ring.domain(raised[i])
    return RatFn(ring.from_dict(terms), f.den)


def valuation(poly, var: str) -> int:
    """Largest power of ``var`` dividing ``poly`` (poly must be nonzero)."""
    i = index_of(var)
    return min(m[i] for m in poly.itermonoms())


def _shift_down(poly, i: int, k: int):
    terms = {}
    for monom, coeff in poly.iterterms():
        lowered = list(monom)
        lowered[i] -= k
        terms[tuple(lowered)] = coeff
    return poly.ring.from_dict(terms)


def laurent_leading(f: RatFn, var: str) -> Tuple[int, RatFn]:
    """Order and leading coefficient of ``f`` as a Laurent series in ``var`` at 0.

    ``f`` is reduced, so after removing the ``var``-adic valuations of
    numerator and denominator their constant terms in ``var`` are nonzero and
    the leading coefficient is their quotient.
    """
    if f.is_zero:
        return 0, ZERO
    i = index_of(var)
    vn, vd = valuation(f.num, var), valuation(f.den, var)
    num = _shift_down(f.num, i, vn)
    den = _shift_down(f.den, i, vd)
    x = num.ring.gens[i]
    lead = RatFn(num.subs(x, 0), den.subs(x, 0))
    return vn - vd, lead


def limit_at_zero(f: RatFn, var: str) -> RatFn:
    """Value at ``var = 0`` of a function regular there."""
    order, lead = laurent_leading(f, var)
    if order < 0:
        raise DomainError(f"{f} has a pole of order {-order} at {var}=0")
    return lead if order == 0 else ZERO
