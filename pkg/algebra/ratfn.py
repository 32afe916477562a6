"""Reduced rational functions over the Gaussian rationals."""

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

import sympy
from sympy.polys.rings import PolyElement

from .errors import DomainError
from .ring import (GAUSSIAN_RING, REAL_RING, GaussianRational, index_of,
                   is_gaussian, to_gaussian, to_real_if_possible, unify)

Scalar = Union[int, Fraction, GaussianRational]


def _reduce(num: PolyElement, den: PolyElement) -> Tuple[PolyElement, PolyElement]:
    """Cancel the gcd and make the denominator monic under grlex."""
    if not den:
        raise DomainError("zero denominator")
    num, den = unify(num, den)
    ring = num.ring
    if not num:
        return REAL_RING.zero, REAL_RING.one
    if den.is_ground:
        c = den.LC
        return to_real_if_possible(num.quo_ground(c)), to_real_if_possible(ring.one)
    num, den = num.cancel(den)
    c = den.LC
    if c != ring.domain.one:
        num = num.quo_ground(c)
        den = den.quo_ground(c)
    return to_real_if_possible(num), to_real_if_possible(den)


def _constant_poly(value: Scalar, gaussian_hint: bool = False) -> PolyElement:
    if isinstance(value, GaussianRational):
        return to_real_if_possible(GAUSSIAN_RING.ground_new(value))
    if isinstance(value, Fraction):
        value = REAL_RING.domain(value.numerator, value.denominator)
    ring = GAUSSIAN_RING if gaussian_hint else REAL_RING
    return ring.ground_new(ring.domain.convert(value))


class RatFn:
    """Quotient ``num/den`` of sparse polynomials kept in canonical form.

    The pair is always reduced: no common factor, and the leading coefficient
    of the denominator under graded-lexicographic order is 1.  Values are
    immutable, so equality of two instances is a plain comparison of the
    stored polynomials.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: PolyElement, den: PolyElement = None, reduced: bool = False):
        if den is None:
            den = num.ring.one
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers

    @classmethod
    def constant(cls, value: Scalar) -> "RatFn":
        poly = _constant_poly(value)
        return cls(poly, poly.ring.one, reduced=True)

    @classmethod
    def var(cls, name: str) -> "RatFn":
        return cls(REAL_RING.gens[index_of(name)], REAL_RING.one, reduced=True)

    @classmethod
    def coerce(cls, value) -> "RatFn":
        if isinstance(value, RatFn):
            return value
        if isinstance(value, PolyElement):
            return cls(value, value.ring.one, reduced=True)
        if isinstance(value, (int, Fraction, GaussianRational)):
            return cls.constant(value)
        return NotImplemented

    # arithmetic

    def __add__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        a_num, b_num = unify(self.num, other.num)
        a_den, b_den = unify(self.den, other.den)
        if a_den == b_den:
            if a_den == a_den.ring.one:
                return RatFn(a_num + b_num, a_den, reduced=True)
            return RatFn(a_num + b_num, a_den)
        return RatFn(a_num * b_den + b_num * a_den, a_den * b_den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        a_num, b_num = unify(self.num, other.num)
        a_den, b_den = unify(self.den, other.den)
        one = a_den.ring.one
        if a_den == one and b_den == one:
            return RatFn(to_real_if_possible(a_num * b_num), one, reduced=True)
        return RatFn(a_num * b_num, a_den * b_den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if not self.num:
            raise DomainError("division by the zero rational function")
        return RatFn(self.den, self.num)

    def __truediv__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFn(self.num ** n, self.den ** n, reduced=True)

    # comparison

    def __eq__(self, other):
        other = RatFn.coerce(other)
        if other is NotImplemented:
            return other
        a_num, b_num = unify(self.num, other.num)
        a_den, b_den = unify(self.den, other.den)
        return a_num == b_num and a_den == b_den

    def __hash__(self):
        if self._hash is None:
            num, den = to_real_if_possible(self.num), to_real_if_possible(self.den)
            self._hash = hash((tuple(sorted(num.items())), tuple(sorted(den.items()))))
        return self._hash

    # inspection

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_gaussian(self) -> bool:
        return is_gaussian(self.num) or is_gaussian(self.den)

    def variables(self) -> Tuple[str, ...]:
        from .ring import VARIABLE_ORDER, support

        used = set(support(self.num)) | set(support(self.den))
        return tuple(VARIABLE_ORDER[i] for i in sorted(used))

    def free_of(self, names: Iterable[str]) -> bool:
        used = set(self.variables())
        return not used.intersection(names)

    def as_expr(self) -> sympy.Expr:
        return self.num.as_expr() / self.den.as_expr()

    def __str__(self):
        if self.den == self.den.ring.one:
            return sympy.sstr(self.num.as_expr())
        return f"({sympy.sstr(self.num.as_expr())})/({sympy.sstr(self.den.as_expr())})"

    def __repr__(self):
        return f"RatFn({self})"


def gens(names: str) -> Tuple[RatFn, ...]:
    """Ring generators as rational functions, e.g. ``x, y = gens("x y")``."""
    return tuple(RatFn.var(name) for name in names.split())


I = RatFn.constant(GAUSSIAN_RING.domain(0, 1))
ONE = RatFn.constant(1)
ZERO = RatFn.constant(0)


def normalize(f: RatFn) -> RatFn:
    """Canonical reduced representative of ``f``."""
    return RatFn(f.num, f.den)


def ratfn(num: PolyElement, den: PolyElement) -> RatFn:
    """Reduced quotient of two polynomials; raises DomainError on den == 0."""
    return RatFn(num, den)


Bindings = Mapping[str, RatFn]


def _as_index_bindings(bindings: Bindings) -> Dict[int, RatFn]:
    return {index_of(name): RatFn.coerce(value) for name, value in bindings.items()}


def _substitute_poly(poly: PolyElement, bindings: Dict[int, RatFn]) -> RatFn:
    ring = poly.ring
    active = [i for i in bindings if any(m[i] for m in poly.itermonoms())]
    if not active:
        return RatFn(poly, ring.one, reduced=True)

    gaussian = is_gaussian(poly) or any(bindings[i].is_gaussian for i in active)
    lift = to_gaussian if gaussian else (lambda f: f)
    poly = lift(poly)
    ring = poly.ring

    degree = {i: max(m[i] for m in poly.itermonoms()) for i in active}
    nums = {i: lift(bindings[i].num) for i in active}
    dens = {i: lift(bindings[i].den) for i in active}

    num_powers = {i: [ring.one] for i in active}
    den_powers = {i: [ring.one] for i in active}
    for i in active:
        for _ in range(degree[i]):
            num_powers[i].append(num_powers[i][-1] * nums[i])
            den_powers[i].append(den_powers[i][-1] * dens[i])

    # group the terms by the exponents of the substituted variables
    groups: Dict[Tuple[int, ...], Dict[Tuple[int, ...], object]] = {}
    for monom, coeff in poly.iterterms():
        key = tuple(monom[i] for i in active)
        rest = list(monom)
        for i in active:
            rest[i] = 0
        bucket = groups.setdefault(key, {})
        rest = tuple(rest)
        bucket[rest] = bucket.get(rest, ring.domain.zero) + coeff

    total = ring.zero
    for key, terms in groups.items():
        factor = ring.one
        for i, e in zip(active, key):
            factor = factor * num_powers[i][e] * den_powers[i][degree[i] - e]
        total += ring.from_dict(terms) * factor

    common = ring.one
    for i in active:
        common = common * den_powers[i][degree[i]]
    return RatFn(total, common)


def substitute(f: RatFn, bindings: Bindings) -> RatFn:
    """Simultaneous substitution of rational functions for ring variables."""
    index_bindings = _as_index_bindings(bindings)
    num = _substitute_poly(f.num, index_bindings)
    den = _substitute_poly(f.den, index_bindings)
    if den.is_zero:
        raise DomainError(f"substitution makes the denominator of {f} vanish")
    return num / den


def rename(f: RatFn, mapping: Mapping[str, str]) -> RatFn:
    """Substitute variables by other variables."""
    return substitute(f, {old: RatFn.var(new) for old, new in mapping.items()})
