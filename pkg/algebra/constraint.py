"""Linear parameter relations and equality on the constraint surface."""

from dataclasses import dataclass

from .errors import UsageError
from .ratfn import RatFn, substitute
from .ring import index_of


@dataclass(frozen=True)
class ConstraintIdeal:
    """Principal ideal generated by one linear relation among parameters.

    ``relation`` is the polynomial whose vanishing defines the constraint
    surface, e.g. ``a0 + a1 + 2*a2 + 2*a3 + 2*a4 + a5 + a6 - 1``; the
    ``eliminated`` parameter is solved for when reducing expressions.
    """

    relation: RatFn
    eliminated: str

    def __post_init__(self):
        rel = self.relation
        if rel.den != rel.den.ring.one:
            raise UsageError("constraint relation must be a polynomial")
        i = index_of(self.eliminated)
        for monom in rel.num.itermonoms():
            if sum(monom) > 1:
                raise UsageError(f"constraint {rel} is not linear")
        if not any(m[i] == 1 for m in rel.num.itermonoms()):
            raise UsageError(f"constraint {rel} does not involve {self.eliminated}")

    def solved(self) -> RatFn:
        """The eliminated parameter as an affine form in the others."""
        i = index_of(self.eliminated)
        ring = self.relation.num.ring
        coeff = ring.zero
        rest = ring.zero
        for monom, c in self.relation.num.iterterms():
            if monom[i] == 1:
                coeff += ring.ground_new(c)
            else:
                rest += ring({monom: c})
        return -RatFn(rest) / RatFn(coeff)

    def reduce(self, f: RatFn) -> RatFn:
        return substitute(f, {self.eliminated: self.solved()})

    def contains(self, f: RatFn) -> bool:
        """True iff ``f`` vanishes on the constraint surface."""
        return self.reduce(f).is_zero

    def __str__(self):
        return f"{self.relation} = 0"


def equals_mod_constraint(a: RatFn, b: RatFn, ideal: ConstraintIdeal = None) -> bool:
    """``a == b`` after eliminating the designated parameter."""
    diff = RatFn.coerce(a) - RatFn.coerce(b)
    if ideal is None:
        return diff.is_zero
    return ideal.contains(diff)
