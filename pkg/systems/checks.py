"""Identities stated alongside the Hamiltonians: decompositions and the P_III reduction."""

import logging
from typing import Dict

import sympy

from algebra import (DomainError, RatFn, UsageError, antiderivative, differentiate, gens,
                     substitute)
from algebra.ring import index_of

from .catalog import build_system
from .hamiltonians import h1, h2, h3, h4, h5, h_iii, h_iii_d7, h_iii_tilde

logger = logging.getLogger(__name__)

x, y, z, w, q, p, t = gens("x y z w q p t")
a0, a1, a2, a3, a4, a5, a6 = gens("a0 a1 a2 a3 a4 a5 a6")
b1, tau = gens("b1 tau")
ca, cb, cc, cd = gens("ca cb cc cd")


def decomposition(sys_id: str) -> RatFn:
    """The displayed sum of subsystem Hamiltonians plus coupling terms."""
    if sys_id == "D6":
        return (h_iii(x, y, t, a1, a0)
                + h_iii(z, w, t, a3, a0 + a1 + 2 * a2 + a3)
                + h_iii_tilde(q, p, t, a5, 1 - a6)
                + 2 * y * z * (z * w + a3) / t - 2 * (y + w) * p / t)
    if sys_id == "B5":
        return (h_iii_d7(x, y, t, 2 * a0)
                + h1(z, w, t, 2 * (a0 + a1 + a2))
                + h2(q, p, t, a4 + a5 - 1, -a4)
                + 2 * y * z * (z * w + a2) / t - 2 * (y + w) * p / t)
    if sys_id == "D52":
        return (h3(x, y, t, 2 * a0)
                + h4(z, w, t, 2 * (a0 + a1 + a2))
                + h5(q, p, t, 2 * (a4 - 1))
                + y * z * (z * w + a2) / t - (y + w) * p / t)
    raise UsageError(f"No displayed decomposition for system '{sys_id}'")


def decomposition_residual(sys_id: str) -> RatFn:
    system = build_system(sys_id)
    return system.reduce(system.hamiltonian - decomposition(sys_id))


def hamiltonian_decomposition_check(sys_id: str) -> bool:
    return decomposition_residual(sys_id).is_zero


def _scalar_residual() -> RatFn:
    """y'' minus the P_III right-hand side with symbolic a, b, c, d (ca..cd).

    Everything is written in (q, p, tau) with y = q/tau and t = tau**2, so
    p plays the role of the first derivative and no explicit elimination is
    needed: the residual must vanish identically in q, p, tau.
    """
    hamiltonian = h_iii_d7(q, p, t, b1)
    on_tau = {"t": tau**2}
    fq = substitute(differentiate(hamiltonian, "p"), on_tau)
    fp = substitute(-differentiate(hamiltonian, "q"), on_tau)
    dq = 2 * tau * fq
    dp = 2 * tau * fp

    def along_flow(g: RatFn) -> RatFn:
        return (differentiate(g, "q") * dq + differentiate(g, "p") * dp
                + differentiate(g, "tau"))

    yy = q / tau
    dy = 2 * fq - q / tau**2
    ddy = along_flow(dy)
    rhs = dy**2 / yy - dy / tau + (ca * yy**2 + cb) / tau + cc * yy**3 + cd / yy
    return ddy - rhs


def scalar_piii_coefficients() -> Dict[str, sympy.Expr]:
    """Solve for a, b, c, d making the reduced flow satisfy the P_III equation."""
    residual = _scalar_residual()
    ring = residual.num.ring
    domain = ring.domain
    symbols = ring.symbols
    keys = [index_of(n) for n in ("q", "p", "tau")]
    equations: Dict[tuple, sympy.Expr] = {}
    for monom, coeff in residual.num.iterterms():
        key = tuple(monom[i] for i in keys)
        term = domain.to_sympy(coeff)
        for i, e in enumerate(monom):
            if e and i not in keys:
                term *= symbols[i] ** e
        equations[key] = equations.get(key, sympy.Integer(0)) + term
    unknowns = [symbols[index_of(n)] for n in ("ca", "cb", "cc", "cd")]
    solutions = sympy.linsolve(list(equations.values()), unknowns)
    if not solutions:
        logger.error("P_III reduction: no coefficients satisfy the reduced flow")
        return {}
    solution = next(iter(solutions))
    return {name: sympy.expand(value) for name, value in zip("abcd", solution)}


def scalar_piii_reduction_check() -> bool:
    """The reduced flow satisfies P_III with a=-8, b=4(1-beta1), c=0, d=-4."""
    residual = substitute(_scalar_residual(), {"ca": RatFn.constant(-8), "cb": 4 * (1 - b1),
                                               "cc": RatFn.constant(0), "cd": RatFn.constant(-4)})
    return residual.is_zero


def hamiltonian_from_vector_field(du: RatFn, dv: RatFn, pair=("q", "p")) -> RatFn:
    """H with du/dt = dH/dv and dv/dt = -dH/du, up to an additive function of t.

    Both components must be polynomial in the pair; the field must be
    Hamiltonian, otherwise DomainError.
    """
    u, v = pair
    partial = antiderivative(du, v)
    remainder = -dv - differentiate(partial, u)
    if not remainder.free_of([v]):
        raise DomainError(f"field ({du}, {dv}) is not Hamiltonian in {u}, {v}")
    return partial + antiderivative(remainder, u)
