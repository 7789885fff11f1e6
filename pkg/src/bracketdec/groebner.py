"""Buchberger's algorithm with cofactor tracking, and membership certificates.

Every Groebner basis element carries an explicit representation in terms of
the input generators, threaded through each S-polynomial and reduction step.
Ideal membership therefore comes back as a checkable identity
``target == sum(cofactors[j] * generators[j])`` instead of a bare yes/no,
and the identity is verified exactly whenever a certificate is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import (
    MonomialOrder,
    Poly,
    StepBudget,
    apply_derivation,
    divide_multivariate,
    mono_coprime,
    mono_divides,
    mono_lcm,
    mono_div,
    partial_derivative,
)

DEFAULT_MAX_STEPS = 1_000_000


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis with a representation matrix.

    ``basis[i] == sum(cofactors[i][j] * generators[j])`` holds exactly for
    every i; the identity is rechecked on construction.  The basis is
    reduced (monic elements, no term of one divisible by another's leading
    monomial) and sorted descending by leading monomial, so equal ideals
    computed from the same generators compare equal.
    """

    generators: tuple
    basis: tuple
    cofactors: tuple
    order: MonomialOrder

    def __post_init__(self):
        if len(self.basis) != len(self.cofactors):
            raise ValueError("one cofactor row per basis element")
        for elem, row in zip(self.basis, self.cofactors):
            if len(row) != len(self.generators):
                raise ValueError("one cofactor per generator")
            acc = Poly.zero()
            for c, g in zip(row, self.generators):
                acc = acc + c * g
            if acc != elem:
                raise ValueError("cofactor row does not reproduce its basis element")

    def contains_one(self) -> bool:
        return len(self.basis) == 1 and self.basis[0] == Poly.one()


@dataclass(frozen=True)
class MembershipCertificate:
    """Witness that target lies in the ideal of the generators.

    The defining identity ``target == sum(cofactors[j] * generators[j])``
    is checked exactly on construction.
    """

    target: Poly
    generators: tuple
    cofactors: tuple

    def __post_init__(self):
        if len(self.cofactors) != len(self.generators):
            raise ValueError("one cofactor per generator")
        acc = Poly.zero()
        for c, g in zip(self.cofactors, self.generators):
            acc = acc + c * g
        if acc != self.target:
            raise ValueError("cofactors do not recombine to the target")


def _scale_row(row: Sequence[Poly], factor: Fraction) -> tuple:
    return tuple(r * factor for r in row)


def _row_combination(base: Sequence[Poly], quotients: Sequence[Poly],
                     rows: Sequence[Sequence[Poly]]) -> tuple:
    """base - sum_k quotients[k] * rows[k], componentwise."""
    out = list(base)
    for q, row in zip(quotients, rows):
        if q.is_zero():
            continue
        out = [r - q * c for r, c in zip(out, row)]
    return tuple(out)


def buchberger(generators: Sequence[Poly],
               order: MonomialOrder = MonomialOrder.LEX,
               max_steps: int = DEFAULT_MAX_STEPS) -> GroebnerBasis:
    """Reduced Groebner basis of the generators' ideal, with cofactors.

    Pairs are processed smallest lcm first (ties by index), pairs with
    coprime leading monomials are skipped, and every reduction goes through
    the shared division routine, so the output is deterministic.  Raises
    StepBudgetExceeded once max_steps reduction steps are spent.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("generators must be nonempty")
    budget = StepBudget(max_steps)
    ngen = len(gens)

    polys: list[Poly] = []
    rows: list[tuple] = []
    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        polys.append(g)
        rows.append(tuple(Poly.one() if t == j else Poly.zero() for t in range(ngen)))
    if not polys:
        return GroebnerBasis(gens, (), (), order)

    pairs = [(i, j) for j in range(len(polys)) for i in range(j)]

    def pair_key(pair):
        i, j = pair
        lcm = mono_lcm(polys[i].leading_monomial(order),
                       polys[j].leading_monomial(order))
        return (order.key(lcm), i, j)

    while pairs:
        best = min(range(len(pairs)), key=lambda k: pair_key(pairs[k]))
        i, j = pairs.pop(best)
        lmi, lci = polys[i].leading_term(order)
        lmj, lcj = polys[j].leading_term(order)
        if mono_coprime(lmi, lmj):
            # the S-polynomial of a coprime pair always reduces to zero
            continue
        lcm = mono_lcm(lmi, lmj)
        ui = Poly.monomial(mono_div(lcm, lmi), 1 / lci)
        uj = Poly.monomial(mono_div(lcm, lmj), 1 / lcj)
        s = ui * polys[i] - uj * polys[j]
        if s.is_zero():
            continue
        srow = tuple(ui * a - uj * b for a, b in zip(rows[i], rows[j]))
        quotients, rem = divide_multivariate(s, polys, order, budget)
        if rem.is_zero():
            continue
        row = _row_combination(srow, quotients, rows)
        inv = 1 / rem.leading_term(order)[1]
        polys.append(rem * inv)
        rows.append(_scale_row(row, inv))
        t = len(polys) - 1
        pairs.extend((k, t) for k in range(t))

    # minimal basis: drop elements whose leading monomial another divides
    by_lm = sorted(range(len(polys)),
                   key=lambda i: (order.key(polys[i].leading_monomial(order)), i))
    kept: list[int] = []
    for i in by_lm:
        lm = polys[i].leading_monomial(order)
        if any(mono_divides(polys[k].leading_monomial(order), lm) for k in kept):
            continue
        kept.append(i)

    # reduce each survivor against the others; leading monomials are
    # pairwise nondivisible, so each normal form keeps its leading term
    final = []
    for i in kept:
        others = [k for k in kept if k != i]
        if others:
            quotients, rem = divide_multivariate(
                polys[i], [polys[k] for k in others], order, budget)
            row = _row_combination(rows[i], quotients, [rows[k] for k in others])
        else:
            rem, row = polys[i], rows[i]
        inv = 1 / rem.leading_term(order)[1]
        final.append((rem * inv, _scale_row(row, inv)))

    final.sort(key=lambda pr: order.key(pr[0].leading_monomial(order)), reverse=True)
    return GroebnerBasis(gens,
                         tuple(p for p, _ in final),
                         tuple(r for _, r in final),
                         order)


def normal_form(p: Poly, gb: GroebnerBasis, budget: StepBudget | None = None) -> Poly:
    """Remainder of p modulo the basis; the canonical coset representative."""
    if not gb.basis:
        return p
    _, rem = divide_multivariate(p, list(gb.basis), gb.order, budget)
    return rem


def certificate_from_basis(target: Poly, gb: GroebnerBasis,
                           budget: StepBudget | None = None
                           ) -> Optional[MembershipCertificate]:
    """Membership certificate for target using a precomputed basis.

    Returns None when target is not in the ideal.  Cofactors are expressed
    against the original generators by composing the division quotients with
    the basis's representation matrix.
    """
    if target.is_zero():
        zeros = tuple(Poly.zero() for _ in gb.generators)
        return MembershipCertificate(target, gb.generators, zeros)
    if not gb.basis:
        return None
    quotients, rem = divide_multivariate(target, list(gb.basis), gb.order, budget)
    if not rem.is_zero():
        return None
    cofs = [Poly.zero() for _ in gb.generators]
    for q, row in zip(quotients, gb.cofactors):
        if q.is_zero():
            continue
        cofs = [c + q * r for c, r in zip(cofs, row)]
    return MembershipCertificate(target, gb.generators, tuple(cofs))


def membership_certificate(target: Poly, generators: Sequence[Poly],
                           order: MonomialOrder = MonomialOrder.LEX,
                           max_steps: int = DEFAULT_MAX_STEPS
                           ) -> Optional[MembershipCertificate]:
    """Decide membership of target in the generators' ideal, with witness."""
    gb = buchberger(generators, order, max_steps)
    return certificate_from_basis(target, gb)


def plane_smoothness_certificate(equation: Poly,
                                 order: MonomialOrder = MonomialOrder.LEX,
                                 max_steps: int = DEFAULT_MAX_STEPS
                                 ) -> Optional[MembershipCertificate]:
    """Unit certificate for the Jacobian ideal (F, dF/dx, dF/dy).

    The curve V(F) is smooth exactly when 1 lies in this ideal; the
    certificate is the witnessing cofactor triple, or None when the curve
    has a singular point.
    """
    if equation.is_constant():
        raise ValueError("curve equation must be nonconstant")
    if not equation.uses_only(("x", "y")):
        raise ValueError("plane curve equation must use x and y only")
    gens = [equation,
            partial_derivative(equation, "x"),
            partial_derivative(equation, "y")]
    return membership_certificate(Poly.one(), gens, order, max_steps)


def is_smooth_plane(equation: Poly,
                    order: MonomialOrder = MonomialOrder.LEX,
                    max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    return plane_smoothness_certificate(equation, order, max_steps) is not None


def preserves_ideal(tau_components: Sequence[Poly],
                    generators: Sequence[Poly],
                    order: MonomialOrder = MonomialOrder.LEX,
                    max_steps: int = DEFAULT_MAX_STEPS) -> bool:
    """True when the derivation maps every generator back into the ideal.

    tau_components are the coefficients of d/dx, d/dy, d/dz; two components
    are read as a derivation with zero z part.
    """
    comps = tuple(tau_components)
    if len(comps) == 2:
        comps = comps + (Poly.zero(),)
    if len(comps) != 3:
        raise ValueError("a derivation needs two or three components")
    gb = buchberger(generators, order, max_steps)
    return all(normal_form(apply_derivation(comps, g), gb).is_zero()
               for g in generators)
