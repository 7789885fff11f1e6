"""Vector fields and their Lie bracket on a curve with trivial tangent sheaf.

Every vector field on such a curve is coeff * tau for the curve's
trivializing field tau, and

    [a tau, b tau] = (a tau(b) - b tau(a)) tau,

so the whole Lie algebra is carried by coordinate-ring elements.  tau acts
on the line and localized line as d/dx, and on plane and space curves as
the stored component derivation applied to any lift of the element (the
ideal is preserved, so the result does not depend on the lift).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .curve import (
    AffineLine,
    Curve,
    LocalizedElem,
    LocalizedLine,
    PlaneCurve,
    RingElem,
    SpaceCurve,
)
from .errors import CurveMismatch
from .poly import apply_derivation, partial_derivative

Element = Union[RingElem, LocalizedElem]


@dataclass(frozen=True)
class VField:
    """The vector field coeff * tau."""

    coeff: Element

    @property
    def curve(self) -> Curve:
        return self.coeff.curve

    def _check(self, other) -> "VField":
        if not isinstance(other, VField) or other.curve != self.curve:
            raise CurveMismatch("vector fields live on different curves")
        return other

    def __add__(self, other):
        return VField(self.coeff + self._check(other).coeff)

    def __sub__(self, other):
        return VField(self.coeff - self._check(other).coeff)

    def __neg__(self):
        return VField(-self.coeff)

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return VField(self.coeff * scalar)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def __str__(self):
        return str(self.coeff)


def apply_tau(curve: Curve, elem: Element) -> Element:
    """tau applied to a coordinate-ring element, as an element again."""
    if elem.curve != curve:
        raise CurveMismatch("element does not live on the given curve")
    if isinstance(curve, AffineLine):
        return curve.reduce(partial_derivative(elem.poly, "x"))
    if isinstance(curve, LocalizedLine):
        # quotient rule for n / f^m
        n, m = elem.numerator, elem.exponent
        f = curve.denominator
        if m == 0:
            return curve.elem(partial_derivative(n, "x"), 0)
        num = (partial_derivative(n, "x") * f
               - n * partial_derivative(f, "x") * m)
        return curve.elem(num, m + 1)
    if isinstance(curve, (PlaneCurve, SpaceCurve)):
        return curve.reduce(apply_derivation(curve.tau_components, elem.poly))
    raise TypeError(f"unsupported curve model {type(curve).__name__}")


def bracket(u: VField, v: VField) -> VField:
    """[u, v] = (a tau(b) - b tau(a)) tau for u = a tau, v = b tau."""
    if u.curve != v.curve:
        raise CurveMismatch("vector fields live on different curves")
    c = u.curve
    a, b = u.coeff, v.coeff
    return VField(a * apply_tau(c, b) - b * apply_tau(c, a))


@dataclass(frozen=True)
class BracketDecomp:
    """A sum-of-brackets presentation of a vector field.

    pairs is a tuple of (u, v) with the presented field equal to
    sum of [u, v]; length is the number of summands.  trace, when present,
    records the construction (certificate cofactors and intermediates) and
    does not take part in equality.
    """

    curve: Curve
    pairs: tuple
    trace: Optional[dict] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for u, v in self.pairs:
            if u.curve != self.curve or v.curve != self.curve:
                raise CurveMismatch("decomposition pair on a different curve")

    @property
    def length(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def recombine(decomp: BracketDecomp) -> VField:
    """Sum the brackets of the pairs; the field the decomposition presents."""
    acc = VField(decomp.curve.zero())
    for u, v in decomp.pairs:
        acc = acc + bracket(u, v)
    return acc
