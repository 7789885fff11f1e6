"""Curve models and their coordinate-ring elements.

Four models, all with trivial tangent sheaf and a distinguished trivializing
vector field tau:

* AffineLine: Q[x] with tau = d/dx.
* LocalizedLine: Q[x][1/f], the line with the zeros of f removed, tau = d/dx.
* PlaneCurve: a smooth V(F) in the (x, y) plane; tau is the Hamiltonian
  field (dF/dy, -dF/dx), which is nowhere zero exactly when the curve is
  smooth.
* SpaceCurve: V(generators) in (x, y, z) with a user-supplied derivation;
  the constructor checks that it preserves the ideal, is nonzero on the
  curve, and has components generating the unit ideal modulo the curve.

Elements are kept in canonical form (normal form modulo the curve ideal,
or numerator/denominator in lowest terms), so equality is structural.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    BadVariables,
    CurveMismatch,
    DoesNotPreserveIdeal,
    NotSmooth,
    ParseError,
    UnitCertificateAbsent,
    ValidationError,
    ZeroTau,
)
from .groebner import (
    DEFAULT_MAX_STEPS,
    GroebnerBasis,
    buchberger,
    certificate_from_basis,
    normal_form,
    plane_smoothness_certificate,
)
from .poly import (
    MonomialOrder,
    Poly,
    apply_derivation,
    divide_multivariate,
    gcd_univariate,
    parse_poly,
    partial_derivative,
)

Scalar = Union[int, Fraction]


class Curve:
    """Common interface of the curve models; instances are immutable."""

    order: MonomialOrder = MonomialOrder.LEX

    def reduce(self, p: Poly):
        raise NotImplementedError

    def zero(self):
        return self.reduce(Poly.zero())

    def one(self):
        return self.reduce(Poly.one())

    def parse_element(self, text: str):
        return self.reduce(parse_poly(text))

    def describe(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class RingElem:
    """A coordinate-ring element, stored as its canonical representative."""

    curve: Curve
    poly: Poly

    def _check(self, other) -> "RingElem":
        if not isinstance(other, RingElem) or other.curve != self.curve:
            raise CurveMismatch("operands live on different curves")
        return other

    def __add__(self, other):
        other = self._check(other)
        # normal forms are linear, so no re-reduction is needed
        return RingElem(self.curve, self.poly + other.poly)

    def __sub__(self, other):
        other = self._check(other)
        return RingElem(self.curve, self.poly - other.poly)

    def __neg__(self):
        return RingElem(self.curve, -self.poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElem(self.curve, self.poly * other)
        other = self._check(other)
        return self.curve.reduce(self.poly * other.poly)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __str__(self):
        return str(self.poly)


class LocalizedElem:
    """numerator / denominator^exponent over a localized line.

    Kept in lowest terms with respect to the line's denominator: the stored
    numerator is not divisible by it unless the exponent is already zero.
    """

    __slots__ = ("curve", "numerator", "exponent")

    def __init__(self, curve: "LocalizedLine", numerator: Poly, exponent: int = 0):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("denominator exponent must be nonnegative")
        if not numerator.uses_only(("x",)):
            raise BadVariables("localized elements are univariate in x")
        f = curve.denominator
        if numerator.is_zero():
            exponent = 0
        else:
            while exponent > 0:
                quotients, rem = divide_multivariate(numerator, [f])
                if not rem.is_zero():
                    break
                numerator = quotients[0]
                exponent -= 1
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("LocalizedElem is immutable")

    def _check(self, other) -> "LocalizedElem":
        if not isinstance(other, LocalizedElem) or other.curve != self.curve:
            raise CurveMismatch("operands live on different curves")
        return other

    def __add__(self, other):
        other = self._check(other)
        f = self.curve.denominator
        m = max(self.exponent, other.exponent)
        num = (self.numerator * f ** (m - self.exponent)
               + other.numerator * f ** (m - other.exponent))
        return LocalizedElem(self.curve, num, m)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __neg__(self):
        return LocalizedElem(self.curve, -self.numerator, self.exponent)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LocalizedElem(self.curve, self.numerator * other, self.exponent)
        other = self._check(other)
        return LocalizedElem(self.curve, self.numerator * other.numerator,
                             self.exponent + other.exponent)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other):
        return (isinstance(other, LocalizedElem)
                and self.curve == other.curve
                and self.numerator == other.numerator
                and self.exponent == other.exponent)

    def __hash__(self):
        return hash((self.curve, self.numerator, self.exponent))

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        power = f"^{self.exponent}" if self.exponent > 1 else ""
        return f"({self.numerator}) / ({self.curve.denominator}){power}"

    def __repr__(self):
        return f'LocalizedElem("{self}")'


class AffineLine(Curve):
    """The affine line: coordinate ring Q[x], trivializing field d/dx."""

    variables = ("x",)

    def reduce(self, p: Poly) -> RingElem:
        if not p.uses_only(("x",)):
            raise BadVariables("elements of the line are univariate in x")
        return RingElem(self, p)

    def describe(self) -> dict:
        return {"variant": "line"}

    def __eq__(self, other):
        return isinstance(other, AffineLine)

    def __hash__(self):
        return hash(AffineLine)

    def __repr__(self):
        return "AffineLine()"


class LocalizedLine(Curve):
    """The affine line with the zero set of a fixed denominator removed.

    Coordinate ring Q[x][1/f]; the trivializing field is still d/dx.
    Warns when the denominator has a repeated root, since the squarefree
    part defines the same open set.
    """

    variables = ("x",)

    def __init__(self, denominator: Poly):
        if not denominator.uses_only(("x",)):
            raise BadVariables("localization denominator must be univariate in x")
        if denominator.is_constant():
            raise ValidationError("localization denominator must be nonconstant")
        g = gcd_univariate(denominator, partial_derivative(denominator, "x"))
        if not g.is_constant():
            warnings.warn(
                "localization denominator has a repeated root; "
                "its squarefree part defines the same ring",
                stacklevel=2)
        self.denominator = denominator

    def elem(self, numerator: Poly, exponent: int = 0) -> LocalizedElem:
        return LocalizedElem(self, numerator, exponent)

    def reduce(self, p: Poly) -> LocalizedElem:
        return LocalizedElem(self, p, 0)

    def parse_element(self, text: str) -> LocalizedElem:
        """Parse `num` or `num / den` where den is c * f^m for the line's f."""
        split = _split_element_division(text)
        if split is None:
            return self.reduce(parse_poly(text))
        num = parse_poly(split[0])
        den = parse_poly(split[1])
        f = self.denominator
        m = 0
        while not den.is_constant():
            quotients, rem = divide_multivariate(den, [f])
            if not rem.is_zero():
                raise ParseError(
                    "element denominator must be a constant multiple of a power "
                    f"of the localization denominator ({f})")
            den = quotients[0]
            m += 1
        c = den.as_constant()
        if c == 0:
            raise ParseError("zero denominator in element text")
        return self.elem(num * (1 / c), m)

    def describe(self) -> dict:
        return {"variant": "line_minus", "denominator": str(self.denominator)}

    def __eq__(self, other):
        return isinstance(other, LocalizedLine) and self.denominator == other.denominator

    def __hash__(self):
        return hash((LocalizedLine, self.denominator))

    def __repr__(self):
        return f"LocalizedLine({self.denominator})"


def _split_element_division(text: str) -> Optional[tuple]:
    """Split at a top-level '/' that starts a polynomial denominator.

    A '/' directly followed by an integer is a rational coefficient and is
    left to the polynomial parser.  Returns (numerator_text,
    denominator_text) or None.
    """
    depth = 0
    for idx, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            rest = text[idx + 1:].lstrip()
            if rest and not rest[0].isdigit():
                return text[:idx], text[idx + 1:]
    return None


class PlaneCurve(Curve):
    """A smooth plane curve V(F) in the (x, y) plane.

    The trivializing field is the Hamiltonian field of F, with components
    (dF/dy, -dF/dx).  The constructor stores the unit certificate for the
    Jacobian ideal (F, dF/dx, dF/dy); its existence is exactly smoothness,
    and it is also what makes the Hamiltonian field nowhere zero on the
    curve.  The equation is assumed irreducible over Q; this is a documented
    precondition and is not checked.
    """

    def __init__(self, equation: Poly, *,
                 order: MonomialOrder = MonomialOrder.LEX,
                 max_steps: int = DEFAULT_MAX_STEPS):
        if not equation.uses_only(("x", "y")):
            raise BadVariables("plane curve equation must use x and y only")
        if equation.is_constant():
            raise ValidationError("plane curve equation must be nonconstant")
        cert = plane_smoothness_certificate(equation, order, max_steps)
        if cert is None:
            raise NotSmooth(f"the Jacobian ideal of {equation} is not the unit ideal")
        self.equation = equation
        self.smooth_cert = cert
        self.tau_components = (partial_derivative(equation, "y"),
                               -partial_derivative(equation, "x"))
        self.order = order
        self.max_steps = max_steps
        self.gb = buchberger([equation], order, max_steps)
        self._dec_gb: Optional[GroebnerBasis] = None

    def reduce(self, p: Poly) -> RingElem:
        if not p.uses_only(("x", "y")):
            raise BadVariables("plane curve elements use x and y only")
        return RingElem(self, normal_form(p, self.gb))

    def decomposition_basis(self) -> GroebnerBasis:
        """Basis of (P, Q, F) with cofactors, cached; P, Q the tau components."""
        if self._dec_gb is None:
            gens = [self.tau_components[0], self.tau_components[1], self.equation]
            self._dec_gb = buchberger(gens, self.order, self.max_steps)
        return self._dec_gb

    def describe(self) -> dict:
        return {"variant": "plane",
                "equation": str(self.equation),
                "tau": [str(c) for c in self.tau_components]}

    def __eq__(self, other):
        return (isinstance(other, PlaneCurve)
                and self.equation == other.equation
                and self.order == other.order)

    def __hash__(self):
        return hash((PlaneCurve, self.equation, self.order))

    def __repr__(self):
        return f"PlaneCurve({self.equation})"


class SpaceCurve(Curve):
    """A curve in 3-space with an explicit trivializing derivation.

    The supplied components (P, Q, R) must define a derivation that
    preserves the curve ideal, is not identically zero on the curve, and
    generates the unit ideal together with the curve generators; the last
    condition is witnessed by a stored certificate and makes the field
    nowhere zero on the curve.  The ideal is assumed to cut out a smooth
    irreducible curve; this is a documented precondition and is not checked.
    """

    def __init__(self, generators: Sequence[Poly], tau_components: Sequence[Poly], *,
                 order: MonomialOrder = MonomialOrder.LEX,
                 max_steps: int = DEFAULT_MAX_STEPS):
        gens = tuple(generators)
        if not gens or all(g.is_zero() for g in gens):
            raise ValidationError("curve ideal needs a nonzero generator")
        comps = tuple(tau_components)
        if len(comps) == 2:
            comps = comps + (Poly.zero(),)
        if len(comps) != 3:
            raise ValidationError("tau needs components for d/dx, d/dy, d/dz")
        self.generators = gens
        self.tau_components = comps
        self.order = order
        self.max_steps = max_steps
        self.gb = buchberger(list(gens), order, max_steps)
        for g in gens:
            if not normal_form(apply_derivation(comps, g), self.gb).is_zero():
                raise DoesNotPreserveIdeal(
                    f"tau maps {g} outside the curve ideal")
        if all(normal_form(c, self.gb).is_zero() for c in comps):
            raise ZeroTau("tau vanishes identically on the curve")
        self._dec_gb = buchberger(list(comps) + list(gens), order, max_steps)
        cert = certificate_from_basis(Poly.one(), self._dec_gb)
        if cert is None:
            raise UnitCertificateAbsent(
                "tau components do not generate the unit ideal modulo the curve")
        self.unit_cert = cert

    def reduce(self, p: Poly) -> RingElem:
        return RingElem(self, normal_form(p, self.gb))

    def decomposition_basis(self) -> GroebnerBasis:
        """Basis of (P, Q, R, generators...) with cofactors."""
        return self._dec_gb

    def describe(self) -> dict:
        return {"variant": "space",
                "generators": [str(g) for g in self.generators],
                "tau": [str(c) for c in self.tau_components]}

    def __eq__(self, other):
        return (isinstance(other, SpaceCurve)
                and self.generators == other.generators
                and self.tau_components == other.tau_components
                and self.order == other.order)

    def __hash__(self):
        return hash((SpaceCurve, self.generators, self.tau_components, self.order))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"SpaceCurve([{gens}])"


def make_plane_curve(equation: Poly, *,
                     order: MonomialOrder = MonomialOrder.LEX,
                     max_steps: int = DEFAULT_MAX_STEPS) -> PlaneCurve:
    return PlaneCurve(equation, order=order, max_steps=max_steps)


def make_space_curve(generators: Sequence[Poly], tau_components: Sequence[Poly], *,
                     order: MonomialOrder = MonomialOrder.LEX,
                     max_steps: int = DEFAULT_MAX_STEPS) -> SpaceCurve:
    return SpaceCurve(generators, tau_components, order=order, max_steps=max_steps)


_SPACE_TAU_RE = re.compile(r"\btau\b")


def parse_curve(text: str, *,
                order: MonomialOrder = MonomialOrder.LEX,
                max_steps: int = DEFAULT_MAX_STEPS) -> Curve:
    """Parse a curve description.

    Grammar: `line` | `line minus <f>` | `plane <F>` |
    `space <g1>; <g2> [; <g3>] tau <P>, <Q>, <R>`.
    """
    s = text.strip()
    if s == "line":
        return AffineLine()
    if s.startswith("line minus "):
        return LocalizedLine(parse_poly(s[len("line minus "):]))
    if s.startswith("plane "):
        return make_plane_curve(parse_poly(s[len("plane "):]),
                                order=order, max_steps=max_steps)
    if s.startswith("space "):
        rest = s[len("space "):]
        parts = _SPACE_TAU_RE.split(rest)
        if len(parts) != 2:
            raise ParseError("space curve description needs exactly one tau clause")
        gen_texts = [t for t in parts[0].split(";") if t.strip()]
        if not gen_texts:
            raise ParseError("space curve description needs at least one generator")
        comp_texts = parts[1].split(",")
        if len(comp_texts) != 3:
            raise ParseError("tau clause needs exactly three components")
        gens = [parse_poly(t) for t in gen_texts]
        comps = [parse_poly(t) for t in comp_texts]
        return make_space_curve(gens, comps, order=order, max_steps=max_steps)
    raise ParseError(f"unrecognized curve description: {text!r}")
