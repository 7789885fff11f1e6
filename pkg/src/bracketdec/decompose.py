"""Constructive bracket decompositions with verified length bounds.

Every field h * tau is a short sum of brackets:

* on the line, one bracket: h tau = [-H tau, tau] with H' = h;
* on a smooth plane curve, at most two brackets, from a unit certificate
  1 = c_P P + c_Q Q modulo the curve applied to the target;
* on a space curve with a trivializing derivation, at most three;
* on a localized line, one bracket for numerator / f^m targets, and any
  line decomposition localizes with its length unchanged because
  [a / f^k tau, b / f^k tau] = (1 / f^(2k)) [a tau, b tau].

Each constructor recombines its own output and raises CertificateFailure
on any mismatch, so a returned decomposition is verified, never assumed.
"""

from __future__ import annotations

from fractions import Fraction

from .curve import (
    AffineLine,
    LocalizedElem,
    LocalizedLine,
    PlaneCurve,
    RingElem,
    SpaceCurve,
)
from .errors import CertificateFailure, CurveMismatch
from .groebner import certificate_from_basis
from .liealg import BracketDecomp, VField, bracket, recombine
from .poly import Poly, antiderivative, partial_derivative

_HALF = Fraction(1, 2)


def _verified(curve, pairs, target_coeff, trace) -> BracketDecomp:
    """Assemble a decomposition, recombine it, and compare with the target."""
    decomp = BracketDecomp(curve, tuple(pairs), trace)
    if recombine(decomp).coeff != target_coeff:
        raise CertificateFailure("decomposition does not recombine to the target")
    return decomp


def single_bracket_line(target: RingElem,
                        trace: bool = False) -> BracketDecomp:
    """h tau = [-H tau, tau] on the line, H the antiderivative of h."""
    line = target.curve
    if not isinstance(line, AffineLine):
        raise CurveMismatch("single_bracket_line expects an element of the line")
    if target.is_zero():
        return _verified(line, (), target, {"method": "line"} if trace else None)
    h_anti = antiderivative(target.poly, "x")
    pair = (VField(line.reduce(-h_anti)), VField(line.one()))
    info = {"method": "line", "antiderivative": str(h_anti)} if trace else None
    return _verified(line, (pair,), target, info)


def solve_rgh(f_cof: Poly, g_cof: Poly, h_cof: Poly):
    """Solve P r'_x + Q (r'_y - 2g) + R (r'_z - 2h) = P F + Q G + R H.

    Returns (r, g, h) with r'_x = F, r'_y - 2g = G, r'_z - 2h = H, which is
    what turns a unit-certificate combination into a three-bracket sum.
    """
    r = antiderivative(f_cof, "x")
    g = (partial_derivative(r, "y") - g_cof) * _HALF
    h = (partial_derivative(r, "z") - h_cof) * _HALF
    return r, g, h


def _pairs_from_lifts(curve, lifts):
    """Bracket pair fields from (a, b) polynomial lifts, dropping zero brackets."""
    pairs = []
    for a, b in lifts:
        u = VField(curve.reduce(a))
        v = VField(curve.reduce(b))
        if not bracket(u, v).is_zero():
            pairs.append((u, v))
    return pairs


def two_bracket_plane(curve: PlaneCurve, target: RingElem,
                      trace: bool = False) -> BracketDecomp:
    """At most two brackets presenting target * tau on a smooth plane curve.

    A membership certificate writes the target as c_P P + c_Q Q modulo the
    curve equation; with r the x-antiderivative of c_P, g = (r'_y - c_Q)/2
    and f = r - y g, the sum [tau, f tau] + [y tau, g tau] recombines to
    the target.
    """
    if not isinstance(curve, PlaneCurve) or target.curve != curve:
        raise CurveMismatch("two_bracket_plane expects an element of a plane curve")
    if target.is_zero():
        return _verified(curve, (), target, {"method": "plane"} if trace else None)
    dec_gb = curve.decomposition_basis()
    cert = certificate_from_basis(target.poly, dec_gb)
    if cert is None:
        raise CertificateFailure(
            "target is not reachable from the trivializing field; "
            "the stored unit certificate must be wrong")
    c_p, c_q = cert.cofactors[0], cert.cofactors[1]
    r, g, _ = solve_rgh(c_p, c_q, Poly.zero())
    f = r - Poly.variable("y") * g
    pairs = _pairs_from_lifts(curve, ((Poly.one(), f), (Poly.variable("y"), g)))
    assert len(pairs) <= 2
    info = None
    if trace:
        info = {"method": "plane",
                "membership_generators": [str(p) for p in cert.generators],
                "membership_cofactors": [str(c) for c in cert.cofactors],
                "r": str(r), "g": str(g), "f": str(f)}
    return _verified(curve, pairs, target, info)


def three_bracket_space(curve: SpaceCurve, target: RingElem,
                        trace: bool = False) -> BracketDecomp:
    """At most three brackets presenting target * tau on a space curve.

    Same construction as the plane case with one more coordinate: the
    certificate gives target = c_P P + c_Q Q + c_R R modulo the curve, and
    solve_rgh turns it into [tau, f tau] + [y tau, g tau] + [z tau, h tau].
    """
    if not isinstance(curve, SpaceCurve) or target.curve != curve:
        raise CurveMismatch("three_bracket_space expects an element of a space curve")
    if target.is_zero():
        return _verified(curve, (), target, {"method": "space"} if trace else None)
    dec_gb = curve.decomposition_basis()
    cert = certificate_from_basis(target.poly, dec_gb)
    if cert is None:
        raise CertificateFailure(
            "target is not reachable from the trivializing field; "
            "the stored unit certificate must be wrong")
    c_p, c_q, c_r = cert.cofactors[0], cert.cofactors[1], cert.cofactors[2]
    r, g, h = solve_rgh(c_p, c_q, c_r)
    f = r - Poly.variable("y") * g - Poly.variable("z") * h
    pairs = _pairs_from_lifts(curve, ((Poly.one(), f),
                                      (Poly.variable("y"), g),
                                      (Poly.variable("z"), h)))
    assert len(pairs) <= 3
    info = None
    if trace:
        info = {"method": "space",
                "membership_generators": [str(p) for p in cert.generators],
                "membership_cofactors": [str(c) for c in cert.cofactors],
                "r": str(r), "g": str(g), "h": str(h), "f": str(f)}
    return _verified(curve, pairs, target, info)


def localize_decomp(decomp: BracketDecomp, denominator: Poly, k: int,
                    trace: bool = False) -> BracketDecomp:
    """Push a line decomposition onto the localized line, dividing by f^k.

    Each pair (a tau, b tau) becomes (a/f^k tau, b/f^k tau); the bracket
    picks up exactly 1/f^(2k), so the localized sum presents g / f^(2k)
    where g tau is the input's field, and the length never changes.
    """
    if not isinstance(decomp.curve, AffineLine):
        raise CurveMismatch("localize_decomp expects a decomposition on the line")
    k = int(k)
    if k < 0:
        raise ValueError("localization exponent must be nonnegative")
    line = LocalizedLine(denominator)
    original = recombine(decomp)
    pairs = tuple(
        (VField(line.elem(u.coeff.poly, k)), VField(line.elem(v.coeff.poly, k)))
        for u, v in decomp.pairs)
    target = line.elem(original.coeff.poly, 2 * k)
    info = {"method": "localize", "k": k} if trace else None
    out = _verified(line, pairs, target, info)
    assert out.length == decomp.length
    return out


def rational_decompose(denominator: Poly, target: LocalizedElem,
                       trace: bool = False) -> BracketDecomp:
    """One bracket presenting target * tau on the line minus V(f).

    The target n / f^m is rescaled to (n f^(2k - m)) / f^(2k) with
    k = ceil(m / 2); the numerator is decomposed on the line with a single
    bracket and the result is localized, which preserves the length.
    """
    if not isinstance(target.curve, LocalizedLine):
        raise CurveMismatch("rational_decompose expects a localized element")
    if target.curve.denominator != denominator:
        raise ValueError("denominator does not match the target's curve")
    line = target.curve
    if target.is_zero():
        return _verified(line, (), target, {"method": "rational"} if trace else None)
    m = target.exponent
    k = (m + 1) // 2
    scaled = target.numerator * denominator ** (2 * k - m)
    base = single_bracket_line(AffineLine().reduce(scaled))
    out = localize_decomp(base, denominator, k)
    if recombine(out).coeff != target:
        raise CertificateFailure("localized decomposition missed the target")
    assert out.length <= 1
    info = None
    if trace:
        info = {"method": "rational", "k": k, "scaled_numerator": str(scaled)}
    return BracketDecomp(line, out.pairs, info)
