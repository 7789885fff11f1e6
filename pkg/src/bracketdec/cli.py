"""Command-line front end.

Commands: check (validate a curve), decompose (build a bracket
decomposition for a target field), localize (push a line decomposition
onto a localized line), verify (recombine given pairs and compare with a
target).  Results go to stdout as a JSON document; a one-line summary goes
to stderr.  Exit codes: 0 success, 1 failed verification, 2 parse error,
3 validation error, 4 step budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .curve import AffineLine, LocalizedLine, PlaneCurve, SpaceCurve, parse_curve
from .decompose import (
    localize_decomp,
    rational_decompose,
    single_bracket_line,
    three_bracket_space,
    two_bracket_plane,
)
from .errors import (
    BadVariables,
    BracketDecError,
    CertificateFailure,
    CurveMismatch,
    DoesNotPreserveIdeal,
    NotSmooth,
    ParseError,
    StepBudgetExceeded,
    UnitCertificateAbsent,
    ValidationError,
    ZeroTau,
)
from .groebner import DEFAULT_MAX_STEPS
from .liealg import BracketDecomp, VField, recombine
from .poly import MonomialOrder

_ERROR_CODES = (
    (NotSmooth, "not_smooth"),
    (BadVariables, "bad_variables"),
    (DoesNotPreserveIdeal, "does_not_preserve_ideal"),
    (UnitCertificateAbsent, "unit_certificate_absent"),
    (ZeroTau, "zero_tau"),
    (CurveMismatch, "curve_mismatch"),
    (CertificateFailure, "certificate_failure"),
    (ValidationError, "validation_error"),
    (ParseError, "parse_error"),
    (StepBudgetExceeded, "step_budget_exceeded"),
)


def _error_code(exc: BaseException) -> str:
    for cls, code in _ERROR_CODES:
        if isinstance(exc, cls):
            return code
    return "invalid_input"


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return 2
    if isinstance(exc, ValidationError):
        return 3
    if isinstance(exc, StepBudgetExceeded):
        return 4
    return 2


def _cert_doc(cert) -> dict:
    return {"target": str(cert.target),
            "generators": [str(g) for g in cert.generators],
            "cofactors": [str(c) for c in cert.cofactors]}


def _pairs_doc(decomp: BracketDecomp) -> list:
    return [[str(u), str(v)] for u, v in decomp.pairs]


def _parse_pairs(curve, text: str):
    """Parse "a1, b1; a2, b2; ..." into bracket pairs on the curve."""
    pairs = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        sides = chunk.split(",")
        if len(sides) != 2:
            raise ParseError(f"each pair needs exactly two elements: {chunk.strip()!r}")
        pairs.append((VField(curve.parse_element(sides[0])),
                      VField(curve.parse_element(sides[1]))))
    return tuple(pairs)


def _run_check(args) -> dict:
    curve = parse_curve(args.curve, order=args.order, max_steps=args.max_steps)
    certs = {}
    if isinstance(curve, PlaneCurve):
        certs["smoothness"] = _cert_doc(curve.smooth_cert)
    elif isinstance(curve, SpaceCurve):
        certs["unit"] = _cert_doc(curve.unit_cert)
        certs["preserves_ideal"] = True
    return {"status": "ok", "command": "check",
            "curve": curve.describe(), "certificates": certs}


def _decompose_on(curve, target, trace: bool) -> BracketDecomp:
    if isinstance(curve, AffineLine):
        return single_bracket_line(target, trace)
    if isinstance(curve, LocalizedLine):
        return rational_decompose(curve.denominator, target, trace)
    if isinstance(curve, PlaneCurve):
        return two_bracket_plane(curve, target, trace)
    return three_bracket_space(curve, target, trace)


def _run_decompose(args) -> dict:
    curve = parse_curve(args.curve, order=args.order, max_steps=args.max_steps)
    target = curve.parse_element(args.target)
    decomp = _decompose_on(curve, target, args.trace)
    verified = recombine(decomp).coeff == target
    doc = {"status": "ok", "command": "decompose",
           "curve": curve.describe(), "target": str(target),
           "decomposition": _pairs_doc(decomp), "length": decomp.length,
           "verification": verified}
    if args.trace:
        doc["trace"] = decomp.trace
    return doc


def _run_localize(args) -> dict:
    curve = parse_curve(args.curve, order=args.order, max_steps=args.max_steps)
    if not isinstance(curve, LocalizedLine):
        raise ValidationError("localize needs a curve of the form: line minus <f>")
    line = AffineLine()
    pairs = _parse_pairs(line, args.pairs)
    decomp = BracketDecomp(line, pairs)
    original = recombine(decomp)
    out = localize_decomp(decomp, curve.denominator, args.k, args.trace)
    target = curve.elem(original.coeff.poly, 2 * args.k)
    verified = recombine(out).coeff == target
    doc = {"status": "ok", "command": "localize",
           "curve": curve.describe(), "k": args.k,
           "target": str(target),
           "decomposition": _pairs_doc(out), "length": out.length,
           "verification": verified}
    if args.trace:
        doc["trace"] = out.trace
    return doc


def _run_verify(args) -> dict:
    curve = parse_curve(args.curve, order=args.order, max_steps=args.max_steps)
    target = curve.parse_element(args.target)
    pairs = _parse_pairs(curve, args.pairs)
    decomp = BracketDecomp(curve, pairs)
    verified = recombine(decomp).coeff == target
    doc = {"status": "ok", "command": "verify",
           "curve": curve.describe(), "target": str(target),
           "decomposition": _pairs_doc(decomp), "length": decomp.length,
           "verification": verified}
    if not verified:
        doc["status"] = "error"
        doc["error"] = {"code": "verification_failed",
                        "message": "pairs do not recombine to the target"}
    return doc


def _summary(doc: dict) -> str:
    if doc["status"] == "ok":
        cmd = doc["command"]
        if cmd == "check":
            return f"ok: curve accepted ({doc['curve']['variant']})"
        if cmd in ("decompose", "localize"):
            verified = "verified" if doc.get("verification") else "NOT verified"
            return (f"ok: {cmd} produced {doc['length']} bracket(s), {verified}, "
                    f"target {doc.get('target', '?')}")
        return f"ok: verified decomposition of length {doc['length']}"
    err = doc.get("error", {})
    return f"error [{err.get('code', 'unknown')}]: {err.get('message', '')}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bracketdec",
        description="Exact bracket decompositions of vector fields on affine curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--order", choices=("lex", "grlex"), default="lex",
                       help="monomial order for reductions (default lex)")
        p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                       metavar="N", help="reduction step budget")
        p.add_argument("--trace", action="store_true",
                       help="include construction intermediates in the output")

    p_check = sub.add_parser("check", help="validate a curve description")
    p_check.add_argument("--curve", required=True)
    add_common(p_check)

    p_dec = sub.add_parser("decompose", help="decompose target * tau into brackets")
    p_dec.add_argument("--curve", required=True)
    p_dec.add_argument("--target", required=True,
                       help="coefficient of tau, in the curve's element grammar")
    add_common(p_dec)

    p_loc = sub.add_parser("localize",
                           help="push a line decomposition onto a localized line")
    p_loc.add_argument("--curve", required=True,
                       help="must have the form: line minus <f>")
    p_loc.add_argument("--pairs", required=True,
                       help='line decomposition as "a1, b1; a2, b2; ..."')
    p_loc.add_argument("--k", type=int, required=True,
                       help="divide each pair entry by f^k")
    add_common(p_loc)

    p_ver = sub.add_parser("verify", help="recombine pairs and compare with target")
    p_ver.add_argument("--curve", required=True)
    p_ver.add_argument("--target", required=True)
    p_ver.add_argument("--pairs", required=True,
                       help='decomposition as "a1, b1; a2, b2; ..."')
    add_common(p_ver)

    return parser


_RUNNERS = {"check": _run_check, "decompose": _run_decompose,
            "localize": _run_localize, "verify": _run_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.order = MonomialOrder(args.order)
    try:
        doc = _RUNNERS[args.command](args)
        code = 0 if doc["status"] == "ok" else 1
    except (BracketDecError, ValueError) as exc:
        doc = {"status": "error", "command": args.command,
               "error": {"code": _error_code(exc), "message": str(exc)}}
        code = _exit_code(exc)
    print(json.dumps(doc, indent=2))
    print(_summary(doc), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
