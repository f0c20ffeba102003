"""Command-line entry point.

    plugtwist [--format text|json] <group> <command> [args]

Exit codes: 0 ok, 1 user error, 2 inconclusive (only ``obstruct certify``).
JSON output is key-sorted with compact separators, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import argparse
import enum
import json
import re
import sys
import warnings
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import braids, invariants, obstruction, qforms, rationals
from .errors import TwistCalcError
from .laurent import LaurentPoly1


class Status(str, enum.Enum):
    OK = "Ok"
    USER_ERROR = "UserError"
    INCONCLUSIVE = "Inconclusive"


EXIT_CODES = {Status.OK: 0, Status.USER_ERROR: 1, Status.INCONCLUSIVE: 2}


@dataclass
class CommandResult:
    status: Status
    payload: Dict[str, Any]
    warnings: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        body = dict(self.payload)
        body["status"] = self.status.value
        body["warnings"] = list(self.warnings)
        return json.dumps(body, sort_keys=True, separators=(",", ":"), ensure_ascii=True)

    def to_text(self) -> str:
        lines = [f"status: {self.status.value}"]
        lines.extend(_text_lines(self.payload, 0))
        lines.extend(f"warning: {w}" for w in self.warnings)
        return "\n".join(lines)


def _text_lines(value, depth: int) -> List[str]:
    pad = "  " * depth
    out = []
    for k, v in value.items():
        if isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_text_lines(v, depth + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            out.append(f"{pad}{k}:")
            for i, item in enumerate(v):
                out.append(f"{pad}  [{i}]")
                out.extend(_text_lines(item, depth + 2))
        else:
            out.append(f"{pad}{k}: {_scalar(v)}")
    return out


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "null"
    if isinstance(v, list):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


class UsageError(Exception):
    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    """Raises instead of exiting, and lets ``-7/3`` or ``-1,2`` be positionals."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        usage = self.format_usage().strip()
        if usage.startswith("usage: "):
            usage = usage[len("usage: "):]
        raise UsageError(message, usage)


# -- argument parsing helpers ---------------------------------------------------

def _rational(text: str) -> rationals.Rational:
    try:
        return rationals.Rational.parse(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r} ({exc})")


def _coeffs(text: str) -> Tuple[int, ...]:
    if not re.fullmatch(r"[+-]?\d+(,[+-]?\d+)*", text):
        raise argparse.ArgumentTypeError(f"expected comma-separated integers without spaces, got {text!r}")
    return tuple(int(x) for x in text.split(","))


def _poly_payload(poly: LaurentPoly1) -> Dict[str, Any]:
    low, dense = poly.dense()
    return {
        "polynomial": poly.format(),
        "low_exponent": low,
        "coefficients": dense,
        "determinant": abs(int(poly(-1))) if dense else 0,
        "value_at_1": int(poly(1)) if dense else 0,
    }


# -- handlers -------------------------------------------------------------------

def _cf_expand(args):
    cf = rationals.cf_expand(args.rational)
    return {"rational": str(args.rational), "coeffs": list(cf.coeffs), "length": len(cf)}


def _cf_normalize(args):
    nf = rationals.cf_normalize(args.rational, args.policy)
    out = nf.as_dict()
    out["policy"] = args.policy
    out["N"] = nf.length
    out["odd_index_sum"] = nf.odd_index_sum()
    out["mod4_signed_odd_sum"] = rationals.mod4_signed_odd_sum(nf) if nf.kind is rationals.Kind.LINK else None
    warn = []
    if not nf.exact:
        warn.append(
            f"{nf.source} has odd numerator and even denominator; no normal form evaluates to it, "
            f"returned a normal form of the same 2-bridge link with value {nf.value}"
        )
    return out, warn


def _cf_eval(args):
    r = rationals.cf_evaluate(args.coeffs)
    out = {"coeffs": list(args.coeffs), "p": r.p, "q": r.q, "value": str(r), "infinite": r.is_infinite}
    if rationals.is_normal(args.coeffs):
        out["kind"] = rationals.kind_of(args.coeffs).value
    return out


def _twist_word(args):
    w = braids.twist_word(args.rational, args.policy)
    nf = rationals.cf_normalize(args.rational, args.policy)
    return {
        "rational": str(args.rational),
        "coeffs": list(nf.coeffs),
        "word": w.as_list(),
        "word_text": str(w),
        "braid": str(braids.to_braid(w)),
        "f2_exponent": braids.f2_exponent(w),
    }


def _twist_is_trivial(args):
    return braids.word_nontriviality_report(args.rational, args.policy).as_dict()


def _braid_burau(args):
    try:
        w = braids.BraidWord.parse(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if w.max_generator > 2:
        raise UsageError("the reduced Burau matrices here are for 3 strands (s1, s2)")
    m = braids.burau(w)
    return {
        "word": str(w),
        "burau": [[str(x) for x in row] for row in m],
        "det": str(braids.burau_det(m)),
        "identity": braids.is_identity(m),
    }


def _inv_alexander(args):
    if args.braid is not None:
        try:
            w = braids.BraidWord.parse(args.braid)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        closure = args.closure or "standard"
        poly = invariants.alexander_closure(w, closure)
        src = {"braid": str(w), "closure": closure}
    elif args.coeffs is not None:
        poly = invariants.alexander_of_coeffs(args.coeffs)
        src = {"coeffs": list(args.coeffs), "closure": "plat"}
    elif args.rational is not None:
        nf = rationals.cf_normalize(args.rational, args.policy)
        poly = invariants.alexander_closure(invariants.braid_Bpq(nf), "plat")
        src = {"rational": str(args.rational), "coeffs": list(nf.coeffs), "closure": "plat"}
    else:
        raise UsageError("give p/q, --coeffs or --braid")
    out = dict(src)
    out.update(_poly_payload(poly))
    return out


def _inv_torus_link(args):
    poly = invariants.torus_link_alexander(args.n)
    return {
        "n": args.n,
        "polynomial": poly.format(),
        "exponents": [i for (i, _) in sorted(poly.terms)],
        "terms": len(poly),
        "value_at_1_1": int(poly(1, 1)),
    }


def _inv_basic_classes(args):
    bc = invariants.basic_classes(args.n)
    out = bc.as_dict()
    out["count"] = len(bc)
    out["pairing_check"] = obstruction.basic_class_pairing_check(args.n)
    return out


def _inv_genus(args):
    return {"a": args.a, "b": args.b, "genus": invariants.torus_knot_genus(args.a, args.b)}


def _form_show(args):
    q = qforms.standard_form(args.name)
    out = q.as_dict()
    out["invariants"] = qforms.invariants(q).as_dict()
    return out


def _form_isometries(args):
    q = qforms.standard_form(args.name)
    isos = qforms.enumerate_isometries(q, args.bound)
    out = {"form": q.as_dict(), "bound": args.bound, "count": len(isos), "matrices": [m.as_list() for m in isos]}
    if q.n == 3:
        for which in ("Lemma4", "Lemma5"):
            out[f"all_match_{which}"] = all(qforms.matches_lemma_shape(m.matrix, which) for m in isos)
        patterns = {"L4": "Lemma4", "L5": "Lemma5"}
        if q.name in patterns:
            expected = qforms.lemma_pattern_matrices(patterns[q.name], args.bound)
            out["pattern_count"] = len(expected)
            out["equals_pattern_set"] = expected == [m.matrix for m in isos]
    return out


def _form_classify(args):
    return qforms.classify_twist(args.rational, args.policy).as_dict()


def _obstruct_certify(args):
    cert = obstruction.nondiffeo_certificate(args.m, args.n)
    out = cert.as_dict()
    out["surface_m"] = obstruction.surface_data(args.m).as_dict()
    status = Status.OK if cert.certified else Status.INCONCLUSIVE
    return out, [], status


# -- parser -------------------------------------------------------------------------

def build_parser() -> _Parser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    parser = _Parser(prog="plugtwist", description="Twist calculus for 2-bridge plugs and g-corks.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def command(sub, name, handler: Callable, help_text: str):
        p = sub.add_parser(name, parents=[fmt], help=help_text, description=help_text)
        p.set_defaults(handler=handler)
        return p

    def policy(p):
        p.add_argument("--policy", choices=rationals._POLICIES, default="toward_zero")

    cf = groups.add_parser("cf", help="continued fractions").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = command(cf, "expand", _cf_expand, "negative continued fraction of p/q")
    p.add_argument("rational", type=_rational)
    p = command(cf, "normalize", _cf_normalize, "normal form with the move witness")
    p.add_argument("rational", type=_rational)
    policy(p)
    p = command(cf, "eval", _cf_eval, "evaluate b1,b2,...,bN")
    p.add_argument("coeffs", type=_coeffs)

    tw = groups.add_parser("twist", help="twist words").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = command(tw, "word", _twist_word, "twist word of p/q (p even)")
    p.add_argument("rational", type=_rational)
    policy(p)
    p = command(tw, "is-trivial", _twist_is_trivial, "decide whether the twist word is the identity")
    p.add_argument("rational", type=_rational)
    policy(p)

    br = groups.add_parser("braid", help="3-braids").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = command(br, "burau", _braid_burau, "reduced Burau matrix of a word such as 's1 s2^-1'")
    p.add_argument("word")

    inv = groups.add_parser("inv", help="invariants").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = command(inv, "alexander", _inv_alexander, "Alexander polynomial of K(p/q), a coefficient list, or a closed 3-braid")
    p.add_argument("rational", type=_rational, nargs="?")
    p.add_argument("--coeffs", type=_coeffs)
    p.add_argument("--braid")
    p.add_argument("--closure", choices=("plat", "standard"))
    policy(p)
    p = command(inv, "torus-link", _inv_torus_link, "SW polynomial of the (2,2n) torus link surgery")
    p.add_argument("n", type=int)
    p = command(inv, "basic-classes", _inv_basic_classes, "basic classes i(t1+t2)")
    p.add_argument("n", type=int)
    p = command(inv, "genus", _inv_genus, "genus of the (a,b) torus knot")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    fm = groups.add_parser("form", help="quadratic forms").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = command(fm, "classify", _form_classify, "plug or g-cork from the twisted double form")
    p.add_argument("rational", type=_rational)
    policy(p)
    p = command(fm, "isometries", _form_isometries, "all isometries with entries in [-bound, bound]")
    p.add_argument("name")
    p.add_argument("--bound", type=int, default=3)
    p = command(fm, "show", _form_show, "Gram matrix and invariants of a named form")
    p.add_argument("name")

    ob = groups.add_parser("obstruct", help="non-diffeomorphism certificates").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = command(ob, "certify", _obstruct_certify, "case table for Y_m versus Y_n")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    return parser


def _peek_format(argv: Sequence[str]) -> str:
    for i, a in enumerate(argv):
        if a == "--format" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--format="):
            return a.split("=", 1)[1]
    return "text"


def dispatch(argv: Sequence[str]) -> Tuple[CommandResult, int, str]:
    """Run one command; returns the result, the exit code and the chosen format."""
    parser = build_parser()
    fmt = _peek_format(argv)
    try:
        args = parser.parse_args(list(argv))
        fmt = args.format
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            ret = args.handler(args)
        warns: List[str] = []
        status = Status.OK
        if isinstance(ret, tuple):
            if len(ret) == 3:
                payload, warns, status = ret
            else:
                payload, warns = ret
        else:
            payload = ret
        warns = list(warns) + [str(w.message) for w in caught]
        result = CommandResult(status, payload, warns)
    except UsageError as exc:
        result = CommandResult(Status.USER_ERROR, {"error": str(exc), "usage": exc.usage.strip()})
    except (TwistCalcError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        result = CommandResult(Status.USER_ERROR, {"error": f"{type(exc).__name__}: {exc}"})
    return result, EXIT_CODES[result.status], fmt if fmt in ("text", "json") else "text"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        try:
            build_parser().parse_args(list(argv))
        except UsageError:
            pass
        except SystemExit as exc:
            return int(exc.code or 0)
    result, code, fmt = dispatch(argv)
    text = result.to_json() if fmt == "json" else result.to_text()
    stream = sys.stderr if result.status is Status.USER_ERROR and fmt == "text" else sys.stdout
    print(text, file=stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
