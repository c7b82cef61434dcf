"""``qsymlab`` command-line tool.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage,
parse or domain errors.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from . import bernstein as bn
from . import qsym
from .compositions import parse_composition
from .config import check_degree, degree_cap
from .errors import QsymlabError
from .expr import ExprSyntaxError, format_element, format_tensor, parse_element
from .hopf import HopfPresentation, generic_antipode
from .instances import characters_for, get_instance
from .jsonio import coaction_to_json, dumps, element_to_json, presentation_element_from_json
from .lincomb import LinComb
from .rings import ring_from_spec
from .suites import SUITES, SuiteUsageError, report_json, run_suite


class UsageError(Exception):
    pass


def _ring(text: str):
    try:
        return ring_from_spec(text)
    except (ValueError, KeyError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--ring", type=_ring, default=d(ring_from_spec("int")),
                   help="coefficient ring: int, rat or mod:<m> (default int)")
    p.add_argument("--format", choices=("text", "json"), default=d("text"), help="output format")
    p.add_argument("--algebra", default=d(None),
                   help="qsym, poly, lambda (verify also takes file:<path>)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsymlab", description="Exact computations in QSym and friends.")
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, help_text, elements="one"):
        p = sub.add_parser(name, help=help_text)
        _common(p, suppress=True)
        if elements == "many":
            p.add_argument("elements", nargs="+", help="elements in text syntax or JSON")
        elif elements == "one":
            p.add_argument("element", help="element in text syntax or JSON")
        return p

    add("mul", "product of one or more elements", "many")
    add("coprod", "coproduct")
    p = add("internal-coprod", "internal coproduct Delta_P on QSym")
    p.add_argument("--flipped", action="store_true", help="tensor-flipped version Delta'_P")
    add("antipode", "antipode")
    add("bernstein", "Bernstein homomorphism H -> H (x) QSym")
    p = add("abs", "ABS morphism H -> QSym for a character")
    p.add_argument("--character", required=True, help="character name, e.g. counit, eps_P, zeta1")
    p = add("xi", "coefficient map xi_alpha: H -> H")
    p.add_argument("--alpha", required=True, help="composition such as [2,1]")
    p = add("verify", "run a verification suite", elements="none")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-degree", type=int, default=None)
    return parser


# -- helpers ------------------------------------------------------------------

def _instance(args, default: str = "qsym") -> HopfPresentation:
    name = args.algebra or default
    if name.startswith("file:"):
        raise UsageError("file: algebras are only accepted by verify")
    try:
        return get_instance(name, args.ring)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _element(H: HopfPresentation, src: str) -> LinComb:
    if src.lstrip().startswith("{"):
        try:
            f = presentation_element_from_json(H, json.loads(src))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad JSON element: {exc}") from None
    else:
        f = parse_element(src, H)
    for k in f.keys():
        check_degree(H.degree(k))
    return f


def _emit_element(H: HopfPresentation, f: LinComb, fmt: str) -> str:
    if fmt == "json":
        return dumps(element_to_json(f, H.key_to_json))
    return format_element(H, f)


def _emit_tensor(f: LinComb, fmt: str, legs: Sequence[HopfPresentation]) -> str:
    if fmt == "json":
        enc = lambda key: [G.key_to_json(k) for G, k in zip(legs, key)]
        return dumps(element_to_json(f, enc))
    return format_tensor(f, *(G.format_key for G in legs))


def _require_qsym(H: HopfPresentation, what: str) -> None:
    if H.name != "qsym":
        raise UsageError(f"{what} is only defined on qsym")


# -- commands -------------------------------------------------------------------

def cmd_mul(args) -> str:
    H = _instance(args)
    out = H.one()
    for src in args.elements:
        out = H.mul(out, _element(H, src))
    return _emit_element(H, out, args.format)


def cmd_coprod(args) -> str:
    H = _instance(args)
    return _emit_tensor(H.coprod(_element(H, args.element)), args.format, (H, H))


def cmd_internal_coprod(args) -> str:
    H = _instance(args)
    _require_qsym(H, "internal-coprod")
    f = _element(H, args.element)
    t = qsym.delta_P_prime(f) if args.flipped else qsym.delta_P(f)
    return _emit_tensor(t, args.format, (H, H))


def cmd_antipode(args) -> str:
    H = _instance(args)
    f = _element(H, args.element)
    s = qsym.qsym_antipode(f) if H.name == "qsym" else generic_antipode(H, f)
    return _emit_element(H, s, args.format)


def cmd_bernstein(args) -> str:
    H = _instance(args)
    t = bn.bernstein_map(H, _element(H, args.element))
    if args.format == "json":
        return dumps(coaction_to_json(H, t))
    return _emit_tensor(t, "text", (H, get_instance("qsym", args.ring)))


def cmd_abs(args) -> str:
    H = _instance(args)
    chars = {z.name: z for z in characters_for(H)}
    if args.character not in chars:
        raise UsageError(f"unknown character {args.character!r} for {H.name}; "
                         f"choose from {', '.join(sorted(chars))}")
    psi = bn.abs_morphism(H, chars[args.character], _element(H, args.element))
    return _emit_element(get_instance("qsym", args.ring), psi, args.format)


def cmd_xi(args) -> str:
    H = _instance(args)
    bn.require_commutative(H)
    try:
        alpha = parse_composition(args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_element(H, bn.xi_alpha(H, alpha, _element(H, args.element)), args.format)


def cmd_verify(args):
    d = args.max_degree
    if d is not None:
        if d < 0:
            raise UsageError("--max-degree must be nonnegative")
        check_degree(d)
    else:
        d = min(SUITES[args.suite].default_degree, degree_cap())
    report = run_suite(args.suite, args.ring, d, args.algebra)
    text = report_json(report) if args.format == "json" else report.to_text()
    return text, (0 if report.passed else 1)


COMMANDS = {
    "mul": cmd_mul,
    "coprod": cmd_coprod,
    "internal-coprod": cmd_internal_coprod,
    "antipode": cmd_antipode,
    "bernstein": cmd_bernstein,
    "abs": cmd_abs,
    "xi": cmd_xi,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except ExprSyntaxError as exc:
        print(f"qsymlab: syntax error: {exc.pretty()}", file=stderr)
        return 2
    except (UsageError, SuiteUsageError, QsymlabError, ZeroDivisionError, ValueError) as exc:
        print(f"qsymlab: error: {exc}", file=stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
