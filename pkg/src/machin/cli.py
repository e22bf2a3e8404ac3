"""Command-line front end: generate identities, compute pi, verify folds.

Text output mirrors the classic trace format: an ``M <m> Q <q0>`` header,
one ``(+|-) Q <q>`` line per term (``lg Q <log10>`` once the integer would
be too wide to print), a ``(brk)`` marker when a partial run was cut off,
then the Lehmer measure and a float sanity sum for pi. JSON output emits a
formula document with integers as decimal strings.

Exit codes: 0 ok, 2 bad input, 3 cutoff without --partial, 4 precision
unachievable, 5 identity check failed, 6 partial formula not verifiable.
"""
from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    FoldError,
    GenerationCutoffError,
    IncompleteFormulaError,
    PrecisionUnachievableError,
)
from .evaluator import compute_pi
from .exactint import decimal_digits, from_decimal_string, log10_approx, to_decimal_string
from .generator import FormulaTerm, GenerationConfig, MachinFormula, generate
from .measure import LehmerResult, lehmer_measure
from .verify import float_sanity, fold_formula

__all__ = [
    "EXIT_BAD_INPUT",
    "EXIT_CUTOFF",
    "EXIT_IDENTITY_FAILED",
    "EXIT_OK",
    "EXIT_PARTIAL_NOT_VERIFIABLE",
    "EXIT_PRECISION",
    "SCHEMA_VERSION",
    "document_to_formula",
    "formula_to_document",
    "main",
    "render_text",
]

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_CUTOFF = 3
EXIT_PRECISION = 4
EXIT_IDENTITY_FAILED = 5
EXIT_PARTIAL_NOT_VERIFIABLE = 6

# headroom over --digits when generating a formula just to evaluate pi;
# covers the evaluator's internal retries with room to spare
_PI_DIGIT_MARGIN = 30


def _fail(message: str, code: int) -> int:
    print(f"machin: error: {message}", file=sys.stderr)
    return code


def formula_to_document(formula: MachinFormula, lehmer: LehmerResult) -> dict:
    """JSON-ready document; integers travel as decimal strings."""
    return {
        "schema_version": SCHEMA_VERSION,
        "q0": to_decimal_string(formula.q0),
        "m": str(formula.terms[0].coefficient),
        "mode": formula.mode,
        "complete": formula.complete,
        "terms": [
            {
                "sign": "+" if term.sign > 0 else "-",
                "q": to_decimal_string(term.q),
                "lg_q": log10_approx(term.q),
            }
            for term in formula.terms[1:]
        ],
        "lehmer": {"value": lehmer.value, "is_upper_bound": lehmer.is_upper_bound},
    }


def document_to_formula(doc) -> MachinFormula:
    """Rebuild a formula from a parsed document (inverse of formula_to_document)."""
    if not isinstance(doc, dict):
        raise ValueError("formula document must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported formula document (need schema_version {SCHEMA_VERSION})")
    try:
        q0 = from_decimal_string(doc["q0"])
        m = int(doc["m"])
        complete = bool(doc["complete"])
        mode = doc.get("mode", "signed")
        terms = [FormulaTerm(sign=1, q=q0, coefficient=m)]
        for entry in doc["terms"]:
            sign = {"+": 1, "-": -1}.get(entry["sign"])
            if sign is None:
                raise ValueError("term sign must be '+' or '-'")
            terms.append(FormulaTerm(sign=sign, q=from_decimal_string(entry["q"])))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed formula document: {exc}") from exc
    return MachinFormula(q0=q0, terms=tuple(terms), complete=complete, mode=mode)


def _q_display(q, digit_limit: int) -> str:
    if decimal_digits(q) > digit_limit:
        return f"lg Q {log10_approx(q)}"
    return f"Q {to_decimal_string(q)}"


def render_text(formula: MachinFormula, lehmer: LehmerResult, sanity: float,
                digit_limit: int = 200) -> str:
    lines = [f"M {formula.terms[0].coefficient} {_q_display(formula.q0, digit_limit)}"]
    for term in formula.terms[1:]:
        glyph = "(+)" if term.sign > 0 else "(-)"
        lines.append(f"{glyph} {_q_display(term.q, digit_limit)}")
    if not formula.complete:
        lines.append("(brk)")
    lines.append("---")
    if lehmer.is_upper_bound:
        lines.append(f"Lehm < {lehmer.value}")
    else:
        lines.append(f"Lehm {lehmer.value}")
    lines.append(f"Pi {sanity}")
    return "\n".join(lines)


def _parse_q0(text: str):
    try:
        q0 = from_decimal_string(text)
    except ValueError:
        return None
    return q0 if q0 >= 2 else None


def _load_formula(path: str) -> MachinFormula:
    with open(path, "r", encoding="utf-8") as handle:
        return document_to_formula(json.load(handle))


def _cmd_generate(args) -> int:
    q0 = _parse_q0(args.q0)
    if q0 is None:
        return _fail(f"q0 must be an integer >= 2, got {args.q0!r}", EXIT_BAD_INPUT)
    if args.max_digits < 1:
        return _fail("--max-digits must be at least 1", EXIT_BAD_INPUT)
    if args.display_digit_limit < 1:
        return _fail("--display-digit-limit must be at least 1", EXIT_BAD_INPUT)
    config = GenerationConfig(mode=args.mode, partial=args.partial, max_digits=args.max_digits)
    try:
        formula = generate(q0, config)
    except GenerationCutoffError as exc:
        return _fail(f"{exc} (use --partial to keep the truncated series)", EXIT_CUTOFF)
    lehmer = lehmer_measure(formula)
    sanity = float_sanity(formula)
    if args.format == "json":
        print(json.dumps(formula_to_document(formula, lehmer), indent=2))
    else:
        print(render_text(formula, lehmer, sanity, args.display_digit_limit))
    return EXIT_OK


def _cmd_pi(args) -> int:
    if args.digits < 1:
        return _fail("--digits must be at least 1", EXIT_BAD_INPUT)
    if args.formula is not None:
        try:
            formula = _load_formula(args.formula)
        except (OSError, ValueError, json.JSONDecodeError) as exc:
            return _fail(f"cannot load formula: {exc}", EXIT_BAD_INPUT)
    else:
        q0 = _parse_q0(args.q0)
        if q0 is None:
            return _fail(f"--q0 must be an integer >= 2, got {args.q0!r}", EXIT_BAD_INPUT)
        # partial generation sized to the request: the budget only needs one
        # dropped term beyond ~10^digits to anchor the tail bound
        config = GenerationConfig(partial=True, max_digits=args.digits + _PI_DIGIT_MARGIN)
        formula = generate(q0, config)
    try:
        print(compute_pi(formula, args.digits))
    except PrecisionUnachievableError as exc:
        return _fail(str(exc), EXIT_PRECISION)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if (args.q0 is None) == (args.formula is None):
        return _fail("pass exactly one of <q0> or --formula", EXIT_BAD_INPUT)
    if args.formula is not None:
        try:
            formula = _load_formula(args.formula)
        except (OSError, ValueError, json.JSONDecodeError) as exc:
            return _fail(f"cannot load formula: {exc}", EXIT_BAD_INPUT)
    else:
        q0 = _parse_q0(args.q0)
        if q0 is None:
            return _fail(f"q0 must be an integer >= 2, got {args.q0!r}", EXIT_BAD_INPUT)
        try:
            formula = generate(q0)
        except GenerationCutoffError as exc:
            return _fail(str(exc), EXIT_CUTOFF)
    if not formula.complete:
        return _fail("cannot verify partial formula as identity", EXIT_PARTIAL_NOT_VERIFIABLE)
    try:
        ratio = fold_formula(formula)
    except FoldError as exc:
        return _fail(f"identity check failed: {exc}", EXIT_IDENTITY_FAILED)
    except IncompleteFormulaError as exc:  # defensive; completeness checked above
        return _fail(str(exc), EXIT_PARTIAL_NOT_VERIFIABLE)
    if ratio.num == ratio.den:
        print("IDENTITY OK")
        return EXIT_OK
    return _fail("identity check failed: folded tangent is not 1", EXIT_IDENTITY_FAILED)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="machin",
        description="Generate Machin-like arctangent identities for pi/4, "
                    "measure them, verify them, and compute pi digits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="build the identity for a starting denominator")
    gen.add_argument("q0", help="starting denominator (integer >= 2)")
    gen.add_argument("--mode", choices=["signed", "positive"], default="signed")
    gen.add_argument("--partial", action="store_true",
                     help="keep a truncated series when terms outgrow --max-digits")
    gen.add_argument("--max-digits", type=int, default=1_000_000, metavar="N",
                     help="digit budget per term denominator (default 1000000)")
    gen.add_argument("--display-digit-limit", type=int, default=200, metavar="N",
                     help="print lg Q instead of integers wider than N digits (default 200)")
    gen.add_argument("--format", choices=["text", "json"], default="text")
    gen.set_defaults(func=_cmd_generate)

    pi = sub.add_parser("pi", help="compute pi digits from a formula")
    src = pi.add_mutually_exclusive_group(required=True)
    src.add_argument("--q0", help="generate the formula for this starting denominator")
    src.add_argument("--formula", metavar="PATH", help="load a formula document (JSON)")
    pi.add_argument("--digits", type=int, required=True, metavar="D",
                    help="number of decimal digits after the leading 3")
    pi.set_defaults(func=_cmd_pi)

    ver = sub.add_parser("verify", help="fold a formula and check it lands on arctan(1)")
    ver.add_argument("q0", nargs="?", default=None,
                     help="generate and verify the identity for this q0")
    ver.add_argument("--formula", metavar="PATH", help="verify a formula document (JSON)")
    ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
