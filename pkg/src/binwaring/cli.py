"""Command line front end.

Exit codes: 0 success, 1 input error, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, TextIO

import mpmath

from . import serialize
from .algebra import DEFAULT_PRECISION
from .apolarity import apolar_generators
from .decomposition import COMPLEX, DEFAULT_TOLERANCE, FIELDS, REAL, WaringDecomposition, verify_decomposition
from .errors import InputError, InvariantViolation
from .parse import parse_form
from .selftest import monomial_pairs, run_all
from .waring import (
    complex_rank,
    monomial_complex_decomposition,
    monomial_complex_rank,
    monomial_real_decomposition,
    monomial_real_rank,
    real_lower_bound_certificate,
    real_rank_bounds,
)

PRECISION_ENV = "BINWARING_PRECISION"


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = DEFAULT_PRECISION
    residual_tolerance: float = DEFAULT_TOLERANCE
    trials: int = 200
    seed: int = 0
    output: str = "human"

    def __post_init__(self):
        if self.precision_bits < 64:
            raise InputError("precision must be at least 64 bits")
        if not self.residual_tolerance > 0:
            raise InputError("tolerance must be positive")
        if self.output not in ("human", "json"):
            raise InputError(f"unknown output mode {self.output!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=int, default=None, help="working precision in bits (default 128)")
    common.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE, help="residual tolerance for numeric results")
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")

    parser = _Parser(prog="binwaring", description="Waring ranks and decompositions of binary forms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rank", parents=[common], help="Waring rank of a monomial or a form")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--monomial", nargs=2, type=int, metavar=("A", "B"))
    target.add_argument("--form", metavar="EXPR")
    p.add_argument("--field", choices=FIELDS, default=COMPLEX)

    p = sub.add_parser("decompose", parents=[common], help="explicit Waring decomposition")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--monomial", nargs=2, type=int, metavar=("A", "B"))
    target.add_argument("--form", metavar="EXPR")
    p.add_argument("--field", choices=FIELDS, default=COMPLEX)
    p.add_argument("--seed-roots", metavar="R1,R2,...", help="positive seed roots for the real construction")

    p = sub.add_parser("apolar", parents=[common], help="generators of the apolar ideal")
    p.add_argument("--form", required=True, metavar="EXPR")

    p = sub.add_parser("certify", parents=[common], help="real lower-bound certificate or witness")
    p.add_argument("--monomial", nargs=2, type=int, metavar=("A", "B"), required=True)
    p.add_argument("--terms", type=int, required=True, metavar="R")

    p = sub.add_parser("table", parents=[common], help="complex and real ranks of monomials")
    p.add_argument("--max-degree", type=int, default=12)

    p = sub.add_parser("selftest", parents=[common], help="run the seeded property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _emit_decomposition(dec: WaringDecomposition, config: RunConfig, out: TextIO):
    ok, res = verify_decomposition(dec, config.residual_tolerance)
    if not ok:
        raise InvariantViolation(f"decomposition failed verification (residual {res})")
    if config.output == "json":
        print(serialize.dumps(serialize.decomposition_to_json(dec)), file=out)
        return
    for t in dec.terms:
        print(t, file=out)
    shown = res if dec.exact else mpmath.nstr(res, 5)
    print(f"terms: {dec.rank}  field: {dec.field}  exact: {str(dec.exact).lower()}  residual: {shown}", file=out)


def _parse_seed_roots(text: Optional[str]):
    if not text:
        return None
    try:
        return [Fraction(s.strip()) for s in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed seed roots {text!r}") from exc


def _cmd_rank(args, config: RunConfig, out: TextIO):
    if args.monomial:
        a, b = args.monomial
        result = monomial_real_rank(a, b) if args.field == REAL else monomial_complex_rank(a, b, config.precision_bits)
    else:
        form = parse_form(args.form).form
        if args.field == REAL:
            bounds = real_rank_bounds(form, config.precision_bits)
            if config.output == "json":
                print(serialize.dumps({"lower": bounds.lower, "upper": bounds.upper}), file=out)
            else:
                print(bounds.lower if bounds.lower == bounds.upper else f"[{bounds.lower}, {bounds.upper or '?'}]", file=out)
            return
        result = complex_rank(form, config.precision_bits)
    ok, res = verify_decomposition(result.witness, config.residual_tolerance)
    if not ok:
        raise InvariantViolation(f"rank witness failed verification (residual {res})")
    if config.output == "json":
        print(serialize.dumps(serialize.rank_result_to_json(result)), file=out)
    else:
        print(result.rank, file=out)


def _cmd_decompose(args, config: RunConfig, out: TextIO):
    seeds = _parse_seed_roots(args.seed_roots)
    if args.monomial:
        a, b = args.monomial
        if min(a, b) == 0:
            dec = (monomial_real_rank if args.field == REAL else monomial_complex_rank)(a, b).witness
        elif args.field == REAL:
            dec = monomial_real_decomposition(a, b, seeds)
        else:
            dec = monomial_complex_decomposition(a, b, config.precision_bits)
    else:
        form = parse_form(args.form).form
        if args.field == REAL:
            dec = real_rank_bounds(form, config.precision_bits).witness
            if dec is None:
                raise InputError("no real decomposition found for this form")
        else:
            dec = complex_rank(form, config.precision_bits).witness
    _emit_decomposition(dec, config, out)


def _cmd_apolar(args, config: RunConfig, out: TextIO):
    pair = apolar_generators(parse_form(args.form).form)
    if config.output == "json":
        print(serialize.dumps(serialize.apolar_to_json(pair)), file=out)
    else:
        print(f"degrees: {pair.d1} {pair.d2}", file=out)
        print(f"g1: {pair.g1}", file=out)
        print(f"g2: {pair.g2}", file=out)


def _cmd_certify(args, config: RunConfig, out: TextIO):
    a, b = args.monomial
    r = args.terms
    if r < 1:
        raise InputError("--terms must be positive")
    if min(a, b) == 0 or r >= a + b:
        _emit_decomposition(monomial_real_rank(a, b).witness, config, out)
        return
    cert = real_lower_bound_certificate(a, b, r)
    if config.output == "json":
        print(serialize.dumps(serialize.certificate_to_json(cert)), file=out)
    else:
        print(
            f"x0^{a}*x1^{b} has no real expansion with {r} terms: "
            f"apolar elements of degree {r} vanish at y0^p*y1^({r}-p) for "
            f"{cert.gap_start} <= p <= {cert.gap_end} ({cert.reason})",
            file=out,
        )


def _cmd_table(args, config: RunConfig, out: TextIO):
    rows = [
        {"a": a, "b": b, "complex": monomial_complex_rank(a, b).rank, "real": monomial_real_rank(a, b).rank}
        for a, b in monomial_pairs(args.max_degree)
    ]
    if config.output == "json":
        print(serialize.dumps({"rows": rows}), file=out)
        return
    print(f"{'a':>3} {'b':>3} {'complex':>8} {'real':>5}", file=out)
    for row in rows:
        print(f"{row['a']:>3} {row['b']:>3} {row['complex']:>8} {row['real']:>5}", file=out)


def _cmd_selftest(args, config: RunConfig, out: TextIO):
    if not run_all(config.trials, config.seed, lambda line: print(line, file=out)):
        raise InvariantViolation("selftest failed")


COMMANDS = {
    "rank": _cmd_rank,
    "decompose": _cmd_decompose,
    "apolar": _cmd_apolar,
    "certify": _cmd_certify,
    "table": _cmd_table,
    "selftest": _cmd_selftest,
}


def run(argv: Sequence[str], out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        config = RunConfig(
            precision_bits=args.precision if args.precision is not None else _default_precision(),
            residual_tolerance=args.tolerance,
            trials=getattr(args, "trials", 200),
            seed=getattr(args, "seed", 0),
            output="json" if args.json else "human",
        )
        COMMANDS[args.command](args, config, out)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=err)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())

