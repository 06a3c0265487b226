"""Command line front end: generate, analyze, verify, scan.

Exit codes are a stable scripting contract: 0 on success (all checks
confirmed), 1 when a verifier finds a counterexample, 2 on input or usage
errors. Identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import format_reports, sequence_report
from .errors import GsslabError
from .gf2x import Field, poly_hex, poly_terms, primitive_polynomials, validate_primitive
from .gss import GssIndex, gss_family, gss_generate, self_shrinking_index, shift_of_G
from .sequences import format_bits, generate_msequence, parse_bits, sliding_sequence
from .theorems import VERIFIER_ORDER, VERIFIERS, VerifyContext, format_verdicts

GENERATION_CAP = 24
EXHAUSTIVE_CAP = 16
ENV_CAP = "GSSLAB_MAX_L"

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad command line input; reported on stderr with exit status 2."""


def _cap(args: argparse.Namespace, default: int) -> int:
    if args.max_l is not None:
        return args.max_l
    env = os.environ.get(ENV_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{ENV_CAP} must be an integer, got {env!r}") from None
    return default


def _field_for(args: argparse.Namespace, exhaustive: bool = False) -> Field:
    cap = _cap(args, EXHAUSTIVE_CAP if exhaustive else GENERATION_CAP)
    return validate_primitive(args.poly, max_degree=cap)


def _parse_index(spec: str, field: Field) -> GssIndex:
    text = spec.strip()
    low = text.lower()
    if low == "zero":
        return GssIndex.zero()
    if low == "ss":
        return self_shrinking_index(field)
    if low.startswith("s="):
        text = text[2:]
        low = low[2:]
    if low.startswith("g="):
        try:
            g = parse_bits(text[2:])
        except ValueError as exc:
            raise UsageError(f"index: {exc}") from None
        if len(g) != field.degree:
            raise UsageError(f"index: G needs {field.degree} bits, got {len(g)}")
        return shift_of_G(field, g)
    try:
        return GssIndex.shift(int(text))
    except ValueError:
        raise UsageError(
            f"index {spec!r} not understood: expected zero, ss, s=<int>, G=<bits>"
        ) from None


def _emit(text: str, args: argparse.Namespace) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _trace_text(seq, index: GssIndex) -> str:
    v = (0,) * seq.period if index.is_zero else sliding_sequence(seq, index.s)
    lines = ["# n\ta_n\tv_n\tout"]
    for n, (a_bit, v_bit) in enumerate(zip(seq.bits, v)):
        out = str(v_bit) if a_bit else "-"
        lines.append(f"{n}\t{a_bit}\t{v_bit}\t{out}")
    return "\n".join(lines) + "\n"


def _resolve_index(args: argparse.Namespace, field: Field) -> GssIndex:
    if args.shift is not None:
        return GssIndex.shift(args.shift)
    return _parse_index(args.index, field)


def _cmd_generate(args: argparse.Namespace) -> int:
    field = _field_for(args)
    seq = generate_msequence(field)
    if args.family:
        if args.trace:
            raise UsageError("--trace applies to a single member, not --family")
        lines = [f"poly={poly_hex(field.modulus)} L={field.degree}"]
        for member in gss_family(seq).members:
            lines.append(f"{member.index.label}\t{format_bits(member.bits)}")
        _emit("\n".join(lines) + "\n", args)
        return EXIT_OK
    index = _resolve_index(args, field)
    member = gss_generate(seq, index)
    text = format_bits(member.bits) + "\n"
    if args.trace:
        text = _trace_text(seq, index) + text
    _emit(text, args)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    field = _field_for(args, exhaustive=args.family)
    seq = generate_msequence(field)
    if args.family:
        reports = [
            sequence_report(member.bits, member.index.label)
            for member in gss_family(seq).members
        ]
    else:
        member = gss_generate(seq, _resolve_index(args, field))
        reports = [sequence_report(member.bits, member.index.label)]
    _emit(format_reports(reports, args.format), args)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.all:
        names = list(VERIFIER_ORDER)
        if args.names:
            raise UsageError("give either --all or verifier names, not both")
    elif args.names:
        unknown = [n for n in args.names if n not in VERIFIERS]
        if unknown:
            raise UsageError(
                f"unknown verifier(s) {', '.join(unknown)}; choose from {', '.join(VERIFIER_ORDER)}"
            )
        names = list(args.names)
    else:
        raise UsageError("nothing to verify: give --all or verifier names")
    field = _field_for(args, exhaustive=True)
    ctx = VerifyContext.build(field)
    reports = [VERIFIERS[name](ctx) for name in names]
    _emit(format_verdicts(reports, args.format), args)
    return EXIT_OK if all(r.confirmed for r in reports) else EXIT_COUNTEREXAMPLE


def _parse_degrees(text: str) -> tuple[int, int]:
    parts = text.split("..")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise UsageError(f"degrees {text!r} not understood: expected N or A..B") from None
    if lo > hi:
        raise UsageError(f"empty degree range {text!r}")
    return lo, hi


def _cmd_scan(args: argparse.Namespace) -> int:
    lo, hi = _parse_degrees(args.degrees)
    cap = _cap(args, EXHAUSTIVE_CAP)
    if lo < 2 or hi > cap:
        raise UsageError(f"degree range {lo}..{hi} outside 2..{cap}")
    if args.checks:
        names = [n.strip() for n in args.checks.split(",") if n.strip()]
        unknown = [n for n in names if n not in VERIFIERS]
        if unknown:
            raise UsageError(
                f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(VERIFIER_ORDER)}"
            )
    else:
        names = list(VERIFIER_ORDER)
    lines = []
    rows = []
    total = 0
    bad = 0
    for degree in range(lo, hi + 1):
        for mask in primitive_polynomials(degree, max_degree=cap):
            ctx = VerifyContext.build(Field(mask))
            reports = [VERIFIERS[name](ctx) for name in names]
            failed = [r.name for r in reports if not r.confirmed]
            total += 1
            if failed:
                bad += 1
                status = f"COUNTEREXAMPLE {','.join(failed)}"
            else:
                status = f"CONFIRMED {len(reports)}/{len(reports)}"
            lines.append(f"L={degree} poly={poly_hex(mask)} ({poly_terms(mask)}): {status}")
            rows.append((str(degree), poly_hex(mask), "COUNTEREXAMPLE" if failed else "CONFIRMED", ",".join(failed)))
    summary = f"scanned {total} primitive polynomial(s), degrees {lo}..{hi}: " + (
        "all confirmed" if bad == 0 else f"{bad} with counterexamples"
    )
    if args.format == "table":
        _emit("\n".join(lines + [summary]) + "\n", args)
    elif args.format == "csv":
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(("degree", "poly", "status", "failed"))
        writer.writerows(rows)
        _emit(buf.getvalue(), args)
    elif args.format == "stext":
        chunks = [
            "\n".join(
                (f"degree: {d}", f"poly: {p}", f"status: {s}", f"failed: {f or '-'}")
            )
            for d, p, s, f in rows
        ]
        _emit("\n\n".join(chunks) + "\n", args)
    return EXIT_OK if bad == 0 else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "stext"), default="table")
    common.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
    common.add_argument("--max-l", type=int, default=None, metavar="N",
                        help=f"degree cap override (also {ENV_CAP})")

    withpoly = argparse.ArgumentParser(add_help=False)
    withpoly.add_argument("--poly", required=True, metavar="P",
                          help='defining polynomial, "x^5+x^2+1" or "0x25"')

    parser = argparse.ArgumentParser(
        prog="gsslab",
        description="Generate, analyze and verify generalized self-shrinking sequence families.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", parents=[withpoly, common],
                         help="emit one family member or the whole family")
    pick = gen.add_mutually_exclusive_group(required=True)
    pick.add_argument("--shift", type=int, metavar="S")
    pick.add_argument("--index", metavar="SPEC", help="zero | ss | s=<int> | G=<bits>")
    pick.add_argument("--family", action="store_true")
    gen.add_argument("--trace", action="store_true",
                     help="prepend the per-position decimation trace")
    gen.set_defaults(func=_cmd_generate)

    ana = sub.add_parser("analyze", parents=[withpoly, common],
                         help="measure one member or the whole family")
    pick = ana.add_mutually_exclusive_group(required=True)
    pick.add_argument("--shift", type=int, metavar="S")
    pick.add_argument("--index", metavar="SPEC")
    pick.add_argument("--family", action="store_true")
    ana.set_defaults(func=_cmd_analyze)

    ver = sub.add_parser("verify", parents=[withpoly, common],
                         help="run structural verifiers and print a scorecard")
    ver.add_argument("names", nargs="*", metavar="NAME",
                     help=f"verifiers to run: {', '.join(VERIFIER_ORDER)}")
    ver.add_argument("--all", action="store_true", help="run every verifier")
    ver.set_defaults(func=_cmd_verify)

    scan = sub.add_parser("scan", parents=[common],
                          help="enumerate primitive polynomials and verify each")
    scan.add_argument("--degrees", required=True, metavar="A..B")
    scan.add_argument("--checks", metavar="NAMES",
                      help="comma-separated verifier subset (default: all)")
    scan.set_defaults(func=_cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GsslabError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
