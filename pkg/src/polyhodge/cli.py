"""Command-line driver.

Subcommands::

    polyhodge analyze <file> [--json] [--report <path>]
    polyhodge curve --multiplicities a1,a2,...
    polyhodge jconst --n N --d D --k K --s S
    polyhodge selfcheck <file>
    polyhodge compare <fileA> <fileB>

Exit codes: 0 success, 1 parse/validation error, 2 mathematically
inconsistent input, 3 a self-check property failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .curves import CurveSpec
from .errors import (
    InconsistentGlobalData,
    NegativeFormula,
    NegativeMultiplicity,
    NotWeightMonotone,
    ParseError,
    PolyhodgeError,
    ValidationError,
)
from .infinity import InfinityHodge
from .jconstants import jacobian_graded_dim
from .report import analyze, render_selfcheck, selfcheck
from .seifert import semicontinuity_report
from .specio import parse_file

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2
EXIT_PROPERTY = 3

_INCONSISTENT = (InconsistentGlobalData, NegativeFormula, NotWeightMonotone, NegativeMultiplicity)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyhodge",
        description=(
            "Exact equivariant Hodge-theoretic invariants at infinity of a "
            "polynomial map, computed from the combinatorics of its top-degree form."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for one input document")
    p.add_argument("file", help="JSON input document")
    p.add_argument("--json", action="store_true", help="print the machine-readable report")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report to PATH")

    p = sub.add_parser("curve", help="plane-curve pipeline from factor multiplicities")
    p.add_argument(
        "--multiplicities",
        required=True,
        help="comma-separated multiplicities of the distinct linear factors",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--report", metavar="PATH")

    p = sub.add_parser("jconst", help="Jacobian-ring graded dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("selfcheck", help="run the consistency property suite")
    p.add_argument("file")

    p = sub.add_parser("compare", help="semicontinuity report between two inputs")
    p.add_argument("fileA", help="the special map")
    p.add_argument("fileB", help="its fixed-degree deformation")
    return parser


def _emit_report(spec, as_json: bool, report_path: str | None) -> None:
    doc = analyze(spec)
    payload = json.dumps(doc.to_json_dict(), indent=2, sort_keys=True)
    if report_path:
        with open(report_path, "w") as fh:
            fh.write(payload + "\n")
    if as_json:
        print(payload)
    else:
        print(doc.render_text(), end="")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            _emit_report(parse_file(args.file), args.json, args.report)
            return EXIT_OK

        if args.command == "curve":
            try:
                mults = tuple(int(a) for a in args.multiplicities.split(","))
            except ValueError:
                raise ValidationError(
                    f"--multiplicities must be comma-separated integers, got "
                    f"{args.multiplicities!r}"
                ) from None
            _emit_report(CurveSpec(mults), args.json, args.report)
            return EXIT_OK

        if args.command == "jconst":
            print(jacobian_graded_dim(args.n, args.d, args.k, args.s))
            return EXIT_OK

        if args.command == "selfcheck":
            rows = selfcheck(parse_file(args.file))
            print(render_selfcheck(rows), end="")
            if any(r.failed and r.name == "pipeline consistency" for r in rows):
                return EXIT_INCONSISTENT
            if any(r.failed for r in rows):
                return EXIT_PROPERTY
            return EXIT_OK

        if args.command == "compare":
            spec_a = parse_file(args.fileA)
            spec_b = parse_file(args.fileB)
            if spec_a.d != spec_b.d:
                raise ValidationError(
                    f"degrees differ: {spec_a.d} vs {spec_b.d}; semicontinuity "
                    "compares deformations of fixed degree"
                )
            spp_a = InfinityHodge.compute(spec_a).spectral_pairs
            spp_b = InfinityHodge.compute(spec_b).spectral_pairs
            rows = semicontinuity_report(spp_a, spp_b, spec_a.d)
            print(f"semicontinuity: {args.fileA} (special) vs {args.fileB} (deformation)")
            for row in rows:
                tag = "info" if row.informational else f"k={row.lower * spec_a.d}"
                bracket = "[)" if row.kind == "closed-open" else "(]"
                lo, hi = row.lower, row.lower + 1
                interval = f"{bracket[0]}{lo}, {hi}{bracket[1]}"
                verdict = "ok" if row.ok else "VIOLATED"
                print(
                    f"  {tag:>8}  {interval:>16}  special={row.count_special:<4} "
                    f"deformed={row.count_deformed:<4} {verdict}"
                )
            required = [r for r in rows if not r.informational]
            print(f"required intervals all ok: {all(r.ok for r in required)}")
            return EXIT_OK

        raise AssertionError(f"unhandled command {args.command}")
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _INCONSISTENT as exc:
        print(f"inconsistent input: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except PolyhodgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROPERTY


if __name__ == "__main__":
    raise SystemExit(main())
