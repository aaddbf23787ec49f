"""Command-line entry point.

Four commands: `verify` runs the full pipeline for a bundled example (or a
replacement document graded against the same reference), `splitting`
prints the place tally of a document's extension, `bounds` computes
BSL/BSU for a document, and `table` renders the summary table with its
computed cells re-derived.  Exit codes: 0 success, 1 verification
failure, 2 usage or input error.  Set TOWERBOUNDS_REPORT_DIR to also
write each verification report as JSON into that directory.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from .documents import (
    bundled_table_text,
    load_coefficient_set,
    load_document,
)
from .pipeline import bounds_summary, render_table, splitting_lines, verify_example
from .report import Report

REPORT_DIR_ENV = "TOWERBOUNDS_REPORT_DIR"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="towerbounds",
        description="verify tower-infinitude certificates and ratio bounds")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", help="run the verification pipeline for a bundled example")
    verify.add_argument("--example", type=int, choices=(1, 2), required=True,
                        help="which bundled construction to grade against")
    verify.add_argument("--input", type=Path, default=None,
                        help="replacement document, graded against the same "
                             "reference values")

    splitting = sub.add_parser(
        "splitting", help="print place counts of the document's extension")
    splitting.add_argument("--input", type=Path, required=True)
    splitting.add_argument("--bound", type=int, required=True,
                           help="norm bound for the tally")

    bounds = sub.add_parser(
        "bounds", help="compute BSL/BSU for a document")
    bounds.add_argument("--input", type=Path, required=True)
    bounds.add_argument("--ineq", type=Path, default=None,
                        help="custom coefficient set for the linear "
                             "constraint; disables the tail certificate")

    table = sub.add_parser(
        "table", help="render the summary table, re-deriving computed cells")
    table.add_argument("--config", type=Path, default=None,
                       help="table configuration JSON; defaults to the "
                            "bundled one")
    return parser


def _write_report(report: Report, example: int) -> Optional[Path]:
    directory = os.environ.get(REPORT_DIR_ENV)
    if not directory:
        return None
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    out = path / f"report-example-{example}.json"
    out.write_text(report.to_json() + "\n", encoding="utf-8")
    return out


def _cmd_verify(args: argparse.Namespace) -> int:
    doc = load_document(args.input) if args.input is not None else None
    report = verify_example(args.example, doc)
    print(report.render_text())
    written = _write_report(report, args.example)
    if written is not None:
        print(f"report written to {written}")
    if not report.overall:
        print(f"first failing step: {report.first_failure()}")
        return 1
    return 0


def _cmd_splitting(args: argparse.Namespace) -> int:
    if args.bound < 1:
        raise ValueError("--bound must be positive")
    for line in splitting_lines(load_document(args.input), args.bound):
        print(line)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    budget = load_coefficient_set(args.ineq) if args.ineq is not None else None
    _, lines = bounds_summary(load_document(args.input), budget=budget)
    for line in lines:
        print(line)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.config is not None:
        config = json.loads(Path(args.config).read_text(encoding="utf-8"))
    else:
        config = json.loads(bundled_table_text())
    print(render_table(config))
    return 0


_DISPATCH = {
    "verify": _cmd_verify,
    "splitting": _cmd_splitting,
    "bounds": _cmd_bounds,
    "table": _cmd_table,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
