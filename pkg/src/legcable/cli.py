"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 a theorem gap (``not_covered``).
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from legcable import report
from legcable.atlas import Branched, NotCovered, classify, mountain_range, to_text
from legcable.cable23 import presentation_from_peaks, transverse_classes
from legcable.parser import parse
from legcable.slopes import Slope

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_COVERED = 3


def _add_format(p: argparse.ArgumentParser, default: str = "table") -> None:
    p.add_argument("--format", choices=("json", "table", "ascii"), default=default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="legcable",
        description="Legendrian and transverse invariants of iterated torus knots.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classification record of a knot expression")
    p.add_argument("expr")
    _add_format(p)

    p = sub.add_parser("range", help="(r, tb) mountain range down to a floor")
    p.add_argument("expr")
    p.add_argument("--tb-floor", type=int, default=None, help="default: tb_bar - 10")
    _add_format(p)

    p = sub.add_parser("transverse", help="transverse classes per self-linking number")
    p.add_argument("expr")
    p.add_argument("--floor", type=int, default=None, help="tb floor; default: tb_bar - 10")
    _add_format(p)

    p = sub.add_parser("farey", help="Farey determinant and shortest path between slopes")
    p.add_argument("slope", type=Slope.parse)
    p.add_argument("other", type=Slope.parse)
    # let "-3/16" through as a positional rather than an unknown option
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    _add_format(p)

    p = sub.add_parser("nonthick", help="non-thickenable boundary slopes of the trefoil")
    p.add_argument("--max-k", type=int, required=True)
    _add_format(p)
    return ap


def _run(args: argparse.Namespace) -> report.Model:
    cmd = args.command
    if cmd == "farey":
        return report.farey_model(args.slope, args.other)
    if cmd == "nonthick":
        if args.max_k < 0:
            raise ValueError("--max-k must be nonnegative")
        return report.nonthick_model(args.max_k)

    expr = parse(args.expr)
    text = to_text(expr)
    try:
        c = classify(expr)
        if cmd == "classify":
            return report.classification_model(text, c)
        if cmd == "range":
            floor = c.tb_bar - 10 if args.tb_floor is None else args.tb_floor
            if floor > c.tb_bar:
                raise ValueError(f"--tb-floor {floor} is above tb_bar {c.tb_bar}")
            return report.range_model(text, mountain_range(c, floor))
        floor = c.tb_bar - 10 if args.floor is None else args.floor
        if isinstance(c.shape, Branched):
            pres = c.shape.presentation
        else:
            pres = presentation_from_peaks(c.peaks, c.tb_bar)
        return report.transverse_model(text, transverse_classes(pres, floor))
    except NotCovered as exc:
        return report.not_covered_model(text, exc.hypothesis)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        model = _run(args)
    except ValueError as exc:
        print(f"legcable: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(report.render(args.command, model, args.format))
    return EXIT_NOT_COVERED if model["status"] == "not_covered" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
