"""make-figures command line entry point."""

from __future__ import annotations

import argparse
import sys

from .io import SchemaError
from .render import FIGURES, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="make-figures",
        description="Render figures from floqssh CSV output tables.",
    )
    parser.add_argument("--in", dest="indir", required=True, metavar="DIR",
                        help="directory holding the CSV tables")
    parser.add_argument("--fig", required=True, choices=FIGURES, help="figure to render")
    parser.add_argument("--out", required=True, metavar="PATH", help="output image path")
    parser.add_argument("--projection", choices=("real", "abs"), default="real",
                        help="projection for complex quasienergies (fig2)")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(args.fig, args.indir, args.out, args.projection)
        result = render(spec)
    except (SchemaError, ValueError) as exc:
        print(f"make-figures: {exc}", file=sys.stderr)
        return 2
    parts = ", ".join(f"{k}={v}" for k, v in result.summary.items())
    print(f"wrote {result.path} ({parts})")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
