"""Command line: render --kind fig3|fig4 --in csv --out svg. Exit 0/1."""

from __future__ import annotations

import argparse
import sys

from .render import FigureSpec, SchemaError, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="render", description=__doc__)
    parser.add_argument("--kind", required=True, choices=("fig3", "fig4"))
    parser.add_argument("--in", dest="input_csv", required=True)
    parser.add_argument("--out", dest="output_path", required=True)
    parser.add_argument("--x-label", default="")
    parser.add_argument("--y-label", default="")
    parser.add_argument("--annotate-eta", dest="eta_annotation", default=None)
    args = parser.parse_args(argv)
    if not args.output_path.endswith(".svg"):
        print("error: only .svg output is supported", file=sys.stderr)
        return 1
    spec = FigureSpec(
        input_csv=args.input_csv,
        kind=args.kind,
        output_path=args.output_path,
        x_label=args.x_label,
        y_label=args.y_label,
        eta_annotation=args.eta_annotation,
    )
    try:
        render(spec)
    except (SchemaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
