#!/usr/bin/env python3
"""Render all seven construction figures to SVG files."""

import argparse
import pathlib

from mesolabe.figures import FigureSpec, render


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures-out")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for figure_id in range(1, 8):
        path = out_dir / f"figure{figure_id}.svg"
        path.write_text(render(FigureSpec(figure_id)), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
