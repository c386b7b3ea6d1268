"""Command-line entry point for the solvers, checkers, tables, and figures.

Exit codes: 0 success, 1 a verification failed, 2 usage error.  Numeric
fields are rendered once and reused, so text and JSON output always agree
and identical invocations (including the seed) are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import delian, euclid, figures, proportio, pyramid
from .scalar import (
    DecimalScalar,
    PrecisionContext,
    as_rational,
    format_grouped,
    round_to,
    sqrt,
    ulp,
)

ENV_DIGITS = "MESOLABE_DIGITS"
ENV_GUARD = "MESOLABE_GUARD"


@dataclass(frozen=True)
class RunConfig:
    """Shared run options resolved from flags and environment."""

    subcommand: str
    digits: int
    guard: int
    json_output: bool
    seed: int
    out_path: str | None

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("precision must be at least one digit")

    @property
    def context(self) -> PrecisionContext:
        return PrecisionContext.for_output(self.digits, self.guard)


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.json_output:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _residual_bound(r: DecimalScalar) -> str:
    """Human-sized upper bound for a tiny nonnegative residual."""
    if r.unscaled == 0:
        return "0"
    return f"1e-{r.scale - len(str(r.unscaled))}"


def _parse_scalar(text: str) -> DecimalScalar:
    return DecimalScalar.from_str(text)


def _parse_rational(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return DecimalScalar.from_str(text).as_fraction()


# -- subcommand handlers -------------------------------------------------------


def _cmd_solve_chords(cfg: RunConfig, args) -> int:
    d = _parse_scalar(args.diameter)
    full = proportio.solve_continued_chords(d, cfg.context)
    table_cfg = full.table_values(cfg.digits)
    table = proportio.chord_table(table_cfg)
    ok = proportio.chords_pass(full, cfg.digits)
    rows = {r.label: r for r in table.rows}
    lines = [f"diameter {d}, {cfg.digits} fractional digits", ""]
    width = max(len(r.grouped) for r in table.rows)
    for label in ("AD", "AB", "BC", "BD"):
        lines.append(f"  {label}   {rows[label].grouped:>{width}}")
    lines += ["", f"continued proportion verified: {'ok' if ok else 'FAILED'}"]
    payload = {
        "diameter": str(d),
        "digits": cfg.digits,
        "work_digits": cfg.context.work_digits,
        "chords": {
            label: {
                "value": str(rows[label].value),
                "grouped": rows[label].grouped,
                "full": str(v),
            }
            for label, v in (("AD", full.ad), ("AB", full.ab), ("BC", full.bc), ("BD", full.bd))
        },
        "verified": ok,
    }
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def _cmd_verify_table(cfg: RunConfig, args) -> int:
    ctx = cfg.context if cfg.digits >= 10 else PrecisionContext.for_output(10, cfg.guard)
    full = proportio.solve_continued_chords(DecimalScalar.from_int(2), ctx)
    table_cfg = full.table_values(10)
    chords = proportio.chord_table(table_cfg)
    products = proportio.reproduce_table(table_cfg)
    contrast = proportio.true_product_rows(full)

    expected_misprints = {"DAB", "CBD", "BD^2"}
    misprints = {r.label for r in products.rows if r.is_misprint}
    chords_match = all(r.printed == r.grouped for r in chords.rows)
    ok = chords_match and misprints == expected_misprints

    lines = [chords.title]
    for r in chords.rows:
        lines.append(f"  {r.label:<5} {r.grouped:>16}")
    lines += ["", products.title]
    for r in products.rows:
        mark = "  MISPRINT" if r.is_misprint else ""
        lines.append(f"  {r.label:<5} {r.grouped:>28}{mark}")
        if r.is_misprint:
            lines.append(f"        printed as {r.printed}")
    lines += ["", contrast.title]
    for r in contrast.rows:
        lines.append(f"  {r.label:<5} {r.grouped:>28}")
    lines += ["", f"table verification: {'ok' if ok else 'FAILED'}"]

    payload = {
        "chords": [
            {"label": r.label, "as_computed": r.grouped, "as_printed": r.printed}
            for r in chords.rows
        ],
        "products": [
            {
                "label": r.label,
                "as_computed": r.grouped,
                "as_printed": r.printed,
                "misprint": r.is_misprint,
                "note": r.note,
            }
            for r in products.rows
        ],
        "unrounded_products": [
            {"label": r.label, "as_computed": r.grouped} for r in contrast.rows
        ],
        "verified": ok,
    }
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def _cmd_pyramid(cfg: RunConfig, args) -> int:
    ctx = cfg.context
    if args.cosines:
        edges = [as_rational(_parse_scalar(e)) for e in args.edges]
        cosines = [_parse_rational(c) for c in args.cosines]
        frame = pyramid.ObliqueVertexFrame(*edges, *cosines)
        dsq = pyramid.oblique_diagonal_sq(frame)
        diag = sqrt(DecimalScalar.from_fraction(Fraction(dsq), ctx.work_digits), ctx)
        lines = [
            f"edges: {args.edges[0]} {args.edges[1]} {args.edges[2]}",
            f"cosines: {args.cosines[0]} {args.cosines[1]} {args.cosines[2]}",
            f"squared diagonal (exact): {dsq}",
            f"diagonal: {diag}",
        ]
        payload = {
            "edges": args.edges,
            "cosines": args.cosines,
            "diagonal_sq": str(dsq),
            "diagonal": str(diag),
        }
        _emit(cfg, payload, lines)
        return 0
    edges = [_parse_scalar(e) for e in args.edges]
    p = pyramid.RightPyramid(*edges)
    dsq = pyramid.diagonal_sq(p)
    sphere_sq = pyramid.circumsphere_diameter_sq(p)
    diag = sqrt(dsq, ctx)
    prism_ok = pyramid.prism_diagonal_check(p)
    ok = prism_ok and dsq == sphere_sq
    lines = [
        f"edges: {p.da} {p.db} {p.dc}",
        f"squared diagonal: {dsq}",
        f"diagonal: {diag}",
        f"circumscribed sphere diameter squared: {sphere_sq}",
        f"prism rectangle diagonal equals solid diagonal: {'ok' if prism_ok else 'FAILED'}",
    ]
    payload = {
        "edges": [str(e) for e in edges],
        "diagonal_sq": str(dsq),
        "diagonal": str(diag),
        "circumsphere_diameter_sq": str(sphere_sq),
        "prism_check": prism_ok,
    }
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def _means_payload(result: delian.MeansResult, cfg: RunConfig) -> tuple[dict, list[str]]:
    m1 = round_to(result.m1, cfg.digits)
    m2 = round_to(result.m2, cfg.digits)
    theta = DecimalScalar.from_fraction(result.theta_param, cfg.context.work_digits + 1)
    payload = {
        "method": result.method,
        "m1": str(m1),
        "m2": str(m2),
        "m1_full": str(result.m1),
        "m2_full": str(result.m2),
        "theta": str(theta),
        "iterations": result.iterations,
        "residual_bound": _residual_bound(result.residual),
    }
    lines = [
        f"method: {result.method}",
        f"m1 = {m1}",
        f"m2 = {m2}",
        f"arc parameter t = {theta}",
        f"iterations: {result.iterations}",
        f"continued-proportion residual < {payload['residual_bound']}",
    ]
    return payload, lines


def _cmd_means(cfg: RunConfig, args) -> int:
    a, b = _parse_scalar(args.a), _parse_scalar(args.b)
    ctx = cfg.context
    if args.method == "both":
        r1 = delian.two_means_instrument(a, b, ctx)
        r2 = delian.two_means_compass(a, b, ctx)
        gap = abs(r1.theta_param - r2.theta_param)
        agree = gap <= Fraction(1, 10**ctx.work_digits)
        p1, l1 = _means_payload(r1, cfg)
        p2, l2 = _means_payload(r2, cfg)
        payload = {"instrument": p1, "compass": p2, "parameters_agree": agree}
        lines = l1 + [""] + l2 + ["", f"solver parameters agree: {'ok' if agree else 'FAILED'}"]
        _emit(cfg, payload, lines)
        return 0 if agree else 1
    solver = delian.two_means_instrument if args.method == "instrument" else delian.two_means_compass
    result = solver(a, b, ctx)
    payload, lines = _means_payload(result, cfg)
    _emit(cfg, payload, lines)
    return 0


def _cmd_duplicate_cube(cfg: RunConfig, args) -> int:
    edge = _parse_scalar(args.edge)
    ctx = cfg.context
    result = delian.duplicate_cube(edge, ctx)
    rounded = round_to(result, cfg.digits)
    doubling = result * result * result - 2 * edge * edge * edge
    ok = abs(doubling) < ulp(cfg.digits)
    payload = {
        "edge": str(edge),
        "doubled_edge": str(rounded),
        "doubled_edge_full": str(result),
        "volume_residual_bound": _residual_bound(abs(doubling)),
    }
    lines = [
        f"edge {edge} -> doubled-volume edge {rounded}",
        f"cube residual < {payload['volume_residual_bound']}",
    ]
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def _cmd_four_proportionals(cfg: RunConfig, args) -> int:
    ac = _parse_scalar(args.ac)
    t = _parse_rational(args.t)
    ctx = cfg.context
    build = proportio.four_proportionals_sphere if args.sphere else proportio.four_proportionals_planar
    quad = build(ac, t, ctx)
    ok = quad.check(ulp(cfg.digits))
    shown = {
        label: str(round_to(v, cfg.digits))
        for label, v in zip(("AF", "AE", "AD", "AC"), quad.terms())
    }
    lines = [f"{'spherical' if args.sphere else 'planar'} construction, t = {args.t}"]
    lines += [f"  {label} = {value}" for label, value in shown.items()]
    lines += ["", f"continued proportion verified: {'ok' if ok else 'FAILED'}"]
    payload = {
        "construction": "sphere" if args.sphere else "planar",
        "t": args.t,
        "quad": shown,
        "quad_full": {k: str(v) for k, v in zip(("AF", "AE", "AD", "AC"), quad.terms())},
        "verified": ok,
    }
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def _cmd_check_props(cfg: RunConfig, args) -> int:
    rows = euclid.run_proposition_suite(cfg.seed, args.instances)
    ok = all(r.passed for r in rows)
    lines = [f"proposition suite, seed {cfg.seed}, {args.instances} instances each", ""]
    for r in rows:
        status = "ok" if r.passed else "FAILED"
        lines.append(
            f"  {r.name:<16} {r.valid_ok}/{r.valid_total} valid, "
            f"{r.perturbed_detected}/{r.perturbed_total} perturbed detected  {status}"
        )
    lines += ["", "all propositions hold" if ok else "some propositions FAILED"]
    payload = {
        "seed": cfg.seed,
        "instances": args.instances,
        "propositions": [
            {
                "name": r.name,
                "valid_ok": r.valid_ok,
                "valid_total": r.valid_total,
                "perturbed_detected": r.perturbed_detected,
                "perturbed_total": r.perturbed_total,
                "passed": r.passed,
            }
            for r in rows
        ],
        "all_hold": ok,
    }
    _emit(cfg, payload, lines)
    return 0 if ok else 1


def _cmd_figure(cfg: RunConfig, args) -> int:
    params: dict = {"ctx": cfg.context}
    if args.edges:
        params.update({"da": _parse_rational(args.edges[0]),
                       "db": _parse_rational(args.edges[1]),
                       "dc": _parse_rational(args.edges[2])})
    if args.diameter:
        params["diameter"] = args.diameter
    if args.ac:
        params["ac"] = _parse_rational(args.ac)
    if args.t:
        params["t"] = _parse_rational(args.t)
    if args.a:
        params["a"] = _parse_rational(args.a)
    if args.b:
        params["b"] = _parse_rational(args.b)
    spec = figures.FigureSpec(args.id, params)
    document = figures.render(spec)
    if cfg.out_path in (None, "-"):
        sys.stdout.write(document)
    else:
        with open(cfg.out_path, "w", encoding="utf-8") as fh:
            fh.write(document)
        sys.stdout.write(f"figure {args.id} written to {cfg.out_path}\n")
    return 0


# -- parser ----------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mesolabe",
        description="Continued proportions, right-pyramid diagonals, and two mean "
        "proportionals at arbitrary decimal precision.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=None,
                        help=f"output fractional digits (default 20, or ${ENV_DIGITS})")
    common.add_argument("--guard", type=int, default=None,
                        help=f"guard digits beyond output (default 10, or ${ENV_GUARD})")
    common.add_argument("--json", action="store_true", help="JSON instead of text")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve-chords", parents=[common],
                       help="chord lengths AB, BC, BD in continued proportion with AD")
    p.add_argument("--diameter", required=True)
    p.set_defaults(func=_cmd_solve_chords)

    p = sub.add_parser("verify-table", parents=[common],
                       help="reproduce the printed 1682 tables and flag misprints")
    p.set_defaults(func=_cmd_verify_table)

    p = sub.add_parser("pyramid", parents=[common],
                       help="diagonal and circumsphere of a right-angled pyramid")
    p.add_argument("--edges", nargs=3, required=True, metavar=("DA", "DB", "DC"))
    p.add_argument("--cosines", nargs=3, metavar=("AB", "BC", "CA"),
                   help="pairwise vertex-angle cosines for the oblique case")
    p.set_defaults(func=_cmd_pyramid)

    p = sub.add_parser("means", parents=[common],
                       help="two mean proportionals between --a and --b")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=("instrument", "compass", "both"),
                   default="instrument")
    p.set_defaults(func=_cmd_means)

    p = sub.add_parser("duplicate-cube", parents=[common],
                       help="edge of the cube with twice the volume")
    p.add_argument("--edge", required=True)
    p.set_defaults(func=_cmd_duplicate_cube)

    p = sub.add_parser("four-proportionals", parents=[common],
                       help="the quad AF, AE, AD, AC at arc parameter --t")
    p.add_argument("--ac", required=True)
    p.add_argument("--t", required=True, help="rational arc parameter in (0, 1), e.g. 1/2")
    p.add_argument("--sphere", action="store_true")
    p.set_defaults(func=_cmd_four_proportionals)

    p = sub.add_parser("check-props", parents=[common],
                       help="run the Elements proposition oracle suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=1000)
    p.set_defaults(func=_cmd_check_props)

    p = sub.add_parser("figure", parents=[common], help="emit one figure as SVG")
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--out", default=None, help="output path, '-' for stdout")
    p.add_argument("--edges", nargs=3, metavar=("DA", "DB", "DC"))
    p.add_argument("--diameter")
    p.add_argument("--ac")
    p.add_argument("--t")
    p.add_argument("--a")
    p.add_argument("--b")
    p.set_defaults(func=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    digits = args.digits if args.digits is not None else int(os.environ.get(ENV_DIGITS, "20"))
    guard = args.guard if args.guard is not None else int(os.environ.get(ENV_GUARD, "10"))
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            digits=digits,
            guard=guard,
            json_output=getattr(args, "json", False),
            seed=getattr(args, "seed", 0),
            out_path=getattr(args, "out", None),
        )
        return args.func(cfg, args)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
