"""Command-line front end.

Four subcommands: ``compute`` prints a single object (a family member, a
coefficient polynomial, or a truncated series), ``eval`` evaluates a family
member at an exact rational point by a chosen route, ``table`` emits small
matrices, and ``verify`` runs the cross-checking suites.

Identical arguments produce byte-identical output; randomness only enters
through explicit seeds.  Exit codes: 0 success, 1 a verification suite
failed, 2 bad arguments or a mathematically invalid request (a pole, an
index outside a formula's range).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .exactalg import ExactAlgError, MultiPoly, PointAssignment, RatFunc
from .polys import (
    G_closed,
    G_from_recurrence,
    T_forward,
    c_direct,
    c_translated,
    carlitz_A,
    g_alpha_closed,
    g_lagrange,
    g_recurrence,
    g_recurrence_eval,
    kernel_root,
    morrison_g,
    narayana_gf,
    narayana_number,
    phi,
    riordan_A,
    t_of_T_closed,
    y_closed,
)
from .series import SeriesError, TruncSeries
from .verify import SUITE_NAMES, VerifyConfig, run_all, run_suite, sample_points

COMPUTE_OBJECTS = (
    "g",
    "narayana",
    "A",
    "A-carlitz",
    "phi",
    "c-direct",
    "c-translated",
    "narayana-gf",
    "G",
    "G-recurrence",
    "y",
    "kernel-root",
    "T-forward",
    "t-of-T",
)

DEFAULT_SERIES_ORDER = 10


class CliError(Exception):
    """Invalid request discovered after argument parsing; exits with 2."""


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def _add_common(parser: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    parser.add_argument(
        "--format", choices=formats, default="text", help="output format"
    )
    parser.add_argument(
        "--output", metavar="PATH", help="write to this file instead of stdout"
    )
    parser.add_argument(
        "--ascii",
        action="store_true",
        help="spell variable names out in text output (alpha, beta)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="runyon",
        description="Exact computation and cross-verification of the Runyon "
        "polynomial family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser(
        "compute", help="print one object: a family member, coefficient, or series"
    )
    compute.add_argument("object", choices=COMPUTE_OBJECTS)
    compute.add_argument("--n", type=int, help="family or row index")
    compute.add_argument("--r", type=int, help="first index for phi and the C sums")
    compute.add_argument("--k", type=int, help="w-power or second phi index")
    compute.add_argument(
        "--order",
        type=int,
        help=f"series truncation order (default {DEFAULT_SERIES_ORDER})",
    )
    compute.add_argument(
        "--repr",
        dest="representation",
        choices=("w-basis", "ratfunc"),
        default="w-basis",
        help="how to print a family member",
    )
    compute.add_argument("--x", type=_fraction, help="bind x to an exact rational")
    compute.add_argument("--alpha", type=_fraction, help="bind alpha")
    compute.add_argument("--beta", type=_fraction, help="bind beta")
    _add_common(compute, ("text", "json"))
    compute.set_defaults(func=_cmd_compute)

    evaluate = sub.add_parser(
        "eval", help="evaluate a family member at an exact rational point"
    )
    evaluate.add_argument("--n", type=int, required=True)
    evaluate.add_argument("--x", type=_fraction, required=True)
    evaluate.add_argument("--alpha", type=_fraction, required=True)
    evaluate.add_argument("--beta", type=_fraction, required=True)
    evaluate.add_argument(
        "--route",
        choices=("recurrence", "morrison", "lagrange"),
        default="recurrence",
        help="which independent construction to use",
    )
    _add_common(evaluate, ("text", "json"))
    evaluate.set_defaults(func=_cmd_eval)

    table = sub.add_parser("table", help="emit a small matrix of values")
    table.add_argument(
        "--what",
        choices=("A", "phi", "narayana", "g-values"),
        required=True,
    )
    table.add_argument("--max-n", type=int, default=6, dest="max_n")
    table.add_argument("--max-r", type=int, default=4, dest="max_r")
    table.add_argument("--max-k", type=int, default=4, dest="max_k")
    table.add_argument("--seed", type=int, default=0)
    table.add_argument(
        "--trials", type=int, default=3, help="point count for g-values"
    )
    _add_common(table, ("text", "csv", "json"))
    table.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="run the cross-checking suites")
    verify.add_argument(
        "--suite",
        choices=("all",) + SUITE_NAMES,
        default="all",
    )
    verify.add_argument("--max-n", type=int, dest="max_n")
    verify.add_argument(
        "--max",
        type=int,
        dest="max_bound",
        help="bound for the c-compare grid (alias of --max-n)",
    )
    verify.add_argument("--order", type=int)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--trials", type=int)
    verify.add_argument(
        "--mode", choices=("symbolic", "numeric", "both"), default="both"
    )
    _add_common(verify, ("text", "json"))
    verify.set_defaults(func=_cmd_verify)

    return parser


# ---------------------------------------------------------------------------
# rendering helpers


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


def _render_value(value, ascii_names: bool) -> str:
    if isinstance(value, (MultiPoly, RatFunc)):
        return value.to_str(ascii_names=ascii_names)
    return str(value)


def _series_text(series: TruncSeries, ascii_names: bool) -> str:
    lines = [
        f"[{series.variable}^{k}] {_render_value(series.coefficient(k), ascii_names)}"
        for k in range(series.order + 1)
    ]
    return "\n".join(lines) + "\n"


def _value_json(value):
    if isinstance(value, (MultiPoly, RatFunc)):
        return value.to_json()
    if isinstance(value, TruncSeries):
        return value.to_json()
    return str(value)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CliError(message)


# ---------------------------------------------------------------------------
# compute


def _point_from_args(args, needs_x: bool) -> PointAssignment | None:
    given = {
        "x": args.x,
        "alpha": args.alpha,
        "beta": args.beta,
    }
    relevant = ("x", "alpha", "beta") if needs_x else ("alpha", "beta")
    supplied = [name for name in relevant if given[name] is not None]
    if not supplied:
        extras = [name for name in given if given[name] is not None]
        _require(not extras, f"--{extras[0]} has no effect on this object" if extras else "")
        return None
    _require(
        len(supplied) == len(relevant),
        f"bind all of {', '.join('--' + r for r in relevant)} or none",
    )
    return PointAssignment(
        x=given["x"] if given["x"] is not None else Fraction(0),
        alpha=given["alpha"],
        beta=given["beta"],
    )


def _cmd_compute(args) -> int:
    obj = args.object
    params: dict = {}

    if obj == "g":
        _require(args.n is not None and args.n >= 0, "g needs --n >= 0")
        member = g_recurrence(args.n)
        params["n"] = args.n
        if args.representation == "ratfunc":
            value = member.as_ratfunc()
            if args.format == "json":
                payload = {"object": obj, "params": params, "value": _value_json(value)}
                _emit(_json_text(payload), args)
            else:
                _emit(_render_value(value, args.ascii) + "\n", args)
        else:
            if args.format == "json":
                payload = {"object": obj, "params": params, "value": member.to_json()}
                _emit(_json_text(payload), args)
            else:
                lines = [
                    f"A_{k} = {_render_value(coeff, args.ascii)}"
                    for k, coeff in enumerate(member.w_basis)
                ] or ["1"]
                _emit("\n".join(lines) + "\n", args)
        return 0

    scalar_builders = {
        "narayana": (lambda: g_alpha_closed(args.n), ("n",)),
        "A": (lambda: riordan_A(args.k, args.n), ("k", "n")),
        "A-carlitz": (lambda: carlitz_A(args.r, args.n), ("r", "n")),
        "phi": (lambda: phi(args.r, args.k), ("r", "k")),
        "c-direct": (lambda: c_direct(args.r, args.n), ("r", "n")),
        "c-translated": (lambda: c_translated(args.r, args.n), ("r", "n")),
    }
    if obj in scalar_builders:
        builder, needed = scalar_builders[obj]
        for name in needed:
            _require(getattr(args, name) is not None, f"{obj} needs --{name}")
            params[name] = getattr(args, name)
        value = builder()
        if args.format == "json":
            payload = {"object": obj, "params": params, "value": _value_json(value)}
            _emit(_json_text(payload), args)
        else:
            _emit(_render_value(value, args.ascii) + "\n", args)
        return 0

    series_builders = {
        "narayana-gf": (narayana_gf, False),
        "kernel-root": (kernel_root, False),
        "T-forward": (T_forward, False),
        "t-of-T": (t_of_T_closed, False),
        "G": (G_closed, True),
        "G-recurrence": (G_from_recurrence, True),
        "y": (y_closed, True),
    }
    builder, needs_x = series_builders[obj]
    order = args.order if args.order is not None else DEFAULT_SERIES_ORDER
    _require(order >= 0, "--order must be non-negative")
    at = _point_from_args(args, needs_x)
    params["order"] = order
    if at is not None:
        params["alpha"] = at.alpha
        params["beta"] = at.beta
        if needs_x:
            params["x"] = at.x
    series = builder(order, at=at)
    if args.format == "json":
        payload = {"object": obj, "params": params, "value": _value_json(series)}
        _emit(_json_text(payload), args)
    else:
        _emit(_series_text(series, args.ascii), args)
    return 0


# ---------------------------------------------------------------------------
# eval


def _cmd_eval(args) -> int:
    _require(args.n >= 0, "--n must be non-negative")
    pt = PointAssignment(x=args.x, alpha=args.alpha, beta=args.beta)
    if args.route == "recurrence":
        value = g_recurrence_eval(args.n, pt)
    elif args.route == "morrison":
        value = morrison_g(args.n, pt)
    else:
        value = g_lagrange(args.n).evaluate(pt)
    if args.format == "json":
        payload = {
            "object": "eval",
            "params": {
                "n": args.n,
                "x": str(args.x),
                "alpha": str(args.alpha),
                "beta": str(args.beta),
                "route": args.route,
            },
            "value": str(value),
        }
        _emit(_json_text(payload), args)
    else:
        _emit(f"{value}\n", args)
    return 0


# ---------------------------------------------------------------------------
# table


def _rows_to_csv(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _cmd_table(args) -> int:
    ascii_names = args.ascii
    what = args.what
    if what == "narayana":
        _require(args.max_n >= 1, "narayana table needs --max-n >= 1")
        triangle = [
            [narayana_number(n, k) for k in range(n)] for n in range(1, args.max_n + 1)
        ]
        if args.format == "json":
            payload = {
                "table": "narayana",
                "rows": [
                    {"n": n, "values": row}
                    for n, row in enumerate(triangle, start=1)
                ],
            }
            _emit(_json_text(payload), args)
        elif args.format == "csv":
            rows = [[str(n)] + [str(v) for v in row] for n, row in enumerate(triangle, 1)]
            _emit(_rows_to_csv(["n", "values..."], rows), args)
        else:
            _emit("\n".join(" ".join(str(v) for v in row) for row in triangle) + "\n", args)
        return 0

    if what == "A":
        _require(args.max_n >= 1, "A table needs --max-n >= 1")
        entries = [
            (n, k, riordan_A(k, n))
            for n in range(1, args.max_n + 1)
            for k in range(n)
        ]
        if args.format == "json":
            payload = {
                "table": "A",
                "entries": [
                    {"n": n, "k": k, "value": _value_json(v)} for n, k, v in entries
                ],
            }
            _emit(_json_text(payload), args)
        elif args.format == "csv":
            rows = [[str(n), str(k), v.to_str(ascii_names=True)] for n, k, v in entries]
            _emit(_rows_to_csv(["n", "k", "A"], rows), args)
        else:
            lines = [
                f"A[n={n},k={k}] = {_render_value(v, ascii_names)}" for n, k, v in entries
            ]
            _emit("\n".join(lines) + "\n", args)
        return 0

    if what == "phi":
        _require(args.max_r >= 0 and args.max_k >= 0, "phi table needs --max-r/--max-k >= 0")
        entries = [
            (r, k, phi(r, k))
            for r in range(args.max_r + 1)
            for k in range(args.max_k + 1)
        ]
        if args.format == "json":
            payload = {
                "table": "phi",
                "entries": [
                    {"r": r, "k": k, "value": _value_json(v)} for r, k, v in entries
                ],
            }
            _emit(_json_text(payload), args)
        elif args.format == "csv":
            rows = [[str(r), str(k), v.to_str(ascii_names=True)] for r, k, v in entries]
            _emit(_rows_to_csv(["r", "k", "phi"], rows), args)
        else:
            lines = [
                f"phi[r={r},k={k}] = {_render_value(v, ascii_names)}"
                for r, k, v in entries
            ]
            _emit("\n".join(lines) + "\n", args)
        return 0

    # g-values over a grid of seeded points
    _require(args.max_n >= 0, "g-values table needs --max-n >= 0")
    _require(args.trials >= 1, "g-values table needs --trials >= 1")
    points = sample_points(args.seed, args.trials)
    entries = []
    for n in range(args.max_n + 1):
        for i, pt in enumerate(points):
            entries.append((n, i, pt, g_recurrence_eval(n, pt)))
    if args.format == "json":
        payload = {
            "table": "g-values",
            "entries": [
                {
                    "n": n,
                    "point": {"x": str(pt.x), "alpha": str(pt.alpha), "beta": str(pt.beta)},
                    "value": str(v),
                }
                for n, _, pt, v in entries
            ],
        }
        _emit(_json_text(payload), args)
    elif args.format == "csv":
        rows = [
            [str(n), str(pt.x), str(pt.alpha), str(pt.beta), str(v)]
            for n, _, pt, v in entries
        ]
        _emit(_rows_to_csv(["n", "x", "alpha", "beta", "g_n"], rows), args)
    else:
        lines = [
            f"g_{n}(x={pt.x}, alpha={pt.alpha}, beta={pt.beta}) = {v}"
            for n, _, pt, v in entries
        ]
        _emit("\n".join(lines) + "\n", args)
    return 0


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    max_n = args.max_n if args.max_n is not None else args.max_bound
    config = VerifyConfig(
        max_n=max_n,
        order=args.order,
        seed=args.seed,
        trials=args.trials,
        mode=args.mode,
    )
    if args.suite == "all":
        reports = run_all(config)
    else:
        reports = [run_suite(args.suite, config)]
    ok = all(report.passed for report in reports)
    if args.format == "json":
        payload = {
            "passed": ok,
            "reports": [report.to_json_dict() for report in reports],
        }
        _emit(_json_text(payload), args)
    else:
        blocks = [report.to_text() for report in reports]
        blocks.append(f"overall: {'PASS' if ok else 'FAIL'}")
        _emit("\n".join(blocks) + "\n", args)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"runyon: error: {exc}", file=sys.stderr)
        return 2
    except (ExactAlgError, SeriesError, ZeroDivisionError) as exc:
        print(f"runyon: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
