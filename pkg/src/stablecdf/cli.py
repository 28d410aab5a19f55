"""Command-line interface.

Exit codes: 0 success, 2 domain error, 3 numerical failure, 64 usage error.
Data goes to stdout (CSV/JSON), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import evaluator, selfcheck, tables, threshold
from .errors import DomainError, NumericalError
from .params import validate
from .quadrature import QuadratureSpec

EXIT_OK, EXIT_DOMAIN, EXIT_NUMERIC, EXIT_USAGE = 0, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(v) -> str:
    """17 significant digits, round-trip safe."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return format(v, ".17g")
    if v is None:
        return ""
    return str(v)


def _float_list(text):
    try:
        vals = [float(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return vals


def _int_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_law(p, theta=True):
    p.add_argument("--alpha", type=float, required=True)
    if theta:
        p.add_argument("--theta", type=float, default=0.0)


def _add_grid(p):
    p.add_argument("--x-min", type=float, required=True)
    p.add_argument("--x-max", type=float, required=True)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--spacing", choices=("linear", "log"), default="log")


def _grid(args):
    try:
        return tables.GridSpec(args.x_min, args.x_max, args.points, args.spacing)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stablecdf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_ in (("cdf", "distribution function at one point"),
                        ("pdf-tail", "density from the tail series at one point")):
        p = sub.add_parser(name, help=help_)
        _add_law(p)
        p.add_argument("--lambda", dest="lam", type=float, default=1.0)
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--n", dest="n_terms", type=int, default=30)
        p.add_argument("--eps", type=float, default=1e-5)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("threshold", help="solve for the threshold coordinate")
    _add_law(p, theta=False)
    p.add_argument("--n", dest="n_terms", type=int, default=30)
    p.add_argument("--eps", type=float, default=1e-5)
    p.add_argument("--convention", choices=("pi", "alpha"))

    p = sub.add_parser("errmap", help="series error against the reference over a grid (CSV)")
    _add_law(p)
    _add_grid(p)
    p.add_argument("--n", dest="n_list", type=_int_list, default=[3, 10, 30, 60, 90])
    p.add_argument("--eps", type=float, default=1e-5)

    p = sub.add_parser("table", help="series against quadrature over a grid")
    p.add_argument("--alpha", dest="alphas", type=_float_list, required=True)
    p.add_argument("--theta", type=float, default=0.0)
    _add_grid(p)
    p.add_argument("--n", dest="n_terms", type=int, default=30)
    p.add_argument("--eps", type=float, default=1e-5)
    p.add_argument("--quad-policy", choices=("plain", "split"), default="plain")
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    sub.add_parser("selfcheck", help="run the built-in invariant checks")
    return parser


def _report_dict(r: evaluator.EvalReport):
    return {"x": r.x, "alpha": r.params.alpha, "theta": r.params.theta, "lambda": r.params.lam,
            "value": r.value, "bound_or_estimate": r.bound_or_estimate,
            "bound_is_rigorous": r.bound_is_rigorous, "method": r.method.value,
            "threshold_used": r.threshold_used, "warnings": list(r.warnings)}


def _print_report(r, out, form):
    d = _report_dict(r)
    if form == "json":
        json.dump(d, out, indent=2)
        out.write("\n")
        return
    for key in ("value", "bound_or_estimate", "bound_is_rigorous", "method", "threshold_used"):
        out.write(f"{key}: {fmt(d[key])}\n")
    for w in r.warnings:
        print(f"warning: {w}", file=sys.stderr)


def _cmd_point(args, out):
    params = validate(args.alpha, args.theta, args.lam)
    policy = evaluator.EvalPolicy(n_terms=args.n_terms, epsilon=args.eps)
    fn = evaluator.cdf if args.command == "cdf" else evaluator.pdf_tail
    _print_report(fn(params, args.x, policy), out, args.format)


def _cmd_threshold(args, out):
    conventions = [args.convention] if args.convention else ["pi", "alpha"]
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["alpha", "n_terms", "epsilon", "convention", "x_eps", "iterations", "residual"])
    for c in conventions:
        r = threshold.solve_threshold(args.alpha, args.n_terms, args.eps, threshold.Convention(c))
        w.writerow([fmt(r.alpha), r.n_terms, fmt(r.epsilon), c, fmt(r.x_eps), r.iterations, fmt(r.residual)])


def _cmd_errmap(args, out):
    if not args.n_list:
        raise UsageError("--n needs at least one term count")
    grid = _grid(args)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(tables.ERRMAP_COLUMNS)
    for row in tables.errmap_rows(args.alpha, args.theta, grid, args.n_list, args.eps):
        w.writerow([fmt(row[c]) for c in tables.ERRMAP_COLUMNS])


def _cmd_table(args, out):
    if not args.alphas:
        raise UsageError("--alpha needs at least one value")
    grid = _grid(args)
    spec = QuadratureSpec(policy=args.quad_policy)
    rows = list(tables.table_rows(args.alphas, args.theta, grid, args.n_terms, args.eps, spec))
    onset = tables.divergence_points(rows)
    if args.format == "json":
        json.dump({"columns": list(tables.TABLE_COLUMNS),
                   "rows": [{c: (None if isinstance(r[c], float) and math.isnan(r[c]) else r[c])
                             for c in tables.TABLE_COLUMNS} for r in rows],
                   "divergence": [{"alpha": a, "x": x} for a, x in onset.items()]}, out, indent=1)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(tables.TABLE_COLUMNS)
        for r in rows:
            w.writerow([fmt(r[c]) for c in tables.TABLE_COLUMNS])
    for a, x in onset.items():
        where = f"x = {x:.6g}" if x is not None else "none on this grid"
        print(f"alpha={a:g}: quadrature divergence onset {where}", file=sys.stderr)


def _cmd_selfcheck(args, out):
    results = selfcheck.run()
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
    if not all(ok for _, ok, _ in results):
        raise NumericalError("selfcheck failed")


COMMANDS = {"cdf": _cmd_point, "pdf-tail": _cmd_point, "threshold": _cmd_threshold,
            "errmap": _cmd_errmap, "table": _cmd_table, "selfcheck": _cmd_selfcheck}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
