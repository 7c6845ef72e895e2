"""Command-line interface: ``hyperzeta <subcommand> ...``.

Exit status is 0 on success, 1 when a check or a numerical evaluation fails
and 2 on a usage error; failures also write a JSON object to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import bernoulli as bern
from . import roots as rt
from . import verify as vf
from . import zeta as zt
from .errors import HyperZetaError
from .numerics import DEFAULT_CONTEXT, PrecisionContext


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return v


def _positive(text: str) -> float:
    v = _finite(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {v}")
    return v


def _orders(text: str) -> list[int]:
    try:
        out = [_positive_int(t) for t in text.split(",") if t.strip()]
    except argparse.ArgumentTypeError:
        raise argparse.ArgumentTypeError(f"bad order list {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty order list")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperzeta", description="Hypergeometric zeta functions and related numbers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate zeta_N(s)")
    e.add_argument("--order", type=_positive_int, required=True)
    e.add_argument("--re", type=_finite, required=True)
    e.add_argument("--im", type=_finite, default=0.0)
    e.add_argument("--method", choices=["auto", "series", "integral", "strip", "leftsum"], default="auto")
    e.add_argument("--tol", type=_positive, default=None)
    e.add_argument("--format", choices=["text", "json"], default="text")

    r = sub.add_parser("roots", help="zeros of e^z - T_{N-1}(z) in the upper half-plane")
    r.add_argument("--order", type=_positive_int, required=True)
    r.add_argument("--count", type=_positive_int, required=True)
    r.add_argument("--format", choices=["csv", "json"], default="csv")

    b = sub.add_parser("bernoulli", help="generalized Bernoulli numbers B_{N,0..M}")
    b.add_argument("--order", type=_positive_int, required=True)
    b.add_argument("--max-n", type=_nonneg_int, required=True)
    b.add_argument("--exact", action="store_true", help="print rationals p/q")
    b.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("residues", help="exact residues at the poles 2-N..1")
    s.add_argument("--order", type=_positive_int, required=True)
    s.add_argument("--format", choices=["text", "json"], default="text")

    v = sub.add_parser("verify", help="run the check suites")
    v.add_argument("--suite", choices=["all"] + list(vf.SUITES), default="all")
    v.add_argument("--format", choices=["text", "json"], default="text")

    d = sub.add_parser("plot-data", help="CSV of zeta_N(sigma) on a real grid")
    d.add_argument("--orders", type=_orders, default=[1, 2, 3])
    d.add_argument("--sigma-min", type=_finite, default=1.1)
    d.add_argument("--sigma-max", type=_finite, default=5.0)
    d.add_argument("--step", type=_positive, default=0.05)
    return p


def _cmd_eval(a, out) -> int:
    ctx = DEFAULT_CONTEXT if a.tol is None else PrecisionContext(target_abs_tol=a.tol)
    res = zt.evaluate(a.order, complex(a.re, a.im), ctx, method=a.method)
    if a.format == "json":
        out.write(res.to_json() + "\n")
    else:
        v = res.value
        val = repr(v.real) if v.imag == 0 else f"{v.real!r} {'+' if v.imag >= 0 else '-'} {abs(v.imag)!r}i"
        if res.exact is not None:
            val += f"  (= {bern.format_rational(res.exact)})"
        out.write(f"{val}\nabs_err {res.abs_error_estimate:.3g}  method {res.method}  region {res.region}\n")
    return 0


def _cmd_roots(a, out) -> int:
    table = rt.root_table(a.order, a.count)
    out.write(table.to_csv() if a.format == "csv" else table.to_json() + "\n")
    return 0


def _cmd_bernoulli(a, out) -> int:
    tab = bern.generalized_bernoulli(a.order, a.max_n)
    vals = tab.as_strings() if a.exact else [f"{float(q):.10g}" for q in tab.values]
    if a.format == "json":
        out.write(json.dumps({"order": a.order, "values": vals}) + "\n")
    else:
        for n, v in enumerate(vals):
            out.write(f"{n} {v}\n")
    return 0


def _cmd_residues(a, out) -> int:
    rows = [(n, zt.residue_at(a.order, n)) for n in zt.poles(a.order)]
    if a.format == "json":
        out.write(json.dumps({"order": a.order,
                              "residues": [{"pole": n, "residue": bern.format_rational(q)} for n, q in rows]})
                  + "\n")
    else:
        for n, q in rows:
            out.write(f"{n} {bern.format_rational(q)}\n")
    return 0


def _cmd_verify(a, out) -> int:
    reports = vf.run_suite(a.suite)
    out.write((vf.reports_json(reports) if a.format == "json" else vf.reports_text(reports)) + "\n")
    if vf.suite_passed(reports):
        return 0
    failed = [r.check_id for r in reports if r.kind == "assert" and not r.passed]
    sys.stderr.write(json.dumps({"error": "check-failure", "failed": failed}) + "\n")
    return 1


def sigma_grid(lo: float, hi: float, step: float) -> list[float]:
    if hi < lo:
        raise UsageError("--sigma-max must not be below --sigma-min")
    n = int(math.floor((hi - lo) / step + 1e-9))
    return [round(lo + i * step, 12) for i in range(n + 1)]


def _cmd_plot(a, out) -> int:
    grid = sigma_grid(a.sigma_min, a.sigma_max, a.step)
    if grid and grid[0] <= 1.0:
        raise UsageError("the grid must stay to the right of the pole at sigma = 1")
    out.write(",".join(["sigma"] + [f"zeta{N}" for N in a.orders]) + "\n")
    for s in grid:
        vals = [zt.evaluate(N, s).value.real for N in a.orders]
        out.write(",".join([f"{s:.10g}"] + [f"{v:.10g}" for v in vals]) + "\n")
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "roots": _cmd_roots,
    "bernoulli": _cmd_bernoulli,
    "residues": _cmd_residues,
    "verify": _cmd_verify,
    "plot-data": _cmd_plot,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        sys.stderr.write(json.dumps({"error": "usage", "message": str(exc)}) + "\n")
        return 2
    except (HyperZetaError, OverflowError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
