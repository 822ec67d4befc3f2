"""Command-line interface: ``verify``, ``pi``, ``table`` and ``bench``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 a check could not
produce a value.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import afunc, chains, prodcore
from .accel import digits_gained
from .errors import DomainError, NumericalFailure
from .prodcore import Method
from .specfun import zeta
from .verify import CHECK_IDS, IdentityCheck, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

PI_REFERENCE = math.pi

VERIFY_CSV_HEADER = ("id", "lhs", "rhs", "abs_err", "rel_err", "tolerance", "pass", "terms", "method", "elapsed_ms")
TABLE_CSV_HEADER = ("n", "estimate", "abs_err", "observed_order")

_PI_METHODS = {
    "naive": Method.NAIVE,
    "tail": Method.TAIL_CORRECTED,
    "extrapolate": Method.EXTRAPOLATED,
    "series": Method.SERIES,
}


def fmt_num(x: float) -> str:
    """Locale-free shortest round-trip repr (lowercase ``e``, no separators)."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    return repr(float(x))


def _json_num(x: float):
    return x if math.isfinite(x) else None


@dataclass
class Report:
    results: list[IdentityCheck]
    version: str = "1"

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        rows = []
        for r in self.results:
            d = r.to_dict()
            for key in ("lhs", "rhs", "abs_err", "rel_err", "tolerance", "elapsed_ms"):
                d[key] = _json_num(d[key])
            rows.append(d)
        return {"version": self.version, "results": rows, "all_pass": self.all_pass}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(VERIFY_CSV_HEADER)
        for r in self.results:
            w.writerow(
                [r.id, fmt_num(r.lhs), fmt_num(r.rhs), fmt_num(r.abs_err), fmt_num(r.rel_err),
                 fmt_num(r.tolerance), fmt_num(r.passed), r.terms, r.method, fmt_num(r.elapsed_ms)]
            )
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            lines.append(
                f"{mark}  {r.id:<28} abs_err={r.abs_err:.3e} rel_err={r.rel_err:.3e} "
                f"tol={r.tolerance:.1e}  [{r.method}]"
            )
        n_pass = sum(r.passed for r in self.results)
        lines.append(f"{n_pass}/{len(self.results)} checks passed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return {"json": self.to_json, "csv": self.to_csv, "text": self.to_text}[fmt]()


# --- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = [s for s in only if s not in CHECK_IDS]
        if unknown:
            print(f"error: unknown check id(s): {', '.join(unknown)}", file=sys.stderr)
            return EXIT_USAGE
    if not args.tol_scale > 0:
        print("error: --tol-scale must be positive", file=sys.stderr)
        return EXIT_USAGE
    report = Report(run_all(args.tol_scale, only))
    _emit(report.render(args.format), args.out)
    if any(r.failed_numerically for r in report.results):
        return EXIT_NUMERIC
    return EXIT_OK if report.all_pass else EXIT_FAIL


def _emit(text: str, out: Optional[str]) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# --- pi ------------------------------------------------------------------------


def cmd_pi(args) -> int:
    method = _PI_METHODS[args.method]
    min_terms = 1 if method is Method.SERIES else 2
    if args.terms < min_terms:
        print(f"error: --terms must be at least {min_terms} for method {args.method}", file=sys.stderr)
        return EXIT_USAGE
    if method is Method.EXTRAPOLATED and args.terms < 8:
        print("error: --terms must be at least 8 for method extrapolate", file=sys.stderr)
        return EXIT_USAGE
    if args.digits < 1 or args.digits > 17:
        print("error: --digits must lie in 1..17", file=sys.stderr)
        return EXIT_USAGE
    try:
        value = afunc.pi_from_product(method, args.terms)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    err = abs(value - PI_REFERENCE)
    print(f"{value:.{args.digits}g}")
    print(f"abs_err={err:.3e} rel_err={err / PI_REFERENCE:.3e} method={method.value} terms={args.terms}")
    return EXIT_OK


# --- table ---------------------------------------------------------------------


def geometric_schedule(start: int, stop: int, factor: float) -> list[int]:
    out = []
    x = float(start)
    while round(x) <= stop:
        n = int(round(x))
        if not out or n > out[-1]:
            out.append(n)
        x *= factor
    return out


def _pi_product_estimates(schedule):
    sums = prodcore.partials_at(1.0, schedule)
    return [math.exp(1.5 + sums[N]) for N in schedule], PI_REFERENCE


def _euler_estimates(schedule):
    sums = chains.euler_92_log_partials(schedule)
    return [4.5 * math.exp(sums[N]) for N in schedule], PI_REFERENCE


def _s_series_estimates(schedule):
    return [chains.s_direct(N) for N in schedule], 3.5 * zeta(3.0)


def _a_series_estimates(schedule):
    return [afunc.pi_from_product(Method.SERIES, N) for N in schedule], PI_REFERENCE


_TABLE_TARGETS: dict[str, Callable] = {
    "pi_product": _pi_product_estimates,
    "euler_product": _euler_estimates,
    "s_series": _s_series_estimates,
    "a_series": _a_series_estimates,
}


def convergence_rows(target: str, schedule: Sequence[int]) -> list[tuple[int, float, float, float]]:
    """(N, estimate, abs_err, observed_order) for each schedule point.

    ``observed_order`` is ``log(e_prev/e) / log(N/N_prev)`` for the algebraic
    targets. For ``a_series``, which converges geometrically, it is decimal
    digits gained per extra term. The first row has no predecessor and
    reports ``nan``.
    """
    estimates, ref = _TABLE_TARGETS[target](list(schedule))
    rows = []
    prev = None
    for N, est in zip(schedule, estimates):
        err = abs(est - ref)
        order = math.nan
        if prev is not None and prev[1] > 0 and err > 0:
            if target == "a_series":
                order = math.log10(prev[1] / err) / (N - prev[0])
            else:
                order = math.log(prev[1] / err) / math.log(N / prev[0])
        rows.append((N, est, err, order))
        prev = (N, err)
    return rows


def cmd_table(args) -> int:
    if not (2 <= args.n_start < args.n_stop) or not args.n_factor > 1:
        print("error: need 2 <= --n-start < --n-stop and --n-factor > 1", file=sys.stderr)
        return EXIT_USAGE
    if args.target == "a_series" and args.n_stop > 59:
        print("error: a_series supports at most 59 terms", file=sys.stderr)
        return EXIT_USAGE
    rows = convergence_rows(args.target, geometric_schedule(args.n_start, args.n_stop, args.n_factor))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_CSV_HEADER)
        for N, est, err, order in rows:
            w.writerow([N, fmt_num(est), fmt_num(err), fmt_num(order)])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"{'n':>10} {'estimate':>22} {'abs_err':>12} {'observed_order':>15}")
        for N, est, err, order in rows:
            print(f"{N:>10d} {est:>22.16g} {err:>12.3e} {order:>15.4f}")
    return EXIT_OK


# --- bench ---------------------------------------------------------------------


@dataclass(frozen=True)
class BenchResult:
    target: str
    budget: int
    naive_err: float
    wynn_err: float
    tail_err: float

    @property
    def digits_wynn(self) -> float:
        return _digits(self.naive_err, self.wynn_err)

    @property
    def digits_tail(self) -> float:
        return _digits(self.naive_err, self.tail_err)


def _digits(naive_err: float, acc_err: float) -> float:
    # digits_gained on error magnitudes relative to the shared target
    return digits_gained(PI_REFERENCE, PI_REFERENCE + naive_err, PI_REFERENCE + acc_err)


def run_bench(target: str, budget: int) -> BenchResult:
    if target == "pi_product":
        naive = afunc.pi_from_product(Method.NAIVE, budget)
        wynn = afunc.pi_from_product(Method.EXTRAPOLATED, budget)
        tail = afunc.pi_from_product(Method.TAIL_CORRECTED, budget)
    elif target == "euler_product":
        naive = chains.euler_92_product(budget)
        wynn = chains.euler_92_extrapolated(budget).best
        tail = chains.euler_92_tail_corrected(budget, 6)
    else:
        raise DomainError(f"unknown bench target {target!r}")
    return BenchResult(target, budget, abs(naive - PI_REFERENCE), abs(wynn - PI_REFERENCE), abs(tail - PI_REFERENCE))


def cmd_bench(args) -> int:
    if args.budget_terms < 20:
        print("error: --budget-terms must be at least 20", file=sys.stderr)
        return EXIT_USAGE
    res = run_bench(args.target, args.budget_terms)
    print(f"target={res.target} budget_terms={res.budget}")
    print(f"naive_err={res.naive_err:.3e}")
    print(f"wynn_err={res.wynn_err:.3e}")
    print(f"tail_err={res.tail_err:.3e}")
    for name, digits, err in (("wynn", res.digits_wynn, res.wynn_err), ("tail", res.digits_tail, res.tail_err)):
        note = " (error below double resolution; denominator floored)" if err == 0.0 else ""
        print(f"digits_gained_{name}={digits:.2f}{note}")
    return EXIT_OK


# --- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="piprod", description="Verify pi product identities and benchmark acceleration.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the identity checks")
    v.add_argument("--only", help="comma-separated check ids")
    v.add_argument("--tol-scale", type=float, default=1.0)
    v.add_argument("--format", choices=("json", "csv", "text"), default="text")
    v.add_argument("--out", default=None, help="output path (default stdout)")
    v.set_defaults(func=cmd_verify)

    q = sub.add_parser("pi", help="estimate pi from the corrected product")
    q.add_argument("--method", choices=tuple(_PI_METHODS), default="series")
    q.add_argument("--terms", type=int, default=40)
    q.add_argument("--digits", type=int, default=15)
    q.set_defaults(func=cmd_pi)

    t = sub.add_parser("table", help="convergence table on a geometric schedule")
    t.add_argument("--target", choices=tuple(_TABLE_TARGETS), default="pi_product")
    t.add_argument("--n-start", type=int, default=100)
    t.add_argument("--n-stop", type=int, default=100_000)
    t.add_argument("--n-factor", type=float, default=2.0)
    t.add_argument("--format", choices=("csv", "text"), default="text")
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bench", help="naive vs Wynn epsilon vs tail correction")
    b.add_argument("--target", choices=("pi_product", "euler_product"), default="pi_product")
    b.add_argument("--budget-terms", type=int, default=200)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
