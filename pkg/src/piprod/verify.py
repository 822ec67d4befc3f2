"""Registry of identity checks and the runner that produces the report rows.

Each check computes both sides of one identity by separate code paths and
returns a :class:`IdentityCheck`. Checks spanning several sample points
report the worst point. A numerical failure inside a check is recorded, not
raised, so one broken component never hides the rest of the report.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, replace
from typing import Callable, Iterable, NamedTuple, Optional

from . import afunc, chains, prodcore, quad
from .errors import DomainError, NumericalFailure
from .specfun import zeta, zeta_cache


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    tolerance: float
    passed: bool
    terms: int
    method: str
    elapsed_ms: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d

    @property
    def failed_numerically(self) -> bool:
        return self.method.startswith("failed:")


class UnknownCheck(KeyError):
    pass


class _Outcome(NamedTuple):
    lhs: float
    rhs: float
    terms: int
    method: str


@dataclass(frozen=True)
class _Spec:
    id: str
    description: str
    tolerance: float
    run: Callable[[], _Outcome]


def rel_error(lhs: float, rhs: float) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def _worst(pairs: Iterable[tuple[float, float]]) -> tuple[float, float]:
    return max(pairs, key=lambda p: abs(p[0] - p[1]))


def _apery_constant() -> float:
    # rhs paths use zeta(3) straight from the kernel, not from A-series code
    return zeta(3.0)


def _eq15_rhs() -> float:
    return 81.0 / 512.0 * math.pi * math.exp(7.0 * _apery_constant() / (2.0 * math.pi**2))


# --- odd cube series, its product chain, the 9/2 product ---


def _eq_1_1() -> _Outcome:
    N = 10_000
    return _Outcome(chains.s_tail_corrected(N), 3.5 * _apery_constant(), N, "direct+odd_tail")


def _eq_1_3_collapse() -> _Outcome:
    lhs, rhs = _worst((chains.term_1_3(n).square_bracket, chains.term_1_4(n)) for n in (2, 3, 10, 1000))
    return _Outcome(lhs, rhs, 4, "pointwise n in {2,3,10,1000}")


def _eq_1_3_sum() -> _Outcome:
    z = 7.0 * _apery_constant() / (2.0 * math.pi**2)
    rhs = z - 15.0 * math.log(2.0) + 9.0 * math.log(3.0)
    return _Outcome(chains.sum_term_1_3(1000, 6), rhs, 1000, "tail_corrected K=6")


def _eq_1_4_chain() -> _Outcome:
    lhs = chains.LOG_EQ14_CONSTANT + chains.sum_term_1_4(1000, 6)
    return _Outcome(lhs, 7.0 * _apery_constant() / (2.0 * math.pi**2), 1000, "tail_corrected K=6")


def _eq_1_5() -> _Outcome:
    return _Outcome(math.exp(chains.sum_term_1_4(1000, 6)), _eq15_rhs(), 1000, "tail_corrected K=6")


def _superfactorial() -> _Outcome:
    lhs, rhs = _worst(chains.superfactorial_identity(N) for N in (1, 2, 10, 40))
    return _Outcome(lhs, rhs, 40, "log space, N in {1,2,10,40}")


def _gamma_product() -> _Outcome:
    lhs, rhs = _worst((chains.gamma_product_lhs(N), chains.gamma_product_rhs(N)) for N in range(2, 51))
    return _Outcome(lhs, rhs, 50, "log space, N in 2..50")


def _gamma_product_printed_limit() -> _Outcome:
    N = 1000
    gap = chains.gamma_product_lhs(N) - chains.gamma_product_rhs_printed(N)
    return _Outcome(gap, 0.0, N, "log gap of printed closed form at N=1000")


def _euler_92() -> _Outcome:
    table = chains.euler_92_extrapolated(200)
    return _Outcome(table.best, math.pi, max(int(i) for i, _ in table.base), "wynn_epsilon dyadic")


# --- the A function, R(y) and the pi product ---


def _trichotomy() -> _Outcome:
    """classify() against the numerics of per-term base a, as a count of agreements."""
    cases = [(2.6, 1.0), (2.8, 1.0), (2.6, 4.0), (2.8, 4.0)]
    agree = 0
    for a, x in cases:
        fam = prodcore.ProductFamily(x, a)
        s = 0.0
        verdict = None
        for n in range(2, 100_001):
            s += fam.log_factor(n)
            if s < math.log(1e-6):
                verdict = prodcore.Convergence.CONVERGES_TO_ZERO
                break
            if s > math.log(1e6):
                verdict = prodcore.Convergence.DIVERGES
                break
        agree += verdict is prodcore.classify(a, x)
    limit = afunc.log_product_limit(1.0, "tail_corrected", 1000)
    agree += prodcore.classify(math.e, 1.0) is prodcore.Convergence.CONVERGES_NONZERO and math.isfinite(limit)
    return _Outcome(float(agree), float(len(cases) + 1), 100_000, "count of agreeing cases")


def _eq_2_1_ratio() -> _Outcome:
    N = 1000
    log_p = prodcore.p_partial(N).log_value
    tail = prodcore.tail_correction(1.0, N, 6) - prodcore.tail_correction(4.0, N, 6)
    return _Outcome(math.exp(log_p + tail), _eq15_rhs(), N, "log Q_N - log U_N + tail K=6")


def _eq_2_4_vs_2_8() -> _Outcome:
    lhs, rhs = _worst(
        (afunc.log_A_series(y, 60).log_A, afunc.A_closed(y).log_A) for y in (1.5, 2.0, 4.0, 9.0, 25.0)
    )
    return _Outcome(lhs, rhs, 60, "series K=60 vs closed form")


def _eq_2_5_consistency() -> _Outcome:
    lhs, rhs = _worst(
        (
            math.exp(-afunc.log_A_series(x, 60).log_A),
            prodcore.tail_corrected_partial(x, 1000, 6).value,
        )
        for x in (1.0, 4.0)
    )
    return _Outcome(lhs, rhs, 1000, "series vs tail_corrected product")


def _eq_2_10() -> _Outcome:
    return _Outcome(afunc.p_ratio(1.0, 4.0), _eq15_rhs(), 40, "A(4)/A(1) series")


def _r_at_1() -> _Outcome:
    return _Outcome(quad.r_of_y(1.0), -math.log(2.0), 0, "adaptive GK15 + log-mapped guards")


def _r_at_4() -> _Outcome:
    rhs = -math.log(2.0) + 7.0 * _apery_constant() / (2.0 * math.pi**2)
    return _Outcome(quad.r_of_y(4.0), rhs, 0, "adaptive GK15 + log-mapped guards")


def _eq_2_6() -> _Outcome:
    K = 200
    cache = zeta_cache(K)

    def series_side(x: float) -> float:
        x2 = x * x
        p = 1.0
        parts = [math.log(math.pi * x)]
        for k in range(1, K + 1):
            p *= x2
            parts.append(-p * (1.0 + cache.even_minus_1(k)) / k)
        return math.fsum(parts)

    lhs, rhs = _worst((math.log(math.sin(math.pi * x)), series_side(x)) for x in (0.1, 0.25, 0.5))
    return _Outcome(lhs, rhs, K, "zeta series K=200")


def _eq_2_7() -> _Outcome:
    K = 200
    cache = zeta_cache(K)

    def series_side(x: float) -> float:
        x2 = x * x
        p = 1.0
        parts = []
        for k in range(1, K + 1):
            p *= x2
            parts.append(p * (1.0 + cache.even_minus_1(k)) / (k + 1))
        return math.fsum(parts)

    def integral_side(x: float) -> float:
        res = quad.integrate_t_logsin(x)
        if not res.converged:
            raise NumericalFailure(f"quadrature to {x} did not converge")
        return 0.5 - math.log(math.sin(math.pi * x)) + 2.0 / (x * x) * res.value

    lhs, rhs = _worst((series_side(x), integral_side(x)) for x in (0.3, 0.5))
    return _Outcome(lhs, rhs, K, "zeta series vs quadrature")


def _eq_2_11() -> _Outcome:
    return _Outcome(afunc.limit_at_one(), math.pi / 2.0, 17, "richardson x_j = 1 + 2^-j, j=4..20")


def _eq_2_12() -> _Outcome:
    lhs, rhs = _worst(
        [
            (afunc.pi_from_product("series", 40), math.pi),
            (afunc.pi_from_product("tail_corrected", 1000), math.pi),
        ]
    )
    return _Outcome(lhs, rhs, 1000, "series K=40 and tail_corrected N=1000")


REGISTRY: tuple[_Spec, ...] = (
    _Spec("eq_1_1", "odd cube series equals (7/2) zeta(3)", 1e-10, _eq_1_1),
    _Spec("eq_1_3_collapse", "n^2 bracket of the three-bracket summand equals the simplified summand", 1e-12, _eq_1_3_collapse),
    _Spec("eq_1_3_sum", "three-bracket series sums to (7/2)zeta(3)/pi^2 - 15 log 2 + 9 log 3", 1e-9, _eq_1_3_sum),
    _Spec("eq_1_4_chain", "log constants plus simplified series equal 7 zeta(3)/(2 pi^2)", 1e-9, _eq_1_4_chain),
    _Spec("eq_1_5", "ratio product equals (81/512) pi exp(7 zeta(3)/(2 pi^2))", 1e-9, _eq_1_5),
    _Spec("superfactorial", "prod (1+n)^n equals Gamma(N+2)^N / prod Gamma(n+1)", 1e-10, _superfactorial),
    _Spec("gamma_product", "finite four-factor product equals its Gamma closed form", 1e-10, _gamma_product),
    _Spec("gamma_product_printed_limit", "printed Gamma closed form agrees with the product as N grows", 1e-5, _gamma_product_printed_limit),
    _Spec("euler_92", "(9/2) product converges to pi", 1e-8, _euler_92),
    _Spec("a_vs_e", "corrected product with base a: zero for a < e, divergent for a > e", 0.0, _trichotomy),
    _Spec("eq_2_1_ratio", "Q_N / U_N tends to the ratio product constant", 1e-10, _eq_2_1_ratio),
    _Spec("eq_2_4_vs_2_8", "log A(y): zeta series equals sine/R(y) closed form", 1e-9, _eq_2_4_vs_2_8),
    _Spec("eq_2_5_consistency", "1/A(x) equals the e-corrected product at scale x", 1e-10, _eq_2_5_consistency),
    _Spec("eq_2_10", "P(1, 4) = A(4)/A(1) equals the ratio product constant", 1e-12, _eq_2_10),
    _Spec("r_at_1", "R(1) = -log 2", 1e-10, _r_at_1),
    _Spec("r_at_4_euler", "R(4) = -log 2 + 7 zeta(3)/(2 pi^2)", 1e-9, _r_at_4),
    _Spec("eq_2_6", "log sin(pi x) = log(pi x) - sum x^2k zeta(2k)/k", 1e-12, _eq_2_6),
    _Spec("eq_2_7", "sum x^2k zeta(2k)/(k+1) equals the log-sine moment expression", 1e-9, _eq_2_7),
    _Spec("eq_2_11", "(1 - 1/x)^-x sin(pi/sqrt x) tends to pi/2 as x -> 1", 1e-8, _eq_2_11),
    _Spec("eq_2_12", "e^(3/2) prod (1 - 1/n^2)^(n^2) e equals pi", 1e-11, _eq_2_12),
)

CHECK_IDS: tuple[str, ...] = tuple(s.id for s in REGISTRY)
_BY_ID = {s.id: s for s in REGISTRY}


def run_check(check_id: str, tolerance_scale: float = 1.0) -> IdentityCheck:
    try:
        spec = _BY_ID[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None
    tol = spec.tolerance * tolerance_scale
    start = time.perf_counter()
    try:
        out = spec.run()
    except (NumericalFailure, DomainError, OverflowError, ZeroDivisionError) as exc:
        elapsed = (time.perf_counter() - start) * 1e3
        reason = f"{type(exc).__name__}: {exc}".replace(",", ";")
        return IdentityCheck(
            spec.id, spec.description, math.nan, math.nan, math.inf, math.inf,
            tol, False, 0, f"failed:{reason}", elapsed,
        )
    elapsed = (time.perf_counter() - start) * 1e3
    abs_err = abs(out.lhs - out.rhs)
    rel_err = rel_error(out.lhs, out.rhs)
    passed = abs_err <= tol or rel_err <= tol
    return IdentityCheck(
        spec.id, spec.description, out.lhs, out.rhs, abs_err, rel_err,
        tol, passed, out.terms, out.method, elapsed,
    )


def run_all(tolerance_scale: float = 1.0, only: Optional[Iterable[str]] = None) -> list[IdentityCheck]:
    """Run checks in registry order (or the order given in ``only``)."""
    if not tolerance_scale > 0.0:
        raise DomainError(f"tolerance_scale must be positive, got {tolerance_scale!r}")
    ids = CHECK_IDS if only is None else tuple(only)
    for check_id in ids:
        if check_id not in _BY_ID:
            raise UnknownCheck(check_id)
    return [run_check(i, tolerance_scale) for i in ids]


def strip_timing(check: IdentityCheck) -> IdentityCheck:
    return replace(check, elapsed_ms=0.0)
