"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Tolerances are the required ones. Run ``pytest tests/test_acceptance.py -v``
to see the summary lines inline.
"""

import json
import math
import time

import jsonschema
import pytest

from piprod import afunc, chains, prodcore, quad, verify
from piprod.accel import digits_gained
from piprod.cli import EXIT_OK, EXIT_USAGE, main
from piprod.specfun import apery, zeta_cache

from .test_cli import REPORT_SCHEMA

ZETA3 = apery()
EULER_R4 = -math.log(2) + 7 * ZETA3 / (2 * math.pi**2)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        assert ok, detail

    return emit


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_c01_pi_product_reproduction(report):
    series = afunc.pi_from_product("series", 40)
    tail = afunc.pi_from_product("tail_corrected", 1000)
    naive = afunc.pi_from_product("naive", 10_000)
    r_series = abs(series - math.pi) / math.pi
    r_tail = abs(tail - math.pi) / math.pi
    r_naive = abs(naive - math.pi) / math.pi
    ok = r_series <= 1e-12 and r_tail <= 1e-10 and 0.5 * 5e-5 <= r_naive <= 2 * 5e-5
    report(1, "pi from the corrected product", ok,
           f"series rel={r_series:.2e} (<=1e-12), tail rel={r_tail:.2e} (<=1e-10), naive rel={r_naive:.3e} (5e-5 x[0.5,2])")


def test_c02_r_values(report):
    e1 = abs(quad.r_of_y(1.0) + math.log(2))
    e4 = abs(quad.r_of_y(4.0) - EULER_R4)
    report(2, "R(1) and R(4)", e1 <= 1e-10 and e4 <= 1e-9, f"|R(1)+log2|={e1:.2e} (<=1e-10), |R(4)-Euler|={e4:.2e} (<=1e-9)")


def test_c03_odd_cube_series(report):
    err = abs(chains.s_tail_corrected(10_000) - 3.5 * ZETA3)
    report(3, "odd cube series = (7/2) zeta(3)", err <= 1e-10, f"abs err={err:.2e} (<=1e-10)")


def test_c04_ratio_product(report):
    lhs = math.exp(chains.sum_term_1_4(1000, 6))
    rhs = 81 / 512 * math.pi * math.exp(7 * ZETA3 / (2 * math.pi**2))
    rel = abs(lhs - rhs) / rhs
    report(4, "ratio product = (81/512) pi exp(7 zeta(3)/(2 pi^2))", rel <= 1e-9, f"rel err={rel:.2e} (<=1e-9), value={lhs:.10f}")


def test_c05_gamma_and_superfactorial(report):
    g = max(abs(chains.gamma_product_lhs(N) - chains.gamma_product_rhs(N)) for N in range(2, 51))
    s = max(abs(a - b) for a, b in (chains.superfactorial_identity(N) for N in (1, 2, 10, 40)))
    report(5, "Gamma product and superfactorial identities", g <= 1e-10 and s <= 1e-10,
           f"gamma max log gap={g:.2e} over N=2..50, superfactorial max gap={s:.2e} (both <=1e-10)")


def test_c06_euler_92(report):
    t = chains.euler_92_extrapolated(200)
    used = max(int(i) for i, _ in t.base)
    err = abs(t.best - math.pi)
    report(6, "Wynn-accelerated 9/2 product", err <= 1e-8 and used <= 200, f"abs err={err:.2e} (<=1e-8) using {used} terms")


def test_c07_cross_form_A(report):
    gaps = {y: abs(afunc.log_A_series(y, 60).log_A - afunc.A_closed(y).log_A) for y in (1.5, 2.0, 4.0, 9.0, 25.0)}
    worst = max(gaps.values())
    report(7, "A(y) series vs closed form", worst <= 1e-9, f"max gap={worst:.2e} (<=1e-9) over y={sorted(gaps)}")


def test_c08_log_sine_series(report):
    cache = zeta_cache(200)

    def series(x):
        parts = [math.log(math.pi * x)]
        p = 1.0
        for k in range(1, 201):
            p *= x * x
            parts.append(-p * (1 + cache.even_minus_1(k)) / k)
        return math.fsum(parts)

    worst = max(abs(math.log(math.sin(math.pi * x)) - series(x)) for x in (0.1, 0.25, 0.5))
    half = math.fsum((1 + cache.even_minus_1(k)) / (k * 4.0**k) for k in range(1, 201))
    half_gap = abs(half - math.log(math.pi / 2))
    report(8, "log sin(pi x) zeta series, K=200", worst <= 1e-12 and half_gap <= 1e-12,
           f"max abs gap={worst:.2e} (<=1e-12); sum zeta(2k)/(k 4^k)={half:.7f} vs log(pi/2), gap {half_gap:.1e}")


def test_c09_moment_identity(report):
    r = verify.run_check("eq_2_7")
    report(9, "zeta moment series vs quadrature", r.abs_err <= 1e-9, f"max abs gap={r.abs_err:.2e} (<=1e-9) at x in {{0.3, 0.5}}")


def test_c10_limit_at_one(report):
    err = abs(afunc.limit_at_one() - math.pi / 2)
    report(10, "Richardson limit x -> 1 equals pi/2", err <= 1e-8, f"abs err={err:.2e} (<=1e-8)")


def test_c11_property_suites(report):
    problems = []
    # corrected product: strict decrease, stays above its limit
    limit = math.log(math.pi) - 1.5
    prev = None
    for N, v in prodcore.iter_partials(1.0, 10_000):
        if prev is not None and not v < prev:
            problems.append(f"monotonicity at N={N}")
            break
        if not v > limit:
            problems.append(f"below limit at N={N}")
            break
        prev = v
    for n in (10**3, 10**4, 10**5, 10**6):
        for x in (1.0, 4.0):
            exp4 = -sum(1 / ((k + 1) * x**k * n ** (2 * k)) for k in range(1, 5))
            if abs(prodcore.log_term(x, n) - exp4) > 1e-9 * abs(exp4):
                problems.append(f"cancellation x={x} n={n}")
    # quadrature: additivity, negativity, symmetry
    for a, b in ((0.1, 0.4), (0.25, 0.75), (0.6, 0.95)):
        gap = abs(quad.integrate_t_logsin(b).value - quad.integrate_t_logsin(a).value
                  - quad.integrate_t_logsin_between(a, b).value)
        if gap > 1e-11:
            problems.append(f"additivity {a},{b}")
    if any(quad.integrate_t_logsin(u).value >= 0 for u in (1e-10, 1e-3, 0.3, 0.5, 0.99, 1.0)):
        problems.append("negativity")
    if abs(quad.integrate_t_logsin(1.0).value + math.log(2) / 2) > 1e-10:
        problems.append("symmetry")
    # algebraic collapse
    for n in (2, 3, 10, 1000):
        if abs(chains.term_1_3(n).square_bracket - chains.term_1_4(n)) > 1e-12:
            problems.append(f"collapse n={n}")
    # verify determinism
    a = [verify.strip_timing(r) for r in verify.run_all()]
    b = [verify.strip_timing(r) for r in verify.run_all()]
    if a != b:
        problems.append("determinism")
    report(11, "property suites", not problems, "all invariants hold" if not problems else "; ".join(problems))


def test_c12_benchmark(report, capsys):
    code = main(["bench", "--target", "pi_product", "--budget-terms", "200"])
    out = capsys.readouterr().out
    fields = dict(kv.split("=", 1) for line in out.splitlines() for kv in line.split() if "=" in kv)
    dw = float(fields["digits_gained_wynn"])
    dt = float(fields["digits_gained_tail"])
    naive = afunc.pi_from_product("naive", 200)
    wynn = afunc.pi_from_product("extrapolated", 200)
    assert dw == pytest.approx(digits_gained(math.pi, naive, wynn), abs=0.01)
    report(12, "acceleration at a 200-term budget", code == EXIT_OK and dw >= 4 and dt >= 6,
           f"wynn gains {dw:.2f} digits (>=4), tail K=6 gains {dt:.2f} (>=6, error floored at 1e-300)")


def test_c13_cli_contract(report, capsys):
    c1 = main(["verify"])
    capsys.readouterr()
    c2 = main(["verify", "--only", "r_at_1", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    c3 = main(["verify", "--only", "bogus"])
    capsys.readouterr()
    try:
        jsonschema.validate(doc, REPORT_SCHEMA)
        schema_ok = True
    except jsonschema.ValidationError:
        schema_ok = False
    single = [r["id"] for r in doc["results"]] == ["r_at_1"]
    main(["verify", "--format", "json"])
    full = json.loads(capsys.readouterr().out)
    try:
        jsonschema.validate(full, REPORT_SCHEMA)
    except jsonschema.ValidationError:
        schema_ok = False
    ok = c1 == EXIT_OK and c2 == EXIT_OK and single and c3 == EXIT_USAGE and schema_ok
    report(13, "CLI exit codes and JSON schema", ok,
           f"verify->{c1}, verify --only r_at_1 --format json->{c2} (one result: {single}), verify --only bogus->{c3}, schema valid: {schema_ok}")
