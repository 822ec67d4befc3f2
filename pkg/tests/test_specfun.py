import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from piprod.errors import DomainError
from piprod.specfun import ZetaCache, log_gamma, power_tail, zeta, zeta_cache, zeta_even_minus_1

APERY = 1.2020569031595942854  # mpmath, 40 digits


def brute_zeta3():
    n = np.arange(1, 10**6 + 1, dtype=np.float64)
    N = n[-1]
    return math.fsum((1.0 / n**3).tolist()) + 1.0 / (2.0 * N * N)


def test_zeta3_against_brute_force_sum():
    # the integral tail bound 1/(2N^2) is accurate to O(N^-3)
    assert abs(brute_zeta3() - APERY) < 1e-15
    assert abs(zeta(3.0) - brute_zeta3()) < 1e-14


@pytest.mark.parametrize(
    "s, expected",
    [
        (2.0, math.pi**2 / 6),
        (4.0, math.pi**4 / 90),
        (6.0, math.pi**6 / 945),
        (3.0, APERY),
    ],
)
def test_zeta_closed_forms(s, expected):
    assert abs(zeta(s) - expected) <= 1e-13


def test_zeta_rejects_small_s():
    with pytest.raises(DomainError):
        zeta(1.5)


def test_zeta_non_integer_against_mpmath(mp):
    for s in (2.5, 3.7, 11.25, 40.0):
        assert zeta(s) == pytest.approx(float(mp.zeta(s)), abs=1e-15)


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, 0.644934066848226436472415166646025189219),
        (2, 0.08232323371113819151600369654116790277476),
        (10, 9.539620338727961131520386834493459531414e-07),
    ],
)
def test_zeta_even_minus_1_values(k, expected):
    assert zeta_even_minus_1(k) == pytest.approx(expected, rel=1e-12)


def test_zeta_even_minus_1_direct_sum_oracle():
    # independent route: plain sum over n = 2..10^5 plus 1/N - 1/(2N^2) integral tail
    n = np.arange(2, 10**5 + 1, dtype=np.float64)
    N = 10**5
    direct = math.fsum((1.0 / n**2).tolist()) + 1.0 / N - 0.5 / N**2
    assert zeta_even_minus_1(1) == pytest.approx(direct, rel=1e-12)


def test_zeta_even_minus_1_k10_two_term_dominance():
    two = 2.0**-20 + 3.0**-20
    assert two <= zeta_even_minus_1(10) <= 1.001 * two


def test_large_k_is_not_cancelled():
    # zeta(2k) - 1 would return 0 here
    for k in (30, 60, 200):
        v = zeta_even_minus_1(k)
        assert v == pytest.approx(4.0**-k + 9.0**-k, rel=1e-12)


def test_zeta_cache_invariants():
    cache = zeta_cache()
    assert cache.max_k == 60
    vals = cache.zeta2k_minus_1
    assert all(v > 0 for v in vals)
    assert all(b < a for a, b in zip(vals, vals[1:]))
    # the 2 * 4^-k majorant only holds from k = 2; zeta(2) - 1 = 0.645 > 0.5
    assert all(v <= 2.0 * 4.0**-k for k, v in enumerate(vals, start=1) if k >= 2)
    assert vals[0] > 2.0 * 4.0**-1
    assert 1.2020569 < cache.zeta3 < 1.2020570
    assert cache is zeta_cache()


def test_zeta_cache_geometric_decay():
    cache = ZetaCache.build(61)
    vals = cache.zeta2k_minus_1
    for k in range(1, 61):
        assert vals[k] < vals[k - 1] / 3.9


@pytest.mark.parametrize("k", range(1, 9))
def test_zeta_even_agrees_with_one_plus_minus_one(k):
    assert abs(zeta(2.0 * k) - (1.0 + zeta_even_minus_1(k))) <= 1e-12


def test_power_tail_matches_mpmath_hurwitz(mp):
    for s, N in ((2.0, 1000), (4.0, 3), (12.0, 1000), (3.0, 0), (2.0, 25)):
        expected = float(mp.zeta(s, N + 1))
        assert power_tail(s, N) == pytest.approx(expected, rel=1e-14)


def test_power_tail_integral_comparison():
    N = 1000
    assert power_tail(2.0, N) == pytest.approx(1 / N - 1 / (2 * N**2), rel=1e-6)


@pytest.mark.parametrize(
    "x, expected",
    [(1.0, 0.0), (0.5, 0.5 * math.log(math.pi)), (11.0, math.log(3628800.0))],
)
def test_log_gamma_classical(x, expected):
    assert abs(log_gamma(x) - expected) <= 1e-12


@pytest.mark.parametrize("x", [0.5, 1.3, 7.0, 40.25])
def test_log_gamma_recurrence(x):
    assert abs(log_gamma(x + 1) - log_gamma(x) - math.log(x)) <= 1e-11


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-3, max_value=200.0))
def test_log_gamma_matches_libm(x):
    assert log_gamma(x) == pytest.approx(math.lgamma(x), abs=1e-12 * max(1.0, abs(math.lgamma(x))))


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-1.5)
