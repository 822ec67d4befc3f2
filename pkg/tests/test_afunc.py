import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from piprod import afunc, prodcore
from piprod.afunc import AMethod, A_closed, limit_at_one, log_A_series, p_ratio, pi_from_product
from piprod.errors import DomainError
from piprod.quad import r_of_y
from piprod.specfun import zeta_even_minus_1

EQ15_RHS = 0.761193878347632076052372563898


def test_log_A_at_one():
    v = log_A_series(1.0, 60)
    assert v.log_A == pytest.approx(1.5 - math.log(math.pi), abs=1e-15)
    assert v.method is AMethod.SERIES and v.truncation_K == 60
    longer = math.fsum(zeta_even_minus_1(k) / (k + 1) for k in range(1, 121))
    assert v.log_A == pytest.approx(longer, abs=1e-16)


def test_log_A_at_four():
    v = log_A_series(4.0, 60)
    assert v.log_A == pytest.approx(0.08240292845043677175, abs=1e-16)
    assert v.log_A == pytest.approx(0.0824031, abs=5e-7)
    # product-form oracle: log A(4) = -(corrected product limit at scale 4)
    assert v.log_A == pytest.approx(-prodcore.tail_corrected_partial(4.0, 2000, 6).log_value, abs=1e-13)


def test_log_A_large_y_single_term():
    v = log_A_series(1e6, 60)
    assert v.log_A == pytest.approx(3.224670608651954577e-7, rel=1e-12)
    assert v.log_A == pytest.approx(zeta_even_minus_1(1) / 2e6, rel=1e-6)


def test_log_A_est_error_majorant():
    for y in (1.0, 2.0, 10.0):
        v = log_A_series(y, 40)
        assert v.est_error <= 1e-10
        full = log_A_series(y, 60).log_A
        assert abs(full - v.log_A) <= v.est_error


def test_log_A_default_terms():
    assert log_A_series(2.0).truncation_K == 40
    assert log_A_series(0.5).truncation_K == 60


@settings(max_examples=80, deadline=None)
@given(st.floats(min_value=0.2501, max_value=1e8))
def test_log_A_positive(y):
    assert log_A_series(y).log_A > 0


def test_log_A_domain():
    with pytest.raises(DomainError):
        log_A_series(0.25)
    with pytest.raises(DomainError):
        log_A_series(2.0, 61)


def test_A_closed_at_four():
    v = A_closed(4.0)
    assert v.method is AMethod.CLOSED
    # (3/4)^4 exp(3/2 + R(4)) with R(4) = -log 2 + 7 zeta(3) / (2 pi^2)
    assert v.value == pytest.approx(1.0858932589814, abs=1e-12)
    assert v.log_A == pytest.approx(log_A_series(4.0, 60).log_A, abs=1e-12)


@pytest.mark.parametrize("y", [1.5, 2.0, 4.0, 9.0, 25.0])
def test_cross_form_agreement(y):
    assert abs(log_A_series(y, 60).log_A - A_closed(y).log_A) <= 1e-9


def test_A_closed_large_y():
    y = 1e4
    v = A_closed(y)
    # leading term (zeta(2) - 1) / (2y); the next one is ~1e-5 of it
    lead = (math.pi**2 / 6 - 1) / (2 * y)
    assert 0 < v.log_A
    assert v.log_A == pytest.approx(lead, rel=2e-5)


def test_A_closed_rejects_singular_point():
    with pytest.raises(DomainError):
        A_closed(1.0)


def test_r_of_9_by_inversion():
    inverted = log_A_series(9.0, 60).log_A + math.log(math.sin(math.pi / 3)) - 9 * math.log(8 / 9) - 1.5
    assert abs(r_of_y(9.0) - inverted) <= 1e-9


def test_p_ratio_examples():
    for x in (0.3, 1.0, 7.5):
        assert p_ratio(x, x) == 1.0
    assert p_ratio(1.0, 4.0) == pytest.approx(EQ15_RHS, rel=1e-13)
    assert p_ratio(4.0, 1.0) == pytest.approx(1 / EQ15_RHS, rel=1e-13)
    assert p_ratio(4.0, 1.0) == pytest.approx(1.3137221, abs=1e-5)


@pytest.mark.parametrize("x, y, z", [(1.0, 2.0, 4.0), (0.5, 1.0, 3.0)])
def test_p_ratio_cocycle(x, y, z):
    assert p_ratio(x, y) * p_ratio(y, z) == pytest.approx(p_ratio(x, z), abs=1e-12)


def test_limit_at_one():
    assert abs(limit_at_one() - math.pi / 2) <= 1e-8


def test_limit_samples(mp):
    f = afunc.limit_sample(0.0625)
    exact = float((1 - 1 / mp.mpf(1.0625)) ** (-1.0625) * mp.sin(mp.pi / mp.sqrt(1.0625)))
    assert f == pytest.approx(exact, rel=1e-13)
    assert math.isfinite(f) and f > math.pi / 2
    samples = [afunc.limit_sample(2.0**-j) for j in range(7, 21)]
    assert all(b < a for a, b in zip(samples, samples[1:]))


def test_limit_sample_near_one_is_accurate(mp):
    h = 2.0**-20
    x = mp.mpf(1) + h
    exact = float((1 - 1 / x) ** (-x) * mp.sin(mp.pi / mp.sqrt(x)))
    assert afunc.limit_sample(h) == pytest.approx(exact, rel=1e-13)


def test_pi_series():
    assert pi_from_product("series", 40) == pytest.approx(math.pi, rel=1e-12)


def test_pi_naive_is_slow():
    N = 10**4
    rel = abs(pi_from_product("naive", N) - math.pi) / math.pi
    assert 0.5 / (2 * N) <= rel <= 2.0 / (2 * N)


def test_pi_tail_corrected():
    assert pi_from_product("tail_corrected", 1000) == pytest.approx(math.pi, rel=1e-11)


def test_pi_methods_agree_without_reference():
    assert abs(pi_from_product("series", 40) - pi_from_product("tail_corrected", 1000)) <= 1e-10


@pytest.mark.parametrize("x", [1.0, 4.0])
def test_series_matches_corrected_product(x):
    lhs = math.exp(-log_A_series(x, 60).log_A)
    rhs = prodcore.tail_corrected_partial(x, 1000, 6).value
    assert abs(lhs - rhs) <= 1e-10


def test_pi_extrapolated():
    assert abs(pi_from_product("extrapolated", 200) - math.pi) <= 1e-8


def test_pi_rejects_bad_terms():
    with pytest.raises(DomainError):
        pi_from_product("naive", 1)
    with pytest.raises(ValueError):
        pi_from_product("bogus", 10)
