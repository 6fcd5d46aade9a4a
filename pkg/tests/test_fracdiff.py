"""Tests for the single-season fractional differencing weights."""

import math

import mpmath
import numpy as np
import pytest

from parfima import (
    DomainError,
    ParameterError,
    PoleError,
    SeriesKind,
    ar_coefficients,
    log_gamma,
    ma_asymptotic,
    ma_coefficients,
)
from parfima.fracdiff import CoefficientSeries

mpmath.mp.dps = 40


def _mp_psi(d, j):
    """High-precision psi_j = Gamma(j + d) / (Gamma(d) Gamma(j + 1))."""
    d = mpmath.mpf(repr(d))
    return float(mpmath.gamma(j + d) / (mpmath.gamma(d) * mpmath.gamma(j + 1)))


# ---------------------------------------------------------------------------
# log_gamma


def test_log_gamma_half():
    out = log_gamma(0.5)
    np.testing.assert_allclose(out.log_abs, math.log(math.sqrt(math.pi)), rtol=1e-15)
    assert out.sign == 1


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -17.0])
def test_log_gamma_poles(x):
    with pytest.raises(PoleError):
        log_gamma(x)


@pytest.mark.parametrize("x", [float("nan"), float("inf"), float("-inf")])
def test_log_gamma_non_finite(x):
    with pytest.raises(DomainError):
        log_gamma(x)


def test_log_gamma_negative_sign_alternates():
    # Gamma is negative on (-1, 0), positive on (-2, -1), and so on.
    assert log_gamma(-0.5).sign == -1
    assert log_gamma(-1.5).sign == 1
    assert log_gamma(-2.5).sign == -1
    assert log_gamma(-3.5).sign == 1


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 2.5, 7.3, -0.3, -1.7, -4.2, -9.9])
def test_log_gamma_against_mpmath(x):
    out = log_gamma(x)
    ref = mpmath.gamma(mpmath.mpf(repr(x)))
    np.testing.assert_allclose(out.log_abs, float(mpmath.log(abs(ref))), rtol=1e-13)
    assert out.sign == (1 if ref > 0 else -1)


# ---------------------------------------------------------------------------
# weight sequences, hand values


def test_ma_half_hand_value():
    # psi_1 = d, psi_2 = d (d + 1) / 2 at d = 1/2
    out = ma_coefficients(0.5, 2)
    np.testing.assert_array_equal(out.values, [1.0, 0.5, 0.375])
    assert out.kind is SeriesKind.MA


def test_ma_zero_is_identity_filter():
    np.testing.assert_array_equal(ma_coefficients(0.0, 3).values, [1.0, 0.0, 0.0, 0.0])


def test_ma_one_is_cumulative_sum():
    np.testing.assert_array_equal(ma_coefficients(1.0, 4).values, np.ones(5))


def test_ar_hand_value():
    # pi_1 = -d, pi_2 = d (1 - d) / 2 ... at d = 0.4 gives -0.12
    out = ar_coefficients(0.4, 2)
    np.testing.assert_allclose(out.values, [1.0, -0.4, -0.12], rtol=0, atol=1e-16)
    assert out.kind is SeriesKind.AR


def test_ar_one_is_first_difference():
    np.testing.assert_array_equal(ar_coefficients(1.0, 3).values, [1.0, -1.0, 0.0, 0.0])


@pytest.mark.parametrize("d", [2.0, 3.0, 5.0])
def test_ar_integer_d_terminates(d):
    # (1 - B)^d with integer d is a finite polynomial of degree d.
    vals = ar_coefficients(d, int(d) + 4).values
    assert np.all(vals[int(d) + 1 :] == 0.0)
    # and the surviving coefficients are signed binomials
    for j in range(int(d) + 1):
        assert vals[j] == pytest.approx((-1) ** j * math.comb(int(d), j))


@pytest.mark.parametrize("d", [0.1, 0.3, 0.49, 0.8])
def test_sign_pattern_positive_memory(d):
    psi = ma_coefficients(d, 60).values
    pi = ar_coefficients(d, 60).values
    assert np.all(psi[1:] > 0.0)
    assert np.all(pi[1:] < 0.0)


def test_duality_is_exact():
    for d in (-1.3, -0.45, 0.0, 0.3, 0.49, 1.2):
        np.testing.assert_array_equal(
            ar_coefficients(d, 100).values, ma_coefficients(-d, 100).values
        )


# ---------------------------------------------------------------------------
# oracle comparisons


@pytest.mark.parametrize("d", [0.3, -0.4, 0.45, 1.2, -1.1])
def test_weights_match_gamma_ratio_oracle(d):
    vals = ma_coefficients(d, 50).values
    ref = np.array([_mp_psi(d, j) for j in range(51)])
    np.testing.assert_allclose(vals, ref, rtol=1e-13, atol=1e-300)


@pytest.mark.parametrize("d", [0.25, 0.45, 1.3])
def test_weights_match_signed_log_gamma_route(d):
    # psi_j rebuilt from the package's own log-gamma pieces
    vals = ma_coefficients(d, 50).values
    base = log_gamma(d)
    for j in range(1, 51):
        num = log_gamma(j + d)
        den = log_gamma(j + 1.0)
        ref = (
            num.sign
            * base.sign
            * math.exp(num.log_abs - base.log_abs - den.log_abs)
        )
        np.testing.assert_allclose(vals[j], ref, rtol=1e-10)


def test_ma_asymptotic_hand_values():
    # j^(d-1) / Gamma(d) at d = 1/2, j = 4 is 1 / (2 sqrt(pi))
    np.testing.assert_allclose(
        ma_asymptotic(0.5, 4), 1.0 / (2.0 * math.sqrt(math.pi)), rtol=1e-15
    )
    assert ma_asymptotic(1.0, 100) == 1.0


def test_ma_asymptotic_tracks_exact_weights():
    for d in (0.2, 0.45):
        exact = ma_coefficients(d, 2000).values[-1]
        approx = ma_asymptotic(d, 2000)
        assert abs(approx / exact - 1.0) < 5e-3


def test_ma_asymptotic_rejects_bad_arguments():
    with pytest.raises(DomainError):
        ma_asymptotic(-0.3, 10)
    with pytest.raises(DomainError):
        ma_asymptotic(0.0, 10)
    with pytest.raises(ParameterError):
        ma_asymptotic(0.3, 0)


# ---------------------------------------------------------------------------
# argument validation and container behaviour


def test_rejects_non_finite_d():
    with pytest.raises(ParameterError):
        ma_coefficients(float("nan"), 5)
    with pytest.raises(ParameterError):
        ar_coefficients(float("inf"), 5)


def test_rejects_negative_order():
    with pytest.raises(ParameterError):
        ma_coefficients(0.3, -1)


def test_order_zero_is_just_the_unit():
    np.testing.assert_array_equal(ma_coefficients(0.3, 0).values, [1.0])


def test_series_container_validation():
    with pytest.raises(ParameterError, match="normalised"):
        CoefficientSeries(SeriesKind.MA, 1, np.array([2.0, 0.5]))
    with pytest.raises(ParameterError):
        CoefficientSeries(SeriesKind.MA, 0, np.array([1.0]))
    series = ma_coefficients(0.3, 5)
    assert len(series) == 6
    with pytest.raises(ValueError):
        series.values[0] = 7.0  # read-only view
