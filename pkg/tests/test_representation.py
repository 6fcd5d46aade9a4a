"""Tests for the periodic infinite-order filter construction."""

import numpy as np
import pytest

from parfima import (
    IndexingMode,
    ParameterError,
    SeasonalParams,
    SeriesKind,
    ar_coefficients,
    ar_filter,
    convolution_residual,
    ma_filter,
    periodic_ar_coefficients,
    periodic_ma_coefficients,
)


def _random_params(rng, p, scale=0.45, sigma=False):
    d = tuple(rng.uniform(-scale, scale, size=p))
    s = tuple(rng.uniform(0.5, 2.0, size=p)) if sigma else None
    return SeasonalParams(p=p, d=d, sigma=s)


# ---------------------------------------------------------------------------
# hand-unrolled small cases


def test_periodic_ar_hand_values():
    # p=2, d=(0.2, 0.4), season 1.  The recursion unrolls to
    #   C_1(1) = -psi_1(d_1)                      = -0.2
    #   C_2(1) = -(psi_2(d_1) + C_1(1) psi_1(d_2)) = -(0.12 - 0.2*0.4) = -0.04
    pars = SeasonalParams(p=2, d=(0.2, 0.4))
    out = periodic_ar_coefficients(pars, 1, 2)
    np.testing.assert_allclose(out.values, [1.0, -0.2, -0.04], rtol=0, atol=1e-16)
    assert out.kind is SeriesKind.PERIODIC_AR
    assert out.season == 1


def test_periodic_ma_hand_values():
    # MA side order 1 is just +d_i
    pars = SeasonalParams(p=2, d=(0.2, 0.4))
    out = periodic_ma_coefficients(pars, 1, 1)
    np.testing.assert_allclose(out.values, [1.0, 0.2], rtol=0, atol=1e-16)
    assert out.kind is SeriesKind.PERIODIC_MA


def test_order_one_coefficients_exact():
    rng = np.random.default_rng(20240811)
    pars = _random_params(rng, 5)
    for i in range(1, 6):
        assert periodic_ar_coefficients(pars, i, 1).values[1] == -pars.d[i - 1]
        assert periodic_ma_coefficients(pars, i, 1).values[1] == pars.d[i - 1]


# ---------------------------------------------------------------------------
# reductions and symmetries


@pytest.mark.parametrize("p", [1, 2, 4])
@pytest.mark.parametrize("d", [0.3, -0.4])
def test_constant_d_reduces_to_single_season(p, d):
    pars = SeasonalParams(p=p, d=(d,) * p)
    ref = ar_coefficients(d, 200).values
    for i in range(1, p + 1):
        out = periodic_ar_coefficients(pars, i, 200).values
        np.testing.assert_allclose(out, ref, rtol=0, atol=1e-12)


def test_period_one_reduces_to_single_season():
    out = periodic_ar_coefficients(SeasonalParams(p=1, d=(0.35,)), 1, 150).values
    np.testing.assert_allclose(out, ar_coefficients(0.35, 150).values, rtol=0, atol=1e-13)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_periodic_duality_is_bitwise(p):
    rng = np.random.default_rng(7 + p)
    pars = _random_params(rng, p)
    flipped = SeasonalParams(p=p, d=tuple(-v for v in pars.d))
    for i in range(1, p + 1):
        np.testing.assert_array_equal(
            periodic_ma_coefficients(pars, i, 120).values,
            periodic_ar_coefficients(flipped, i, 120).values,
        )


@pytest.mark.parametrize("p", [1, 2])
def test_modes_agree_bitwise_up_to_period_two(p):
    rng = np.random.default_rng(100 + p)
    pars = _random_params(rng, p)
    for i in range(1, p + 1):
        np.testing.assert_array_equal(
            periodic_ar_coefficients(pars, i, 80, mode=IndexingMode.BACKWARD).values,
            periodic_ar_coefficients(pars, i, 80, mode=IndexingMode.FORWARD).values,
        )


def test_modes_differ_for_period_three():
    pars = SeasonalParams(p=3, d=(0.1, 0.3, -0.2))
    back = periodic_ar_coefficients(pars, 1, 10, mode=IndexingMode.BACKWARD).values
    fwd = periodic_ar_coefficients(pars, 1, 10, mode=IndexingMode.FORWARD).values
    # orders 0 and 1 cannot see the convention, order 2 onward can
    np.testing.assert_array_equal(back[:2], fwd[:2])
    assert not np.array_equal(back, fwd)


# ---------------------------------------------------------------------------
# the defining convolution identity


@pytest.mark.parametrize("p", [2, 3])
def test_convolution_residual_is_rounding_level(p):
    rng = np.random.default_rng(42 + p)
    for _ in range(5):
        pars = _random_params(rng, p)
        for i in range(1, p + 1):
            res = convolution_residual(pars, i, 300)
            assert res.shape == (300,)
            assert np.max(np.abs(res)) < 1e-11


def test_residual_rejects_zero_order():
    with pytest.raises(ParameterError):
        convolution_residual(SeasonalParams(p=2, d=(0.1, 0.2)), 1, 0)


# ---------------------------------------------------------------------------
# filter bundles and validation


def test_filter_bundle_shape_and_indexing():
    pars = SeasonalParams(p=3, d=(0.1, 0.2, 0.3))
    bundle = ar_filter(pars, 25)
    assert bundle.values_matrix().shape == (3, 26)
    np.testing.assert_array_equal(
        bundle[2].values, periodic_ar_coefficients(pars, 2, 25).values
    )
    with pytest.raises(ParameterError):
        bundle[0]
    with pytest.raises(ParameterError):
        bundle[4]


def test_ma_filter_matches_per_season_calls():
    pars = SeasonalParams(p=2, d=(0.15, -0.3))
    bundle = ma_filter(pars, 30)
    for i in (1, 2):
        np.testing.assert_array_equal(
            bundle[i].values, periodic_ma_coefficients(pars, i, 30).values
        )


def test_season_and_order_validation():
    pars = SeasonalParams(p=2, d=(0.1, 0.2))
    with pytest.raises(ParameterError, match="season"):
        periodic_ar_coefficients(pars, 0, 5)
    with pytest.raises(ParameterError, match="season"):
        periodic_ar_coefficients(pars, 3, 5)
    with pytest.raises(ParameterError):
        periodic_ar_coefficients(pars, 1, -2)
    with pytest.raises(ParameterError, match="mode"):
        periodic_ar_coefficients(pars, 1, 5, mode="sideways")
