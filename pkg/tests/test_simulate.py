"""Tests for sample-path simulation and innovation recovery."""

import numpy as np
import pytest

from parfima import (
    DomainError,
    IndexingMode,
    ParameterError,
    SeasonalParams,
    recover_innovations,
    simulate_ensemble,
    simulate_path,
)


def _pars(d, sigma=None):
    return SeasonalParams(p=len(d), d=d, sigma=sigma)


# ---------------------------------------------------------------------------
# determinism and degenerate parameters


def test_same_seed_same_path():
    pars = _pars((0.2, 0.3))
    a = simulate_path(pars, 50, truncation=40, seed=11)
    b = simulate_path(pars, 50, truncation=40, seed=11)
    np.testing.assert_array_equal(a.values, b.values)
    np.testing.assert_array_equal(a.innovations, b.innovations)


def test_different_seeds_differ():
    pars = _pars((0.2, 0.3))
    a = simulate_path(pars, 50, truncation=40, seed=11)
    b = simulate_path(pars, 50, truncation=40, seed=12)
    assert not np.array_equal(a.values, b.values)


def test_zero_memory_returns_the_innovations():
    # with d identically 0 the filter is the identity, bit for bit
    pars = _pars((0.0, 0.0), sigma=(1.0, 2.5))
    path = simulate_path(pars, 200, truncation=64, seed=9)
    np.testing.assert_array_equal(path.values, path.innovations)


def test_innovation_scale_cycles_with_season():
    pars = _pars((0.0, 0.0, 0.0), sigma=(1.0, 10.0, 100.0))
    path = simulate_path(pars, 3000, truncation=16, seed=21)
    x = path.values
    for i, target in zip(range(3), (1.0, 10.0, 100.0)):
        sd = np.std(x[i::3])
        assert 0.9 * target < sd < 1.1 * target


def test_doubling_sigma_doubles_the_path_exactly():
    # scaling by 2 is exact in floating point, so the paths match bitwise
    pars = _pars((0.2, 0.4))
    doubled = _pars((0.2, 0.4), sigma=(2.0, 2.0))
    a = simulate_path(pars, 100, truncation=80, seed=5)
    b = simulate_path(doubled, 100, truncation=80, seed=5)
    np.testing.assert_array_equal(b.values, 2.0 * a.values)


def test_season_relabelling_equivalence():
    # starting at season 2 is the same experiment as rotating the
    # parameter vectors one step and starting at season 1
    pars = _pars((0.1, 0.3, -0.2), sigma=(1.0, 2.0, 0.5))
    rotated = _pars((0.3, -0.2, 0.1), sigma=(2.0, 0.5, 1.0))
    a = simulate_path(pars, 120, truncation=60, seed=77, start_season=2)
    b = simulate_path(rotated, 120, truncation=60, seed=77, start_season=1)
    np.testing.assert_array_equal(a.values, b.values)
    np.testing.assert_array_equal(a.innovations, b.innovations)


# ---------------------------------------------------------------------------
# metadata and validation


def test_path_records_its_recipe():
    pars = _pars((0.2, 0.3))
    path = simulate_path(pars, 30, truncation=25, seed=4, start_season=2)
    assert len(path) == 30
    assert path.params is pars
    assert path.truncation == 25
    assert path.burn_in == 25  # defaults to the truncation
    assert path.seed == 4
    assert path.start_season == 2
    assert path.mode is IndexingMode.BACKWARD


def test_burn_in_zero_is_honoured():
    path = simulate_path(_pars((0.2,)), 20, truncation=10, burn_in=0, seed=1)
    assert path.burn_in == 0


def test_non_causal_parameters_rejected():
    # d = 1.2 is invertible but sits outside the causal region
    with pytest.raises(DomainError, match="causal"):
        simulate_path(_pars((1.2,)), 10, truncation=8)


def test_argument_validation():
    pars = _pars((0.2,))
    with pytest.raises(ParameterError):
        simulate_path(pars, 0, truncation=8)
    with pytest.raises(ParameterError):
        simulate_path(pars, 10, truncation=0)
    with pytest.raises(ParameterError):
        simulate_path(pars, 10, truncation=8, burn_in=-1)
    with pytest.raises(ParameterError):
        simulate_path(pars, 10, truncation=8, start_season=2)


# ---------------------------------------------------------------------------
# innovation recovery


def test_recovery_is_exact_for_zero_memory():
    pars = _pars((0.0, 0.0))
    path = simulate_path(pars, 100, truncation=32, seed=8)
    rec = recover_innovations(path, 10)
    assert rec.shape == (90,)
    np.testing.assert_array_equal(rec, path.innovations[10:])


def test_recovery_round_trip_correlates():
    pars = _pars((0.2, 0.3))
    path = simulate_path(pars, 600, truncation=800, seed=13)
    rec = recover_innovations(path, 300)
    eps = path.innovations[300:]
    corr = np.corrcoef(rec, eps)[0, 1]
    assert corr > 0.95


def test_recovery_requires_invertible_parameters():
    # d = -1.2 is causal (simulation fine) but not invertible
    path = simulate_path(_pars((-1.2,)), 40, truncation=16, seed=2)
    with pytest.raises(DomainError, match="invertible"):
        recover_innovations(path, 8)


def test_recovery_truncation_bounds():
    path = simulate_path(_pars((0.2,)), 20, truncation=16, seed=2)
    with pytest.raises(ParameterError):
        recover_innovations(path, 20)
    with pytest.raises(ParameterError):
        recover_innovations(path, 0)


def test_recovery_mode_defaults_to_path_mode():
    pars = _pars((0.1, 0.2, 0.3))
    path = simulate_path(pars, 90, truncation=64, seed=6, mode=IndexingMode.FORWARD)
    default = recover_innovations(path, 30)
    explicit = recover_innovations(path, 30, mode=IndexingMode.FORWARD)
    np.testing.assert_array_equal(default, explicit)
    other = recover_innovations(path, 30, mode=IndexingMode.BACKWARD)
    assert not np.array_equal(default, other)


# ---------------------------------------------------------------------------
# ensembles


def test_ensemble_is_reproducible_and_independent():
    pars = _pars((0.2, 0.3))
    runs = simulate_ensemble(pars, 40, 5, truncation=32, seed=99)
    again = simulate_ensemble(pars, 40, 5, truncation=32, seed=99)
    assert len(runs) == 5
    seeds = {path.seed for path in runs}
    assert len(seeds) == 5  # distinct child seeds
    for a, b in zip(runs, again):
        assert a.seed == b.seed
        np.testing.assert_array_equal(a.values, b.values)
    assert not np.array_equal(runs[0].values, runs[1].values)


def test_ensemble_validation():
    with pytest.raises(ParameterError):
        simulate_ensemble(_pars((0.2,)), 10, 0, truncation=8)
