"""Infinite-order periodic filters via triangular inversion.

With a season-varying memory parameter the single-season weight
families do not invert independently: the order-j coefficient of
season i picks up products of weights evaluated at the seasons of the
intermediate lags.  Writing w for the family being inverted (psi when
producing the AR-side filter, pi when producing the MA-side filter),
the periodic coefficients solve the triangular system

    C_0(i) = 1
    C_j(i) = -( w_j(i) + sum_{l=1..j-1} C_l(i) * w_{j-l}(s(i, l)) )

where s(i, l) assigns a season to the lag-l term.  Two conventions for
s are supported, because the cyclic shift direction is observable only
for period p >= 3:

* BACKWARD: s(i, l) is the season of time index i - l, i.e. the season
  the lag-l observation actually occupies.  This is the default and the
  convention under which the filters invert each other exactly.
* FORWARD: s(i, l) is the season of i + k, where k in 1..p and
  k = l mod p, a forward cyclic shift by the lag residue.

The two coincide whenever p <= 2 (i - l and i + l agree modulo 2), so
for quarterly-style models with p >= 3 both are exposed rather than
silently choosing one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import ParameterError
from .fracdiff import CoefficientSeries, SeriesKind, _frac_weights
from .params import SeasonalParams


class IndexingMode(Enum):
    """Season assignment for the inner weights of the inversion."""

    BACKWARD = "backward"
    FORWARD = "forward"


@dataclass(frozen=True)
class PeriodicFilter:
    """Periodic filter coefficients for all seasons of a parameter set."""

    params: SeasonalParams
    kind: SeriesKind
    indexing_mode: IndexingMode
    series: tuple[CoefficientSeries, ...]

    def __getitem__(self, season: int) -> CoefficientSeries:
        if not 1 <= season <= self.params.p:
            raise ParameterError(f"season must be in 1..{self.params.p}, got {season!r}")
        return self.series[season - 1]

    def values_matrix(self) -> np.ndarray:
        """Coefficients stacked as a (p, n+1) array, season i in row i-1."""
        return np.vstack([s.values for s in self.series])


def _check_season(params: SeasonalParams, season: int) -> int:
    if season != int(season) or not 1 <= season <= params.p:
        raise ParameterError(f"season must be in 1..{params.p}, got {season!r}")
    return int(season)


def _check_mode(mode: IndexingMode) -> IndexingMode:
    if not isinstance(mode, IndexingMode):
        raise ParameterError(f"unknown indexing mode {mode!r}")
    return mode


def _weight_rows(params: SeasonalParams, n: int, negate: bool = False) -> np.ndarray:
    """Single-season weight table, row s-1 holding lags 0..n for season s."""
    sign = -1.0 if negate else 1.0
    return np.vstack([_frac_weights(sign * d, n) for d in params.d])


def _lag_seasons(p: int, season0: int, n: int, mode: IndexingMode) -> np.ndarray:
    """0-based season assigned to the inner weight at each lag 0..n."""
    lags = np.arange(n + 1)
    if mode is IndexingMode.BACKWARD:
        out = (season0 - lags) % p
    else:
        k = (lags - 1) % p + 1
        out = (season0 + k) % p
    out[0] = season0  # lag 0 always refers to the target season itself
    return out


def _invert(rows: np.ndarray, season0: int, lag_seasons: np.ndarray) -> np.ndarray:
    """Solve the triangular inversion for one season.

    Runs in O(n^2) with one vectorised update per order: once C_j is
    known, its contribution C_j * w_{m-j}(s(i, j)) is added to every
    later order m in a single slice operation.
    """
    n = rows.shape[1] - 1
    coeff = np.zeros(n + 1)
    coeff[0] = 1.0
    acc = np.zeros(n + 1)
    for j in range(1, n + 1):
        c = -(rows[season0, j] + acc[j])
        coeff[j] = c
        if j < n and c != 0.0:
            acc[j + 1 :] += c * rows[lag_seasons[j], 1 : n - j + 1]
    return coeff


def periodic_ar_coefficients(
    params: SeasonalParams,
    season: int,
    n: int,
    mode: IndexingMode = IndexingMode.BACKWARD,
) -> CoefficientSeries:
    """AR-side periodic filter coefficients for one season, lags 0..n.

    These are the weights that express the season's innovation as an
    infinite combination of past observations; they invert the
    season-varying MA weights psi.  Order 1 is always -d_i, and at
    constant d the sequence collapses to ``ar_coefficients(d)``.
    """
    season = _check_season(params, season)
    mode = _check_mode(mode)
    n = int(n)
    if n < 0:
        raise ParameterError(f"series length must be non-negative, got {n!r}")
    rows = _weight_rows(params, n)
    vals = _invert(rows, season - 1, _lag_seasons(params.p, season - 1, n, mode))
    return CoefficientSeries(SeriesKind.PERIODIC_AR, season, vals, mode)


def periodic_ma_coefficients(
    params: SeasonalParams,
    season: int,
    n: int,
    mode: IndexingMode = IndexingMode.BACKWARD,
) -> CoefficientSeries:
    """MA-side periodic filter coefficients for one season, lags 0..n.

    Same triangular inversion with pi in place of psi; expresses the
    observation in terms of past innovations.  By the pi/psi symmetry a
    season's MA-side coefficients at d equal its AR-side coefficients
    at -d, a property the implementation preserves bit for bit.
    """
    season = _check_season(params, season)
    mode = _check_mode(mode)
    n = int(n)
    if n < 0:
        raise ParameterError(f"series length must be non-negative, got {n!r}")
    rows = _weight_rows(params, n, negate=True)
    vals = _invert(rows, season - 1, _lag_seasons(params.p, season - 1, n, mode))
    return CoefficientSeries(SeriesKind.PERIODIC_MA, season, vals, mode)


def ar_filter(
    params: SeasonalParams, n: int, mode: IndexingMode = IndexingMode.BACKWARD
) -> PeriodicFilter:
    """AR-side periodic filter for every season."""
    series = tuple(periodic_ar_coefficients(params, i, n, mode) for i in range(1, params.p + 1))
    return PeriodicFilter(params, SeriesKind.PERIODIC_AR, mode, series)


def ma_filter(
    params: SeasonalParams, n: int, mode: IndexingMode = IndexingMode.BACKWARD
) -> PeriodicFilter:
    """MA-side periodic filter for every season."""
    series = tuple(periodic_ma_coefficients(params, i, n, mode) for i in range(1, params.p + 1))
    return PeriodicFilter(params, SeriesKind.PERIODIC_MA, mode, series)


def convolution_residual(
    params: SeasonalParams,
    season: int,
    n: int,
    mode: IndexingMode = IndexingMode.BACKWARD,
) -> np.ndarray:
    """Residuals of the defining convolution identity at orders 1..n.

    r_j = sum_{l=0..j} C_l(i) * psi_{j-l}(s(i, l)) with C the AR-side
    periodic coefficients.  Algebraically every r_j vanishes; the
    returned values bound the rounding accumulated by the inversion.
    The sum here is evaluated independently (different order, different
    reduction) from the recursion that produced the coefficients, so it
    is a real check rather than an echo of the construction.
    """
    season = _check_season(params, season)
    mode = _check_mode(mode)
    n = int(n)
    if n < 1:
        raise ParameterError(f"residual order must be positive, got {n!r}")
    rows = _weight_rows(params, n)
    coeff = periodic_ar_coefficients(params, season, n, mode).values
    lag = _lag_seasons(params.p, season - 1, n, mode)
    res = np.empty(n)
    for j in range(1, n + 1):
        l = np.arange(j + 1)
        res[j - 1] = float(np.dot(coeff[: j + 1], rows[lag[l], j - l]))
    return res
