"""Fractional differencing weights and signed log-gamma support.

The series expansions of (1 - B)^d and (1 - B)^(-d) in the backshift
operator B have weights that are ratios of gamma functions:

    AR side   pi_j  = Gamma(j - d) / (Gamma(j + 1) Gamma(-d))
    MA side   psi_j = Gamma(j + d) / (Gamma(j + 1) Gamma(d))

Evaluating the ratios directly overflows once j reaches the thousands
and turns indeterminate when the denominator gamma sits at a pole
(integer d).  Both families are therefore generated by the equivalent
one-step recurrence

    psi_0 = 1,    psi_j = psi_{j-1} * (j - 1 + d) / j,

which is defined for every finite d and agrees with the gamma-ratio
formula wherever the latter makes sense (and with its limit at the
poles).  The AR-side weights are the same recurrence run at -d, so
pi_j(d) == psi_j(-d) holds bit for bit.  The direct ratio formula is
kept out of the production path; the test suite evaluates it in high
precision as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ParameterError, PoleError


class SeriesKind(Enum):
    """Which of the four coefficient families a series belongs to."""

    AR = "pi"
    MA = "psi"
    PERIODIC_AR = "big-pi"
    PERIODIC_MA = "big-psi"


@dataclass(frozen=True)
class CoefficientSeries:
    """Finite prefix of an infinite filter-coefficient sequence.

    ``values[j]`` is the weight at lag j and ``values[0]`` is always 1.
    ``season`` tags which seasonal series the weights belong to (1 for
    the single-season families).  ``indexing_mode`` records the season
    assignment convention and is only meaningful for the periodic kinds.
    """

    kind: SeriesKind
    season: int
    values: np.ndarray
    indexing_mode: "IndexingMode | None" = None

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size < 1:
            raise ParameterError("CoefficientSeries.values must be a non-empty 1-d array")
        if vals[0] != 1.0:
            raise ParameterError("coefficient sequences are normalised to values[0] == 1")
        if self.season < 1:
            raise ParameterError("season index must be >= 1")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return self.values.size


class SignedLogGamma(NamedTuple):
    log_abs: float
    sign: int


def log_gamma(x: float) -> SignedLogGamma:
    """Return ln|Gamma(x)| together with the sign of Gamma(x).

    Carrying the sign separately keeps gamma ratios at negative
    non-integer arguments computable without forming huge or signed
    intermediates.

    Raises
    ------
    PoleError
        If x is zero or a negative integer, where Gamma has a pole.
    DomainError
        If x is NaN or infinite.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"log_gamma: argument must be finite, got {x!r}")
    if x <= 0.0 and x == math.floor(x):
        raise PoleError(f"log_gamma: gamma pole at non-positive integer {x!r}")
    if x > 0.0:
        sign = 1
    else:
        # Gamma alternates sign between consecutive negative integers.
        sign = -1 if math.floor(x) % 2 else 1
    return SignedLogGamma(math.lgamma(x), sign)


def _check_memory(d: float) -> float:
    d = float(d)
    if not math.isfinite(d):
        raise ParameterError(f"memory parameter must be finite, got {d!r}")
    return d


def _check_order(n: int) -> int:
    if n != int(n) or n < 0:
        raise ParameterError(f"series length must be a non-negative integer, got {n!r}")
    return int(n)


def _frac_weights(d: float, n: int) -> np.ndarray:
    """Weights of (1 - B)^(-d) at lags 0..n via the multiplicative recurrence."""
    if n == 0:
        return np.ones(1)
    j = np.arange(1.0, n + 1.0)
    return np.concatenate(([1.0], np.cumprod((j - 1.0 + d) / j)))


def ma_coefficients(d: float, n: int) -> CoefficientSeries:
    """MA-side fractional differencing weights psi_0..psi_n.

    Parameters
    ----------
    d : float
        Memory parameter. Any finite value is accepted.
    n : int
        Largest lag to compute.

    Returns
    -------
    CoefficientSeries
        Weights of (1 - B)^(-d), ``values[j] = psi_j(d)``.
    """
    return CoefficientSeries(SeriesKind.MA, 1, _frac_weights(_check_memory(d), _check_order(n)))


def ar_coefficients(d: float, n: int) -> CoefficientSeries:
    """AR-side fractional differencing weights pi_0..pi_n.

    These are the weights of (1 - B)^d, obtained by running the MA-side
    recurrence at -d, so ``ar_coefficients(d).values`` equals
    ``ma_coefficients(-d).values`` exactly.
    """
    return CoefficientSeries(SeriesKind.AR, 1, _frac_weights(-_check_memory(d), _check_order(n)))


def ma_asymptotic(d: float, j: int) -> float:
    """Large-lag approximation psi_j ~ j^(d-1) / Gamma(d).

    Only meaningful for d > 0 (positive-memory regime); other d raise
    DomainError.  j must be a positive integer.
    """
    d = _check_memory(d)
    if d <= 0.0:
        raise DomainError(f"ma_asymptotic: requires d > 0, got {d!r}")
    if j != int(j) or j < 1:
        raise ParameterError(f"ma_asymptotic: lag must be a positive integer, got {j!r}")
    # 1/Gamma(d) via exp(-lgamma) stays finite for arbitrarily large d.
    return math.exp(-math.lgamma(d)) * float(j) ** (d - 1.0)
