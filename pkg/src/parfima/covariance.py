"""Autocovariance analytics for periodic long-memory models.

For memory parameters strictly inside (0, 1/2) the model is stationary
within each season and its autocovariance decays like a power of the
lag.  The large-lag approximation used here is

    gamma_i(h) ~ sigma_i^2 * c(d_i, d_k) * h**(d_i + d_k - 1),

where ``i`` is the season of the later observation, ``k`` the season
paired to it by the lag, and ``c`` a ratio of gamma-function values.
The per-pair coefficients can be organized into a p-by-p scaling
matrix; two algebraically equivalent expressions for it are implemented
separately (one through the sine reflection identity, one through a
beta-style gamma ratio) so they can be cross-checked numerically.

An empirical counterpart estimates the per-season autocovariance from
an observed path by averaging lagged products season by season.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.special import gamma as _gamma_fn

from .errors import DomainError, InsufficientDataError, ParameterError, PoleError
from .params import SeasonalParams, season_of

__all__ = [
    "ScalingForm",
    "ScalingMatrix",
    "AcfSource",
    "PeriodicAcf",
    "asymptotic_acvf",
    "scaling_matrix",
    "asymptotic_acvf_matrix",
    "empirical_periodic_acvf",
    "asymptotic_periodic_acf",
]


class ScalingForm(Enum):
    """Which algebraic expression to use for the scaling matrix."""

    SIN = "sin"
    BETA = "beta"


class AcfSource(Enum):
    """How a PeriodicAcf table was produced."""

    EMPIRICAL = "empirical"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class ScalingMatrix:
    """Season-pair scaling coefficients with the form that produced them."""

    values: np.ndarray
    form: ScalingForm

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ParameterError(
                "scaling matrix must be square, got shape %r" % (values.shape,)
            )
        if not np.all(np.isfinite(values)):
            raise ParameterError("scaling matrix entries must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "form", ScalingForm(self.form))

    @property
    def p(self):
        return self.values.shape[0]


@dataclass(frozen=True)
class PeriodicAcf:
    """Per-season autocovariance values on a common lag grid.

    Attributes
    ----------
    lags : numpy.ndarray
        Integer lags, one per column.
    values : numpy.ndarray
        Shape ``(p, len(lags))``; row ``i - 1`` belongs to season i.
    source : AcfSource
        Whether the numbers are sample estimates or the closed form.
    """

    lags: np.ndarray
    values: np.ndarray
    source: AcfSource

    def __post_init__(self):
        lags = np.asarray(self.lags, dtype=int)
        values = np.asarray(self.values, dtype=float)
        if lags.ndim != 1 or values.ndim != 2 or values.shape[1] != lags.size:
            raise ParameterError(
                "values must be (p, len(lags)), got %r against %d lags"
                % (values.shape, lags.size)
            )
        lags.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "lags", lags)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "source", AcfSource(self.source))

    @property
    def p(self):
        return self.values.shape[0]

    def season(self, i):
        """Autocovariance row of season i (1-based)."""
        if not 1 <= int(i) <= self.p:
            raise ParameterError("season must be in 1..%d, got %r" % (self.p, i))
        return self.values[int(i) - 1]


def _check_pair(d_i, d_k):
    """Pole check first (the reflection identity blows up there), then
    the long-memory domain the asymptotics assume."""
    total = d_i + d_k
    if float(total).is_integer():
        raise PoleError(
            "d_i + d_k = %g is an integer; the scaling coefficient has a "
            "pole there" % total
        )
    if not (0.0 < d_i < 0.5 and 0.0 < d_k < 0.5):
        raise DomainError(
            "asymptotic autocovariance requires memory parameters strictly "
            "inside (0, 0.5); got d_i=%g, d_k=%g" % (d_i, d_k)
        )


def _check_all_pairs(params):
    """Scan every season pair for poles before any domain complaint, so a
    pair summing to an integer is always reported as the pole it is."""
    d = np.asarray(params.d, dtype=float)
    for i in range(params.p):
        for k in range(params.p):
            total = d[i] + d[k]
            if float(total).is_integer():
                raise PoleError(
                    "d_%d + d_%d = %g is an integer; the scaling "
                    "coefficient has a pole there" % (i + 1, k + 1, total)
                )
    if not all(0.0 < v < 0.5 for v in d):
        raise DomainError(
            "asymptotic autocovariance requires every memory parameter "
            "strictly inside (0, 0.5); got d=%r" % (tuple(float(v) for v in d),)
        )
    return d


def _check_lag(h):
    ih = int(h)
    if ih != h or ih < 1:
        raise ParameterError("lag must be a positive integer, got %r" % (h,))
    return ih


def asymptotic_acvf(params, season, h):
    """Large-lag autocovariance approximation for one season and lag.

    Parameters
    ----------
    params : SeasonalParams
        Model parameters; the two seasons the lag pairs up must have
        memory strictly inside (0, 0.5).
    season : int
        Season of the later observation, 1-based.
    h : int
        Positive lag; season ``k = ((season - 1 + h) mod p) + 1`` is the
        partner the formula pairs with ``season``.

    Returns
    -------
    float
        ``sigma_i^2 * Gamma(1 - d_i - d_k) / (Gamma(d_k) Gamma(1 - d_k))
        * h**(d_i + d_k - 1)``.
    """
    if not 1 <= int(season) <= params.p:
        raise ParameterError(
            "season must be in 1..%d, got %r" % (params.p, season)
        )
    season = int(season)
    h = _check_lag(h)
    d_i = float(params.d[season - 1])
    k = season_of(season + h, params.p).season
    d_k = float(params.d[k - 1])
    _check_pair(d_i, d_k)
    coef = math.gamma(1.0 - d_i - d_k) / (math.gamma(d_k) * math.gamma(1.0 - d_k))
    return params.sigma[season - 1] ** 2 * coef * h ** (d_i + d_k - 1.0)


def scaling_matrix(params, form=ScalingForm.SIN):
    """Season-pair coefficient matrix of the large-lag autocovariance.

    Entry (i, k) scales ``h**(d_i + d_k - 1)`` in the approximation of
    the covariance pairing season i with season k.  The two forms are
    algebraically identical; computing both is a numerical cross-check.

    Parameters
    ----------
    params : SeasonalParams
        Model parameters; every memory value must lie in (0, 0.5) and no
        pair may sum to an integer.
    form : ScalingForm, optional
        SIN uses the sine reflection expression, BETA the beta-style
        gamma ratio.

    Returns
    -------
    ScalingMatrix
    """
    form = ScalingForm(form)
    d = _check_all_pairs(params)
    d_i = d[:, None]
    d_k = d[None, :]
    v = 1.0 / _gamma_fn(d)
    vv = np.outer(v, v)
    if form is ScalingForm.SIN:
        ratio = _gamma_fn(d_i) * _gamma_fn(d_k) / _gamma_fn(d_i + d_k)
        values = ratio * vv * np.sin(np.pi * d_k) / np.sin(np.pi * (d_i + d_k))
    else:
        values = vv * _gamma_fn(d_i) * _gamma_fn(1.0 - d_i - d_k) / _gamma_fn(1.0 - d_k)
    return ScalingMatrix(values=values, form=form)


def asymptotic_acvf_matrix(params, h, form=ScalingForm.SIN):
    """Season-by-season autocovariance matrix at one lag.

    Entry (i, k) is ``sigma_i^2 * S[i, k] * h**(d_i + d_k - 1)`` with S
    the scaling matrix; the lag power factors as
    ``h**(d_i - 1/2) * h**(d_k - 1/2)``, so the matrix is a scaled outer
    product.

    Parameters
    ----------
    params : SeasonalParams
        Model parameters, restricted as in :func:`scaling_matrix`.
    h : int
        Positive lag.
    form : ScalingForm, optional
        Expression used for the scaling coefficients.

    Returns
    -------
    numpy.ndarray
        Shape ``(p, p)``.
    """
    h = _check_lag(h)
    mat = scaling_matrix(params, form=form)
    d = np.asarray(params.d, dtype=float)
    sig2 = np.asarray(params.sigma, dtype=float) ** 2
    u = float(h) ** (d - 0.5)
    return sig2[:, None] * mat.values * np.outer(u, u)


def _resolve_path(path, p, start_season):
    """Accept either a SamplePath-like object or a plain array."""
    values = getattr(path, "values", None)
    params = getattr(path, "params", None)
    if values is not None and params is not None:
        return (
            np.asarray(values, dtype=float),
            params.p,
            int(getattr(path, "start_season", 1)),
        )
    if p is None:
        raise ParameterError(
            "a plain array needs an explicit period; pass p=..."
        )
    p = int(p)
    if p < 1:
        raise ParameterError("period must be a positive integer, got %r" % (p,))
    return np.asarray(path, dtype=float), p, int(start_season)


def empirical_periodic_acvf(path, max_lag, center=False, p=None, start_season=1):
    """Season-by-season sample autocovariance of one observed path.

    For season i and lag h the estimate averages ``x[t] * x[t - h]``
    over all season-i times t for which both factors exist.  Following
    the zero-mean model convention the products are not centered unless
    asked for.

    Parameters
    ----------
    path : SamplePath or array_like
        Observed series.  A plain array needs ``p`` (and optionally
        ``start_season``) supplied explicitly.
    max_lag : int
        Largest lag to estimate; lags 0..max_lag are returned.
    center : bool, optional
        Subtract each season's sample mean before forming products.
    p : int, optional
        Period, required for plain-array input.
    start_season : int, optional
        Season of the first array element, for plain-array input.

    Returns
    -------
    PeriodicAcf
        With ``source=EMPIRICAL`` and rows indexed by season.

    Raises
    ------
    InsufficientDataError
        If the series is shorter than ``p * (max_lag + 2)``.
    """
    x, p, start = _resolve_path(path, p, start_season)
    if x.ndim != 1:
        raise ParameterError("path must be a 1-d series, got shape %r" % (x.shape,))
    if not 1 <= start <= p:
        raise ParameterError(
            "start_season must be in 1..%d, got %r" % (p, start)
        )
    max_lag = int(max_lag)
    if max_lag < 0:
        raise ParameterError("max_lag must be >= 0, got %r" % (max_lag,))
    n = x.size
    needed = p * (max_lag + 2)
    if n < needed:
        raise InsufficientDataError(
            "need at least p*(max_lag+2) = %d observations for period %d "
            "and max lag %d, got %d" % (needed, p, max_lag, n)
        )
    if center:
        x = x.copy()
        for i in range(p):
            idx = np.arange((i - (start - 1)) % p, n, p)
            x[idx] -= x[idx].mean()
    out = np.empty((p, max_lag + 1))
    for i in range(p):
        t = np.arange((i - (start - 1)) % p, n, p)
        for h in range(max_lag + 1):
            valid = t[t - h >= 0]
            out[i, h] = np.mean(x[valid] * x[valid - h])
    return PeriodicAcf(
        lags=np.arange(max_lag + 1), values=out, source=AcfSource.EMPIRICAL
    )


def asymptotic_periodic_acf(params, max_lag):
    """Closed-form autocovariance table for lags 1..max_lag.

    Returns
    -------
    PeriodicAcf
        With ``source=ASYMPTOTIC``; lag 0 is excluded because the
        large-lag formula does not apply there.
    """
    max_lag = int(max_lag)
    if max_lag < 1:
        raise ParameterError("max_lag must be >= 1, got %r" % (max_lag,))
    lags = np.arange(1, max_lag + 1)
    out = np.empty((params.p, lags.size))
    for i in range(1, params.p + 1):
        for col, h in enumerate(lags):
            out[i - 1, col] = asymptotic_acvf(params, i, int(h))
    return PeriodicAcf(lags=lags, values=out, source=AcfSource.ASYMPTOTIC)
