"""Sample-path simulation for periodic fractionally differenced models.

Paths are generated from the truncated moving-average form

    x_t = sum_{j=0}^{M} b_j(season(t)) * eps_{t-j},

with independent Gaussian innovations whose standard deviation cycles
with the season.  Innovations are drawn from time ``1 - M - burn_in``
onward so every observed value uses a full window of M + 1 terms; the
only approximation is the dropped tail of the coefficient sequence.
The filtering work is one convolution per season over the shared
innovation array.

The reverse direction truncates the autoregressive form to recover the
driving noise from an observed path, which is the basis of the
round-trip checks in the test-suite.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import signal

from .errors import DomainError, ParameterError
from .params import SeasonalParams, classify_region
from .representation import (
    IndexingMode,
    periodic_ar_coefficients,
    periodic_ma_coefficients,
)

__all__ = [
    "SamplePath",
    "simulate_path",
    "simulate_ensemble",
    "recover_innovations",
]

DEFAULT_TRUNCATION = 5000


def _check_positive_int(value, name):
    iv = int(value)
    if iv != value or iv < 1:
        raise ParameterError("%s must be a positive integer, got %r" % (name, value))
    return iv


@dataclass(frozen=True)
class SamplePath:
    """One simulated path together with how it was produced.

    Attributes
    ----------
    values : numpy.ndarray
        Observations x_1..x_n; position ``t - 1`` holds time t.
    innovations : numpy.ndarray
        The driving noise eps_1..eps_n over the observed window, aligned
        with ``values``.
    params : SeasonalParams
        Parameters the path was generated from.
    start_season : int
        Season of the first observation; position q carries season
        ``((start_season - 1 + q) mod p) + 1``.
    truncation : int
        Order M at which the moving-average form was cut off.
    burn_in : int
        Extra pre-sample innovations beyond the truncation window.
    seed : int or None
        Seed handed to the generator, None when unseeded.
    mode : IndexingMode
        Season-indexing convention of the filter coefficients.
    """

    values: np.ndarray
    innovations: np.ndarray
    params: SeasonalParams
    start_season: int
    truncation: int
    burn_in: int
    seed: Optional[int]
    mode: IndexingMode

    def __len__(self):
        return self.values.size


def _season_positions(n, p, start_season, season):
    """1-based times t in 1..n whose season equals ``season``."""
    first = (season - start_season) % p + 1
    return np.arange(first, n + 1, p)


def simulate_path(
    params,
    n,
    truncation=DEFAULT_TRUNCATION,
    burn_in=None,
    seed=None,
    mode=IndexingMode.BACKWARD,
    start_season=1,
):
    """Simulate one path of length n from the truncated MA form.

    Parameters
    ----------
    params : SeasonalParams
        Model parameters; must classify as causal.
    n : int
        Number of observations to return.
    truncation : int, optional
        Moving-average cutoff M.  Larger values reduce truncation bias
        at linear cost in memory and near-linear cost in time.
    burn_in : int, optional
        Additional innovations drawn before the window required by the
        truncation; defaults to the truncation itself.  Kept as an
        explicit knob for experiment parity; the truncated MA form
        needs none.
    seed : int, optional
        Seed for ``numpy.random.default_rng``.  Equal seeds give
        bit-identical paths.
    mode : IndexingMode, optional
        Season-indexing convention passed to the filter builder.
    start_season : int, optional
        Season carried by the first observation.

    Returns
    -------
    SamplePath
    """
    n = _check_positive_int(n, "n")
    m = _check_positive_int(truncation, "truncation")
    if burn_in is None:
        burn_in = m
    burn = int(burn_in)
    if burn != burn_in or burn < 0:
        raise ParameterError(
            "burn_in must be a non-negative integer, got %r" % (burn_in,)
        )
    start_season = int(start_season)
    if not 1 <= start_season <= params.p:
        raise ParameterError(
            "start_season must be in 1..%d, got %r" % (params.p, start_season)
        )
    if not classify_region(params).causal:
        raise DomainError(
            "simulation requires causal parameters; d=%s is outside the "
            "causal region" % (tuple(params.d),)
        )
    total = n + m + burn
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(total)
    # z[q] drives time t = q + 1 - m - burn; scale by that season's sigma
    times = np.arange(1 - m - burn, n + 1)
    sigma = np.asarray(params.sigma, dtype=float)
    season_idx = (start_season - 1 + times - 1) % params.p
    eps = z * sigma[season_idx]
    x = np.empty(n)
    for i in range(1, params.p + 1):
        t_pos = _season_positions(n, params.p, start_season, i)
        if t_pos.size == 0:
            continue
        kern = np.trim_zeros(
            periodic_ma_coefficients(params, i, m, mode=mode).values, "b"
        )
        conv = signal.convolve(eps, kern, method="auto")
        x[t_pos - 1] = conv[t_pos - 1 + m + burn]
    return SamplePath(
        values=x,
        innovations=eps[m + burn:],
        params=params,
        start_season=start_season,
        truncation=m,
        burn_in=burn,
        seed=None if seed is None else int(seed),
        mode=mode,
    )


def simulate_ensemble(
    params,
    n,
    n_paths,
    truncation=DEFAULT_TRUNCATION,
    burn_in=None,
    seed=None,
    mode=IndexingMode.BACKWARD,
    start_season=1,
):
    """Simulate independent paths with reproducible per-path seeds.

    A master seed is spawned into one child seed per path, so the
    ensemble is reproducible as a whole while paths stay independent.

    Parameters
    ----------
    params : SeasonalParams
        Model parameters; must classify as causal.
    n : int
        Length of each path.
    n_paths : int
        Number of paths.
    truncation, burn_in, mode, start_season
        Passed through to :func:`simulate_path`.
    seed : int, optional
        Master seed; None draws fresh entropy.

    Returns
    -------
    list of SamplePath
        Each element records the child seed it was generated with.
    """
    n_paths = _check_positive_int(n_paths, "n_paths")
    master = np.random.SeedSequence(seed)
    children = master.generate_state(n_paths, dtype=np.uint64)
    return [
        simulate_path(
            params,
            n,
            truncation=truncation,
            burn_in=burn_in,
            seed=int(child),
            mode=mode,
            start_season=start_season,
        )
        for child in children
    ]


def recover_innovations(path, truncation, mode=None):
    """Estimate the driving noise of a path via the truncated AR form.

    Computes ``sum_{j=0}^{K} a_j(season(t)) * x_{t-j}`` for every time
    with a full lag window, i.e. t = K+1 .. n.

    Parameters
    ----------
    path : SamplePath
        Observed path; its parameters must classify as invertible.
    truncation : int
        Cutoff order K of the AR form; must be below the path length.
    mode : IndexingMode, optional
        Season-indexing convention; defaults to the one the path was
        generated with.

    Returns
    -------
    numpy.ndarray
        Length ``n - K``; position q holds the estimate for time
        ``K + 1 + q``.
    """
    params = path.params
    x = np.asarray(path.values, dtype=float)
    if mode is None:
        mode = path.mode
    k = _check_positive_int(truncation, "truncation")
    n = x.size
    if k >= n:
        raise ParameterError(
            "truncation must be below the path length, got K=%d for n=%d"
            % (k, n)
        )
    if not classify_region(params).invertible:
        raise DomainError(
            "innovation recovery requires invertible parameters; d=%s is "
            "outside the invertibility region" % (tuple(params.d),)
        )
    out = np.empty(n - k)
    for i in range(1, params.p + 1):
        t_pos = _season_positions(n, params.p, path.start_season, i)
        t_pos = t_pos[t_pos >= k + 1]
        if t_pos.size == 0:
            continue
        kern = np.trim_zeros(
            periodic_ar_coefficients(params, i, k, mode=mode).values, "b"
        )
        conv = signal.convolve(x, kern, method="auto")
        out[t_pos - 1 - k] = conv[t_pos - 1]
    return out
