"""Season-indexed model parameters and invertibility/causality regions."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import ParameterError

# d values sitting exactly on a region edge make the strict-inequality
# classification knife-edged, so they are flagged with a warning.
_BOUNDARY_POINTS = (-1.5, -1.0, -0.5, 0.5, 1.0, 1.5)


@dataclass(frozen=True)
class SeasonalParams:
    """Period p, per-season memory parameters d and innovation scales sigma.

    Seasons are numbered 1..p; time index t decomposes as t = i + p*m
    with season i and cycle m.  ``sigma`` defaults to all ones.
    """

    p: int
    d: tuple[float, ...]
    sigma: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.p != int(self.p) or self.p < 1:
            raise ParameterError(f"period must be a positive integer, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))
        d = tuple(float(v) for v in self._as_seq(self.d, "d"))
        if len(d) != self.p:
            raise ParameterError(f"expected {self.p} memory parameters, got {len(d)}")
        if not all(math.isfinite(v) for v in d):
            raise ParameterError(f"memory parameters must be finite, got {d!r}")
        object.__setattr__(self, "d", d)
        if self.sigma is None:
            sigma = (1.0,) * self.p
        else:
            sigma = tuple(float(v) for v in self._as_seq(self.sigma, "sigma"))
        if len(sigma) != self.p:
            raise ParameterError(f"expected {self.p} innovation scales, got {len(sigma)}")
        if not all(math.isfinite(v) and v > 0.0 for v in sigma):
            raise ParameterError(f"innovation scales must be finite and positive, got {sigma!r}")
        object.__setattr__(self, "sigma", sigma)

    @staticmethod
    def _as_seq(value, name: str) -> Sequence[float]:
        if isinstance(value, (int, float)):
            return (value,)
        try:
            return tuple(value)
        except TypeError:
            raise ParameterError(f"{name} must be a sequence of reals, got {value!r}") from None


class SeasonIndex(NamedTuple):
    season: int
    cycle: int


def season_of(t: int, p: int) -> SeasonIndex:
    """Decompose a time index as t = season + p*cycle with season in 1..p."""
    if p != int(p) or p < 1:
        raise ParameterError(f"period must be a positive integer, got {p!r}")
    t, p = int(t), int(p)
    i = (t - 1) % p + 1
    return SeasonIndex(i, (t - i) // p)


@dataclass(frozen=True)
class RegionReport:
    """Outcome of the invertibility/causality classification.

    The two properties each hold when either of two all-season clauses
    does; the individual clause values are kept so callers can see which
    one fired.
    """

    invertible: bool
    causal: bool
    invertible_interval: bool  # every d_i in (-1/2, 3/2)
    invertible_unit: bool      # every |d_i| < 1
    causal_interval: bool      # every d_i in (-3/2, 1/2)
    causal_unit: bool          # every |d_i| < 1

    def to_dict(self) -> dict:
        return {
            "invertible": self.invertible,
            "causal": self.causal,
            "clauses": {
                "invertible": {"interval": self.invertible_interval, "unit": self.invertible_unit},
                "causal": {"interval": self.causal_interval, "unit": self.causal_unit},
            },
        }


def classify_region(params: SeasonalParams) -> RegionReport:
    """Classify a parameter set as invertible and/or causal.

    The seasonal AR-side filter is summable when every d_i lies in
    (-1/2, 3/2) or every d_i has |d_i| < 1; the MA-side (causal)
    condition is the mirror image, every d_i in (-3/2, 1/2) or every
    |d_i| < 1.  All inequalities are strict.  Parameters sitting exactly
    on a clause edge are classified by the strict rule but additionally
    raise a UserWarning, since roundoff there is decisive.
    """
    d = params.d
    inv_interval = all(-0.5 < v < 1.5 for v in d)
    unit = all(abs(v) < 1.0 for v in d)
    caus_interval = all(-1.5 < v < 0.5 for v in d)
    if any(v in _BOUNDARY_POINTS for v in d):
        warnings.warn(
            "memory parameter lies exactly on a classification boundary; "
            "the strict-inequality rule applied",
            UserWarning,
            stacklevel=2,
        )
    return RegionReport(
        invertible=inv_interval or unit,
        causal=caus_interval or unit,
        invertible_interval=inv_interval,
        invertible_unit=unit,
        causal_interval=caus_interval,
        causal_unit=unit,
    )
