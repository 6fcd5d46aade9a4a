"""Convergence diagnostics for periodic fractional filters.

The infinite-order autoregressive form of a periodic fractionally
differenced model is only usable when its coefficient sequence settles
down.  This module tabulates two cheap numeric summaries against a grid
of truncation orders N:

* the increment gap ``delta_N(i) = |a_N(i) - a_{N+1}(i)|``, where
  ``a_j(i)`` is the order-j AR-side coefficient for season ``i``, and
* the absolute partial sum ``S_N(i) = sum_{j=0}^{N} |a_j(i)|``,

and turns them into a three-way verdict.  A sequence whose gaps have
died down by the last checkpoint is labelled convergent; one whose gaps
stay large while the partial sums keep growing is labelled divergent;
everything else is inconclusive.  The default thresholds were tuned on
the demonstration grids below so the two grids land on opposite
verdicts; all three are open to callers.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ParameterError
from .params import SeasonalParams
from .representation import IndexingMode, periodic_ar_coefficients

__all__ = [
    "Verdict",
    "ConvergenceReport",
    "TABLE_CHECKPOINTS",
    "TABLE_GRIDS",
    "delta_table",
    "classify_convergence",
]


class Verdict(Enum):
    """Outcome of the convergence diagnostic."""

    CONVERGENT = "convergent"
    DIVERGENT = "divergent"
    INCONCLUSIVE = "inconclusive"


#: Default truncation orders at which the diagnostics are evaluated.
TABLE_CHECKPOINTS = (10, 25, 50, 75, 100)

#: Demonstration grids of period-2 memory pairs.  Grid 1 collects pairs
#: inside the invertibility region, grid 2 pairs outside it.
TABLE_GRIDS = {
    1: (
        (0.15, 0.8),
        (1.49, -0.49),
        (0.75, 0.2),
        (0.9, 0.09),
        (-0.2, -0.7),
        (-0.6, -0.3),
        (-0.9, -0.09),
        (-0.5, -0.4),
        (-0.49, -0.9),
        (0.49, 0.09),
    ),
    2: (
        (-0.6, 1.49),
        (-0.4, 1.65),
        (-1.2, -1.4),
    ),
}

DEFAULT_TAU = 1.0
DEFAULT_FLOOR = 0.1
DEFAULT_GROWTH = 2.0


def _check_checkpoints(checkpoints, min_count):
    """Validate and normalize a checkpoint grid."""
    try:
        pts = tuple(int(c) for c in checkpoints)
    except (TypeError, ValueError):
        raise ParameterError(
            "checkpoints must be a sequence of integers, got %r" % (checkpoints,)
        )
    if len(pts) < min_count:
        raise ParameterError(
            "need at least %d checkpoints, got %d" % (min_count, len(pts))
        )
    if any(c < 1 for c in pts):
        raise ParameterError("checkpoints must be >= 1, got %r" % (pts,))
    if any(b <= a for a, b in zip(pts, pts[1:])):
        raise ParameterError(
            "checkpoints must be strictly increasing, got %r" % (pts,)
        )
    return pts


def _ratio(final, initial):
    """final / initial with the 0/0 case read as perfect decay."""
    if initial > 0.0:
        return float(final / initial)
    return 0.0 if final == 0.0 else float("inf")


@dataclass
class ConvergenceReport:
    """Tabulated gap and partial-sum diagnostics for one parameter set.

    Attributes
    ----------
    params : SeasonalParams
        Parameters the diagnostics were run on.
    checkpoints : tuple of int
        Truncation orders the tables are evaluated at.
    deltas : numpy.ndarray
        Shape ``(p, len(checkpoints))``; successive-coefficient gaps.
    partial_sums : numpy.ndarray
        Same shape; absolute partial sums of the coefficients.
    indexing_mode : IndexingMode
        Season-indexing convention the coefficients were built with.
    verdict : Verdict or None
        Set by :func:`classify_convergence`; None until classified.
    """

    params: SeasonalParams
    checkpoints: tuple
    deltas: np.ndarray
    partial_sums: np.ndarray
    indexing_mode: IndexingMode
    verdict: Optional[Verdict] = None

    def season_deltas(self, i):
        """Gap row of season i (1-based)."""
        if not 1 <= int(i) <= self.params.p:
            raise ParameterError(
                "season must be in 1..%d, got %r" % (self.params.p, i)
            )
        return self.deltas[int(i) - 1]

    def to_dict(self):
        """Plain-python summary suitable for JSON serialization."""
        seasons = []
        for i in range(self.params.p):
            drow = self.deltas[i]
            srow = self.partial_sums[i]
            seasons.append(
                {
                    "season": i + 1,
                    "delta": [float(v) for v in drow],
                    "partial_sum": [float(v) for v in srow],
                    "monotone": bool(np.all(np.diff(drow) <= 0.0)),
                    "decay_ratio": _ratio(drow[-1], drow[0]),
                    "growth_factor": _ratio(srow[-1], srow[0]),
                }
            )
        return {
            "p": self.params.p,
            "d": [float(v) for v in self.params.d],
            "checkpoints": list(self.checkpoints),
            "indexing_mode": self.indexing_mode.value,
            "verdict": None if self.verdict is None else self.verdict.value,
            "seasons": seasons,
        }


def delta_table(params, checkpoints=TABLE_CHECKPOINTS, mode=IndexingMode.BACKWARD):
    """Tabulate coefficient gaps and partial sums at each checkpoint.

    Coefficients are computed once per season up to ``max(checkpoints)
    + 1`` and both diagnostics are read off at every checkpoint.

    Parameters
    ----------
    params : SeasonalParams
        Model parameters.
    checkpoints : sequence of int, optional
        Strictly increasing truncation orders, at least one.
    mode : IndexingMode, optional
        Season-indexing convention passed through to the filter builder.

    Returns
    -------
    ConvergenceReport
        With the verdict left unset.
    """
    pts = _check_checkpoints(checkpoints, min_count=1)
    n = pts[-1] + 1
    deltas = np.empty((params.p, len(pts)))
    sums = np.empty_like(deltas)
    idx = np.asarray(pts)
    for i in range(1, params.p + 1):
        coeff = periodic_ar_coefficients(params, i, n, mode=mode).values
        deltas[i - 1] = np.abs(np.diff(coeff))[idx]
        sums[i - 1] = np.cumsum(np.abs(coeff))[idx]
    return ConvergenceReport(
        params=params,
        checkpoints=pts,
        deltas=deltas,
        partial_sums=sums,
        indexing_mode=mode,
    )


def classify_convergence(
    report,
    tau=DEFAULT_TAU,
    floor=DEFAULT_FLOOR,
    growth=DEFAULT_GROWTH,
):
    """Turn a tabulated report into a three-way verdict.

    The verdict is CONVERGENT when every season's final gap is at most
    ``tau`` times its initial gap.  Failing that, it is DIVERGENT when
    some season ends with a gap above ``floor`` while its absolute
    partial sum grew by more than a factor ``growth`` across the
    checkpoint range.  Anything else is INCONCLUSIVE.  The verdict is
    stored on the report and returned.

    Parameters
    ----------
    report : ConvergenceReport
        Diagnostics from :func:`delta_table`, over at least three
        checkpoints.
    tau : float, optional
        Required decay factor of the gap for a convergent verdict.
    floor : float, optional
        Gap level above which a non-decaying sequence counts as large.
    growth : float, optional
        Partial-sum growth factor beyond which a sequence with a large
        final gap counts as divergent.

    Returns
    -------
    Verdict
    """
    for name, value in (("tau", tau), ("floor", floor), ("growth", growth)):
        value = float(value)
        if not np.isfinite(value) or value <= 0.0:
            raise ParameterError("%s must be a positive finite number" % name)
    if len(report.checkpoints) < 3:
        raise ParameterError(
            "classification needs at least 3 checkpoints, got %d"
            % len(report.checkpoints)
        )
    deltas = report.deltas
    sums = report.partial_sums
    decay = [_ratio(row[-1], row[0]) for row in deltas]
    grow = [_ratio(row[-1], row[0]) for row in sums]

    if all(r <= tau for r in decay):
        verdict = Verdict.CONVERGENT
    elif any(d[-1] > floor and g > growth for d, g in zip(deltas, grow)):
        verdict = Verdict.DIVERGENT
    else:
        verdict = Verdict.INCONCLUSIVE
    report.verdict = verdict
    return verdict
