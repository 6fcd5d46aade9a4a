"""Periodic fractionally differenced time series models.

Tools for models where the fractional differencing exponent (and the
innovation scale) varies periodically with the season of the time
index: filter coefficients for the infinite AR and MA representations,
region classification, sample-path simulation, asymptotic and empirical
autocovariance, and truncation-convergence diagnostics.

The usual entry points:

>>> import parfima
>>> pars = parfima.SeasonalParams(p=2, d=(0.2, 0.4))
>>> parfima.periodic_ar_coefficients(pars, season=1, n=2).values
array([ 1.  , -0.2 , -0.04])
"""

from .convergence import (
    ConvergenceReport,
    TABLE_CHECKPOINTS,
    TABLE_GRIDS,
    Verdict,
    classify_convergence,
    delta_table,
)
from .covariance import (
    AcfSource,
    PeriodicAcf,
    ScalingForm,
    ScalingMatrix,
    asymptotic_acvf,
    asymptotic_acvf_matrix,
    asymptotic_periodic_acf,
    empirical_periodic_acvf,
    scaling_matrix,
)
from .errors import (
    DomainError,
    InsufficientDataError,
    ParameterError,
    ParfimaError,
    PoleError,
)
from .fracdiff import (
    CoefficientSeries,
    SeriesKind,
    SignedLogGamma,
    ar_coefficients,
    log_gamma,
    ma_asymptotic,
    ma_coefficients,
)
from .params import (
    RegionReport,
    SeasonalParams,
    SeasonIndex,
    classify_region,
    season_of,
)
from .representation import (
    IndexingMode,
    PeriodicFilter,
    ar_filter,
    convolution_residual,
    ma_filter,
    periodic_ar_coefficients,
    periodic_ma_coefficients,
)
from .simulate import (
    DEFAULT_TRUNCATION,
    SamplePath,
    recover_innovations,
    simulate_ensemble,
    simulate_path,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ParfimaError",
    "ParameterError",
    "DomainError",
    "PoleError",
    "InsufficientDataError",
    # fractional differencing weights
    "SeriesKind",
    "CoefficientSeries",
    "SignedLogGamma",
    "log_gamma",
    "ma_coefficients",
    "ar_coefficients",
    "ma_asymptotic",
    # parameters and regions
    "SeasonalParams",
    "SeasonIndex",
    "season_of",
    "RegionReport",
    "classify_region",
    # periodic representations
    "IndexingMode",
    "PeriodicFilter",
    "periodic_ar_coefficients",
    "periodic_ma_coefficients",
    "ar_filter",
    "ma_filter",
    "convolution_residual",
    # convergence diagnostics
    "Verdict",
    "ConvergenceReport",
    "TABLE_CHECKPOINTS",
    "TABLE_GRIDS",
    "delta_table",
    "classify_convergence",
    # autocovariance
    "ScalingForm",
    "ScalingMatrix",
    "AcfSource",
    "PeriodicAcf",
    "asymptotic_acvf",
    "scaling_matrix",
    "asymptotic_acvf_matrix",
    "empirical_periodic_acvf",
    "asymptotic_periodic_acf",
    # simulation
    "DEFAULT_TRUNCATION",
    "SamplePath",
    "simulate_path",
    "simulate_ensemble",
    "recover_innovations",
]
