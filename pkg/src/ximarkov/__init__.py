"""Chatterjee's rank correlation, copula Markov products and their continuity
diagnostics: copula families, population measures, elliptical and l1-norm
symmetric models, sample estimators, and an experiment lab with a CLI."""

from .copula import (Clayton, Comonotone, CopulaGrid, Countermonotone, Frank,
                     Gaussian, GridCopula, Independence, ShuffleMod,
                     checkerboard, d1_distance, generalized_markov_product,
                     is_si, markov_product, partial1, partial1_flagged,
                     sup_distance)
from .errors import (ClampWarning, ConfigError, ControlAssertionError,
                     DegenerateResponseError, EmptyConditioningError,
                     InvalidParameterError, InvalidRadialError,
                     PerfectInternalDependenceError,
                     SingularConfigurationError, XiMarkovError)
from .estimators import Dataset, lambda_n, t_n, xi_n, xi_n_knn
from .measures import (ExtremalCase, SigmaPartition, XiResult,
                       elliptical_extremal_classify, equicorrelated_r,
                       lambda_population, t_chain, t_gaussian_4d, xi_from_product,
                       xi_gaussian, xi_gaussian_r, xi_population)
from .models import (ConditionalLaw, CustomRadial, EllipticalSpec, L1Spec,
                     NormalRadial, StudentTRadial, additive_error_spec,
                     conditional_elliptical, erlang_radial, sample_elliptical,
                     sample_l1, williamson_generator)
from .profiles import RangeProfile, l1_range_deviation

__version__ = "0.1.0"

__all__ = [
    "Clayton", "Comonotone", "CopulaGrid", "Countermonotone", "Frank",
    "Gaussian", "GridCopula", "Independence", "ShuffleMod",
    "checkerboard", "d1_distance", "generalized_markov_product", "is_si",
    "markov_product", "partial1", "partial1_flagged", "sup_distance",
    "RangeProfile", "l1_range_deviation",
    "ExtremalCase", "SigmaPartition", "XiResult",
    "elliptical_extremal_classify", "equicorrelated_r", "lambda_population",
    "t_chain", "t_gaussian_4d", "xi_from_product", "xi_gaussian",
    "xi_gaussian_r", "xi_population",
    "ConditionalLaw", "CustomRadial", "EllipticalSpec", "L1Spec",
    "NormalRadial", "StudentTRadial", "additive_error_spec",
    "conditional_elliptical", "erlang_radial", "sample_elliptical", "sample_l1",
    "williamson_generator",
    "Dataset", "lambda_n", "t_n", "xi_n", "xi_n_knn",
    "ClampWarning", "ConfigError", "ControlAssertionError",
    "DegenerateResponseError", "EmptyConditioningError",
    "InvalidParameterError", "InvalidRadialError",
    "PerfectInternalDependenceError", "SingularConfigurationError",
    "XiMarkovError",
]
