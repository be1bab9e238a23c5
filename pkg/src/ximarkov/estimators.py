"""Sample estimators of xi, T and Lambda.

``xi_n`` is the rank-difference statistic: sort by the predictor, take ranks
of the response, and compare consecutive rank differences against their value
under independence.  ``xi_n_knn`` replaces "the next observation in predictor
order" by the nearest neighbor in predictor space, which extends the statistic
to multivariate predictors; ``t_n`` chains it over response coordinates, and
``lambda_n`` is the Pearson correlation of each response with its nearest
neighbor's response.  All are consistent for the corresponding population
quantities and serve as Monte Carlo cross-checks of the closed forms.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.stats import rankdata

from .errors import (ClampWarning, DegenerateResponseError,
                     InvalidParameterError, PerfectInternalDependenceError)

_CLAMP_FLAG_TOL = 1e-6


@dataclass(frozen=True)
class Dataset:
    """Numeric predictors X (n x p) and responses Y (n x q) without missing values."""

    X: np.ndarray
    Y: np.ndarray

    def __post_init__(self):
        X = _as_matrix(self.X, "X")
        Y = _as_matrix(self.Y, "Y")
        if X.shape[0] != Y.shape[0]:
            raise InvalidParameterError("X and Y must have the same number of rows")
        if X.shape[0] < 2:
            raise InvalidParameterError("need at least two observations")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    @property
    def n(self) -> int:
        return self.X.shape[0]


def _as_matrix(arr, name: str) -> np.ndarray:
    a = np.asarray(arr, dtype=float)
    if a.ndim == 1:
        a = a[:, None]
    if a.ndim != 2 or a.shape[0] == 0:
        raise InvalidParameterError(f"{name} must be a nonempty vector or matrix")
    if not np.all(np.isfinite(a)):
        raise InvalidParameterError(f"{name} contains non-finite values")
    return a


def _check_response(y: np.ndarray):
    if y.max() == y.min():
        raise DegenerateResponseError("response is constant; xi is undefined")


def xi_n(x, y, *, seed=0) -> float:
    """Rank-difference estimator of xi(Y, X) for scalar predictors.

    Ties in x are broken by a seeded random permutation; the denominator is
    ties-adjusted, so discrete responses are handled.  The statistic is
    invariant under strictly increasing transformations of either variable
    and always lies in [-0.5, 1].
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size or x.size < 2:
        raise InvalidParameterError("x and y must have equal length >= 2")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise InvalidParameterError("inputs contain non-finite values")
    _check_response(y)
    n = x.size
    rng = np.random.default_rng(seed)
    tie_break = rng.permutation(n)
    order = np.lexsort((tie_break, x))
    ys = y[order]
    r = rankdata(ys, method="max")
    l = rankdata(-ys, method="max")
    numerator = n * np.abs(np.diff(r)).sum()
    denominator = 2.0 * np.sum(l * (n - l))
    return 1.0 - numerator / denominator


def _nearest_neighbor(X: np.ndarray) -> np.ndarray:
    """Index of each row's nearest other row (Euclidean; distance ties by index)."""
    n = X.shape[0]
    k = min(n, 3)
    _, idx = cKDTree(X).query(X, k=k)
    rows = np.arange(n)
    # first column is usually the point itself (distance 0); with duplicate
    # rows the self index can land in the second column instead
    nn = idx[:, 1].copy()
    self_hit = nn == rows
    if np.any(self_hit):
        nn[self_hit] = idx[self_hit, 2] if k > 2 else idx[self_hit, 0]
    return nn


def xi_n_knn(X, y) -> float:
    """Nearest-neighbor estimator of xi(Y, X) for (possibly multivariate) X.

    The conditionally independent copy is surrogated by the response at the
    nearest predictor neighbor:

        xi_hat = sum_i (n * min(R_i, R_{N(i)}) - L_i^2) / sum_i L_i (n - L_i).
    """
    X = _as_matrix(X, "X")
    y = np.asarray(y, dtype=float).ravel()
    if X.shape[0] != y.size or y.size < 3:
        raise InvalidParameterError("X and y must share n >= 3 rows")
    if not np.all(np.isfinite(y)):
        raise InvalidParameterError("y contains non-finite values")
    _check_response(y)
    n = y.size
    nn = _nearest_neighbor(X)
    r = rankdata(y, method="max").astype(float)
    l = rankdata(-y, method="max").astype(float)
    numerator = np.sum(n * np.minimum(r, r[nn]) - l * l)
    denominator = np.sum(l * (n - l))
    return float(numerator / denominator)


def t_n(X, Y, *, tol: float = 1e-9) -> float:
    """Chained nearest-neighbor estimator of the multi-output measure T.

    Numerator terms condition on (X, Y_1, ..., Y_{i-1}) and denominator terms
    on (Y_1, ..., Y_{i-1}), the first one being 0 by convention.  The result
    is clamped to [0, 1].
    """
    X = _as_matrix(X, "X")
    Y = _as_matrix(Y, "Y")
    if X.shape[0] != Y.shape[0] or X.shape[0] < 3:
        raise InvalidParameterError("X and Y must share n >= 3 rows")
    q = Y.shape[1]
    xi_with = []
    xi_without = []
    for i in range(q):
        past = Y[:, :i]
        xi_with.append(xi_n_knn(np.hstack([X, past]), Y[:, i]))
        xi_without.append(0.0 if i == 0 else xi_n_knn(past, Y[:, i]))
    denom = q - sum(xi_without)
    if denom <= tol:
        raise PerfectInternalDependenceError(
            "response vector is perfectly self-determined; T_n is undefined")
    raw = 1.0 - (q - sum(xi_with)) / denom
    return _clamp_unit(raw, "T_n")


def lambda_n(X, y) -> float:
    """Nearest-neighbor estimator of the explained-variance fraction Lambda.

    Pearson correlation of (y_i, y_{N(i)}) with N(i) the nearest predictor
    neighbor of row i; clamped to [0, 1].
    """
    X = _as_matrix(X, "X")
    y = np.asarray(y, dtype=float).ravel()
    if X.shape[0] != y.size or y.size < 3:
        raise InvalidParameterError("X and y must share n >= 3 rows")
    if not np.all(np.isfinite(y)):
        raise InvalidParameterError("y contains non-finite values")
    if y.std() <= 0:
        raise DegenerateResponseError("response variance must be positive")
    nn = _nearest_neighbor(X)
    raw = float(np.corrcoef(y, y[nn])[0, 1])
    return _clamp_unit(raw, "lambda_n")


def _clamp_unit(raw: float, name: str) -> float:
    value = min(max(raw, 0.0), 1.0)
    if max(-raw, raw - 1.0, 0.0) > 0.05:
        warnings.warn(f"{name} clamped into [0, 1] from {raw:.6f}", ClampWarning, stacklevel=3)
    return value
