"""Population dependence measures built on Markov products.

Chatterjee's rank correlation of (X, Y) admits the representation

    xi = a * ∫ P(Y < y, Y' < y) dP^Y(y) - b,

where (Y, Y') is the Markov product (Y' a conditionally independent copy of Y
given X) and the positive constants a, b depend only on the closure of the
range of F_Y:

    1/a = ∫ (1 - g(t)) g(t) dt,   b = a * ∫ g(t)^2 dt,   g = F^-∘F^{-1},

with a = 6, b = 2 for continuous F_Y.  The diagonal integral equals
∫ C(g(t), g(t)) dt for the product copula C.

All three integrals are evaluated with one shared quadrature rule.  That makes
the extremal identities exact at machine precision by construction: for the
independence copula the diagonal integrand is g(t)^2 pointwise, so xi = 0; for
the comonotone copula it is g(t), so xi = a/a = 1 - these cancellations happen
per node, not just in the limit.
"""

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .copula import Copula, CopulaGrid, GridCopula, as_copula, product_diagonal
from .errors import (ClampWarning, DegenerateResponseError,
                     InvalidParameterError, PerfectInternalDependenceError,
                     SingularConfigurationError)
from .profiles import RangeProfile
from .quadrature import panel_rule, uniform_edges

_DEGENERATE_TOL = 1e-12
_CLAMP_FLAG_TOL = 1e-6


# ---------------------------------------------------------------------- #
# result and matrix types
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class XiResult:
    """Value of xi together with the pieces of its diagonal representation."""

    value: float
    a: float
    b: float
    diagonal_integral: float
    clamped: bool = False


@dataclass(frozen=True)
class SigmaPartition:
    """Scale matrix of a joint vector (X, Y), partitioned into blocks.

    ``s11`` is p x p (predictors), ``s22`` is q x q (responses), ``s12`` the
    p x q cross block.  The assembled matrix must be symmetric positive
    semi-definite.
    """

    s11: np.ndarray
    s12: np.ndarray
    s22: np.ndarray

    def __post_init__(self):
        s11 = np.atleast_2d(np.asarray(self.s11, dtype=float))
        s22 = np.atleast_2d(np.asarray(self.s22, dtype=float))
        s12 = np.asarray(self.s12, dtype=float).reshape(s11.shape[0], s22.shape[0])
        for name, blk in (("s11", s11), ("s22", s22)):
            if blk.shape[0] != blk.shape[1]:
                raise InvalidParameterError(f"{name} must be square")
            if np.abs(blk - blk.T).max() > 1e-12:
                raise InvalidParameterError(f"{name} must be symmetric to 1e-12")
        full = np.block([[s11, s12], [s12.T, s22]])
        eig = np.linalg.eigvalsh(full)
        if eig.min() < -1e-10 * max(1.0, eig.max()):
            raise InvalidParameterError(
                f"scale matrix is not positive semi-definite (min eigenvalue {eig.min():.3e})")
        object.__setattr__(self, "s11", s11)
        object.__setattr__(self, "s12", s12)
        object.__setattr__(self, "s22", s22)

    @property
    def p(self) -> int:
        return self.s11.shape[0]

    @property
    def q(self) -> int:
        return self.s22.shape[0]

    def full(self) -> np.ndarray:
        return np.block([[self.s11, self.s12], [self.s12.T, self.s22]])

    @classmethod
    def from_matrix(cls, sigma, p: int) -> "SigmaPartition":
        sigma = np.asarray(sigma, dtype=float)
        if not 1 <= p < sigma.shape[0]:
            raise InvalidParameterError("block size p must satisfy 1 <= p < dim")
        return cls(sigma[:p, :p], sigma[:p, p:], sigma[p:, p:])

    @classmethod
    def equicorrelated(cls, dim: int, rho: float) -> "SigmaPartition":
        """Unit-variance equicorrelated matrix, split as (dim-1) predictors + 1 response."""
        sigma = np.full((dim, dim), float(rho))
        np.fill_diagonal(sigma, 1.0)
        return cls.from_matrix(sigma, dim - 1)


# ---------------------------------------------------------------------- #
# xi from products
# ---------------------------------------------------------------------- #

def _lattice_segment_rule(a: float, b: float, m: int):
    """Quadrature on [a, b] using only lattice nodes k/m (plus the endpoints).

    Grid products are exact at lattice points, so the rule may not sample
    anywhere else.  Full lattice runs get composite Simpson (a 3/8 block
    absorbs an odd cell), which is exact for quadratics; that exactness is
    what keeps a = 6, b = 2 and the extremal values of xi exact on grids.
    Ragged sub-cell ends fall back to trapezoid pieces.
    """
    k0 = math.ceil(a * m - 1e-9)
    k1 = math.floor(b * m + 1e-9)
    nodes = [a]
    weights = [0.0]

    def _add(node, w):
        if abs(node - nodes[-1]) < 1e-15:
            weights[-1] += w
        else:
            nodes.append(node)
            weights.append(w)

    if k0 > k1:  # no interior lattice point: single trapezoid piece
        _add(b, (b - a) / 2.0)
        weights[0] += (b - a) / 2.0
        return np.asarray(nodes), np.asarray(weights)

    h = 1.0 / m
    head = k0 / m - a
    if head > 1e-15:
        weights[0] += head / 2.0
        _add(k0 / m, head / 2.0)
    else:
        _add(k0 / m, 0.0)
    cells = k1 - k0
    simpson_cells = cells if cells % 2 == 0 else cells - 3
    pos = k0
    if simpson_cells > 0:
        weights[-1] += h / 3.0
        for j in range(1, simpson_cells):
            _add((pos + j) / m, (4.0 if j % 2 else 2.0) * h / 3.0)
        _add((pos + simpson_cells) / m, h / 3.0)
        pos += simpson_cells
    if pos < k1:  # odd remainder: 1 cell (trapezoid) or 3 cells (Simpson 3/8)
        rem = k1 - pos
        if rem == 1:
            weights[-1] += h / 2.0
            _add(k1 / m, h / 2.0)
        else:
            weights[-1] += 3.0 * h / 8.0
            _add((pos + 1) / m, 9.0 * h / 8.0)
            _add((pos + 2) / m, 9.0 * h / 8.0)
            _add(k1 / m, 3.0 * h / 8.0)
    tail = b - k1 / m
    if tail > 1e-15:
        weights[-1] += tail / 2.0
        _add(b, tail / 2.0)
    return np.asarray(nodes), np.asarray(weights)


def _xi_from_diagonal(diag_fn, profile: RangeProfile, segment_rule) -> XiResult:
    """Shared-rule evaluation of xi from a diagonal evaluator x -> C(x, x)."""
    a_inv = 0.0
    g_sq = 0.0
    diag = 0.0
    for lo, hi in profile.jumps:
        width = hi - lo
        a_inv += width * (lo - lo * lo)
        g_sq += width * lo * lo
        diag += width * float(np.asarray(diag_fn(np.array([lo])))[0])
    for seg_a, seg_b in profile.continuity_segments():
        t, w = segment_rule(seg_a, seg_b)
        a_inv += float(w @ (t - t * t))
        g_sq += float(w @ (t * t))
        diag += float(w @ np.asarray(diag_fn(t)))
    if a_inv <= _DEGENERATE_TOL:
        raise DegenerateResponseError(
            "range profile is degenerate (single atom): xi is undefined for a constant response")
    a = 1.0 / a_inv
    b = a * g_sq
    raw = a * diag - b
    value = min(max(raw, 0.0), 1.0)
    excess = max(-raw, raw - 1.0, 0.0)
    clamped = excess > _CLAMP_FLAG_TOL
    if clamped:
        warnings.warn(f"xi clamped into [0, 1] by {excess:.3e}", ClampWarning, stacklevel=3)
    return XiResult(value=value, a=a, b=b, diagonal_integral=diag, clamped=clamped)


def xi_from_product(product, profile: RangeProfile | None = None, *,
                    panels: int = 256, order: int = 4) -> XiResult:
    """xi of (X, Y) from the copula of its Markov product (Y, Y').

    ``product`` is either a ``CopulaGrid`` (e.g. the output of
    ``markov_product``) or any ``Copula``; ``profile`` is the range profile of
    F_Y (identity when omitted).  Grid inputs are integrated on their own
    lattice, where their values are exact.
    """
    profile = RangeProfile.identity() if profile is None else profile
    if isinstance(product, CopulaGrid):
        cop = GridCopula(product)
        m = product.m
        segment_rule = lambda a, b: _lattice_segment_rule(a, b, m)
    elif isinstance(product, Copula):
        cop = product
        segment_rule = lambda a, b: panel_rule(
            uniform_edges(max(1, int(round(panels * (b - a)))), a, b), order)
    else:
        raise InvalidParameterError("product must be a CopulaGrid or a Copula")
    diag_fn = lambda x: cop.cdf(x, x)
    return _xi_from_diagonal(diag_fn, profile, segment_rule)


def xi_population(c, y_profile: RangeProfile | None = None,
                  x_profile: RangeProfile | None = None, *,
                  panels: int = 1024, order: int = 4,
                  t_panels: int = 256, t_order: int = 4) -> XiResult:
    """xi of (X, Y) straight from the copula of (X, Y).

    The diagonal of the (generalized) Markov product is evaluated pointwise by
    breakpoint-aligned quadrature instead of being read off a lattice, so
    perfectly dependent copulas (comonotone, shuffles) give exactly 1 and the
    independence copula exactly 0 regardless of resolutions.
    """
    c = as_copula(c)
    y_profile = RangeProfile.identity() if y_profile is None else y_profile
    diag_fn = lambda x: product_diagonal(c, x, x_profile, panels=panels, order=order)
    segment_rule = lambda a, b: panel_rule(
        uniform_edges(max(1, int(round(t_panels * (b - a)))), a, b), t_order)
    return _xi_from_diagonal(diag_fn, y_profile, segment_rule)


# ---------------------------------------------------------------------- #
# Gaussian closed forms
# ---------------------------------------------------------------------- #

def _pinv_psd(mat: np.ndarray, rel_cutoff: float = 1e-10) -> np.ndarray:
    """Moore-Penrose pseudoinverse of a symmetric PSD matrix via eigendecomposition."""
    lam, vec = np.linalg.eigh(mat)
    cutoff = rel_cutoff * max(lam.max(), 0.0)
    inv = np.where(lam > cutoff, 1.0 / np.where(lam > cutoff, lam, 1.0), 0.0)
    return (vec * inv) @ vec.T


def _asin_snapped(arg: float) -> float:
    """arcsin with arguments within 1e-12 of +/-1 treated as exactly +/-1.

    Near perfect dependence the argument reaches 1 only up to floating-point
    drift, which the square-root behaviour of arcsin would amplify to ~1e-8;
    snapping keeps the extremal identities exact.
    """
    if arg >= 1.0 - 1e-12:
        return math.pi / 2.0
    if arg <= -1.0 + 1e-12:
        return -math.pi / 2.0
    return math.asin(arg)


def xi_gaussian_r(r: float) -> float:
    """xi for a multivariate normal with canonical correlation r between Y and X."""
    r2 = min(r * r, 1.0)
    return 3.0 / math.pi * _asin_snapped((1.0 + r2) / 2.0) - 0.5


def xi_gaussian(sigma: SigmaPartition) -> float:
    """Closed-form xi(Y, X) for (X, Y) multivariate normal with scale ``sigma``.

    Requires q = 1.  The predictor block is inverted with a Moore-Penrose
    pseudoinverse (eigenvalue cutoff 1e-10 relative to the largest eigenvalue),
    so rank-deficient predictor blocks are allowed.
    """
    if sigma.q != 1:
        raise InvalidParameterError("xi_gaussian needs a single response (q = 1)")
    var_y = float(sigma.s22[0, 0])
    if var_y <= _DEGENERATE_TOL:
        raise DegenerateResponseError("response variance must be positive")
    s12 = sigma.s12[:, 0]
    r2 = float(s12 @ _pinv_psd(sigma.s11) @ s12) / var_y
    return xi_gaussian_r(math.sqrt(max(r2, 0.0)))


def equicorrelated_r(p: int, rho: float) -> float:
    """Canonical correlation r for the equicorrelated normal with p predictors."""
    if int(p) != p or p < 1:
        raise InvalidParameterError("p must be a positive integer")
    p = int(p)
    lo = -1.0 / p
    if not lo - 1e-12 <= rho <= 1.0 + 1e-12:
        raise InvalidParameterError(
            f"equicorrelation must lie in [{lo}, 1] for p = {p}, got {rho}")
    rho = min(max(rho, lo), 1.0)
    denom = 1.0 + (p - 1) * rho
    r = rho * math.sqrt(p / denom)
    return min(max(r, -1.0), 1.0)


# ---------------------------------------------------------------------- #
# multi-output extension T and explainability
# ---------------------------------------------------------------------- #

def t_chain(xi_with_x, xi_without_x, *, tol: float = 1e-9) -> float:
    """Chained multi-output dependence measure.

        T = 1 - (q - sum_i xi(Y_i | X, Y_1..Y_{i-1})) / (q - sum_i xi(Y_i | Y_1..Y_{i-1}))

    with the first conditioning-free term defined as 0.  Reduces to xi for
    q = 1.
    """
    with_x = np.asarray(xi_with_x, dtype=float)
    without_x = np.asarray(xi_without_x, dtype=float)
    if with_x.ndim != 1 or with_x.shape != without_x.shape or with_x.size < 1:
        raise InvalidParameterError("need two equal-length nonempty lists of xi values")
    for name, arr in (("xi_with_x", with_x), ("xi_without_x", without_x)):
        if np.any(arr < -1e-9) or np.any(arr > 1 + 1e-9):
            raise InvalidParameterError(f"{name} entries must lie in [0, 1]")
    q = with_x.size
    denom = q - float(without_x.sum())
    if denom <= tol:
        raise PerfectInternalDependenceError(
            "response vector is perfectly self-determined; T is undefined")
    raw = 1.0 - (q - float(with_x.sum())) / denom
    value = min(max(raw, 0.0), 1.0)
    if max(-raw, raw - 1.0, 0.0) > _CLAMP_FLAG_TOL:
        warnings.warn(f"T clamped into [0, 1] from {raw:.6f}", ClampWarning, stacklevel=2)
    return value


def t_gaussian_4d(rho_x: float, rho_xy: float, rho_y: float) -> float:
    """Closed-form T for the 4-dimensional normal with the 3-parameter scale

        [[1, rho_x, rho_xy, rho_xy],
         [rho_x, 1, rho_xy, rho_xy],
         [rho_xy, rho_xy, 1, rho_y],
         [rho_xy, rho_xy, rho_y, 1]].

    Admissibility (positive semi-definiteness) for this p = q = 2 layout is
    rho_xy^2 <= (1 + rho_x)(1 + rho_y) / 4.  Singular 0/0 configurations are
    rejected rather than extrapolated.
    """
    for name, val in (("rho_x", rho_x), ("rho_y", rho_y)):
        if not -1.0 <= val <= 1.0:
            raise InvalidParameterError(f"{name} must lie in [-1, 1], got {val}")
    bound = (1.0 + rho_x) * (1.0 + rho_y) / 4.0
    if rho_xy * rho_xy > bound + 1e-12:
        raise InvalidParameterError(
            f"rho_xy^2 = {rho_xy**2:.6f} exceeds the admissibility bound {bound:.6f}")
    if 1.0 + rho_x < 1e-10:
        raise SingularConfigurationError("1 + rho_x vanishes; configuration is singular")
    inner_denom = 2.0 * (1.0 + rho_x) - 4.0 * rho_xy * rho_xy
    if inner_denom < 1e-10:
        raise SingularConfigurationError(
            "2(1 + rho_x) - 4 rho_xy^2 vanishes; the closed form is a 0/0 limit here")

    term1 = _asin_snapped(0.5 + rho_xy * rho_xy / (1.0 + rho_x))
    term2 = _asin_snapped(0.5 + ((1.0 + rho_x) * rho_y * rho_y
                                 - 2.0 * (2.0 * rho_y - 1.0) * rho_xy * rho_xy) / inner_denom)
    numerator = 3.0 - (3.0 / math.pi) * (term1 + term2)
    denominator = 2.5 - (3.0 / math.pi) * _asin_snapped((1.0 + rho_y * rho_y) / 2.0)
    raw = 1.0 - numerator / denominator
    value = min(max(raw, 0.0), 1.0)
    if max(-raw, raw - 1.0, 0.0) > _CLAMP_FLAG_TOL:
        warnings.warn(f"T clamped into [0, 1] from {raw:.6f}", ClampWarning, stacklevel=2)
    return value


def lambda_population(pairs=None, *, cross_moment: float | None = None,
                      mean: float | None = None, variance: float | None = None) -> float:
    """Fraction of explained variance Var(E[Y|X]) / Var(Y).

    Equals the Pearson correlation of the Markov pair (Y, Y').  Supply either
    ``pairs`` (an (n, 2) array of draws of (Y, Y')) or analytic second moments
    of the exchangeable pair: E[Y Y'], E[Y] and Var(Y).
    """
    if pairs is not None:
        arr = np.asarray(pairs, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 2:
            raise InvalidParameterError("pairs must be an (n, 2) array with n >= 2")
        if not np.all(np.isfinite(arr)):
            raise InvalidParameterError("pairs must be finite")
        sd = arr.std(axis=0)
        if sd.min() <= 0:
            raise DegenerateResponseError("response variance must be positive")
        return float(np.corrcoef(arr[:, 0], arr[:, 1])[0, 1])
    if cross_moment is None or mean is None or variance is None:
        raise InvalidParameterError("supply pairs, or cross_moment with mean and variance")
    if variance <= 0:
        raise DegenerateResponseError("response variance must be positive")
    return (cross_moment - mean * mean) / variance


# ---------------------------------------------------------------------- #
# extremal classification for elliptical scale matrices
# ---------------------------------------------------------------------- #

class ExtremalCase(enum.Enum):
    T_ZERO = "T_zero"
    T_ONE = "T_one"
    INTERIOR = "interior"


def _rank_psd(mat: np.ndarray, rel_cutoff: float = 1e-10) -> int:
    lam = np.linalg.eigvalsh(mat)
    return int(np.sum(lam > rel_cutoff * max(lam.max(), 0.0)))


def elliptical_extremal_classify(sigma: SigmaPartition, is_normal: bool, *,
                                 tol: float = 1e-10) -> ExtremalCase:
    """Classify whether T(Y, X) sits at 0, at 1, or strictly inside (0, 1).

    T = 0 requires a vanishing cross block *and* normality (a non-normal
    elliptical vector with uncorrelated blocks is still dependent through the
    shared radial part); T = 1 holds exactly when rank(Sigma) = rank(Sigma11).
    """
    full = sigma.full()
    diag = np.diag(full)
    if diag.min() <= tol:
        raise InvalidParameterError("all components must be non-degenerate (positive variance)")
    scale = float(diag.max())
    if np.abs(sigma.s12).max() <= tol * scale and is_normal:
        return ExtremalCase.T_ZERO
    if _rank_psd(full) == _rank_psd(sigma.s11):
        return ExtremalCase.T_ONE
    return ExtremalCase.INTERIOR
