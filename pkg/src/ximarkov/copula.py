"""Bivariate copulas, their partial-derivative sections, and Markov products.

The Markov product of a bivariate copula D is

    D*D(u, v) = ∫_0^1 ∂₁D(t, u) ∂₁D(t, v) dt,

the copula of (Y, Y') where Y' is a conditionally independent copy of Y given
X when the conditioning distribution is continuous.  With atoms in the
conditioning distribution the partial derivative is replaced on each atom by
the chord slope of the section, which yields the generalized product.

Sections t -> ∂₁C(t, u) exist for almost every t and are nondecreasing in u
(they are conditional distribution functions).  Every family below exposes its
almost-everywhere-exact section together with the section's breakpoints in t;
quadrature panels are aligned with those breakpoints, which makes the product
of piecewise-constant sections (comonotone, countermonotone, shuffles, grids)
exact rather than merely approximate.  The pointwise ``partial1`` operation
additionally offers the finite-difference evaluation used for grid copulas and
shuffles when a caller asks for a derivative at a single point.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InvalidParameterError
from .normal import bvn_cdf, std_normal_cdf, std_normal_quantile
from .profiles import RangeProfile
from .quadrature import (DEFAULT_ORDER, DEFAULT_PANELS,
                         graded_boundary_edges, merge_edges, panel_rule,
                         uniform_edges)

_BOUNDARY_TOL = 1e-9
_MASS_TOL = 1e-12
# cap on entries of the (t-nodes x lattice) section matrix per chunk
_CHUNK_ENTRIES = 4_000_000


# ---------------------------------------------------------------------- #
# grid representation
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class CopulaGrid:
    """CDF values of a copula on the lattice {0, 1/m, ..., 1}^2.

    Read as a copula, the grid is the checkerboard extension: the mass of
    each cell spread uniformly, i.e. bilinear interpolation of the CDF.
    """

    m: int
    values: np.ndarray

    def __post_init__(self):
        m = self.m
        if m < 1:
            raise InvalidParameterError("grid resolution must be >= 1")
        values = np.asarray(self.values, dtype=float)
        if values.shape != (m + 1, m + 1):
            raise InvalidParameterError(
                f"grid values must have shape {(m + 1, m + 1)}, got {values.shape}")
        axis = np.linspace(0.0, 1.0, m + 1)
        if (np.abs(values[0, :]).max() > _BOUNDARY_TOL
                or np.abs(values[:, 0]).max() > _BOUNDARY_TOL
                or np.abs(values[m, :] - axis).max() > _BOUNDARY_TOL
                or np.abs(values[:, m] - axis).max() > _BOUNDARY_TOL):
            raise InvalidParameterError("grid boundary violates copula margins")
        mass = np.diff(np.diff(values, axis=0), axis=1)
        if mass.min() < -_MASS_TOL:
            raise InvalidParameterError(
                f"grid has a cell of mass {mass.min():.3e} < -{_MASS_TOL}")
        object.__setattr__(self, "values", values)

    @property
    def lattice(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.m + 1)

    def cell_masses(self) -> np.ndarray:
        return np.diff(np.diff(self.values, axis=0), axis=1)


def _snap_grid(m: int, values: np.ndarray) -> CopulaGrid:
    """Pin boundaries to the exact margins and symmetrize before validating."""
    axis = np.linspace(0.0, 1.0, m + 1)
    if (np.abs(values[0, :]).max() > _BOUNDARY_TOL
            or np.abs(values[:, 0]).max() > _BOUNDARY_TOL
            or np.abs(values[m, :] - axis).max() > _BOUNDARY_TOL
            or np.abs(values[:, m] - axis).max() > _BOUNDARY_TOL):
        raise InvalidParameterError("quadrature failed to reproduce copula margins")
    values = 0.5 * (values + values.T)
    values[0, :] = 0.0
    values[:, 0] = 0.0
    values[m, :] = axis
    values[:, m] = axis
    np.clip(values, 0.0, 1.0, out=values)
    return CopulaGrid(m, values)


# ---------------------------------------------------------------------- #
# copula families
# ---------------------------------------------------------------------- #

class Copula:
    """Base class: exact CDF plus almost-everywhere-exact sections."""

    def cdf(self, u, v) -> np.ndarray:
        raise NotImplementedError

    def section(self, t, u) -> np.ndarray:
        """∂₁C(t, u) for almost every t; right-continuous at breakpoints."""
        raise NotImplementedError

    def section_breaks(self, u_grid) -> np.ndarray:
        """Interior t-breakpoints of the sections for all u in ``u_grid``."""
        return np.empty(0)

    def __repr__(self):
        return type(self).__name__ + "()"


class Independence(Copula):
    """C(u, v) = u v."""

    def cdf(self, u, v):
        u, v = _as_unit(u), _as_unit(v)
        return u * v

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        return u.copy()


class Comonotone(Copula):
    """C(u, v) = min(u, v); the copula of perfect positive dependence."""

    def cdf(self, u, v):
        return np.minimum(_as_unit(u), _as_unit(v))

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        return (t <= u).astype(float)

    def section_breaks(self, u_grid):
        return np.asarray(u_grid, dtype=float).ravel()


class Countermonotone(Copula):
    """C(u, v) = max(u + v - 1, 0); perfect negative dependence."""

    def cdf(self, u, v):
        return np.maximum(_as_unit(u) + _as_unit(v) - 1.0, 0.0)

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        return (t + u >= 1.0).astype(float)

    def section_breaks(self, u_grid):
        return 1.0 - np.asarray(u_grid, dtype=float).ravel()


class Gaussian(Copula):
    """Gaussian copula with correlation rho in [-1, 1].

    rho = 1 and rho = -1 coincide with the comonotone and countermonotone
    copulas and are delegated to them.
    """

    def __init__(self, rho: float):
        rho = float(rho)
        if not -1.0 <= rho <= 1.0 or not math.isfinite(rho):
            raise InvalidParameterError(f"Gaussian correlation must be in [-1, 1], got {rho}")
        self.rho = rho
        self._extreme = Comonotone() if rho == 1.0 else (Countermonotone() if rho == -1.0 else None)

    def cdf(self, u, v):
        if self._extreme is not None:
            return self._extreme.cdf(u, v)
        u, v = np.broadcast_arrays(_as_unit(u), _as_unit(v))
        out = np.empty(u.shape, dtype=float)
        zero = (u == 0.0) | (v == 0.0)
        u_one = (u == 1.0) & ~zero
        v_one = (v == 1.0) & ~zero & ~u_one
        interior = ~(zero | u_one | v_one)
        out[zero] = 0.0
        out[u_one] = v[u_one]
        out[v_one] = u[v_one]
        if np.any(interior):
            h = std_normal_quantile(u[interior])
            k = std_normal_quantile(v[interior])
            out[interior] = bvn_cdf(h, k, self.rho)
        return out

    def section(self, t, u):
        if self._extreme is not None:
            return self._extreme.section(t, u)
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        rho = self.rho
        z = (std_normal_quantile(u) - rho * std_normal_quantile(t)) / math.sqrt(1.0 - rho * rho)
        return std_normal_cdf(z)

    def __repr__(self):
        return f"Gaussian(rho={self.rho})"


class Frank(Copula):
    """Frank copula with parameter theta != 0.

    Evaluated through expm1/exp combinations of uniformly bounded positive
    terms, so arbitrarily large |theta| is safe.  Negative theta is reduced to
    positive theta by the family's reflection identity
    C_{-theta}(u, v) = u - C_{theta}(u, 1 - v).
    """

    def __init__(self, theta: float):
        theta = float(theta)
        if theta == 0.0 or not math.isfinite(theta):
            raise InvalidParameterError(f"Frank parameter must be a finite nonzero real, got {theta}")
        self.theta = theta

    @staticmethod
    def _cdf_pos(theta, u, v):
        lo = np.minimum(u, v)
        hi = np.maximum(u, v)
        # A in (0, 1]: no cancellation for any theta > 0
        a = -np.expm1(-theta * (1.0 - lo)) + np.exp(-theta * (hi - lo)) * (-np.expm1(-theta * lo))
        denom = -math.expm1(-theta)
        out = lo - np.log(a / denom) / theta
        return np.clip(out, 0.0, None)

    def cdf(self, u, v):
        u, v = np.broadcast_arrays(_as_unit(u), _as_unit(v))
        if self.theta > 0:
            return self._cdf_pos(self.theta, u, v)
        return np.clip(u - self._cdf_pos(-self.theta, u, 1.0 - v), 0.0, None)

    @staticmethod
    def _section_pos(theta, t, v):
        lo = np.minimum(t, v)
        hi = np.maximum(t, v)
        a = -np.expm1(-theta * (1.0 - lo)) + np.exp(-theta * (hi - lo)) * (-np.expm1(-theta * lo))
        num = np.exp(-theta * np.maximum(t - v, 0.0)) * (-np.expm1(-theta * v))
        return num / a

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        if self.theta > 0:
            return self._section_pos(self.theta, t, u)
        return 1.0 - self._section_pos(-self.theta, t, 1.0 - u)

    def __repr__(self):
        return f"Frank(theta={self.theta})"


class Clayton(Copula):
    """Clayton copula with parameter theta > 0."""

    def __init__(self, theta: float):
        theta = float(theta)
        if not theta > 0.0 or not math.isfinite(theta):
            raise InvalidParameterError(f"Clayton parameter must be > 0, got {theta}")
        self.theta = theta

    def cdf(self, u, v):
        u, v = np.broadcast_arrays(_as_unit(u), _as_unit(v))
        out = np.zeros(u.shape, dtype=float)
        pos = (u > 0.0) & (v > 0.0)
        if np.any(pos):
            th = self.theta
            s = u[pos] ** (-th) + v[pos] ** (-th) - 1.0
            out[pos] = s ** (-1.0 / th)
        return out

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        th = self.theta
        out = np.zeros(t.shape, dtype=float)
        pos = u > 0.0
        if np.any(pos):
            tt, uu = t[pos], u[pos]
            s = tt ** (-th) + uu ** (-th) - 1.0
            out[pos] = tt ** (-th - 1.0) * s ** (-(1.0 + th) / th)
        return out

    def __repr__(self):
        return f"Clayton(theta={self.theta})"


class ShuffleMod(Copula):
    """Copula of (X, n X mod 1) for X uniform on (0, 1): a shuffle of min.

    Its support consists of n parallel slope-one segments; the variable pair
    is perfectly functionally dependent for every n, yet the CDF converges to
    the independence copula as n grows.
    """

    def __init__(self, n: int):
        if int(n) != n or n < 1:
            raise InvalidParameterError(f"stripe count must be a positive integer, got {n}")
        self.n = int(n)

    def cdf(self, u, v):
        u, v = np.broadcast_arrays(_as_unit(u), _as_unit(v))
        n = self.n
        k = np.arange(n, dtype=float) / n
        terms = np.clip(u[..., None] - k, 0.0, None)
        np.minimum(terms, v[..., None] / n, out=terms)
        return terms.sum(axis=-1)

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        frac = self.n * t - np.floor(self.n * t)
        return (frac < u).astype(float)

    def section_breaks(self, u_grid):
        u = np.unique(np.concatenate([np.asarray(u_grid, float).ravel(), [0.0, 1.0]]))
        k = np.arange(self.n, dtype=float)
        return ((k[:, None] + u[None, :]) / self.n).ravel()

    def __repr__(self):
        return f"ShuffleMod(n={self.n})"


class GridCopula(Copula):
    """Checkerboard copula defined by a CDF lattice (bilinear interpolation)."""

    def __init__(self, grid: CopulaGrid):
        if not isinstance(grid, CopulaGrid):
            raise InvalidParameterError("GridCopula expects a CopulaGrid")
        self.grid = grid

    def _locate(self, x):
        m = self.grid.m
        i = np.clip(np.floor(x * m).astype(int), 0, m - 1)
        return i, x * m - i

    def cdf(self, u, v):
        u, v = np.broadcast_arrays(_as_unit(u), _as_unit(v))
        V = self.grid.values
        iu, su = self._locate(u)
        iv, sv = self._locate(v)
        return (V[iu, iv] * (1 - su) * (1 - sv)
                + V[iu + 1, iv] * su * (1 - sv)
                + V[iu, iv + 1] * (1 - su) * sv
                + V[iu + 1, iv + 1] * su * sv)

    def section(self, t, u):
        t, u = np.broadcast_arrays(np.asarray(t, float), np.asarray(u, float))
        V = self.grid.values
        m = self.grid.m
        it, _ = self._locate(t)
        iu, su = self._locate(u)
        col_lo = V[it, iu] * (1 - su) + V[it, iu + 1] * su
        col_hi = V[it + 1, iu] * (1 - su) + V[it + 1, iu + 1] * su
        return (col_hi - col_lo) * m

    def section_breaks(self, u_grid):
        m = self.grid.m
        return np.arange(1, m, dtype=float) / m

    def __repr__(self):
        return f"GridCopula(m={self.grid.m})"


def _as_unit(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any((x < -1e-12) | (x > 1 + 1e-12)):
        raise InvalidParameterError("copula arguments must lie in [0, 1]")
    return np.clip(x, 0.0, 1.0)


def as_copula(c) -> Copula:
    """Accept a Copula or a CopulaGrid wherever a copula is expected."""
    if isinstance(c, Copula):
        return c
    if isinstance(c, CopulaGrid):
        return GridCopula(c)
    raise InvalidParameterError(f"expected a copula or a copula grid, got {type(c).__name__}")


# ---------------------------------------------------------------------- #
# pointwise operations
# ---------------------------------------------------------------------- #

def cdf(c, u, v):
    """C(u, v); scalar in, scalar out."""
    out = as_copula(c).cdf(u, v)
    return float(out) if np.ndim(out) == 0 else out


class PartialDerivative(NamedTuple):
    value: float
    one_sided: bool


def partial1(c, t, u) -> float:
    """∂₁C(t, u) for t in (0, 1).

    Analytic formulas are used for the independence, comonotone,
    countermonotone, Gaussian, Frank and Clayton families; grid copulas and
    shuffles are differenced centrally with a step clamped to [0, 1].
    """
    return partial1_flagged(c, t, u).value


def partial1_flagged(c, t, u) -> PartialDerivative:
    """Like :func:`partial1` but reports when a one-sided difference was used.

    On a lattice line of a grid copula the two-sided derivative does not
    exist; the difference is then taken from the right and flagged.
    """
    c = as_copula(c)
    t = float(t)
    u = float(u)
    if not 0.0 < t < 1.0:
        raise InvalidParameterError("partial1 requires t in (0, 1)")
    if not 0.0 <= u <= 1.0:
        raise InvalidParameterError("partial1 requires u in [0, 1]")
    if isinstance(c, GridCopula):
        scale = c.grid.m
    elif isinstance(c, ShuffleMod):
        scale = c.n
    else:
        return PartialDerivative(float(c.section(t, u)), False)
    h = max(1e-5, 1.0 / (4.0 * scale))
    if isinstance(c, GridCopula) and abs(t * scale - round(t * scale)) < 1e-12:
        b = min(t + h, 1.0)
        value = (float(c.cdf(b, u)) - float(c.cdf(t, u))) / (b - t)
        return PartialDerivative(value, True)
    a, b = max(t - h, 0.0), min(t + h, 1.0)
    value = (float(c.cdf(b, u)) - float(c.cdf(a, u))) / (b - a)
    return PartialDerivative(value, False)


# ---------------------------------------------------------------------- #
# products
# ---------------------------------------------------------------------- #

def _mass_accumulate(c: Copula, t: np.ndarray, w: np.ndarray,
                     u: np.ndarray, out: np.ndarray):
    """out += sum_j w_j * outer(dsec(t_j), dsec(t_j)) over lattice cell increments.

    Sections are nondecreasing in u, so every increment is >= 0 and the
    accumulated cell masses are exactly nonnegative in floating point.
    """
    step = max(1, _CHUNK_ENTRIES // max(1, u.size))
    for start in range(0, t.size, step):
        tt = t[start:start + step]
        ww = w[start:start + step]
        D = np.diff(c.section(tt[:, None], u[None, :]), axis=1)
        out += D.T @ (ww[:, None] * D)


def _grid_from_masses(m: int, mass: np.ndarray) -> CopulaGrid:
    """Assemble a valid grid from nonnegative cell masses.

    Quadrature reproduces the uniform margins only up to its own error; a few
    symmetric Sinkhorn sweeps push both margins onto 1/m exactly (the masses
    stay nonnegative), after which the cumulative sums form a doubly
    stochastic lattice by construction.
    """
    target = 1.0 / m
    mass = 0.5 * (mass + mass.T)
    for _ in range(3):
        rows = mass.sum(axis=1)
        if np.abs(rows - target).max() > 1e-4:
            raise InvalidParameterError("quadrature failed to reproduce copula margins")
        scale = np.sqrt(target / np.maximum(rows, 1e-300))
        mass *= scale[:, None] * scale[None, :]
    rows = mass.sum(axis=1)
    mass *= (target / np.maximum(rows, 1e-300))[:, None]
    mass = 0.5 * (mass + mass.T)
    values = np.zeros((m + 1, m + 1))
    np.cumsum(np.cumsum(mass, axis=0), axis=1, out=values[1:, 1:])
    axis = np.linspace(0.0, 1.0, m + 1)
    values[m, :] = axis
    values[:, m] = axis
    np.clip(values, 0.0, 1.0, out=values)
    values = 0.5 * (values + values.T)
    return CopulaGrid(m, values)


def generalized_markov_product(c, fx: RangeProfile, m: int,
                               panels: int = DEFAULT_PANELS,
                               order: int = DEFAULT_ORDER) -> CopulaGrid:
    """C *_F C on the (m+1)^2 lattice, for conditioning range profile ``fx``.

    On each atom of the conditioning distribution the section is replaced by
    the chord slope [C(hi, u) - C(lo, u)] / (hi - lo); on continuity segments
    the ordinary section is integrated with breakpoint-aligned panels.  With
    the identity profile this is exactly the ordinary Markov product; with a
    single atom it returns the independence copula exactly.
    """
    c = as_copula(c)
    if m < 2:
        raise InvalidParameterError("product grid resolution must be >= 2")
    u = np.linspace(0.0, 1.0, m + 1)
    mass = np.zeros((m, m))
    for lo, hi in fx.jumps:
        width = hi - lo
        chord = (c.cdf(np.full(m + 1, hi), u) - c.cdf(np.full(m + 1, lo), u)) / width
        dc = np.diff(chord)
        mass += width * np.outer(dc, dc)
    for a, b in fx.continuity_segments():
        seg_panels = max(1, int(round(panels * (b - a))))
        edges = merge_edges(uniform_edges(seg_panels, a, b), graded_boundary_edges(panels),
                            c.section_breaks(u), lo=a, hi=b)
        t, w = panel_rule(edges, order)
        _mass_accumulate(c, t, w, u, mass)
    return _grid_from_masses(m, mass)


def markov_product(c, m: int, panels: int = DEFAULT_PANELS,
                   order: int = DEFAULT_ORDER) -> CopulaGrid:
    """Ordinary Markov product D*D(u, v) = ∫ ∂₁D(t, u) ∂₁D(t, v) dt on a lattice."""
    return generalized_markov_product(c, RangeProfile.identity(), m, panels, order)


def product_diagonal(c, w, fx: RangeProfile | None = None,
                     panels: int = DEFAULT_PANELS, order: int = DEFAULT_ORDER) -> np.ndarray:
    """(C *_F C)(w, w) evaluated exactly at arbitrary points w in [0, 1].

    This avoids the O(1/m) loss of representing the product on a lattice
    first; sections are integrated with per-point breakpoint alignment.
    """
    c = as_copula(c)
    fx = RangeProfile.identity() if fx is None else fx
    w = np.atleast_1d(np.asarray(w, dtype=float))
    out = np.zeros(w.shape)
    for lo, hi in fx.jumps:
        width = hi - lo
        chord = (c.cdf(np.full(w.shape, hi), w) - c.cdf(np.full(w.shape, lo), w)) / width
        out += width * chord * chord
    segments = fx.continuity_segments()
    block = 128
    for start in range(0, w.size, block):
        ww = w[start:start + block]
        for a, b in segments:
            seg_panels = max(1, int(round(panels * (b - a))))
            edges = merge_edges(uniform_edges(seg_panels, a, b), graded_boundary_edges(panels),
                                c.section_breaks(ww), lo=a, hi=b)
            t, wt = panel_rule(edges, order)
            P = c.section(t[:, None], ww[None, :])
            out[start:start + block] += wt @ (P * P)
    return out


# ---------------------------------------------------------------------- #
# distances and diagnostics
# ---------------------------------------------------------------------- #

def d1_distance(a, b, u_grid=None, panels: int = DEFAULT_PANELS,
                order: int = DEFAULT_ORDER) -> float:
    """max over u of ∫_0^1 |∂₁A(t, u) - ∂₁B(t, u)| dt.

    Vanishing of this distance over a dense grid of u is the L1 convergence
    criterion for sections; it is strictly stronger than pointwise closeness
    of the CDFs.
    """
    a, b = as_copula(a), as_copula(b)
    if u_grid is None:
        u_grid = np.linspace(0.02, 0.98, 49)
    u = np.asarray(u_grid, dtype=float).ravel()
    if u.size == 0:
        raise InvalidParameterError("u_grid must be nonempty")
    edges = merge_edges(uniform_edges(panels), graded_boundary_edges(panels),
                        a.section_breaks(u), b.section_breaks(u))
    t, w = panel_rule(edges, order)
    best = 0.0
    step = max(1, _CHUNK_ENTRIES // max(1, u.size))
    acc = np.zeros(u.shape)
    for start in range(0, t.size, step):
        tt = t[start:start + step]
        ww = w[start:start + step]
        Pa = a.section(tt[:, None], u[None, :])
        Pb = b.section(tt[:, None], u[None, :])
        acc += ww @ np.abs(Pa - Pb)
    best = float(acc.max())
    return best


def sup_distance(a, b, m: int = 256) -> float:
    """max lattice deviation of the two CDFs on {0, 1/m, ..., 1}^2."""
    a, b = as_copula(a), as_copula(b)
    x = np.linspace(0.0, 1.0, m + 1)
    U, V = np.meshgrid(x, x, indexing="ij")
    return float(np.abs(a.cdf(U, V) - b.cdf(U, V)).max())


def checkerboard(c, m: int) -> CopulaGrid:
    """Checkerboard approximation: the copula's CDF restricted to the lattice."""
    c = as_copula(c)
    if m < 1:
        raise InvalidParameterError("checkerboard resolution must be >= 1")
    x = np.linspace(0.0, 1.0, m + 1)
    U, V = np.meshgrid(x, x, indexing="ij")
    return _snap_grid(m, np.asarray(c.cdf(U, V), dtype=float))


class SiReport(NamedTuple):
    """Monotonicity report for the sections t -> ∂₁C(t, u)."""

    monotone: bool
    si: bool                 # nonincreasing sections: stochastically increasing
    sd: bool                 # nondecreasing sections: stochastically decreasing
    worst_violation: float
    worst_u: float
    worst_t: float

    def __bool__(self):
        return self.monotone


def is_si(c, resolution: int = 128, tol: float = 1e-8) -> SiReport:
    """Check monotonicity of t -> ∂₁C(t, u) on a lattice of sections.

    Sections are sampled at cell midpoints so that breakpoint values (where
    the derivative may not exist) are never hit.
    """
    c = as_copula(c)
    if resolution < 2:
        raise InvalidParameterError("resolution must be >= 2")
    t = (np.arange(resolution) + 0.5) / resolution
    u = np.linspace(0.0, 1.0, resolution + 1)
    P = c.section(t[:, None], u[None, :])
    diffs = np.diff(P, axis=0)
    up = diffs.max()      # violation of "nonincreasing"
    down = (-diffs).max()  # violation of "nondecreasing"
    si = up <= tol
    sd = down <= tol
    worst = float(min(up, down))
    if up <= down:
        i, j = np.unravel_index(np.argmax(diffs), diffs.shape)
    else:
        i, j = np.unravel_index(np.argmax(-diffs), diffs.shape)
    return SiReport(monotone=bool(si or sd), si=bool(si), sd=bool(sd),
                    worst_violation=worst, worst_u=float(u[j]), worst_t=float(t[i + 1]))
