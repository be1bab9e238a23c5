"""Samplers and conditional laws for elliptical and l1-norm symmetric families.

Elliptical vectors are generated through the stochastic representation

    (X, Y) = mu + R * (U @ A),      A'A = Sigma,  k = rank(Sigma),

with U uniform on the unit sphere of R^k and R >= 0 the radial part
(chi_k for the normal family, sqrt(k F_{k,nu}) for Student-t).  Conditioning
on X = x leaves an elliptical law whose radial CDF is a ratio of weighted
integrals of the joint radial distribution; the integrable endpoint
singularity is removed by the substitution z^2 = s^2 - q(x), giving

    F_{R_q}(r) = ∫_0^r h / ∫_0^inf h,   h(z) = (z^2 + q)^(-p/2) f_R(sqrt(z^2 + q)).

l1-norm symmetric vectors are R * S_d with S_d uniform on the unit simplex
(normalized i.i.d. unit exponentials); their dependence structure is
Archimedean with generator given by a Williamson-type integral of the radial
CDF.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, stats

from .errors import (EmptyConditioningError, InvalidParameterError,
                     InvalidRadialError)
from .measures import SigmaPartition
from .quadrature import panel_rule, uniform_edges

_EIG_CUTOFF = 1e-10


# ---------------------------------------------------------------------- #
# radial parts
# ---------------------------------------------------------------------- #

class NormalRadial:
    """Radial part of the k-dimensional standard normal: R^2 ~ chi-squared(k)."""

    support = (0.0, math.inf)
    is_normal = True

    def sample(self, rng: np.random.Generator, n: int, k: int) -> np.ndarray:
        return np.sqrt(rng.chisquare(k, size=n))

    def cdf(self, r, k: int):
        r = np.asarray(r, dtype=float)
        return stats.chi2.cdf(r * r, df=k)

    def pdf(self, r, k: int):
        return stats.chi.pdf(np.asarray(r, dtype=float), df=k)

    def __repr__(self):
        return "NormalRadial()"


class StudentTRadial:
    """Radial part of the k-dimensional Student-t with nu > 0: R^2 / k ~ F(k, nu)."""

    support = (0.0, math.inf)
    is_normal = False

    def __init__(self, nu: float):
        nu = float(nu)
        if not nu > 0:
            raise InvalidParameterError(f"degrees of freedom must be > 0, got {nu}")
        self.nu = nu

    def sample(self, rng: np.random.Generator, n: int, k: int) -> np.ndarray:
        num = rng.chisquare(k, size=n)
        den = rng.chisquare(self.nu, size=n)
        return np.sqrt(num * self.nu / den)

    def cdf(self, r, k: int):
        r = np.asarray(r, dtype=float)
        return stats.f.cdf(r * r / k, dfn=k, dfd=self.nu)

    def pdf(self, r, k: int):
        r = np.asarray(r, dtype=float)
        return stats.f.pdf(r * r / k, dfn=k, dfd=self.nu) * 2.0 * r / k

    def __repr__(self):
        return f"StudentTRadial(nu={self.nu})"


class CustomRadial:
    """User-supplied radial: a CDF with F(0) = 0, a sampler, optionally a density.

    The callables take the radius only; the ambient rank k passed by the
    framework is ignored.  A density is required for conditional laws.
    """

    is_normal = False

    def __init__(self, cdf: Callable, sampler: Callable, pdf: Callable | None = None,
                 support: tuple[float, float] = (0.0, math.inf)):
        if float(np.asarray(cdf(0.0))) > 1e-9:
            raise InvalidParameterError("radial CDF must satisfy F(0) = 0")
        self._cdf = cdf
        self._sampler = sampler
        self._pdf = pdf
        self.support = (float(support[0]), float(support[1]))

    def sample(self, rng: np.random.Generator, n: int, k: int) -> np.ndarray:
        return np.asarray(self._sampler(rng, n), dtype=float)

    def cdf(self, r, k: int):
        return np.asarray(self._cdf(np.asarray(r, dtype=float)), dtype=float)

    def pdf(self, r, k: int):
        if self._pdf is None:
            raise InvalidParameterError("this custom radial has no density; conditional laws need one")
        return np.asarray(self._pdf(np.asarray(r, dtype=float)), dtype=float)

    def __repr__(self):
        return "CustomRadial()"


# ---------------------------------------------------------------------- #
# model specifications
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class EllipticalSpec:
    """Location, partitioned scale and radial kind of an elliptical vector."""

    mu: np.ndarray
    sigma: SigmaPartition
    radial: object

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=float).ravel()
        dim = self.sigma.p + self.sigma.q
        if mu.size != dim:
            raise InvalidParameterError(f"location must have length {dim}, got {mu.size}")
        object.__setattr__(self, "mu", mu)

    @property
    def dim(self) -> int:
        return self.mu.size


@dataclass(frozen=True)
class L1Spec:
    """Dimension and radial law of an l1-norm symmetric vector R * S_d."""

    d: int
    radial_cdf: Callable
    radial_sampler: Callable

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise InvalidParameterError("dimension must be an integer >= 2")
        object.__setattr__(self, "d", int(self.d))
        if float(np.asarray(self.radial_cdf(0.0))) > 1e-9:
            raise InvalidParameterError("radial CDF must satisfy F(0) = 0")


@dataclass(frozen=True)
class ConditionalLaw:
    """Conditional law of the response of an elliptical vector given X = x.

    The response satisfies Y | X = x  =  mu_x + R_q * sqrt(sigma_star) * U
    with U uniform on {-1, +1} and R_q distributed according to
    ``radial_cdf``; ``q_x`` is the quadratic form (x - mu_1)' Sigma11^{-1}
    (x - mu_1).
    """

    mu_x: float
    sigma_star: float
    q_x: float
    radial_cdf: Callable

    @property
    def scale(self) -> float:
        return math.sqrt(max(self.sigma_star, 0.0))

    def response_cdf(self, y) -> np.ndarray:
        """CDF of Y | X = x implied by the symmetric radial representation."""
        y = np.atleast_1d(np.asarray(y, dtype=float))
        z = (y - self.mu_x) / self.scale
        out = np.empty(z.shape)
        pos = z >= 0
        out[pos] = 0.5 + 0.5 * np.asarray(self.radial_cdf(z[pos]))
        out[~pos] = 0.5 - 0.5 * np.asarray(self.radial_cdf(-z[~pos]))
        return out


# ---------------------------------------------------------------------- #
# sampling
# ---------------------------------------------------------------------- #

def _full_rank_factor(sigma: np.ndarray):
    """A with A'A = Sigma, A of shape (k, dim), via symmetric eigendecomposition."""
    lam, vec = np.linalg.eigh(sigma)
    top = max(lam.max(), 0.0)
    if lam.min() < -_EIG_CUTOFF * max(1.0, top):
        raise InvalidParameterError("scale matrix is not positive semi-definite")
    keep = lam > _EIG_CUTOFF * top
    k = int(keep.sum())
    if k == 0:
        raise InvalidParameterError("scale matrix has rank zero")
    A = np.sqrt(lam[keep])[:, None] * vec[:, keep].T
    return A, k


def sample_elliptical(spec: EllipticalSpec, n: int, seed) -> np.ndarray:
    """n i.i.d. draws of mu + R * (U @ A); deterministic given the seed."""
    if n < 1:
        raise InvalidParameterError("sample count must be >= 1")
    A, k = _full_rank_factor(spec.sigma.full())
    rng = np.random.default_rng(seed)
    r = spec.radial.sample(rng, n, k)
    z = rng.standard_normal((n, k))
    u = z / np.linalg.norm(z, axis=1, keepdims=True)
    return spec.mu + (r[:, None] * u) @ A


def conditional_elliptical(spec: EllipticalSpec, x) -> ConditionalLaw:
    """Conditional law of the single response given the predictor value x.

    The radial CDF of the conditional is computed by adaptive quadrature of
    the substituted ratio formula; the Gaussian and Student-t families possess
    closed-form conditionals that this reproduces (used as test oracles).
    """
    if spec.sigma.q != 1:
        raise InvalidParameterError("conditional law requires a single response (q = 1)")
    p = spec.sigma.p
    x = np.asarray(x, dtype=float).ravel()
    if x.size != p:
        raise InvalidParameterError(f"conditioning vector must have length {p}")
    s11 = spec.sigma.s11
    lam = np.linalg.eigvalsh(s11)
    if lam.min() <= _EIG_CUTOFF * max(lam.max(), 1.0):
        raise InvalidParameterError("predictor block must be positive definite")
    k = p + 1
    centered = x - spec.mu[:p]
    w = np.linalg.solve(s11, centered)
    mu_x = float(spec.mu[p] + spec.sigma.s12[:, 0] @ w)
    sigma_star = float(spec.sigma.s22[0, 0] - spec.sigma.s12[:, 0] @
                       np.linalg.solve(s11, spec.sigma.s12[:, 0]))
    q_x = float(centered @ w)

    hi = spec.radial.support[1]
    if math.isfinite(hi) and q_x >= hi * hi:
        raise EmptyConditioningError(
            f"q(x) = {q_x:.6g} exceeds the squared radial support bound {hi*hi:.6g}")
    z_max = math.sqrt(hi * hi - q_x) if math.isfinite(hi) else math.inf

    def integrand(z):
        s = math.sqrt(z * z + q_x)
        return (z * z + q_x) ** (-p / 2.0) * float(spec.radial.pdf(s, k))

    denominator, _ = integrate.quad(integrand, 0.0, z_max, limit=200)
    if denominator <= 0.0 or not math.isfinite(denominator):
        raise EmptyConditioningError("conditioning point carries no radial mass")

    def radial_cdf(r):
        r = np.atleast_1d(np.asarray(r, dtype=float))
        out = np.zeros(r.shape)
        order = np.argsort(r)
        last = 0.0
        acc = 0.0
        for idx in order:
            ri = min(max(float(r[idx]), 0.0), z_max)
            if ri > last:
                piece, _ = integrate.quad(integrand, last, ri, limit=200)
                acc += piece
                last = ri
            out[idx] = acc
        return np.clip(out / denominator, 0.0, 1.0)

    return ConditionalLaw(mu_x=mu_x, sigma_star=sigma_star, q_x=q_x, radial_cdf=radial_cdf)


def sample_l1(spec: L1Spec, n: int, seed) -> np.ndarray:
    """n draws of R * S_d with S_d uniform on the unit simplex."""
    if n < 1:
        raise InvalidParameterError("sample count must be >= 1")
    rng = np.random.default_rng(seed)
    r = np.asarray(spec.radial_sampler(rng, n), dtype=float)
    if r.shape != (n,):
        raise InvalidRadialError(f"radial sampler must return shape ({n},), got {r.shape}")
    if np.any(r < 0):
        raise InvalidRadialError("radial sampler returned negative values")
    e = rng.exponential(size=(n, spec.d))
    s = e / e.sum(axis=1, keepdims=True)
    return r[:, None] * s


# ---------------------------------------------------------------------- #
# Archimedean generator and the additive error model
# ---------------------------------------------------------------------- #

def williamson_generator(radial_cdf: Callable, d: int, x_grid, *,
                         panels: int = 64, order: int = 8) -> np.ndarray:
    """Archimedean generator of the d-dimensional l1-norm symmetric law.

        phi(x) = ∫_(x, inf) (1 - x/t)^(d-1) dF_R(t)

    evaluated, after integration by parts and the substitution w = 1 - x/t, as

        phi(x) = ∫_0^1 (d-1) w^(d-2) (1 - F_R(x / (1 - w))) dw,

    a bounded smooth integrand on (0, 1).  phi(0) = 1 exactly; phi is convex
    and nonincreasing.
    """
    if int(d) != d or d < 2:
        raise InvalidParameterError("dimension must be an integer >= 2")
    d = int(d)
    if float(np.asarray(radial_cdf(0.0))) > 1e-9:
        raise InvalidParameterError("radial CDF must satisfy F(0) = 0")
    x = np.atleast_1d(np.asarray(x_grid, dtype=float))
    if np.any(x < 0):
        raise InvalidParameterError("generator arguments must be nonnegative")
    w, wt = panel_rule(uniform_edges(panels), order)
    t = x[None, :] / (1.0 - w[:, None])
    survival = 1.0 - np.asarray(radial_cdf(t), dtype=float)
    kernel = (d - 1) * w ** (d - 2)
    return (wt * kernel) @ survival


def additive_error_spec(sigma: float) -> EllipticalSpec:
    """Bivariate normal spec of (X, Y) with Y = X + sigma * eps, standardized.

    X and eps are independent standard normals; after scaling Y to unit
    variance the pair is bivariate normal with correlation 1 / sqrt(1 + sigma^2).
    """
    if not sigma >= 0:
        raise InvalidParameterError(f"noise scale must be >= 0, got {sigma}")
    rho = 1.0 / math.sqrt(1.0 + sigma * sigma)
    part = SigmaPartition(np.array([[1.0]]), np.array([[rho]]), np.array([[1.0]]))
    return EllipticalSpec(mu=np.zeros(2), sigma=part, radial=NormalRadial())


def erlang_radial(d: int):
    """(CDF, sampler) of the Erlang(d, 1) radius; pairs with the unit simplex to
    give i.i.d. unit-exponential components."""
    if int(d) != d or d < 1:
        raise InvalidParameterError("Erlang shape must be a positive integer")
    d = int(d)
    dist = stats.gamma(a=d, scale=1.0)
    return dist.cdf, (lambda rng, n: rng.gamma(shape=d, scale=1.0, size=n))
