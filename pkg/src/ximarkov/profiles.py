"""Range profiles: the maps t -> F(F^{-1}(t)) and t -> F^-(F^{-1}(t)) on (0, 1).

For a distribution function F with quantile function F^{-1}(t) = inf{x : F(x) >= t}
and left-continuous version F^-, the pair of compositions carries exactly the
information in the closure of Ran(F).  Each atom of F with mass on the
probability interval (lo, hi] contributes a "jump interval": for t in (lo, hi]
the upper composition equals hi and the lower one equals lo.  Outside all jump
intervals both compositions equal t.

A profile is therefore stored as a finite, disjoint, sorted list of jump
intervals; an empty list is the profile of any continuous F ("identity").
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameterError

_EPS = 1e-12


@dataclass(frozen=True)
class RangeProfile:
    """Jump intervals (lo, hi] of t -> F∘F^{-1}, as an (J, 2) float array."""

    jumps: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))

    def __post_init__(self):
        jumps = np.asarray(self.jumps, dtype=float).reshape(-1, 2)
        if jumps.size:
            if np.any(jumps < -_EPS) or np.any(jumps > 1 + _EPS):
                raise InvalidParameterError("jump intervals must lie inside [0, 1]")
            jumps = np.clip(jumps, 0.0, 1.0)
            jumps = jumps[np.argsort(jumps[:, 0])]
            if np.any(jumps[:, 1] - jumps[:, 0] <= _EPS):
                raise InvalidParameterError("jump intervals must have positive length")
            if np.any(jumps[1:, 0] < jumps[:-1, 1] - _EPS):
                raise InvalidParameterError("jump intervals must be disjoint")
        object.__setattr__(self, "jumps", jumps)

    # ------------------------------------------------------------------ #
    # constructors
    # ------------------------------------------------------------------ #

    @classmethod
    def identity(cls) -> "RangeProfile":
        """Profile of any continuous distribution function."""
        return cls(np.empty((0, 2)))

    @classmethod
    def from_masses(cls, masses) -> "RangeProfile":
        """Profile of a purely discrete distribution with the given atom masses."""
        masses = np.asarray(masses, dtype=float)
        if masses.ndim != 1 or masses.size == 0:
            raise InvalidParameterError("need a nonempty 1-d array of masses")
        if np.any(masses <= 0):
            raise InvalidParameterError("atom masses must be positive")
        if abs(masses.sum() - 1.0) > 1e-9:
            raise InvalidParameterError("atom masses must sum to 1")
        hi = np.cumsum(masses)
        hi[-1] = 1.0
        lo = np.concatenate(([0.0], hi[:-1]))
        return cls(np.column_stack([lo, hi]))

    @classmethod
    def dirac(cls) -> "RangeProfile":
        """Profile of a one-point distribution."""
        return cls.from_masses([1.0])

    # ------------------------------------------------------------------ #
    # evaluation
    # ------------------------------------------------------------------ #

    @property
    def is_identity(self) -> bool:
        return self.jumps.shape[0] == 0

    @property
    def is_degenerate(self) -> bool:
        """True when a single atom carries all mass (F^-∘F^{-1} == 0 a.e.)."""
        return self.jumps.shape[0] == 1 and self.jumps[0, 0] <= _EPS and self.jumps[0, 1] >= 1 - _EPS

    def _jump_index(self, t: np.ndarray) -> np.ndarray:
        """Index of the jump interval containing each t (half-open (lo, hi]), else -1."""
        if self.is_identity:
            return np.full(np.shape(t), -1)
        lo, hi = self.jumps[:, 0], self.jumps[:, 1]
        idx = np.searchsorted(lo, t, side="right") - 1
        idx = np.clip(idx, 0, len(lo) - 1)
        inside = (t > lo[idx]) & (t <= hi[idx])
        return np.where(inside, idx, -1)

    def upper(self, t) -> np.ndarray:
        """F∘F^{-1}(t): equals hi on a jump interval, t elsewhere."""
        t = np.asarray(t, dtype=float)
        idx = self._jump_index(t)
        out = t.copy()
        hit = idx >= 0
        if np.any(hit):
            out[hit] = self.jumps[idx[hit], 1]
        return out

    def lower(self, t) -> np.ndarray:
        """F^-∘F^{-1}(t): equals lo on a jump interval, t elsewhere."""
        t = np.asarray(t, dtype=float)
        idx = self._jump_index(t)
        out = t.copy()
        hit = idx >= 0
        if np.any(hit):
            out[hit] = self.jumps[idx[hit], 0]
        return out

    def continuity_segments(self) -> np.ndarray:
        """Complement of the jump intervals in [0, 1], as an (S, 2) array."""
        if self.is_identity:
            return np.array([[0.0, 1.0]])
        pts = [0.0]
        for lo, hi in self.jumps:
            pts.extend([lo, hi])
        pts.append(1.0)
        segs = []
        for a, b in zip(pts[::2], pts[1::2]):
            if b - a > _EPS:
                segs.append([a, b])
        return np.asarray(segs).reshape(-1, 2)


def l1_range_deviation(p: RangeProfile, q: RangeProfile) -> float:
    """Exact L1 distance of the upper compositions: ∫ |F∘F^{-1} - G∘G^{-1}| dt.

    Both maps are piecewise linear with slope 0 or 1, so the integral is a
    finite sum of exact segment integrals (split at the sign change of the
    difference when one occurs inside a segment).
    """
    cuts = np.unique(np.concatenate([[0.0, 1.0], p.jumps.ravel(), q.jumps.ravel()]))
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        if b - a <= _EPS:
            continue
        mid = 0.5 * (a + b)
        # difference is linear on (a, b): d(t) = c0 + c1 * t
        fa = float(p.upper(np.array([a + _EPS]))[0] - q.upper(np.array([a + _EPS]))[0])
        fb = float(p.upper(np.array([mid]))[0] - q.upper(np.array([mid]))[0])
        c1 = (fb - fa) / (mid - a - _EPS)
        c0 = fa - c1 * (a + _EPS)
        da, db = c0 + c1 * a, c0 + c1 * b
        if da * db >= 0:
            total += 0.5 * abs(da + db) * (b - a)
        else:
            root = -c0 / c1
            total += 0.5 * abs(da) * (root - a) + 0.5 * abs(db) * (b - root)
    return total
