"""Experiments reproducing the library's counterexamples, closed forms and figures.

Each runner returns an ``ExperimentResult`` (a small table plus metadata and a
plot description) and asserts its declared controls: exact identities and
non-convergence floors that the construction guarantees.  A failed control
raises ``ControlAssertionError`` (CLI exit code 3); malformed parameters raise
``ConfigError``/``InvalidParameterError`` (exit code 2).

Grid points are independent; per-point sample seeds are derived from the
master seed with ``numpy.random.SeedSequence.spawn``, so reruns with the same
configuration are byte-identical.
"""

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .. import copula as cop
from .. import estimators as est
from .. import measures as mea
from .. import models as mod
from ..errors import ConfigError, ControlAssertionError
from ..profiles import RangeProfile, l1_range_deviation
from .emit import PlotSpec, SeriesSpec

log = logging.getLogger("ximarkov.lab")

_FIG2_RHO_Y = (-0.999, -0.99, -0.9, -0.75, -0.5, 0.0, 0.5, 0.9)


@dataclass(frozen=True)
class ExperimentConfig:
    """Name, parameter grid and reproducibility knobs of one experiment run."""

    experiment: str
    params: dict = field(default_factory=dict)
    seed: int = 0
    out_dir: str = "out"


@dataclass
class ExperimentResult:
    name: str
    columns: list
    rows: list
    metadata: dict
    plot: PlotSpec | None = None

    def column(self, name: str) -> list:
        idx = self.columns.index(name)
        return [row[idx] for row in self.rows]


def _spawn_rngs(seed, count: int):
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def _control(result_controls: list, name: str, ok: bool, detail: str):
    result_controls.append({"name": name, "passed": bool(ok), "detail": detail})
    if not ok:
        raise ControlAssertionError(f"control '{name}' failed: {detail}")


# ---------------------------------------------------------------------- #
# shuffle-of-min counterexample
# ---------------------------------------------------------------------- #

def run_shuffle_counterexample(n_list=(1, 2, 4, 8, 16, 32, 64), n: int = 10_000,
                               m: int = 256, seed: int = 0,
                               panels: int = 1024) -> ExperimentResult:
    """Shuffles of min: CDF-close to independence, yet xi stays at 1.

    Per stripe count: the sup CDF distance to independence (shrinks like 1/n),
    the sectionwise L1 distance (bounded away from 0), the population xi
    (exactly 1: the pair is functionally dependent) and the sample estimate.
    """
    n_list = [int(v) for v in n_list]
    if any(v < 1 for v in n_list):
        raise ConfigError("stripe counts must be >= 1")
    started = time.perf_counter()
    pi = cop.Independence()
    rngs = _spawn_rngs(seed, len(n_list))
    rows = []
    for stripes, rng in zip(n_list, rngs):
        shuffle = cop.ShuffleMod(stripes)
        sup_pi = cop.sup_distance(shuffle, pi, m)
        d1_pi = cop.d1_distance(shuffle, pi, panels=panels)
        xi_pop = mea.xi_population(shuffle, panels=panels).value
        x = rng.random(n)
        y = (stripes * x) % 1.0
        xi_hat = est.xi_n(x, y, seed=rng.integers(2**31))
        rows.append((stripes, sup_pi, d1_pi, xi_pop, xi_hat))
    controls = []
    _control(controls, "d1_floor",
             all(r[2] > 0.2 for r in rows),
             f"min d1 distance {min(r[2] for r in rows):.4f} must exceed 0.2")
    _control(controls, "xi_population_one",
             all(abs(r[3] - 1.0) <= 1e-9 for r in rows),
             "population xi must equal 1 at every stripe count")
    return ExperimentResult(
        name="shuffle",
        columns=["stripes", "sup_vs_independence", "d1_vs_independence",
                 "xi_population", "xi_sample"],
        rows=rows,
        metadata={"n": n, "m": m, "seed": seed, "panels": panels,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="stripes",
                      series=(SeriesSpec(y="sup_vs_independence"),
                              SeriesSpec(y="d1_vs_independence"),
                              SeriesSpec(y="xi_population", dash="6,4"),
                              SeriesSpec(y="xi_sample", dash="2,4")),
                      title="Shuffles of min: CDF convergence without section convergence",
                      x_label="stripe count"),
    )


# ---------------------------------------------------------------------- #
# additive error model
# ---------------------------------------------------------------------- #

def run_additive_error(sigma_grid=tuple(np.round(np.arange(0.0, 3.01, 0.1), 10)),
                       n: int = 10_000, seed: int = 0,
                       perturb_scale: float = 1e-3,
                       shift_tol: float = 0.02) -> ExperimentResult:
    """Y = X + sigma * eps: xi is continuous in sigma and robust to small noise.

    Closed-form xi along the grid, the rank estimator and the explainability
    estimator on simulated data, and the estimator shift after adding an
    independent perturbation of scale ``perturb_scale`` to the response.
    """
    sigma_grid = [float(s) for s in sigma_grid]
    if any(s < 0 for s in sigma_grid):
        raise ConfigError("noise scales must be >= 0")
    if n < 10:
        raise ConfigError("need at least 10 samples")
    started = time.perf_counter()
    rngs = _spawn_rngs(seed, len(sigma_grid))
    rows = []
    for sigma, rng in zip(sigma_grid, rngs):
        spec = mod.additive_error_spec(sigma)
        rho = float(spec.sigma.s12[0, 0])
        xi_closed = mea.xi_gaussian(spec.sigma)
        lambda_closed = rho * rho
        sample_seed = rng.integers(2**31)
        data = mod.sample_elliptical(spec, n, sample_seed)
        x, y = data[:, 0], data[:, 1]
        tie_seed = int(rng.integers(2**31))
        xi_hat = est.xi_n(x, y, seed=tie_seed)
        lambda_hat = est.lambda_n(x, y)
        y_pert = y + perturb_scale * rng.standard_normal(n)
        xi_pert = est.xi_n(x, y_pert, seed=tie_seed)
        rows.append((sigma, rho, xi_closed, xi_hat, lambda_closed, lambda_hat,
                     xi_pert, abs(xi_pert - xi_hat)))
    controls = []
    jumps = [abs(rows[i + 1][2] - rows[i][2]) for i in range(len(rows) - 1)]
    gaps = [abs(rows[i + 1][0] - rows[i][0]) for i in range(len(rows) - 1)]
    modulus = 1.5  # the closed form is Lipschitz in sigma with constant < 3/pi * sqrt(2)
    _control(controls, "closed_form_continuity",
             all(j <= modulus * g + 1e-9 for j, g in zip(jumps, gaps)),
             "successive closed-form jumps must be bounded by the modulus")
    _control(controls, "perturbation_robustness",
             all(r[7] <= shift_tol for r in rows),
             f"max estimator shift {max(r[7] for r in rows):.4f} must be <= {shift_tol}")
    return ExperimentResult(
        name="additive-error",
        columns=["sigma", "rho", "xi_closed", "xi_sample", "lambda_closed",
                 "lambda_sample", "xi_sample_perturbed", "xi_shift"],
        rows=rows,
        metadata={"n": n, "seed": seed, "perturb_scale": perturb_scale,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="sigma",
                      series=(SeriesSpec(y="xi_closed"),
                              SeriesSpec(y="xi_sample", dash="2,4"),
                              SeriesSpec(y="lambda_closed"),
                              SeriesSpec(y="lambda_sample", dash="2,4")),
                      title="Additive error model", x_label="noise scale sigma"),
    )


# ---------------------------------------------------------------------- #
# equicorrelated normal curves
# ---------------------------------------------------------------------- #

def _clustered_grid(lo: float, hi: float, points: int) -> np.ndarray:
    """Grid on [lo, hi] quadratically clustered at both ends.

    xi has a square-root cusp where the canonical correlation reaches 1, so a
    uniform grid of any reasonable size shows O(sqrt(step)) jumps near the
    endpoints; quadratic clustering restores uniformly small increments.
    """
    u = np.linspace(0.0, 1.0, points)
    s = u * u * (3.0 - 2.0 * u)
    return lo + (hi - lo) * s


def run_equicorrelated(p_list=(1, 2, 4, 10, 100), rho_resolution: int = 201) -> ExperimentResult:
    """xi of the equicorrelated normal versus the correlation, per dimension.

    Curves hit 0 exactly at rho = 0 and 1 exactly at both admissibility
    endpoints rho = -1/p and rho = 1.
    """
    p_list = [int(p) for p in p_list]
    if any(p < 1 for p in p_list):
        raise ConfigError("dimensions must be positive integers")
    if rho_resolution < 5:
        raise ConfigError("rho grid needs at least 5 points")
    started = time.perf_counter()
    rows = []
    controls = []
    max_jump = 0.0
    for p in p_list:
        lo = -1.0 / p
        grid = np.unique(np.concatenate([_clustered_grid(lo, 1.0, rho_resolution), [lo, 0.0, 1.0]]))
        xi_prev = None
        for rho in grid:
            try:
                r = mea.equicorrelated_r(p, rho)
            except Exception:
                log.warning("skipping inadmissible rho=%s for p=%d", rho, p)
                continue
            xi = mea.xi_gaussian_r(r)
            rows.append((p, float(rho), r, xi))
            if xi_prev is not None:
                max_jump = max(max_jump, abs(xi - xi_prev))
            xi_prev = xi
    by_p = {}
    for p, rho, r, xi in rows:
        by_p.setdefault(p, {})[rho] = xi
    _control(controls, "zero_at_independence",
             all(abs(by_p[p][0.0]) <= 1e-10 for p in p_list),
             "xi(0) must vanish for every p")
    _control(controls, "one_at_boundaries",
             all(abs(by_p[p][1.0] - 1.0) <= 1e-10
                 and abs(by_p[p][-1.0 / p] - 1.0) <= 1e-10 for p in p_list),
             "xi must equal 1 at rho = 1 and rho = -1/p")
    _control(controls, "curve_continuity", max_jump < 0.05,
             f"max successive jump {max_jump:.4f} must stay below 0.05")
    return ExperimentResult(
        name="equicorrelated",
        columns=["p", "rho", "r", "xi"],
        rows=rows,
        metadata={"rho_resolution": rho_resolution,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="rho", series=(SeriesSpec(y="xi", group="p"),),
                      title="Equicorrelated normal", x_label="rho", y_label="xi"),
    )


# ---------------------------------------------------------------------- #
# 4-dimensional normal / Student-t curves for T
# ---------------------------------------------------------------------- #

def _sigma_4d(rho_x: float, rho_xy: float, rho_y: float) -> mea.SigmaPartition:
    s = np.array([[1.0, rho_x, rho_xy, rho_xy],
                  [rho_x, 1.0, rho_xy, rho_xy],
                  [rho_xy, rho_xy, 1.0, rho_y],
                  [rho_xy, rho_xy, rho_y, 1.0]])
    return mea.SigmaPartition.from_matrix(s, 2)


def run_4d_t(rho_x: float = 0.5, rho_y_list=_FIG2_RHO_Y, rho_xy_resolution: int = 201,
             family: str = "both", nu: float = 3.0, n: int = 20_000,
             estimator_points: int = 3, seed: int = 0) -> ExperimentResult:
    """T against the cross correlation for the 3-parameter 4-d scale matrix.

    Normal rows carry the closed form on a dense admissible grid plus the
    chained estimator at a few points; Student-t rows carry the estimator only
    (there is no closed form).  Dotted versus solid styling reproduces the
    overlay that shows the two families nearly coinciding except at
    rho_xy = 0, where only the normal family reaches T = 0.
    """
    if family not in ("normal", "student_t", "both"):
        raise ConfigError("family must be 'normal', 'student_t' or 'both'")
    if not -1.0 <= rho_x <= 1.0:
        raise ConfigError("rho_x must lie in [-1, 1]")
    rho_y_list = [float(r) for r in rho_y_list]
    if any(not -1.0 <= r <= 1.0 for r in rho_y_list):
        raise ConfigError("rho_y values must lie in [-1, 1]")
    if estimator_points < 0 or rho_xy_resolution < 3:
        raise ConfigError("estimator_points must be >= 0 and resolution >= 3")
    started = time.perf_counter()
    families = ("normal", "student_t") if family == "both" else (family,)
    rows = []
    skipped = 0
    rng_master = np.random.SeedSequence(seed)
    for fam in families:
        for rho_y in rho_y_list:
            bound = math.sqrt((1.0 + rho_x) * (1.0 + rho_y)) / 2.0
            grid = np.linspace(-bound + 1e-9, bound - 1e-9, rho_xy_resolution)
            if estimator_points:
                est_idx = set(np.linspace(0, len(grid) - 1, estimator_points).astype(int))
            else:
                est_idx = set()
            seeds = rng_master.spawn(len(grid))
            for j, rho_xy in enumerate(grid):
                try:
                    t_closed = (mea.t_gaussian_4d(rho_x, float(rho_xy), rho_y)
                                if fam == "normal" else float("nan"))
                except mea.SingularConfigurationError:
                    log.warning("skipping singular configuration rho_xy=%s rho_y=%s", rho_xy, rho_y)
                    skipped += 1
                    continue
                t_hat = float("nan")
                if j in est_idx:
                    radial = mod.NormalRadial() if fam == "normal" else mod.StudentTRadial(nu)
                    spec = mod.EllipticalSpec(np.zeros(4), _sigma_4d(rho_x, float(rho_xy), rho_y), radial)
                    data = mod.sample_elliptical(spec, n, seeds[j])
                    t_hat = est.t_n(data[:, :2], data[:, 2:])
                rows.append((fam, rho_y, float(rho_xy), t_closed, t_hat))
    controls = []
    normal_zero = [mea.t_gaussian_4d(rho_x, 0.0, ry) for ry in rho_y_list]
    _control(controls, "normal_T_zero_at_rho_xy_zero",
             max(abs(v) for v in normal_zero) <= 1e-10,
             "closed-form T must vanish at rho_xy = 0 for every rho_y")
    return ExperimentResult(
        name="t4d",
        columns=["family", "rho_y", "rho_xy", "t_closed", "t_estimate"],
        rows=rows,
        metadata={"rho_x": rho_x, "nu": nu, "n": n, "seed": seed,
                  "estimator_points": estimator_points, "skipped": skipped,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="rho_xy",
                      series=(SeriesSpec(y="t_closed", group="rho_y",
                                         where=(("family", "normal"),), label="normal"),
                              SeriesSpec(y="t_estimate", group="rho_y",
                                         where=(("family", "student_t"),),
                                         dash="2,5", label="student-t")),
                      title=f"T for the 4-d elliptical family (rho_x = {rho_x})",
                      x_label="rho_xy", y_label="T"),
    )


# ---------------------------------------------------------------------- #
# Dirac limit of the conditioning variable
# ---------------------------------------------------------------------- #

def run_dirac_limit(variance_list=(1.0, 0.5, 0.25, 0.125, 1 / 16, 1 / 32, 1 / 64),
                    m: int = 256, panels: int = 1024) -> ExperimentResult:
    """(X_n, Y_n) = (q_n(U), U) with q_n a normal quantile of shrinking variance.

    Every step is comonotone with continuous X_n: product copula M, xi = 1.
    The limit has Dirac X, whose generalized product is the independence
    copula: xi = 0.  The constant 0.25 product gap and the constant 0.5 range
    deviation of F_X witness why the limit is not reached.
    """
    variance_list = [float(v) for v in variance_list]
    if any(v <= 0 for v in variance_list):
        raise ConfigError("variances must be positive")
    if m % 2 or m < 2:
        raise ConfigError("grid resolution must be even (the gap is attained at 1/2)")
    started = time.perf_counter()
    comonotone = cop.Comonotone()
    identity = RangeProfile.identity()
    dirac = RangeProfile.dirac()
    step_product = cop.markov_product(comonotone, m, panels=panels)
    limit_product = cop.generalized_markov_product(comonotone, dirac, m, panels=panels)
    gap_to_m = cop.sup_distance(step_product, cop.Comonotone(), m)
    gap_to_limit = cop.sup_distance(step_product, limit_product, m)
    range_dev = l1_range_deviation(identity, dirac)
    rows = []
    for variance in variance_list:
        xi_pop = mea.xi_population(comonotone, panels=panels).value
        rows.append((variance, xi_pop, gap_to_m, gap_to_limit, range_dev))
    xi_limit = mea.xi_population(comonotone, x_profile=dirac, panels=panels).value
    rows.append((0.0, xi_limit, float("nan"), 0.0, 0.0))
    controls = []
    _control(controls, "step_xi_one",
             all(abs(r[1] - 1.0) <= 1e-9 for r in rows[:-1]),
             "xi must equal 1 at every step")
    _control(controls, "step_product_is_comonotone", gap_to_m <= 1e-9,
             f"product grid must equal the comonotone copula (gap {gap_to_m:.2e})")
    _control(controls, "limit_product_is_independence",
             abs(gap_to_limit - 0.25) <= 1e-9,
             f"gap between step products and the limit must be 0.25, got {gap_to_limit:.12f}")
    _control(controls, "limit_xi_zero", abs(xi_limit) <= 1e-9,
             f"xi of the limit model must vanish, got {xi_limit:.2e}")
    _control(controls, "range_deviation_constant", abs(range_dev - 0.5) <= 1e-12,
             "the L1 range deviation of F_X must equal 0.5 at every step")
    return ExperimentResult(
        name="dirac",
        columns=["variance", "xi_population", "product_gap_to_comonotone",
                 "product_gap_to_limit", "range_deviation"],
        rows=rows,
        metadata={"m": m, "panels": panels,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="variance",
                      series=(SeriesSpec(y="xi_population"),
                              SeriesSpec(y="product_gap_to_limit", dash="6,4"),
                              SeriesSpec(y="range_deviation", dash="2,4")),
                      title="Dirac limit of the conditioning variable",
                      x_label="variance of X_n"),
    )


# ---------------------------------------------------------------------- #
# convergence along SI families
# ---------------------------------------------------------------------- #

_SI_FAMILIES = {
    "gaussian": cop.Gaussian,
    "frank": cop.Frank,
    "clayton": cop.Clayton,
}


def run_si_convergence(family: str = "gaussian",
                       theta_sequence=tuple(0.5 + 1.0 / 2 ** j for j in range(2, 11)),
                       theta_star: float = 0.5, m: int = 256, panels: int = 1024,
                       final_tol: float = 1e-3) -> ExperimentResult:
    """Parameter convergence within a stochastically monotone family.

    For such families pointwise convergence of the CDFs upgrades to
    sectionwise L1 convergence, hence xi converges; all three diagnostic
    columns must fall below tolerance at the end of the sequence.
    """
    if family not in _SI_FAMILIES:
        raise ConfigError(f"family must be one of {sorted(_SI_FAMILIES)}")
    theta_sequence = [float(t) for t in theta_sequence]
    if not theta_sequence:
        raise ConfigError("theta sequence must be nonempty")
    started = time.perf_counter()
    make = _SI_FAMILIES[family]
    limit = make(theta_star)
    report = cop.is_si(limit)
    if not report.monotone:
        raise ControlAssertionError(
            f"limit copula is not stochastically monotone (violation {report.worst_violation:.2e} "
            f"at t={report.worst_t:.4f}, u={report.worst_u:.4f})")
    xi_star = mea.xi_population(limit, panels=panels).value
    rows = []
    for theta in theta_sequence:
        c = make(theta)
        rep = cop.is_si(c)
        if not rep.monotone:
            raise ControlAssertionError(
                f"copula at theta={theta} is not stochastically monotone "
                f"(violation {rep.worst_violation:.2e})")
        sup_gap = cop.sup_distance(c, limit, m)
        d1_gap = cop.d1_distance(c, limit, panels=panels)
        xi_gap = abs(mea.xi_population(c, panels=panels).value - xi_star)
        rows.append((theta, sup_gap, d1_gap, xi_gap))
    controls = []
    _control(controls, "final_gaps_below_tolerance",
             rows[-1][1] < final_tol and rows[-1][2] < 10 * final_tol and rows[-1][3] < final_tol,
             f"final gaps {rows[-1][1]:.2e}/{rows[-1][2]:.2e}/{rows[-1][3]:.2e} too large")
    return ExperimentResult(
        name="si-convergence",
        columns=["theta", "sup_gap", "d1_gap", "xi_gap"],
        rows=rows,
        metadata={"family": family, "theta_star": theta_star, "xi_star": xi_star,
                  "m": m, "panels": panels,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="theta",
                      series=(SeriesSpec(y="sup_gap"), SeriesSpec(y="d1_gap", dash="6,4"),
                              SeriesSpec(y="xi_gap", dash="2,4")),
                      title=f"Convergence within the {family} family",
                      x_label="theta"),
    )


# ---------------------------------------------------------------------- #
# Markov-product convergence diagnostics with negative controls
# ---------------------------------------------------------------------- #

def run_markov_diagnostics(parameter_list=(0.6, 0.55, 0.52, 0.51, 0.505, 0.501),
                           limit_parameter: float = 0.5, m: int = 256,
                           panels: int = 1024,
                           shuffle_stripes: int = 64) -> ExperimentResult:
    """Witnesses of the two continuity conditions, plus two negative controls.

    Family rows (Gaussian): the product-grid gap (first condition), the range
    deviation (second condition; zero for continuous margins) and the xi gap
    all shrink along the sequence.  Negative controls: a mirrored pair whose
    joint laws stay apart while the products coincide, and the shuffle
    sequence whose joint laws converge while the products stay apart.
    """
    parameter_list = [float(p) for p in parameter_list]
    if any(not -1.0 <= p <= 1.0 for p in parameter_list) or not -1.0 <= limit_parameter <= 1.0:
        raise ConfigError("Gaussian parameters must lie in [-1, 1]")
    started = time.perf_counter()
    limit = cop.Gaussian(limit_parameter)
    limit_product = cop.markov_product(limit, m, panels=panels)
    xi_star = mea.xi_population(limit, panels=panels).value
    rows = []
    for rho in parameter_list:
        c = cop.Gaussian(rho)
        prod = cop.markov_product(c, m, panels=panels)
        joint_gap = cop.sup_distance(c, limit, m)
        prod_gap = cop.sup_distance(prod, limit_product, m)
        xi_gap = abs(mea.xi_population(c, panels=panels).value - xi_star)
        rows.append(("family", rho, joint_gap, prod_gap, 0.0, xi_gap))

    # mirrored pair: Y_n = -X versus Y = X for symmetric X; products coincide
    w, m_cop = cop.Countermonotone(), cop.Comonotone()
    prod_w = cop.markov_product(w, m, panels=panels)
    prod_m = cop.markov_product(m_cop, m, panels=panels)
    mirrored_joint = cop.sup_distance(w, m_cop, m)
    mirrored_prod = cop.sup_distance(prod_w, prod_m, m)
    rows.append(("mirrored_pair", float("nan"), mirrored_joint, mirrored_prod, 0.0, 0.0))

    # shuffle: joint laws approach independence, products do not
    shuffle = cop.ShuffleMod(int(shuffle_stripes))
    pi = cop.Independence()
    prod_shuffle = cop.markov_product(shuffle, m, panels=panels)
    prod_pi = cop.markov_product(pi, m, panels=panels)
    shuffle_joint = cop.sup_distance(shuffle, pi, m)
    shuffle_prod = cop.sup_distance(prod_shuffle, prod_pi, m)
    rows.append(("shuffle", float(shuffle_stripes), shuffle_joint, shuffle_prod, 0.0, 1.0))

    controls = []
    fam = [r for r in rows if r[0] == "family"]
    _control(controls, "family_gaps_shrink",
             fam[-1][3] <= fam[0][3] + 1e-12 and fam[-1][5] <= fam[0][5] + 1e-12,
             "product and xi gaps must not grow along the sequence")
    _control(controls, "mirrored_products_coincide", mirrored_prod <= 1e-9,
             f"mirrored-pair products must coincide (gap {mirrored_prod:.2e})")
    _control(controls, "mirrored_joints_differ", mirrored_joint >= 0.1,
             f"mirrored-pair joint laws must stay apart (gap {mirrored_joint:.4f})")
    _control(controls, "shuffle_products_stay_apart", shuffle_prod >= 0.2,
             f"shuffle product gap {shuffle_prod:.4f} must stay above 0.2")
    _control(controls, "shuffle_joints_converge", shuffle_joint <= 0.05,
             f"shuffle joint gap {shuffle_joint:.4f} must be small")
    return ExperimentResult(
        name="diagnostics",
        columns=["case", "parameter", "joint_sup_gap", "product_sup_gap",
                 "range_deviation", "xi_gap"],
        rows=rows,
        metadata={"limit_parameter": limit_parameter, "m": m, "panels": panels,
                  "shuffle_stripes": shuffle_stripes,
                  "runtime_s": time.perf_counter() - started, "controls": controls},
        plot=PlotSpec(x="parameter",
                      series=(SeriesSpec(y="product_sup_gap", where=(("case", "family"),)),
                              SeriesSpec(y="xi_gap", where=(("case", "family"),), dash="6,4")),
                      title="Markov-product convergence diagnostics",
                      x_label="parameter"),
    )


# ---------------------------------------------------------------------- #
# registry
# ---------------------------------------------------------------------- #

EXPERIMENTS = {
    "shuffle": run_shuffle_counterexample,
    "additive-error": run_additive_error,
    "equicorrelated": run_equicorrelated,
    "t4d": run_4d_t,
    "dirac": run_dirac_limit,
    "si-convergence": run_si_convergence,
    "diagnostics": run_markov_diagnostics,
}
