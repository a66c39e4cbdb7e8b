"""Pulsed-excitation decay histograms: simulation and lifetime extraction.

A transient is modelled as counts(t) = A·exp(-t/τ) + B per bin, with
independent Poisson statistics per bin.  The fitter estimates (A, τ, B)
by Poisson-weighted least squares: a log-linear regression on the
background-subtracted counts seeds a damped Gauss-Newton refinement with
inverse-model weights (Fisher scoring for the Poisson likelihood), and
the parameter covariance comes from the curvature of the objective at
the optimum.

Times are microseconds throughout this module.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, FitError, FitPreconditionError

HISTOGRAM_CSV_HEADER = "t_us,counts"

_MAX_ITERATIONS = 100
_RELATIVE_STEP_TOL = 1e-10


@dataclass(frozen=True)
class TransientHistogram:
    """Binned photon counts versus delay after the excitation pulse.

    ``bin_edges`` has one more entry than ``counts`` and must be uniform
    to within 1e-12 relative.  Counts are non-negative; they are integers
    for measured or simulated data but expectation-valued (float) curves
    are accepted for noiseless analysis.  ``metadata`` records amplitude,
    background, and seed when the histogram is synthetic.
    """

    bin_edges: np.ndarray
    counts: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        edges = np.asarray(self.bin_edges, dtype=float)
        counts = np.asarray(self.counts, dtype=float)
        if edges.ndim != 1 or edges.size < 2:
            raise DomainError("bin_edges must be a 1D array of at least two edges")
        widths = np.diff(edges)
        if np.any(widths <= 0):
            raise DomainError("bin_edges must be strictly increasing")
        mean_width = float(widths.mean())
        # Relative to the time span: a per-width comparison would trip on
        # IEEE representation noise for histograms with many bins.
        span = float(edges[-1] - edges[0])
        if np.max(np.abs(widths - mean_width)) > 1e-12 * span:
            raise DomainError("bin widths must be uniform to within 1e-12 relative")
        if counts.ndim != 1 or counts.size != edges.size - 1:
            raise DomainError("counts length must equal the number of bins")
        if np.any(~np.isfinite(counts)) or np.any(counts < 0):
            raise DomainError("counts must be finite and non-negative")
        object.__setattr__(self, "bin_edges", edges)
        object.__setattr__(self, "counts", counts)

    @property
    def bin_centers(self):
        return 0.5 * (self.bin_edges[:-1] + self.bin_edges[1:])

    @property
    def bin_width(self):
        return float(np.mean(np.diff(self.bin_edges)))


@dataclass(frozen=True)
class LifetimeFit:
    """Result of a single-exponential-plus-background fit."""

    lifetime_us: float
    lifetime_uncertainty_us: float
    amplitude: float  # counts per bin at t = 0
    background: float  # counts per bin
    fit_quality: float  # reduced Pearson chi-square
    iterations: int


def simulate_transient(lifetime, amplitude, background, n_bins, t_max, seed):
    """Draw a synthetic decay histogram with Poisson counting noise.

    Each bin's count is Poisson with mean
    background + amplitude·exp(-t_center/lifetime).  Identical inputs and
    seed reproduce the histogram bit for bit.

    Parameters
    ----------
    lifetime : float
        Decay time in µs, positive.
    amplitude : float
        Expected counts per bin at t = 0, non-negative.
    background : float
        Expected counts per bin from uncorrelated events, non-negative.
    n_bins : int
        Number of uniform bins (at least 10).
    t_max : float
        Histogram span in µs, positive.
    seed : int
        RNG seed.

    Returns
    -------
    TransientHistogram
    """
    if not (isinstance(lifetime, (int, float)) and math.isfinite(lifetime) and lifetime > 0):
        raise DomainError(f"lifetime must be positive and finite, got {lifetime!r}")
    if not (isinstance(t_max, (int, float)) and math.isfinite(t_max) and t_max > 0):
        raise DomainError(f"t_max must be positive and finite, got {t_max!r}")
    if not isinstance(n_bins, (int, np.integer)) or n_bins < 10:
        raise DomainError(f"n_bins must be an integer >= 10, got {n_bins!r}")
    if amplitude < 0 or background < 0:
        raise DomainError("amplitude and background must be non-negative")
    edges = np.linspace(0.0, float(t_max), int(n_bins) + 1)
    centers = 0.5 * (edges[:-1] + edges[1:])
    means = background + amplitude * np.exp(-centers / lifetime)
    rng = np.random.default_rng(seed)
    counts = rng.poisson(means)
    return TransientHistogram(
        bin_edges=edges,
        counts=counts,
        metadata={"amplitude": float(amplitude), "background": float(background), "seed": int(seed)},
    )


def _initial_guess(t, counts):
    """Log-linear regression on background-subtracted counts."""
    tail = max(3, t.size // 10)
    background = float(np.mean(counts[-tail:]))
    background = max(background, 0.0)
    excess = counts - background
    mask = excess > 0
    if mask.sum() < 2:
        raise FitError("no decaying component above the background estimate", trace=[])
    ty, y = t[mask], excess[mask]
    logy = np.log(y)
    weights = y  # inverse variance of log(counts) for Poisson data
    design = np.column_stack([np.ones_like(ty), ty])
    scaled = design * np.sqrt(weights)[:, None]
    solution, *_ = np.linalg.lstsq(scaled, logy * np.sqrt(weights), rcond=None)
    intercept, slope = solution
    if slope >= 0:
        raise FitError("counts do not decay over the fit window", trace=[])
    return float(np.exp(intercept)), float(-1.0 / slope), background


def _model(theta, t):
    amplitude, tau, background = theta
    return amplitude * np.exp(-t / tau) + background


def _neg_log_likelihood(theta, t, counts):
    mu = np.maximum(_model(theta, t), 1e-300)
    return float(np.sum(mu) - np.sum(counts * np.log(mu)))


def _valid(theta):
    amplitude, tau, background = theta
    return amplitude > 0 and tau > 0 and background >= 0 and np.all(np.isfinite(theta))


def fit_lifetime(histogram, fit_window=None):
    """Extract the decay lifetime from a transient histogram.

    Parameters
    ----------
    histogram : TransientHistogram
    fit_window : (float, float), optional
        Time range in µs; only bins whose centers fall inside are fitted.
        Defaults to the full histogram.

    Returns
    -------
    LifetimeFit

    Raises
    ------
    FitPreconditionError
        Fewer than 10 bins in the window, or total counts above the
        background estimate not exceeding 100.
    FitError
        Unidentifiable data or no convergence (carries the iteration trace).
    """
    t_all = histogram.bin_centers
    c_all = histogram.counts
    if fit_window is not None:
        lo, hi = fit_window
        if not (lo < hi):
            raise FitPreconditionError(f"degenerate fit window ({lo!r}, {hi!r})")
        mask = (t_all >= lo) & (t_all <= hi)
        t_all, c_all = t_all[mask], c_all[mask]
    if t_all.size < 10:
        raise FitPreconditionError(f"need >= 10 bins in the fit window, found {t_all.size}")

    amplitude0, tau0, background0 = _initial_guess(t_all, c_all)
    excess_total = float(np.sum(c_all) - c_all.size * background0)
    if excess_total <= 100:
        raise FitPreconditionError(
            f"total counts above background ({excess_total:.1f}) must exceed 100"
        )

    theta = np.array([amplitude0, tau0, background0])
    trace = [(0, tuple(theta), _neg_log_likelihood(theta, t_all, c_all))]
    converged = False
    iterations = 0
    for iteration in range(1, _MAX_ITERATIONS + 1):
        iterations = iteration
        amplitude, tau, background = theta
        decay = np.exp(-t_all / tau)
        mu = np.maximum(amplitude * decay + background, 1e-300)
        jacobian = np.column_stack([decay, amplitude * t_all * decay / tau**2, np.ones_like(t_all)])
        weighted = jacobian / mu[:, None]
        normal = weighted.T @ jacobian
        gradient = weighted.T @ (c_all - mu)
        try:
            step = np.linalg.solve(normal, gradient)
        except np.linalg.LinAlgError:
            raise FitError("normal equations are singular; data is unidentifiable", trace)
        nll = _neg_log_likelihood(theta, t_all, c_all)
        factor = 1.0
        accepted = None
        for _ in range(60):
            candidate = theta + factor * step
            if _valid(candidate) and _neg_log_likelihood(candidate, t_all, c_all) <= nll + 1e-12 * abs(nll):
                accepted = candidate
                break
            factor *= 0.5
        if accepted is None:
            # Even infinitesimal steps along the scoring direction do not
            # improve: numerically at the optimum.
            converged = True
            break
        rel_change = np.max(np.abs(factor * step) / np.maximum(np.abs(accepted), 1e-300))
        theta = accepted
        trace.append((iteration, tuple(theta), _neg_log_likelihood(theta, t_all, c_all)))
        if rel_change < _RELATIVE_STEP_TOL:
            converged = True
            break
    if not converged:
        raise FitError(f"no convergence in {_MAX_ITERATIONS} iterations", trace)

    amplitude, tau, background = theta
    decay = np.exp(-t_all / tau)
    mu = np.maximum(amplitude * decay + background, 1e-300)
    jacobian = np.column_stack([decay, amplitude * t_all * decay / tau**2, np.ones_like(t_all)])
    normal = (jacobian / mu[:, None]).T @ jacobian
    try:
        covariance = np.linalg.inv(normal)
    except np.linalg.LinAlgError:
        raise FitError("curvature matrix is singular at the optimum", trace)
    tau_variance = covariance[1, 1]
    if not np.isfinite(tau_variance) or tau_variance < 0:
        raise FitError("lifetime variance is not defined at the optimum", trace)
    window_span = float(t_all[-1] - t_all[0])
    tau_sigma = float(np.sqrt(tau_variance))
    if tau_sigma >= window_span:
        raise FitError(
            f"lifetime is unidentifiable: uncertainty {tau_sigma:.3g} µs spans "
            f"the fit window ({window_span:.3g} µs)",
            trace,
        )
    dof = max(t_all.size - 3, 1)
    chi2 = float(np.sum((c_all - mu) ** 2 / mu))
    return LifetimeFit(
        lifetime_us=float(tau),
        lifetime_uncertainty_us=tau_sigma,
        amplitude=float(amplitude),
        background=float(background),
        fit_quality=chi2 / dof,
        iterations=iterations,
    )


def write_histogram_csv(histogram, path):
    """Write a histogram as ``t_us,counts`` rows (t at bin centers)."""
    lines = [HISTOGRAM_CSV_HEADER]
    for center, count in zip(histogram.bin_centers, histogram.counts):
        count_text = str(int(count)) if float(count).is_integer() else repr(float(count))
        lines.append(f"{float(center)!r},{count_text}")
    with open(path, "w") as handle:
        handle.write("\n".join(lines) + "\n")


def read_histogram_csv(path):
    """Load a ``t_us,counts`` file, inferring and validating uniform bins."""
    with open(path) as handle:
        lines = [line.strip() for line in handle if line.strip()]
    if not lines or lines[0] != HISTOGRAM_CSV_HEADER:
        raise DomainError(f"histogram file must start with header '{HISTOGRAM_CSV_HEADER}'")
    centers, counts = [], []
    for index, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise DomainError(f"line {index}: expected 't,counts', got {line!r}")
        try:
            centers.append(float(parts[0]))
            counts.append(float(parts[1]))
        except ValueError as exc:
            raise DomainError(f"line {index}: {exc}") from exc
    centers = np.asarray(centers)
    counts = np.asarray(counts)
    if centers.size < 2:
        raise DomainError("histogram needs at least two bins")
    widths = np.diff(centers)
    if np.any(widths <= 0):
        raise DomainError("bin centers must be strictly increasing")
    width = float(np.mean(widths))
    span = float(centers[-1] - centers[0])
    if np.max(np.abs(widths - width)) > 1e-12 * span:
        raise DomainError("bin centers must be uniformly spaced to within 1e-12 relative")
    edges = np.concatenate([centers - 0.5 * width, [centers[-1] + 0.5 * width]])
    return TransientHistogram(bin_edges=edges, counts=counts)
