"""Dense-grid quadrature oracle for harmonic-oscillator overlaps.

This is the independent verification route for ``oscillator.fc_overlap``:
it evaluates explicit Hermite-Gaussian wavefunctions on a dense uniform
grid and integrates their product with the trapezoid rule, never touching
the recurrence used by the analytic path.  Accuracy is self-diagnosed by a
halving-step convergence check plus a summation roundoff floor; when the
requested absolute tolerance cannot be certified, the oracle raises
instead of returning a number it cannot stand behind.

Overlap magnitudes below roughly 1e-11 arise from cancellation of
order-one integrand lobes and are unresolvable in float64 regardless of
grid density; for those, pass ``GridSpec(dps=...)`` to run the identical
construction in mpmath arbitrary precision (slow, intended for spot
checks).
"""

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR_SQ_MEV_AMU_A2
from .errors import AccuracyError, DomainError

# Oracle contract is certified for small quantum numbers only.
MAX_ORACLE_N = 30

_MIN_TURNING_POINT_SPANS = 12.0
_MIN_POINTS_PER_WAVELENGTH = 20.0


@dataclass(frozen=True)
class GridSpec:
    """Resolution and accuracy demands for the quadrature oracle.

    Parameters
    ----------
    turning_point_spans : float
        Total grid extent in units of the classical turning-point length
        of the wider oscillator (minimum 12).
    points_per_wavelength : float
        Grid points per shortest local de Broglie wavelength of the
        narrower oscillator (minimum 20).
    abs_tol : float
        Absolute accuracy the caller requires; the oracle raises
        :class:`AccuracyError` if its self-estimated error exceeds this.
    dps : int or None
        ``None`` evaluates in float64 (vectorized).  An integer switches
        to mpmath with that many decimal digits, lowering the roundoff
        floor far enough to resolve deep-tail overlaps.
    """

    turning_point_spans: float = 12.0
    points_per_wavelength: float = 20.0
    abs_tol: float = 1e-10
    dps: int | None = None

    def __post_init__(self):
        if self.turning_point_spans < _MIN_TURNING_POINT_SPANS:
            raise DomainError(
                f"grid must cover >= {_MIN_TURNING_POINT_SPANS} turning-point lengths"
            )
        if self.points_per_wavelength < _MIN_POINTS_PER_WAVELENGTH:
            raise DomainError(
                f"grid must have >= {_MIN_POINTS_PER_WAVELENGTH} points per wavelength"
            )
        if not (self.abs_tol > 0):
            raise DomainError("abs_tol must be positive")
        if self.dps is not None and self.dps < 15:
            raise DomainError("dps below float64 precision is pointless")


def _grid_layout(pair, n_top, grid):
    """Uniform grid [lo, hi] with the coarse point count mandated by *grid*."""
    a_i = pair.energy_initial / HBAR_SQ_MEV_AMU_A2
    a_f = pair.energy_final / HBAR_SQ_MEV_AMU_A2
    a_wide = min(a_i, a_f)
    a_narrow = max(a_i, a_f)
    q_turn = math.sqrt((2.0 * n_top + 1.0) / a_wide)
    half = 0.5 * grid.turning_point_spans * q_turn
    lo = min(0.0, pair.displacement) - half
    hi = max(0.0, pair.displacement) + half
    wavelength = 2.0 * math.pi / math.sqrt(a_narrow * (2.0 * n_top + 1.0))
    step = wavelength / grid.points_per_wavelength
    count = int(math.ceil((hi - lo) / step)) + 1
    return lo, hi, count, a_i, a_f


def _hermite_rows(y, n_max):
    """Normalized Hermite functions h_0..h_n_max on the points *y*.

    h_n(y) = (2^n n! sqrt(pi))^(-1/2) H_n(y) exp(-y^2/2), evaluated by the
    standard three-term recurrence, which keeps every row O(1).
    """
    rows = np.empty((n_max + 1, y.size))
    rows[0] = math.pi**-0.25 * np.exp(-0.5 * y * y)
    if n_max >= 1:
        rows[1] = math.sqrt(2.0) * y * rows[0]
    for k in range(2, n_max + 1):
        rows[k] = math.sqrt(2.0 / k) * y * rows[k - 1] - math.sqrt((k - 1.0) / k) * rows[k - 2]
    return rows


def _trapezoid_table(pair, m_max, n_max, lo, hi, count):
    """Overlap tables for every (m <= m_max, n <= n_max) on one grid.

    Returns the trapezoid values and the integrals of |integrand| used for
    the roundoff floor.
    """
    x, step = np.linspace(lo, hi, count, retstep=True)
    a_i = pair.energy_initial / HBAR_SQ_MEV_AMU_A2
    a_f = pair.energy_final / HBAR_SQ_MEV_AMU_A2
    rows_i = a_i**0.25 * _hermite_rows(np.sqrt(a_i) * x, m_max)
    rows_f = a_f**0.25 * _hermite_rows(np.sqrt(a_f) * (x - pair.displacement), n_max)
    weights = np.full(count, step)
    weights[0] = weights[-1] = 0.5 * step
    weighted_f = rows_f * weights
    values = rows_i @ weighted_f.T
    l1 = np.abs(rows_i) @ np.abs(weighted_f).T
    return values, l1


def quadrature_overlap_table(pair, m_max, n_max, grid=GridSpec()):
    """Quadrature overlaps and self-estimated absolute errors, in bulk.

    Integrates every (m, n) pair on a shared grid sized for the largest
    quantum number, at the requested density and at double density, and
    reports ``|fine - coarse|`` plus a summation roundoff floor as the
    error estimate.

    Returns
    -------
    (numpy.ndarray, numpy.ndarray)
        Overlap values and error estimates, both shaped
        ``(m_max + 1, n_max + 1)``.  No tolerance is enforced here; use
        :func:`quadrature_overlap_oracle` for the checked scalar form.
    """
    if m_max > MAX_ORACLE_N or n_max > MAX_ORACLE_N:
        raise DomainError(f"oracle is certified for quantum numbers <= {MAX_ORACLE_N}")
    if grid.dps is not None:
        raise DomainError("bulk tables are float64 only; use the scalar oracle for mpmath")
    n_top = max(m_max, n_max, 1)
    lo, hi, count, _, _ = _grid_layout(pair, n_top, grid)
    coarse, _ = _trapezoid_table(pair, m_max, n_max, lo, hi, count)
    fine, l1 = _trapezoid_table(pair, m_max, n_max, lo, hi, 2 * count - 1)
    floor = 64.0 * np.finfo(float).eps * l1
    return fine, np.abs(fine - coarse) + floor


def _mpmath_overlap(pair, m, n, lo, hi, count, dps):
    import mpmath as mp

    with mp.workdps(dps):
        a_i = mp.mpf(pair.energy_initial) / mp.mpf(HBAR_SQ_MEV_AMU_A2)
        a_f = mp.mpf(pair.energy_final) / mp.mpf(HBAR_SQ_MEV_AMU_A2)
        sqrt_ai, sqrt_af = mp.sqrt(a_i), mp.sqrt(a_f)
        norm = mp.power(a_i * a_f, mp.mpf(1) / 4) / mp.sqrt(mp.pi)
        dq = mp.mpf(pair.displacement)
        lo_mp, hi_mp = mp.mpf(lo), mp.mpf(hi)
        step = (hi_mp - lo_mp) / (count - 1)
        # Precompute recurrence coefficients once.
        coeff_y = [mp.sqrt(mp.mpf(2) / k) for k in range(1, max(m, n) + 1)]
        coeff_p = [mp.sqrt(mp.mpf(k - 1) / k) for k in range(1, max(m, n) + 1)]

        def hermite(order, y):
            h_prev = mp.mpf(1)
            if order == 0:
                return h_prev
            h = mp.sqrt(2) * y
            for k in range(2, order + 1):
                h, h_prev = coeff_y[k - 1] * y * h - coeff_p[k - 1] * h_prev, h
            return h

        total = mp.mpf(0)
        l1 = mp.mpf(0)
        for idx in range(count):
            x = lo_mp + idx * step
            y_i = sqrt_ai * x
            y_f = sqrt_af * (x - dq)
            value = (
                hermite(m, y_i)
                * hermite(n, y_f)
                * mp.exp(-(y_i * y_i + y_f * y_f) / 2)
            )
            weight = step if 0 < idx < count - 1 else step / 2
            total += value * weight
            l1 += abs(value) * weight
        floor = 100 * mp.mpf(10) ** (-dps) * l1 * norm
        return float(total * norm), float(floor)


def quadrature_overlap_with_error(m, n, pair, grid=GridSpec()):
    """Oracle overlap plus its self-estimated absolute error (no tolerance check)."""
    if not (0 <= m <= MAX_ORACLE_N) or not (0 <= n <= MAX_ORACLE_N):
        raise DomainError(f"oracle is certified for 0 <= m, n <= {MAX_ORACLE_N}")
    n_top = max(m, n, 1)
    lo, hi, count, _, _ = _grid_layout(pair, n_top, grid)
    if grid.dps is None:
        coarse, _ = _trapezoid_table(pair, m, n, lo, hi, count)
        fine, l1 = _trapezoid_table(pair, m, n, lo, hi, 2 * count - 1)
        floor = 64.0 * np.finfo(float).eps * l1[m, n]
        return float(fine[m, n]), float(abs(fine[m, n] - coarse[m, n]) + floor)
    coarse, _ = _mpmath_overlap(pair, m, n, lo, hi, count, grid.dps)
    fine, floor = _mpmath_overlap(pair, m, n, lo, hi, 2 * count - 1, grid.dps)
    return fine, abs(fine - coarse) + floor


def quadrature_overlap_oracle(m, n, pair, grid=GridSpec()):
    """Overlap <chi_initial_m | chi_final_n> by dense-grid quadrature.

    Parameters
    ----------
    m, n : int
        Quantum numbers, each at most 30.
    pair : OscillatorPair
    grid : GridSpec

    Returns
    -------
    float

    Raises
    ------
    AccuracyError
        If the halving-step convergence check (plus roundoff floor)
        cannot certify ``grid.abs_tol``.
    """
    value, error = quadrature_overlap_with_error(m, n, pair, grid)
    if error > grid.abs_tol:
        raise AccuracyError(
            f"quadrature error estimate {error:.3e} exceeds the requested "
            f"absolute tolerance {grid.abs_tol:.3e} for m={m}, n={n}"
        )
    return value
