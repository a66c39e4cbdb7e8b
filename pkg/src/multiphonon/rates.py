"""T = 0 multiphonon nonradiative decay rate in the single-mode model.

The rate for a transition with electron-phonon coupling W, final-state
phonon ladder n·ħΩ_g, and transition moments M_n is

    Γ_NR = (2π/ħ) W² Σ_n M_n² G(E_ZPL - n ħΩ_g; σ),

where G is a normalized Gaussian standing in for the energy-conserving
delta function, with broadening fixed to σ = ħΩ_e/2.  The phonon sum is
truncated once the Gaussian weight is negligible (10σ past the ZPL
energy, where the weight is below 2e-22).
"""

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from .constants import HBAR_MEV_S
from .errors import DegeneracyError, DomainError, MultiphononError
from .oscillator import REFERENCE_INITIAL, OscillatorPair, transition_moments

SWEEP_PARAMETERS = ("zpl_energy", "displacement", "coupling", "energy_ground")

SWEEP_CSV_HEADER = "parameter,value,rate_per_s,n_max,sigma_meV"


class RateTerm(NamedTuple):
    """One phonon-number contribution to the total rate."""

    n: int
    moment_sq: float  # amu·Å²
    delta_weight: float  # meV⁻¹
    contribution: float  # s⁻¹


@dataclass(frozen=True)
class RateResult:
    """Nonradiative rate with its per-phonon-number breakdown."""

    total_rate: float  # s⁻¹
    terms: tuple  # of RateTerm
    n_max_used: int
    sigma: float  # broadening in meV


@dataclass(frozen=True)
class SweepPoint:
    """One row of a parameter sweep; ``error`` is set when the point failed."""

    parameter: str
    value: float
    rate: float | None
    n_max: int | None
    sigma: float | None
    error: str | None = None


def gaussian_delta(detuning, sigma):
    """Normalized Gaussian surrogate for the energy delta function.

    Parameters
    ----------
    detuning : float
        Energy mismatch in meV.
    sigma : float
        Broadening in meV, positive.

    Returns
    -------
    float
        exp(-detuning²/(2σ²)) / (σ·sqrt(2π)) in meV⁻¹; even in detuning.
    """
    if not (isinstance(sigma, (int, float)) and math.isfinite(sigma) and sigma > 0):
        raise DomainError(f"sigma must be a positive finite broadening, got {sigma!r}")
    if not math.isfinite(detuning):
        raise DomainError(f"detuning must be finite, got {detuning!r}")
    z = detuning / sigma
    return math.exp(-0.5 * z * z) / (sigma * math.sqrt(2.0 * math.pi))


def nonradiative_rate(config, mode_label, moment_reference=REFERENCE_INITIAL):
    """T = 0 nonradiative decay rate through one vibrational mode.

    Parameters
    ----------
    config : DefectConfiguration
    mode_label : str
        Which of the configuration's modes carries the decay.
    moment_reference : str
        Reference position for the transition moments; the default
        ("initial") measures the phonon position operator from the
        initial-state equilibrium.

    Returns
    -------
    RateResult
        Total rate in s⁻¹ and the list of per-n terms that sum to it.
    """
    mode = config.mode(mode_label)
    pair = OscillatorPair(
        energy_initial=mode.energy_excited,
        energy_final=mode.energy_ground,
        displacement=mode.displacement,
    )
    sigma = mode.energy_excited / 2.0
    n_max = int(math.ceil((config.zpl_energy + 10.0 * sigma) / mode.energy_ground))
    moments = transition_moments(pair, n_max, reference=moment_reference)
    prefactor = 2.0 * math.pi / HBAR_MEV_S * mode.coupling**2
    terms = []
    for n in range(n_max + 1):
        moment_sq = float(moments[n]) ** 2
        weight = gaussian_delta(config.zpl_energy - n * mode.energy_ground, sigma)
        terms.append(RateTerm(n, moment_sq, weight, prefactor * moment_sq * weight))
    total = float(math.fsum(term.contribution for term in terms))
    return RateResult(total_rate=total, terms=tuple(terms), n_max_used=n_max, sigma=sigma)


def isotope_rate_ratio(config_a, config_b, mode_label, moment_reference=REFERENCE_INITIAL):
    """Ratio Γ_NR(config_a) / Γ_NR(config_b) for the same mode label."""
    rate_a = nonradiative_rate(config_a, mode_label, moment_reference=moment_reference)
    rate_b = nonradiative_rate(config_b, mode_label, moment_reference=moment_reference)
    if rate_b.total_rate == 0.0:
        raise DegeneracyError(
            f"nonradiative rate of {config_b.variant_label!r} is exactly zero; "
            "the isotope ratio is undefined"
        )
    return rate_a.total_rate / rate_b.total_rate


def _apply_parameter(config, mode_label, parameter, value):
    mode = config.mode(mode_label)
    if parameter == "zpl_energy":
        return replace(config, zpl_energy=value)
    if parameter == "displacement":
        return config.with_mode(replace(mode, displacement=value))
    if parameter == "coupling":
        return config.with_mode(replace(mode, coupling=value))
    if parameter == "energy_ground":
        return config.with_mode(replace(mode, energy_ground=value))
    raise DomainError(
        f"unknown sweep parameter {parameter!r}; expected one of {SWEEP_PARAMETERS}"
    )


def rate_sweep(config, mode_label, parameter, grid, moment_reference=REFERENCE_INITIAL):
    """Nonradiative rate across a grid of one model parameter.

    Each grid point is evaluated independently; a failing point is
    reported in its row's ``error`` field instead of aborting the sweep.
    Output order always matches input order.

    Returns
    -------
    list of SweepPoint
    """
    if parameter not in SWEEP_PARAMETERS:
        raise DomainError(
            f"unknown sweep parameter {parameter!r}; expected one of {SWEEP_PARAMETERS}"
        )
    config.mode(mode_label)
    points = []
    for value in grid:
        value = float(value)
        try:
            varied = _apply_parameter(config, mode_label, parameter, value)
            result = nonradiative_rate(varied, mode_label, moment_reference=moment_reference)
            points.append(
                SweepPoint(parameter, value, result.total_rate, result.n_max_used, result.sigma)
            )
        except MultiphononError as exc:
            points.append(SweepPoint(parameter, value, None, None, None, error=str(exc)))
    return points


def sweep_grid(start, stop, steps):
    """Inclusive linear grid with exactly *steps* points."""
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    if steps == 1:
        return [float(start)]
    return list(np.linspace(float(start), float(stop), int(steps)))
