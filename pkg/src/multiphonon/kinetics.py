"""Radiative/nonradiative rate budgets, quantum efficiency, and cyclicity.

The excited-state lifetime decomposes as 1/τ = Γ_R + Γ_NR.  Given the
lifetimes of two variants that share the same radiative rate and whose
nonradiative rates stand in a known ratio, the 2×2 system solves exactly
for Γ_R and both Γ_NR, and with them the quantum efficiencies
η = Γ_R·τ.  A Purcell factor P rescales the radiative channel only,
boosting the efficiency to η(P) = η₀P/(1 + η₀(P-1)); with a fully
spin-mixing nonradiative channel the optical cyclicity is
C = 2/(1 - η(P)) = 2(1 + η₀(P-1))/(1 - η₀).
"""

import math
from dataclasses import dataclass

from .errors import DegeneracyError, DomainError, InfeasibleKineticsError


@dataclass(frozen=True)
class KineticsResult:
    """Solved rate budget for a pair of variants sharing Γ_R."""

    radiative_rate: float  # s⁻¹
    nonradiative_rate_a: float  # s⁻¹
    nonradiative_rate_b: float  # s⁻¹
    radiative_lifetime_us: float
    efficiency_a: float
    efficiency_b: float


def _check_positive(value, name):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def total_lifetime(radiative_rate, nonradiative_rate):
    """Excited-state lifetime 1/(Γ_R + Γ_NR) in seconds."""
    for name, value in (("radiative_rate", radiative_rate), ("nonradiative_rate", nonradiative_rate)):
        if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
            raise DomainError(f"{name} must be non-negative and finite, got {value!r}")
    total = radiative_rate + nonradiative_rate
    if total == 0.0:
        raise DegeneracyError("both decay rates are zero; the lifetime diverges")
    return 1.0 / total


def infer_radiative_rate(lifetime_a, lifetime_b, nr_ratio):
    """Solve the shared-radiative-rate system for two variants.

    With Γ_NR,a = nr_ratio · Γ_NR,b and a common Γ_R:

        Γ_NR,b = (1/τ_a - 1/τ_b) / (nr_ratio - 1),
        Γ_R    = 1/τ_b - Γ_NR,b.

    Parameters
    ----------
    lifetime_a, lifetime_b : float
        Measured lifetimes in seconds.
    nr_ratio : float
        Γ_NR,a / Γ_NR,b, positive.  Equal to 1 only if the lifetimes are
        equal, in which case the unique consistent solution Γ_NR = 0 is
        returned.

    Returns
    -------
    KineticsResult

    Raises
    ------
    InfeasibleKineticsError
        If the inputs force a negative radiative or nonradiative rate.
    """
    _check_positive(lifetime_a, "lifetime_a")
    _check_positive(lifetime_b, "lifetime_b")
    _check_positive(nr_ratio, "nr_ratio")
    rate_total_a = 1.0 / lifetime_a
    rate_total_b = 1.0 / lifetime_b
    if nr_ratio == 1.0:
        if lifetime_a != lifetime_b:
            raise InfeasibleKineticsError(
                "nr_ratio = 1 with unequal lifetimes "
                f"({lifetime_a!r} s vs {lifetime_b!r} s) has no solution"
            )
        nr_b = 0.0
        radiative = rate_total_b
    else:
        nr_b = (rate_total_a - rate_total_b) / (nr_ratio - 1.0)
        radiative = rate_total_b - nr_b
        if nr_b < 0.0:
            raise InfeasibleKineticsError(
                f"inferred nonradiative rate is negative ({nr_b:.6e} s⁻¹); "
                "check the lifetime ordering against nr_ratio"
            )
        if radiative <= 0.0:
            raise InfeasibleKineticsError(
                f"inferred radiative rate is not positive ({radiative:.6e} s⁻¹)"
            )
    nr_a = nr_ratio * nr_b
    return KineticsResult(
        radiative_rate=radiative,
        nonradiative_rate_a=nr_a,
        nonradiative_rate_b=nr_b,
        radiative_lifetime_us=1e6 / radiative,
        efficiency_a=radiative * lifetime_a,
        efficiency_b=radiative * lifetime_b,
    )


def zpl_emission_fraction(efficiency, debye_waller):
    """Fraction of all decays that emit into the zero-phonon line.

    The product of the quantum efficiency and the Debye-Waller factor
    (the fraction of radiative emission in the ZPL).
    """
    for name, value in (("efficiency", efficiency), ("debye_waller", debye_waller)):
        if not (isinstance(value, (int, float)) and 0.0 <= value <= 1.0):
            raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return efficiency * debye_waller


def purcell_radiative_efficiency(eta0, purcell):
    """Radiative efficiency under Purcell enhancement of the radiative rate.

    η(P) = η₀·P / (1 + η₀·(P - 1)).  Equals η₀ at P = 1 and tends to 1 as
    P grows.  η₀ of exactly 0 or 1 is treated as the corresponding exact
    limit rather than an error.
    """
    if not (isinstance(eta0, (int, float)) and 0.0 <= eta0 <= 1.0):
        raise DomainError(f"eta0 must lie in [0, 1], got {eta0!r}")
    if not (isinstance(purcell, (int, float)) and math.isfinite(purcell) and purcell >= 0.0):
        raise DomainError(f"purcell must be non-negative and finite, got {purcell!r}")
    if eta0 == 0.0:
        return 0.0
    if eta0 == 1.0:
        return 1.0
    return eta0 * purcell / (1.0 + eta0 * (purcell - 1.0))


def cyclicity(eta0, purcell):
    """Optical cyclicity with a fully spin-mixing nonradiative channel.

    C = 2·(1 + η₀·(P - 1)) / (1 - η₀); at P = 1 this is 2/(1 - η₀).

    Raises
    ------
    DegeneracyError
        For η₀ = 1 (no nonradiative channel; the cyclicity diverges).
    """
    if not (isinstance(eta0, (int, float)) and 0.0 <= eta0 <= 1.0):
        raise DomainError(f"eta0 must lie in [0, 1], got {eta0!r}")
    if not (isinstance(purcell, (int, float)) and math.isfinite(purcell) and purcell >= 0.0):
        raise DomainError(f"purcell must be non-negative and finite, got {purcell!r}")
    if eta0 == 1.0:
        raise DegeneracyError("cyclicity diverges at unit intrinsic efficiency")
    return 2.0 * (1.0 + eta0 * (purcell - 1.0)) / (1.0 - eta0)
