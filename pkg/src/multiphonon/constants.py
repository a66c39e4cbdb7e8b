"""Physical constants in the unit system used throughout the package.

All vibrational energies are expressed in meV, mass-weighted displacements
in amu^(1/2)·Å, times in seconds.  These two constants are the only pieces
of dimensional glue the formulas need.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Reduced Planck constant in the package unit system.

    Attributes
    ----------
    hbar_mev_s : float
        ħ in meV·s (CODATA value of ħ in eV·s, scaled).
    hbar_sq_mev_amu_a2 : float
        ħ² in meV·amu·Å².  Derived from the exact SI value of h, the exact
        meV, and the CODATA atomic mass constant; good to ~9 significant
        figures.
    """

    hbar_mev_s: float = 6.582119569e-13
    hbar_sq_mev_amu_a2: float = 4.180159286


CONSTANTS = PhysicalConstants()

HBAR_MEV_S = CONSTANTS.hbar_mev_s
HBAR_SQ_MEV_AMU_A2 = CONSTANTS.hbar_sq_mev_amu_a2
