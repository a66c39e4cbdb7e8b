"""Multiphonon nonradiative decay and emission kinetics of quantum emitters.

A numerical engine for the single-effective-mode model of multiphonon
nonradiative decay in solid-state emitters: stable Franck-Condon overlaps
between frequency-mismatched displaced harmonic oscillators, T = 0 decay
rates with Gaussian-broadened energy conservation, isotope scaling of
local-mode energies, radiative/nonradiative rate budgets (quantum
efficiency, ZPL fractions, Purcell-enhanced cyclicity), and lifetime
extraction from photon-counting transients.  Ships with a reference
dataset for the silicon T centre isotopic variants.
"""

from .constants import CONSTANTS, PhysicalConstants
from .errors import (
    AccuracyError,
    CapabilityError,
    ConfigSyntaxError,
    ConfigValidationError,
    DegeneracyError,
    DomainError,
    FitError,
    FitPreconditionError,
    InfeasibleKineticsError,
    ModeLookupError,
    MultiphononError,
)
from .oscillator import (
    MAX_CERTIFIED_N,
    OscillatorPair,
    fc_overlap,
    fc_overlap_matrix,
    ho_length_scale,
    huang_rhys_factor,
    transition_moment,
    transition_moments,
)
from .quadrature import (
    GridSpec,
    quadrature_overlap_oracle,
    quadrature_overlap_table,
    quadrature_overlap_with_error,
)
from .modes import (
    DefectConfiguration,
    ReferenceRecord,
    VibrationalMode,
    configurations_config_json,
    isotope_scale_energy,
    load_reference_dataset,
    reduced_mass,
    reference_records_csv,
)
from .rates import (
    RateResult,
    RateTerm,
    SweepPoint,
    gaussian_delta,
    isotope_rate_ratio,
    nonradiative_rate,
    rate_sweep,
    sweep_grid,
)
from .kinetics import (
    KineticsResult,
    cyclicity,
    infer_radiative_rate,
    purcell_radiative_efficiency,
    total_lifetime,
    zpl_emission_fraction,
)
from .transient import (
    LifetimeFit,
    TransientHistogram,
    fit_lifetime,
    read_histogram_csv,
    simulate_transient,
    write_histogram_csv,
)
from .config_io import parse_defect_config, serialize_defect_config

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "CapabilityError",
    "ConfigSyntaxError",
    "ConfigValidationError",
    "CONSTANTS",
    "cyclicity",
    "DefectConfiguration",
    "DegeneracyError",
    "DomainError",
    "fc_overlap",
    "fc_overlap_matrix",
    "FitError",
    "FitPreconditionError",
    "fit_lifetime",
    "gaussian_delta",
    "GridSpec",
    "ho_length_scale",
    "huang_rhys_factor",
    "InfeasibleKineticsError",
    "infer_radiative_rate",
    "isotope_rate_ratio",
    "isotope_scale_energy",
    "KineticsResult",
    "LifetimeFit",
    "load_reference_dataset",
    "MAX_CERTIFIED_N",
    "ModeLookupError",
    "MultiphononError",
    "nonradiative_rate",
    "OscillatorPair",
    "parse_defect_config",
    "PhysicalConstants",
    "purcell_radiative_efficiency",
    "quadrature_overlap_oracle",
    "quadrature_overlap_table",
    "quadrature_overlap_with_error",
    "RateResult",
    "RateTerm",
    "rate_sweep",
    "read_histogram_csv",
    "reduced_mass",
    "ReferenceRecord",
    "reference_records_csv",
    "configurations_config_json",
    "serialize_defect_config",
    "simulate_transient",
    "sweep_grid",
    "SweepPoint",
    "total_lifetime",
    "TransientHistogram",
    "transition_moment",
    "transition_moments",
    "VibrationalMode",
    "write_histogram_csv",
    "zpl_emission_fraction",
]
