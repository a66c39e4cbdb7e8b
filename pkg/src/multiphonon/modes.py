"""Defect configurations, vibrational modes, and the reference dataset.

The embedded dataset describes the silicon T centre: measured zero-phonon
line shifts and excited-state lifetimes for five isotopic variants, and
the computed single-mode parameters (displacement, ground/excited phonon
energies, electron-phonon coupling) for the natural and deuterium variants.
Values are stored as the original decimal strings so exports reproduce
them digit for digit.
"""

import math
from dataclasses import dataclass, field, replace

from .errors import DomainError, ModeLookupError

# Atomic masses in amu, rounded at 1e-5 from the AME2020 atomic mass
# evaluation (12C is exact by definition of the amu).
MASS_H1 = 1.00783
MASS_H2 = 2.01410
MASS_C12 = 12.0
MASS_C13 = 13.00335


def _check_finite(value, name):
    if not (isinstance(value, (int, float)) and math.isfinite(value)):
        raise DomainError(f"{name} must be a finite number, got {value!r}")


@dataclass(frozen=True)
class VibrationalMode:
    """One effective vibrational mode of a defect transition.

    Attributes
    ----------
    label : str
        Mode name, e.g. ``"accepting"`` or ``"ch-stretch"``.
    energy_ground : float
        ħΩ_g in meV (final state of the emission transition).
    energy_excited : float
        ħΩ_e in meV (initial state).
    displacement : float
        Mass-weighted equilibrium offset ΔQ in amu^(1/2)·Å.
    coupling : float
        Electron-phonon coupling W in meV/(amu^(1/2)·Å).
    """

    label: str
    energy_ground: float
    energy_excited: float
    displacement: float
    coupling: float

    def __post_init__(self):
        if not self.label:
            raise DomainError("mode label must be non-empty")
        for name in ("energy_ground", "energy_excited"):
            value = getattr(self, name)
            _check_finite(value, name)
            if value <= 0:
                raise DomainError(f"{name} must be positive, got {value!r}")
        _check_finite(self.displacement, "displacement")
        _check_finite(self.coupling, "coupling")
        if self.coupling < 0:
            raise DomainError(f"coupling must be non-negative, got {self.coupling!r}")


@dataclass(frozen=True)
class DefectConfiguration:
    """ZPL energy plus the vibrational modes of one isotopic variant."""

    variant_label: str
    zpl_energy: float
    modes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        _check_finite(self.zpl_energy, "zpl_energy")
        if self.zpl_energy <= 0:
            raise DomainError(f"zpl_energy must be positive, got {self.zpl_energy!r}")
        object.__setattr__(self, "modes", tuple(self.modes))
        if not self.modes:
            raise DomainError("a configuration needs at least one vibrational mode")
        labels = [mode.label for mode in self.modes]
        if len(set(labels)) != len(labels):
            raise DomainError(f"mode labels must be unique, got {labels}")

    def mode(self, label):
        """Return the mode named *label* or raise :class:`ModeLookupError`."""
        for mode in self.modes:
            if mode.label == label:
                return mode
        raise ModeLookupError(
            f"no mode {label!r} in variant {self.variant_label!r}; "
            f"available: {[m.label for m in self.modes]}"
        )

    def with_mode(self, new_mode):
        """Copy of the configuration with the same-labelled mode replaced."""
        self.mode(new_mode.label)
        modes = tuple(new_mode if m.label == new_mode.label else m for m in self.modes)
        return replace(self, modes=modes)


@dataclass(frozen=True)
class ReferenceRecord:
    """Measured ZPL shift and lifetime of one isotopic variant.

    ``structure`` is the isotope triple (C_S, C_W, H) as mass numbers.
    The ``*_text`` fields carry the source decimal strings for digit-exact
    export; the float fields are parsed from them.
    """

    variant_label: str
    structure: tuple
    zpl_shift_uev: float
    lifetime_us: float
    lifetime_err_us: float
    zpl_shift_text: str
    lifetime_text: str
    lifetime_err_text: str


def reduced_mass(mass_a, mass_b):
    """Reduced mass mass_a·mass_b/(mass_a + mass_b) in amu; symmetric."""
    for name, value in (("mass_a", mass_a), ("mass_b", mass_b)):
        _check_finite(value, name)
        if value <= 0:
            raise DomainError(f"{name} must be positive, got {value!r}")
    return mass_a * mass_b / (mass_a + mass_b)


def isotope_scale_energy(energy, mu_old, mu_new):
    """Rescale a local-mode energy for an isotope substitution.

    Treats the mode as a diatomic oscillator, whose frequency goes as the
    inverse square root of the reduced mass:

        E_new = E_old * sqrt(mu_old / mu_new).

    Composable: scaling mu1 -> mu2 -> mu3 equals scaling mu1 -> mu3.
    """
    _check_finite(energy, "energy")
    if energy <= 0:
        raise DomainError(f"energy must be positive, got {energy!r}")
    for name, value in (("mu_old", mu_old), ("mu_new", mu_new)):
        _check_finite(value, name)
        if value <= 0:
            raise DomainError(f"{name} must be positive, got {value!r}")
    return energy * math.sqrt(mu_old / mu_new)


# --- embedded reference dataset -------------------------------------------
#
# Decimal strings are kept verbatim so that CSV/config exports reproduce
# them exactly.  The natural variant is the shift reference (blank shift).

_RECORD_ROWS = (
    # label, (C_S, C_W, H), shift, lifetime, lifetime error  [µeV, µs, µs]
    ("natural", (12, 12, 1), "", "0.885", "0.004"),
    ("strong-13c", (13, 12, 1), "+78.04", "0.904", "0.001"),
    ("weak-13c", (12, 13, 1), "-3.47", "0.921", "0.001"),
    ("double-13c", (13, 13, 1), "+75.28", "0.929", "0.001"),
    ("deuterium", (12, 12, 2), "+745", "4.807", "0.018"),
)

_ZPL_ENERGY_MEV = "935"

# label -> mode label -> (ΔQ, ħΩ_g, ħΩ_e, W) as printed
_MODE_ROWS = {
    "natural": (
        ("accepting", "0.734", "33.0", "33.0", "9.23"),
        ("ch-stretch", "0.001", "359", "358", "0.58"),
    ),
    "deuterium": (
        ("accepting", "0.734", "33.0", "33.0", "9.23"),
        ("ch-stretch", "0.002", "263", "262", "0.70"),
    ),
}

RECORDS_CSV_HEADER = "variant,c_s,c_w,h,zpl_shift_uev,lifetime_us,lifetime_err_us"


def load_reference_dataset():
    """The embedded measurements and model parameters.

    Returns
    -------
    (list of ReferenceRecord, list of DefectConfiguration)
        Five measured records (natural, strong/weak/double 13C, deuterium)
        and the two fully parameterized variants ("natural", "deuterium"),
        each with the "accepting" and "ch-stretch" modes.
    """
    records = [
        ReferenceRecord(
            variant_label=label,
            structure=structure,
            zpl_shift_uev=float(shift) if shift else 0.0,
            lifetime_us=float(lifetime),
            lifetime_err_us=float(err),
            zpl_shift_text=shift,
            lifetime_text=lifetime,
            lifetime_err_text=err,
        )
        for label, structure, shift, lifetime, err in _RECORD_ROWS
    ]
    configs = [
        DefectConfiguration(
            variant_label=label,
            zpl_energy=float(_ZPL_ENERGY_MEV),
            modes=tuple(
                VibrationalMode(
                    label=mode_label,
                    displacement=float(dq),
                    energy_ground=float(wg),
                    energy_excited=float(we),
                    coupling=float(w),
                )
                for mode_label, dq, wg, we, w in _MODE_ROWS[label]
            ),
        )
        for label in ("natural", "deuterium")
    ]
    return records, configs


def reference_records_csv():
    """The five measured records as CSV, decimals exactly as in the source."""
    lines = [RECORDS_CSV_HEADER]
    for label, structure, shift, lifetime, err in _RECORD_ROWS:
        c_s, c_w, h = structure
        lines.append(f"{label},{c_s},{c_w},{h},{shift},{lifetime},{err}")
    return "\n".join(lines) + "\n"


def configurations_config_json():
    """Both parameterized variants in the config file format.

    The document is a JSON array of configuration objects.  It is built
    from the stored decimal strings (not floats) so every number appears
    digit for digit as in the source dataset.
    """
    docs = []
    for label in ("natural", "deuterium"):
        modes = []
        for mode_label, dq, wg, we, w in _MODE_ROWS[label]:
            modes.append(
                "    {\n"
                f'      "label": "{mode_label}",\n'
                f'      "hbar_omega_g_mev": {wg},\n'
                f'      "hbar_omega_e_mev": {we},\n'
                f'      "delta_q": {dq},\n'
                f'      "w_eg": {w}\n'
                "    }"
            )
        docs.append(
            "  {\n"
            f'    "variant_label": "{label}",\n'
            f'    "zpl_energy_mev": {_ZPL_ENERGY_MEV},\n'
            '    "modes": [\n' + ",\n".join(modes) + "\n    ]\n"
            "  }"
        )
    return "[\n" + ",\n".join(docs) + "\n]\n"
