import json
import math

import pytest

from multiphonon import (
    DomainError,
    ModeLookupError,
    VibrationalMode,
    configurations_config_json,
    isotope_scale_energy,
    load_reference_dataset,
    parse_defect_config,
    reduced_mass,
    reference_records_csv,
)
from multiphonon.modes import MASS_C12, MASS_H1, MASS_H2

# Independent arithmetic (30-digit) on the embedded atomic masses.
MU_CH = 0.929744623046
MU_CD = 1.72463447528


class TestReducedMass:
    def test_symmetric_and_halving(self):
        assert reduced_mass(7.25, 7.25) == pytest.approx(7.25 / 2, rel=1e-15)
        assert reduced_mass(3.0, 11.0) == reduced_mass(11.0, 3.0)

    def test_reference_values(self):
        assert reduced_mass(MASS_C12, MASS_H1) == pytest.approx(MU_CH, rel=1e-10)
        assert reduced_mass(MASS_C12, MASS_H2) == pytest.approx(MU_CD, rel=1e-10)

    def test_below_both_masses(self):
        for a, b in [(1.0, 1.0), (0.5, 100.0), (12.0, 13.00335)]:
            assert reduced_mass(a, b) < min(a, b)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            reduced_mass(0.0, 1.0)
        with pytest.raises(DomainError):
            reduced_mass(1.0, -2.0)


class TestIsotopeScaleEnergy:
    def test_identity_and_reference_shift(self):
        assert isotope_scale_energy(359.0, 1.3, 1.3) == 359.0
        scaled = isotope_scale_energy(359.0, reduced_mass(MASS_C12, MASS_H1),
                                      reduced_mass(MASS_C12, MASS_H2))
        assert scaled == pytest.approx(263.589286546, rel=1e-10)
        # within half a percent of the tabulated deuterium mode energy
        assert abs(scaled - 263.0) / 263.0 < 5e-3

    def test_composition_is_transitive(self):
        one = isotope_scale_energy(100.0, 1.0, 1.7)
        two = isotope_scale_energy(one, 1.7, 2.9)
        direct = isotope_scale_energy(100.0, 1.0, 2.9)
        assert two == pytest.approx(direct, rel=1e-12)

    def test_monotone_and_homogeneous(self):
        assert isotope_scale_energy(100.0, 1.0, 2.0) < isotope_scale_energy(100.0, 1.0, 1.5)
        assert isotope_scale_energy(250.0, 1.1, 1.9) == pytest.approx(
            2.5 * isotope_scale_energy(100.0, 1.1, 1.9), rel=1e-14
        )

    def test_domain_errors(self):
        for args in [(0.0, 1.0, 1.0), (10.0, 0.0, 1.0), (10.0, 1.0, math.nan)]:
            with pytest.raises(DomainError):
                isotope_scale_energy(*args)


class TestReferenceDataset:
    def test_record_values(self, dataset):
        records, _ = dataset
        by_label = {record.variant_label: record for record in records}
        assert by_label["deuterium"].lifetime_us == 4.807
        assert by_label["deuterium"].lifetime_err_us == 0.018
        assert by_label["weak-13c"].zpl_shift_uev == -3.47
        assert by_label["strong-13c"].zpl_shift_uev == 78.04
        assert by_label["natural"].zpl_shift_uev == 0.0
        assert by_label["natural"].lifetime_us == 0.885
        assert by_label["double-13c"].structure == (13, 13, 1)
        assert by_label["strong-13c"].structure == (13, 12, 1)

    def test_configuration_values(self, natural, deuterium):
        assert natural.zpl_energy == 935.0
        assert natural.mode("ch-stretch").energy_ground == 359.0
        assert natural.mode("ch-stretch").energy_excited == 358.0
        assert natural.mode("ch-stretch").coupling == 0.58
        assert natural.mode("accepting").displacement == 0.734
        assert deuterium.mode("ch-stretch").energy_ground == 263.0
        assert deuterium.mode("ch-stretch").displacement == 0.002
        assert deuterium.mode("ch-stretch").coupling == 0.70
        assert deuterium.mode("accepting") == natural.mode("accepting")

    def test_csv_reproduces_source_decimals(self):
        text = reference_records_csv()
        for token in ("0.885", "0.004", "0.904", "0.921", "0.929", "0.001",
                      "4.807", "0.018", "+78.04", "-3.47", "+75.28", "+745"):
            assert token in text
        lines = text.strip().split("\n")
        assert len(lines) == 6  # header + five records

    def test_config_json_reproduces_source_decimals(self):
        text = configurations_config_json()
        for token in ('"zpl_energy_mev": 935', '"hbar_omega_g_mev": 359',
                      '"hbar_omega_e_mev": 358', '"hbar_omega_g_mev": 263',
                      '"hbar_omega_e_mev": 262', '"delta_q": 0.734',
                      '"delta_q": 0.001', '"delta_q": 0.002',
                      '"w_eg": 9.23', '"w_eg": 0.58', '"w_eg": 0.70',
                      '"hbar_omega_g_mev": 33.0'):
            assert token in text

    def test_config_json_round_trips_to_dataset(self, natural, deuterium):
        documents = json.loads(configurations_config_json())
        parsed = [parse_defect_config(json.dumps(doc)) for doc in documents]
        assert parsed[0] == natural
        assert parsed[1] == deuterium

    def test_dataset_is_fresh_per_call(self):
        first = load_reference_dataset()
        second = load_reference_dataset()
        assert first[0] == second[0]
        assert first[1] == second[1]


class TestTypes:
    def test_mode_validation(self):
        with pytest.raises(DomainError):
            VibrationalMode("m", -1.0, 33.0, 0.0, 1.0)
        with pytest.raises(DomainError):
            VibrationalMode("m", 33.0, 33.0, 0.0, -1.0)
        with pytest.raises(DomainError):
            VibrationalMode("m", 33.0, 33.0, math.inf, 1.0)
        with pytest.raises(DomainError):
            VibrationalMode("", 33.0, 33.0, 0.0, 1.0)

    def test_missing_mode_lookup(self, natural):
        with pytest.raises(ModeLookupError):
            natural.mode("breathing")

    def test_duplicate_mode_labels_rejected(self, natural):
        from multiphonon import DefectConfiguration

        mode = natural.mode("accepting")
        with pytest.raises(DomainError):
            DefectConfiguration("x", 935.0, (mode, mode))
