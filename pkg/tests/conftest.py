import pytest

from multiphonon import OscillatorPair, load_reference_dataset


@pytest.fixture(scope="session")
def dataset():
    return load_reference_dataset()


@pytest.fixture(scope="session")
def natural(dataset):
    return dataset[1][0]


@pytest.fixture(scope="session")
def deuterium(dataset):
    return dataset[1][1]


@pytest.fixture(scope="session")
def accepting_pair(natural):
    mode = natural.mode("accepting")
    return OscillatorPair(mode.energy_excited, mode.energy_ground, mode.displacement)


@pytest.fixture(scope="session")
def ch_stretch_pair(natural):
    mode = natural.mode("ch-stretch")
    return OscillatorPair(mode.energy_excited, mode.energy_ground, mode.displacement)
