import pytest

from g2quat.gammaclasses import load_classes
from g2quat.octonions import aut_group_array


@pytest.fixture(scope="session")
def classes():
    return load_classes()


@pytest.fixture(scope="session")
def group():
    return aut_group_array()
