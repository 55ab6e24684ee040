import pytest

from devmatch import default_catalog, profile_from_dict, zero_profile

# Worked scenario 1: weakened left arm (slight tremor, reduced mobility).
EXAMPLE1_DOC = {"limbs": {"left_arm": {"movement_disturbance": 1, "mobility": 1}}}

# Worked scenario 2: severe movement disturbance in all limbs plus partially
# limited vision.
EXAMPLE2_DOC = {
    "limbs": {"all_limbs": {"movement_disturbance": 2}},
    "perception": {"vision": 1},
}


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture
def zero():
    return zero_profile()


@pytest.fixture
def example1():
    return profile_from_dict(EXAMPLE1_DOC)


@pytest.fixture
def example2():
    return profile_from_dict(EXAMPLE2_DOC)
