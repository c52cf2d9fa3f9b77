import pytest

from orbitcat import group_preset

CATALOG = ["C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "D6", "S4", "A5"]
SMALL = ["C2", "C3", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "D6"]


@pytest.fixture(scope="session")
def S3():
    return group_preset("S3")


@pytest.fixture(scope="session")
def catalog():
    return {name: group_preset(name) for name in CATALOG}
