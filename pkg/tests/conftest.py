import pytest
from hypothesis import settings

from buildings import BuildingSpec, Family, build_chamber_graph, enumerate_chambers

settings.register_profile("default", max_examples=50, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fano_labels():
    return enumerate_chambers(BuildingSpec(Family.SPHERICAL_A2, 2), 3)


@pytest.fixture(scope="session")
def fano_graph(fano_labels):
    return build_chamber_graph(fano_labels, BuildingSpec(Family.SPHERICAL_A2, 2))


@pytest.fixture(scope="session")
def gl4_labels():
    return enumerate_chambers(BuildingSpec(Family.SPHERICAL_A3, 2), 6)


@pytest.fixture(scope="session")
def gl4_graph(gl4_labels):
    return build_chamber_graph(gl4_labels, BuildingSpec(Family.SPHERICAL_A3, 2))
