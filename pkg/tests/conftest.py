import pytest

from edgeprim import (
    automorphism_group,
    hoffman_singleton,
    perfect_core,
    reduce_generators,
)


@pytest.fixture(scope="session")
def hs_graph():
    return hoffman_singleton()


@pytest.fixture(scope="session")
def hs_aut(hs_graph):
    return automorphism_group(hs_graph)


@pytest.fixture(scope="session")
def hs_core(hs_aut):
    return reduce_generators(perfect_core(reduce_generators(hs_aut)))
