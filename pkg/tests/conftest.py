import pytest

from confcohom import BUILTIN_SPACES, LaurentPoly, SpaceSpec


@pytest.fixture
def plane():
    return BUILTIN_SPACES["c"]


@pytest.fixture
def punctured_plane():
    return BUILTIN_SPACES["cstar"]


@pytest.fixture
def line():
    return BUILTIN_SPACES["r1"]


@pytest.fixture
def three_space():
    return BUILTIN_SPACES["r3"]


@pytest.fixture
def klein():
    return BUILTIN_SPACES["klein_pointed"]


def puncture(space: SpaceSpec, count: int) -> SpaceSpec:
    """The space with ``count`` extra punctures: adds count*T to the polynomial."""
    return SpaceSpec(
        name=f"{space.name}-minus-{count}",
        pc=space.pc + LaurentPoly.term(count, 1),
        dim=space.dim,
        i_acyclic=True,
        orientable=space.orientable,
        connected=space.connected,
    )
