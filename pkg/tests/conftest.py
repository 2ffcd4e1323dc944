import pytest

from superinv.action import build_arena
from superinv.models.specs import FamilySpec
from superinv.solver import family_derivations


@pytest.fixture
def gl_arena():
    """dimV (1|1) with one copy of each of V, Pi(V), V*, Pi(V)*."""
    return build_arena((1, 1), (1, 1, 1, 1))


@pytest.fixture
def osp_arena():
    return build_arena((1, 2), (0, 0, 1, 2))


@pytest.fixture
def pe_arena():
    return build_arena((1, 1), (0, 0, 1, 1))


@pytest.fixture
def q_arena():
    return build_arena((1, 1), (1, 0, 1, 0))


@pytest.fixture
def derivations_of():
    def build(arena, family):
        return family_derivations(arena, FamilySpec(family, *arena.dim_v))
    return build


@pytest.fixture
def sq2_arena():
    return build_arena((2, 2), (2, 0, 2, 0))
