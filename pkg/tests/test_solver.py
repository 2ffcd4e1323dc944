import pytest

from superinv.action import build_arena
from superinv.errors import InvalidSpecError, StoppedError
from superinv.invariants import scalar_product
from superinv.models.specs import CopySpec, FamilySpec
from superinv.parsers.poly_text import canonical_text
from superinv.solver import (
    Subspace,
    compositions,
    invariant_space,
    is_invariant,
    minimal_copies,
    monomial_basis,
    polarization_closure,
    span_dimension,
    verify_basic_set,
)
from superinv.superpoly import Polynomial, mul
from superinv.workers.images import ImageWorker


def test_compositions():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert compositions(0, 3) == [(0, 0, 0)]
    assert compositions(1, 0) == []


def test_monomial_basis_single_even_variable():
    arena = build_arena((1, 0), (1, 0, 0, 0))
    assert monomial_basis(arena, 3) == [((0, 3),)]


def test_monomial_basis_two_odd_variables():
    arena = build_arena((0, 1), (1, 0, 1, 0))
    assert monomial_basis(arena, 2) == [((0, 1), (1, 1))]
    assert monomial_basis(arena, 3) == []


def test_monomial_basis_count(gl_arena):
    assert len(monomial_basis(gl_arena, 2)) == 32
    assert len(monomial_basis(gl_arena, 0)) == 1


def test_monomial_basis_by_weight(gl_arena):
    total = sum(len(monomial_basis(gl_arena, 3, w)) for w in [(3, 0, 0, 0), (1, 1, 1, 0), (0, 0, 2, 1)])
    assert total == 2 + 8 + 4
    assert monomial_basis(gl_arena, 3, (1, 1, 0, 0)) == []


def test_invariant_space_of_gl1(derivations_of):
    arena = build_arena((1, 0), (1, 0, 1, 0))
    derivations = derivations_of(arena, "gl")
    assert invariant_space(arena, derivations, 0)[0] == 1
    assert invariant_space(arena, derivations, 1)[0] == 0
    dim, basis = invariant_space(arena, derivations, 2)
    assert dim == 1
    assert canonical_text(basis[0]) == "1 * x[1,1]*xs[1,1]"


def test_invariant_space_is_sound(gl_arena, derivations_of):
    derivations = derivations_of(gl_arena, "gl")
    dim, basis = invariant_space(gl_arena, derivations, 2)
    assert dim == len(basis) == 4
    assert all(is_invariant(f, derivations) for f in basis)


def test_invariant_space_without_derivations(gl_arena):
    assert invariant_space(gl_arena, [], 2)[0] == 32


def test_subspace_splits_weights(gl_arena):
    space = Subspace(gl_arena)
    a, b = gl_arena.x(0, 0), gl_arena.xs(0, 0)
    grown = space.add([mul(a, a) + mul(a, b), mul(a, a)])
    assert sorted(grown) == [(1, 0, 1, 0), (2, 0, 0, 0)]
    assert space.dimension(2) == 2
    assert space.add([mul(a, b).scale(3)]) == []


def test_closure_of_nothing_is_the_constants(gl_arena):
    closure = polarization_closure(gl_arena, [], 3)
    assert [closure.dimension(d) for d in range(4)] == [1, 0, 0, 0]


def test_polarizations_fill_out_the_scalar_products():
    arena = build_arena((1, 1), (2, 0, 1, 0))
    with_pol = polarization_closure(arena, [scalar_product(arena, 0, 0)], 2)
    without = polarization_closure(arena, [scalar_product(arena, 0, 0)], 2, polarize=False)
    assert with_pol.dimension(2) == 2
    assert without.dimension(2) == 1


def test_closure_is_monotone(gl_arena):
    small = [scalar_product(gl_arena, 0, 0)]
    large = small + [scalar_product(gl_arena, 1, 1)]
    a = polarization_closure(gl_arena, small, 3, polarize=False)
    b = polarization_closure(gl_arena, large, 3, polarize=False)
    assert all(a.dimension(d) <= b.dimension(d) for d in range(4))


def test_span_dimension(gl_arena):
    a, b = gl_arena.x(0, 0), gl_arena.xs(0, 0)
    assert span_dimension([a, b, a + b, Polynomial(gl_arena.table)]) == 2
    assert span_dimension([]) == 0


def test_verify_gl():
    report = verify_basic_set(FamilySpec("gl", 1, 1), CopySpec(1, 1, 1, 1), 3)
    assert report.passed
    assert [r.degree for r in report.rows] == [0, 1, 2, 3]
    assert report.fixtures_version == "1.1"


def test_verify_is_deterministic():
    first = verify_basic_set(FamilySpec("gl", 1, 0), CopySpec(2, 0, 2, 0), 3)
    second = verify_basic_set(FamilySpec("gl", 1, 0), CopySpec(2, 0, 2, 0), 3)
    assert first.to_dict() == second.to_dict()


@pytest.mark.parametrize("family,copies", [("osp", (1, 0, 1, 2)), ("pe", (0, 1, 1, 1)), ("q", (1, 1, 1, 0))])
def test_verify_checks_the_arena(family, copies):
    dims = (1, 2) if family == "osp" else (1, 1)
    with pytest.raises(InvalidSpecError):
        verify_basic_set(FamilySpec(family, *dims), CopySpec(*copies), 2)


@pytest.mark.parametrize("family,dims,copies", [
    ("gl", (1, 1), (1, 0, 1, 1)),
    ("sl", (1, 1), (1, 1, 0, 1)),
    ("osp", (1, 2), (0, 0, 1, 1)),
    ("pe", (2, 2), (0, 0, 1, 2)),
    ("sq", (2, 2), (1, 0, 2, 0)),
])
def test_verify_rejects_arenas_below_the_minimal_copies(family, dims, copies):
    with pytest.raises(InvalidSpecError, match="unsupported config"):
        verify_basic_set(FamilySpec(family, *dims), CopySpec(*copies), 2)


def test_minimal_copies():
    assert minimal_copies(FamilySpec("gl", 2, 1)) == (2, 1, 2, 1)
    assert minimal_copies(FamilySpec("osp", 1, 2)) == (0, 0, 1, 2)
    assert minimal_copies(FamilySpec("q", 2, 2)) == (2, 0, 2, 0)


def test_verify_sq_two():
    report = verify_basic_set(FamilySpec("sq", 2, 2), CopySpec(2, 0, 2, 0), 2)
    assert report.passed, report.to_dict()
    assert [(r.degree, r.dim_invariants) for r in report.rows] == [(0, 1), (1, 0), (2, 8)]
    assert len(report.generators) == 8
    assert "q_lambda of size above 1 exceed the degree cap 2" in report.notes


def test_worker_pool_matches_inline(gl_arena, derivations_of):
    derivations = derivations_of(gl_arena, "gl")
    monos = monomial_basis(gl_arena, 2)
    inline = ImageWorker({"workers": 1}).run(derivations, monos)
    pooled = ImageWorker({"workers": 2, "chunk_size": 8}).run(derivations, monos)
    assert inline == pooled


def test_stopped_worker(gl_arena, derivations_of):
    worker = ImageWorker({"workers": 1})
    worker.stop()
    with pytest.raises(StoppedError):
        worker.run(derivations_of(gl_arena, "gl"), monomial_basis(gl_arena, 1))
