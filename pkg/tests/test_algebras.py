from itertools import product

import pytest

from superinv.algebras import (
    BilinearForm,
    QStructure,
    basis_of,
    dimension,
    form_matrix,
    is_member,
    preserves_form,
    q_complement_F,
    span_contains,
)
from superinv.errors import InvalidSpecError
from superinv.models.specs import FamilySpec
from superinv.models.variable import EVEN, ODD
from superinv.supermatrix import Format, SuperMatrix, bracket, qtr, str_

SMALL = [
    FamilySpec("gl", 1, 1), FamilySpec("gl", 2, 1), FamilySpec("sl", 1, 1), FamilySpec("sl", 2, 1),
    FamilySpec("osp", 1, 2), FamilySpec("pe", 1, 1), FamilySpec("pe", 2, 2), FamilySpec("spe", 2, 2),
    FamilySpec("q", 1, 1), FamilySpec("q", 2, 2), FamilySpec("sq", 2, 2),
]


@pytest.mark.parametrize("family,n,m,dim", [
    ("gl", 1, 1, 4), ("gl", 2, 1, 9), ("sl", 1, 1, 3), ("sl", 2, 1, 8),
    ("osp", 1, 2, 5), ("osp", 2, 2, 8), ("pe", 1, 1, 2), ("pe", 2, 2, 8), ("spe", 2, 2, 7),
    ("q", 1, 1, 2), ("q", 2, 2, 8), ("sq", 2, 2, 7),
])
def test_dimensions(family, n, m, dim):
    assert dimension(FamilySpec(family, n, m)) == dim


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_basis_elements_are_members(spec):
    for x in basis_of(spec):
        assert is_member(x, spec)
        assert x.parity() in (EVEN, ODD)


@pytest.mark.parametrize("spec", SMALL, ids=str)
def test_closed_under_bracket(spec):
    basis = basis_of(spec)
    for x, y in product(basis, repeat=2):
        assert span_contains(basis, bracket(x, y))


def test_basis_order_puts_even_first():
    parities = [x.parity() for x in basis_of(FamilySpec("gl", 2, 1))]
    assert parities == sorted(parities)


def test_special_algebras_are_supertraceless():
    for x in basis_of(FamilySpec("sl", 2, 1)) + basis_of(FamilySpec("spe", 2, 2)):
        assert str_(x).is_zero()


def test_osp_form():
    form = form_matrix(FamilySpec("osp", 1, 2))
    assert isinstance(form, BilinearForm)
    assert form.parity == EVEN
    assert form.matrix == SuperMatrix.constant(Format(1, 2), [[1, 0, 0], [0, 0, 1], [0, -1, 0]])


def test_pe_form_is_odd():
    form = form_matrix(FamilySpec("pe", 1, 1))
    assert form.parity == ODD
    assert form.matrix == SuperMatrix.constant(Format(1, 1), [[0, 1], [1, 0]])


def test_q_structure():
    form = form_matrix(FamilySpec("q", 2, 2))
    assert isinstance(form, QStructure)
    j = form.j
    assert bracket(j, j).scale("1/2") == -SuperMatrix.identity(Format(2, 2))


def test_preserves_form():
    spec = FamilySpec("osp", 1, 2)
    form = form_matrix(spec)
    assert not preserves_form(SuperMatrix.unit(Format(1, 2), 0, 0), form)
    assert preserves_form(SuperMatrix.zero(Format(1, 2)), form)
    assert not preserves_form(SuperMatrix.identity(Format(1, 2)), form)
    pe = form_matrix(FamilySpec("pe", 1, 1))
    assert preserves_form(SuperMatrix.unit(Format(1, 1), 0, 1), pe)
    assert not preserves_form(SuperMatrix.unit(Format(1, 1), 1, 0), pe)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_q_complement(n):
    f = q_complement_F(n)
    assert qtr(f) == 1
    assert f.parity() == ODD
    assert is_member(f, FamilySpec("q", n, n))
    assert not is_member(f, FamilySpec("sq", n, n))


@pytest.mark.parametrize("n", [1, 2])
def test_sq_plus_complement_spans_q(n):
    sq = basis_of(FamilySpec("sq", n, n)) + [q_complement_F(n)]
    q = basis_of(FamilySpec("q", n, n))
    assert len(sq) == len(q)
    assert all(span_contains(sq, x) for x in q)


@pytest.mark.parametrize("family,n,m", [("osp", 1, 1), ("pe", 1, 2), ("q", 2, 1), ("gl", 0, 0), ("so", 2, 0)])
def test_invalid_specs(family, n, m):
    with pytest.raises(InvalidSpecError):
        FamilySpec(family, n, m)


def test_q_complement_needs_positive_n():
    with pytest.raises(InvalidSpecError):
        q_complement_F(0)
