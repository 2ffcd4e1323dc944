# Shared hypothesis strategies.
from hypothesis import strategies as st

from superinv.models.variable import EVEN, ODD, Variable, VarTable
from superinv.superpoly import Polynomial, monomial_parity

MIXED = VarTable((
    Variable(0, EVEN, "x", (0, 0), "x[1,1]"),
    Variable(1, EVEN, "x", (0, 1), "x[1,2]"),
    Variable(2, ODD, "g", (0,), "g1"),
    Variable(3, ODD, "g", (1,), "g2"),
    Variable(4, ODD, "g", (2,), "g3"),
), name="mixed")

GRASSMANN = VarTable.grassmann(4)


@st.composite
def monomials(draw, table: VarTable):
    ids = draw(st.lists(st.integers(0, len(table) - 1), unique=True, max_size=4))
    mono = []
    for vid in sorted(ids):
        exp = 1 if table.parity(vid) == ODD else draw(st.integers(1, 2))
        mono.append((vid, exp))
    return tuple(mono)


@st.composite
def polynomials(draw, table: VarTable = MIXED, parity: int | None = None, max_terms: int = 4):
    terms = {}
    for mono in draw(st.lists(monomials(table), max_size=max_terms)):
        if parity is not None and monomial_parity(table, mono) != parity:
            continue
        terms[mono] = draw(st.integers(-3, 3).filter(bool))
    return Polynomial(table, terms)


@st.composite
def grassmann_values(draw, parity: int, table: VarTable = GRASSMANN):
    """A Grassmann-algebra element of the given parity (with a body when even)."""
    f = draw(polynomials(table, parity=parity))
    if parity == EVEN:
        f = f + draw(st.integers(-2, 2))
    return f
