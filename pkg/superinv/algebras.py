# superinv/algebras.py
"""Bases and preserved structures of gl, sl, osp, pe, spe, q, sq in standard format."""
import logging
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpecError
from .linalg import integer_normalize, nullspace, rank
from .models.specs import FamilySpec
from .models.variable import EVEN, ODD
from .supermatrix import Format, SuperMatrix, bracket, matadd, matmul, str_, supertranspose

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BilinearForm:
    matrix: SuperMatrix
    parity: int
    symmetry: str           # "supersymmetric" (osp) or "odd-symmetric" (pe)


@dataclass(frozen=True)
class QStructure:
    """Odd operator J with J^2 = -id; q(n) is its supercentralizer."""
    j: SuperMatrix
    parity: int = ODD


def family_format(spec: FamilySpec) -> Format:
    return Format(spec.n, spec.m)


def form_matrix(spec: FamilySpec) -> BilinearForm | QStructure:
    n, m = spec.n, spec.m
    size = n + m
    rows = [[0] * size for _ in range(size)]
    if spec.family == "osp":
        for i in range(n):                  # antidiagonal orthogonal part on V_0
            rows[i][n - 1 - i] = 1
        r = m // 2
        for j in range(r):                  # (0 1_r; -1_r 0) on V_1
            rows[n + j][n + r + j] = 1
            rows[n + r + j][n + j] = -1
        return BilinearForm(SuperMatrix.constant(family_format(spec), rows, parity=EVEN),
                            EVEN, "supersymmetric")
    if spec.family in ("pe", "spe"):
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = 1
        return BilinearForm(SuperMatrix.constant(family_format(spec), rows, parity=ODD),
                            ODD, "odd-symmetric")
    if spec.family in ("q", "sq"):
        for i in range(n):
            rows[i][n + i] = 1
            rows[n + i][i] = -1
        return QStructure(SuperMatrix.constant(family_format(spec), rows, parity=ODD))
    raise InvalidSpecError(f"{spec.family} preserves no form")


def preserves_form(x: SuperMatrix, form: BilinearForm | QStructure) -> bool:
    """X^st B + (-1)^{p(X)p(B)} B X == 0 (for q: [X, J] == 0)."""
    if isinstance(form, QStructure):
        return bracket(x, form.j).is_zero()
    b = form.matrix
    sign = -1 if (x.parity() * form.parity) % 2 else 1
    return matadd(matmul(supertranspose(x), b), matmul(b, x), sign).is_zero()


def _flat(x: SuperMatrix) -> list[Fraction]:
    return [e.constant_term() for row in x.entries for e in row]


def _queer_trace_block(x: SuperMatrix) -> Fraction:
    n = x.fmt.even
    return sum((x.entries[i][n + i].constant_term() for i in range(n)), Fraction(0))


def _constraints(spec: FamilySpec, x: SuperMatrix, form) -> list[Fraction]:
    fam = spec.family
    values: list[Fraction] = []
    if fam in ("sl", "spe"):
        values.append(str_(x).constant_term())
    if fam in ("osp", "pe", "spe"):
        sign = -1 if (x.parity() * form.parity) % 2 else 1
        values += _flat(matadd(matmul(supertranspose(x), form.matrix), matmul(form.matrix, x), sign))
    if fam in ("q", "sq"):
        values += _flat(bracket(x, form.j))
    if fam == "sq":
        values.append(_queer_trace_block(x))
    return values


def _support_class(x: SuperMatrix) -> int:
    cells = [(i, j) for i, row in enumerate(x.entries) for j, e in enumerate(row) if not e.is_zero()]
    if all(i == j for i, j in cells):
        return 0
    if all(i < j for i, j in cells):
        return 1
    if all(i > j for i, j in cells):
        return 2
    return 3


def basis_of(spec: FamilySpec) -> list[SuperMatrix]:
    """Integer basis: even Cartan, positive, negative, remaining even, then odd."""
    fmt = family_format(spec)
    form = form_matrix(spec) if spec.family not in ("gl", "sl") else None
    size = fmt.size
    found = []
    for parity in (EVEN, ODD):
        units = [(i, j) for i in range(size) for j in range(size)
                 if (fmt.parity(i) + fmt.parity(j)) & 1 == parity]
        if not units:
            continue
        columns = [_constraints(spec, SuperMatrix.unit(fmt, i, j), form) for i, j in units]
        n_rows = len(columns[0])
        rows = [{u: col[r] for u, col in enumerate(columns) if col[r]} for r in range(n_rows)]
        for vec in nullspace(rows, len(units)) if n_rows else [{u: Fraction(1)} for u in range(len(units))]:
            vec = integer_normalize(vec)
            grid = [[0] * size for _ in range(size)]
            for u, c in vec.items():
                i, j = units[u]
                grid[i][j] = c
            mat = SuperMatrix.constant(fmt, grid, parity=parity)
            found.append((parity, _support_class(mat) if parity == EVEN else 0, len(found), mat))
    found.sort(key=lambda t: t[:3])
    basis = [mat for *_, mat in found]
    log.debug("basis of %s has %d elements", spec, len(basis))
    return basis


def is_member(x: SuperMatrix, spec: FamilySpec) -> bool:
    form = form_matrix(spec) if spec.family not in ("gl", "sl") else None
    return not any(_constraints(spec, x, form))


def dimension(spec: FamilySpec) -> int:
    return len(basis_of(spec))


def span_contains(basis: list[SuperMatrix], x: SuperMatrix) -> bool:
    """Exact rank test: is x in the span of basis?"""
    rows = [dict((k, v) for k, v in enumerate(_flat(b)) if v) for b in basis]
    ncols = x.size * x.size
    target = dict((k, v) for k, v in enumerate(_flat(x)) if v)
    return rank(rows, ncols) == rank(rows + [target], ncols)


def q_complement_F(n: int) -> SuperMatrix:
    """Odd F in q(n) with qtr F = 1: B-block (1/n) id."""
    if n < 1:
        raise InvalidSpecError("q_complement_F needs n >= 1")
    size = 2 * n
    grid = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        grid[i][n + i] = Fraction(1, n)
        grid[n + i][i] = Fraction(1, n)
    return SuperMatrix.constant(Format(n, n), grid, parity=ODD)
