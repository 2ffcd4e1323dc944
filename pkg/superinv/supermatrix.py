# superinv/supermatrix.py
"""Supermatrices in standard format over a supercommutative polynomial ring."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import NamedTuple

from sympy.combinatorics import Permutation

from . import conventions
from .errors import (
    FormatMismatchError,
    NonHomogeneousError,
    NonInvertibleError,
    NonTerminatingError,
    OddEntryError,
    ShapeError,
)
from .linalg import inverse
from .models.variable import EVEN, ODD, SCALARS, VarTable
from .superpoly import LocalizedElement, Polynomial, add, mul

Grid = tuple  # tuple[tuple[Polynomial, ...], ...]


class Format(NamedTuple):
    """Standard format: `even` even rows/columns followed by `odd` odd ones."""
    even: int
    odd: int

    @property
    def size(self) -> int:
        return self.even + self.odd

    @property
    def parities(self) -> tuple[int, ...]:
        return (EVEN,) * self.even + (ODD,) * self.odd

    def parity(self, i: int) -> int:
        return EVEN if i < self.even else ODD


# ---- plain grids -----------------------------------------------------------

def _zero_grid(rows: int, cols: int, table: VarTable) -> Grid:
    z = Polynomial(table)
    return tuple(tuple(z for _ in range(cols)) for _ in range(rows))


def _identity_grid(n: int, table: VarTable) -> Grid:
    one, z = Polynomial.constant(table, 1), Polynomial(table)
    return tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))


def grid_mul(a: Grid, b: Grid, table: VarTable) -> Grid:
    if a and b and len(a[0]) != len(b):
        raise FormatMismatchError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = Polynomial(table)
            for k, x in enumerate(row):
                if x.is_zero() or b[k][j].is_zero():
                    continue
                acc = add(acc, mul(x, b[k][j]))
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def grid_add(a: Grid, b: Grid, c=1) -> Grid:
    return tuple(tuple(add(x, y, c) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def grid_is_zero(a: Grid) -> bool:
    return all(x.is_zero() for row in a for x in row)


def grid_trace(a: Grid, table: VarTable) -> Polynomial:
    acc = Polynomial(table)
    for i in range(len(a)):
        acc = add(acc, a[i][i])
    return acc


def det_even(grid, table: VarTable | None = None) -> Polynomial:
    """Leibniz determinant of a square grid of even (mutually commuting) entries."""
    n = len(grid)
    if table is None:
        table = grid[0][0].table if n else SCALARS
    if any(len(row) != n for row in grid):
        raise ShapeError("det_even needs a square grid")
    for row in grid:
        for x in row:
            try:
                parity = x.parity()
            except NonHomogeneousError:
                parity = ODD
            if parity == ODD and not x.is_zero():
                raise OddEntryError("det_even only accepts even entries")
    if n == 0:
        return Polynomial.constant(table, 1)
    acc = Polynomial(table)
    for perm in permutations(range(n)):
        term = Polynomial.constant(table, Permutation(list(perm)).signature())
        for i, j in enumerate(perm):
            if grid[i][j].is_zero():
                term = None
                break
            term = mul(term, grid[i][j])
        if term is not None:
            acc = add(acc, term)
    return acc


def adjugate(grid, table: VarTable) -> Grid:
    n = len(grid)
    if n == 1:
        return ((Polynomial.constant(table, 1),),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [[grid[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            cof = det_even(minor, table)
            row.append(cof if (i + j) % 2 == 0 else cof.scale(-1))
        out.append(tuple(row))
    return tuple(out)


def inverse_grassmann(grid, table: VarTable) -> Grid:
    """Inverse of an even grid whose body is a rational invertible matrix."""
    n = len(grid)
    body = []
    for row in grid:
        brow = []
        for x in row:
            b = x.body()
            if not b.is_constant():
                raise NonInvertibleError("inverse_grassmann needs entries with rational bodies")
            brow.append(b.constant_term())
        body.append(brow)
    body_inv = inverse(body)
    d0_inv = tuple(tuple(Polynomial.constant(table, c) for c in row) for row in body_inv)
    nil = tuple(tuple(add(x, Polynomial.constant(table, body[i][j]), -1)
                      for j, x in enumerate(row)) for i, row in enumerate(grid))
    step = tuple(tuple(x.scale(-1) for x in row) for row in grid_mul(d0_inv, nil, table))
    result = d0_inv
    power = _identity_grid(n, table)
    for _ in range(table.odd_count() + 2):
        power = grid_mul(power, step, table)
        if grid_is_zero(power):
            return result
        result = grid_add(result, grid_mul(power, d0_inv, table))
    raise NonTerminatingError("Neumann series for the inverse did not terminate")


# ---- supermatrices ---------------------------------------------------------

@dataclass(frozen=True)
class SuperMatrix:
    fmt: Format
    entries: Grid
    table: VarTable = SCALARS
    declared_parity: int | None = None

    def __post_init__(self):
        n = self.fmt.size
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ShapeError(f"entries must be {n}x{n} for format {tuple(self.fmt)}")
        if self.declared_parity is not None:
            for i, row in enumerate(self.entries):
                for j, x in enumerate(row):
                    if x.is_zero():
                        continue
                    want = (self.fmt.parity(i) + self.fmt.parity(j) + self.declared_parity) & 1
                    if x.parity() != want:
                        raise NonHomogeneousError(f"entry ({i},{j}) breaks the declared parity")

    # constructors
    @classmethod
    def constant(cls, fmt: Format, rows, table: VarTable = SCALARS, parity: int | None = None):
        entries = tuple(tuple(Polynomial.constant(table, c) for c in row) for row in rows)
        return cls(Format(*fmt), entries, table, parity)

    @classmethod
    def identity(cls, fmt: Format, table: VarTable = SCALARS) -> "SuperMatrix":
        fmt = Format(*fmt)
        return cls(fmt, _identity_grid(fmt.size, table), table, EVEN)

    @classmethod
    def zero(cls, fmt: Format, table: VarTable = SCALARS) -> "SuperMatrix":
        fmt = Format(*fmt)
        return cls(fmt, _zero_grid(fmt.size, fmt.size, table), table)

    @classmethod
    def unit(cls, fmt: Format, i: int, j: int, table: VarTable = SCALARS) -> "SuperMatrix":
        """Matrix unit E_ij."""
        fmt = Format(*fmt)
        rows = [[1 if (r, c) == (i, j) else 0 for c in range(fmt.size)] for r in range(fmt.size)]
        return cls.constant(fmt, rows, table, (fmt.parity(i) + fmt.parity(j)) & 1)

    # accessors
    @property
    def size(self) -> int:
        return self.fmt.size

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return grid_is_zero(self.entries)

    def is_constant(self) -> bool:
        return all(x.is_constant() for row in self.entries for x in row)

    def blocks(self) -> tuple[Grid, Grid, Grid, Grid]:
        a = self.fmt.even
        e = self.entries
        top, bottom = e[:a], e[a:]
        return (tuple(r[:a] for r in top), tuple(r[a:] for r in top),
                tuple(r[:a] for r in bottom), tuple(r[a:] for r in bottom))

    def parity(self) -> int:
        """Homogeneous parity inferred from the entries (declared parity for 0)."""
        found = set()
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if x.is_zero():
                    continue
                try:
                    found.add((x.parity() + self.fmt.parity(i) + self.fmt.parity(j)) & 1)
                except NonHomogeneousError:
                    found.update((EVEN, ODD))
        if len(found) > 1:
            raise NonHomogeneousError("supermatrix is not parity-homogeneous")
        if found:
            return found.pop()
        return self.declared_parity if self.declared_parity is not None else EVEN

    def over(self, table: VarTable) -> "SuperMatrix":
        """Lift a constant matrix into another variable table."""
        if not self.is_constant():
            raise FormatMismatchError("only constant matrices can change table")
        rows = [[x.constant_term() for x in row] for row in self.entries]
        return SuperMatrix.constant(self.fmt, rows, table, self.declared_parity)

    def scale(self, c) -> "SuperMatrix":
        """Entrywise right multiplication by a scalar or a polynomial."""
        if isinstance(c, Polynomial):
            entries = tuple(tuple(mul(x, c) for x in row) for row in self.entries)
            return SuperMatrix(self.fmt, entries, self.table)
        entries = tuple(tuple(x.scale(c) for x in row) for row in self.entries)
        return SuperMatrix(self.fmt, entries, self.table, self.declared_parity)

    def transpose(self) -> "SuperMatrix":
        n = self.size
        return SuperMatrix(self.fmt, tuple(tuple(self.entries[j][i] for j in range(n))
                                           for i in range(n)), self.table)

    def __add__(self, other):
        return matadd(self, other, 1)

    def __sub__(self, other):
        return matadd(self, other, -1)

    def __matmul__(self, other):
        return matmul(self, other)

    def __neg__(self):
        return self.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.fmt == other.fmt and self.entries == other.entries

    def __hash__(self):
        return hash((self.fmt, self.entries))


def _check_same(x: SuperMatrix, y: SuperMatrix) -> None:
    if x.fmt != y.fmt:
        raise FormatMismatchError(f"formats differ: {tuple(x.fmt)} vs {tuple(y.fmt)}")


def matmul(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    _check_same(x, y)
    return SuperMatrix(x.fmt, grid_mul(x.entries, y.entries, x.table), x.table)


def matadd(x: SuperMatrix, y: SuperMatrix, c=1) -> SuperMatrix:
    _check_same(x, y)
    return SuperMatrix(x.fmt, grid_add(x.entries, y.entries, c), x.table)


def power(x: SuperMatrix, k: int) -> SuperMatrix:
    result = SuperMatrix.identity(x.fmt, x.table)
    for _ in range(k):
        result = matmul(result, x)
    return result


def supertranspose(x: SuperMatrix) -> SuperMatrix:
    p = x.parity()
    fp = x.fmt.parity
    n = x.size
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = x.entries[j][i]
            if ((fp(i) + fp(j)) * (fp(i) + p)) & 1:
                entry = entry.scale(-1)
            row.append(entry)
        rows.append(tuple(row))
    return SuperMatrix(x.fmt, tuple(rows), x.table)


def str_(x: SuperMatrix) -> Polynomial:
    """Supertrace: sum of (-1)^{p_i} X_ii."""
    acc = Polynomial(x.table)
    for i in range(x.size):
        acc = add(acc, x.entries[i][i], -1 if x.fmt.parity(i) else 1)
    return acc


def trace(x: SuperMatrix) -> Polynomial:
    return grid_trace(x.entries, x.table)


def bracket(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    """Supercommutator [X, Y] = XY - (-1)^{p(X)p(Y)} YX."""
    _check_same(x, y)
    px, py = x.parity(), y.parity()
    return matadd(matmul(x, y), matmul(y, x), -1 if (px * py) % 2 == 0 else 1)


def exp_nilpotent(m: SuperMatrix, max_terms: int | None = None) -> SuperMatrix:
    """Terminating exponential series of a nilpotent supermatrix."""
    if max_terms is None:
        max_terms = m.table.odd_count() + m.size + 2
    result = SuperMatrix.identity(m.fmt, m.table)
    term = SuperMatrix.identity(m.fmt, m.table)
    for k in range(1, max_terms + 1):
        term = matmul(term, m)
        if term.is_zero():
            return result
        result = matadd(result, term, Fraction(1, factorial(k)))
    raise NonTerminatingError(f"exponential series still nonzero after {max_terms} terms")


def berezinian(x: SuperMatrix) -> LocalizedElement:
    """Ber(X) = det(A - B D^-1 C) / det(D) for X over Grassmann scalars."""
    table = x.table
    a_blk, b_blk, c_blk, d_blk = x.blocks()
    one = Polynomial.constant(table, 1)
    if x.fmt.odd == 0:
        return LocalizedElement.of(det_even(a_blk, table), one)
    d_inv = inverse_grassmann(d_blk, table)
    det_d = det_even(d_blk, table)
    if x.fmt.even == 0:
        return LocalizedElement(one, det_d, 1).reduce()
    schur = grid_add(a_blk, grid_mul(grid_mul(b_blk, d_inv, table), c_blk, table), -1)
    return LocalizedElement(det_even(schur, table), det_d, 1).reduce()


# ---- queer matrices --------------------------------------------------------

@dataclass(frozen=True)
class QBlockMatrix:
    """The supermatrix (A B; B A) of format (n|n)."""
    a: Grid
    b: Grid
    table: VarTable = SCALARS

    @property
    def n(self) -> int:
        return len(self.a)

    @classmethod
    def from_supermatrix(cls, x: SuperMatrix) -> "QBlockMatrix":
        a_blk, b_blk, c_blk, d_blk = x.blocks()
        if x.fmt.even != x.fmt.odd or a_blk != d_blk or b_blk != c_blk:
            raise ShapeError("matrix is not of the form (A B; B A)")
        return cls(a_blk, b_blk, x.table)

    @classmethod
    def identity(cls, n: int, table: VarTable = SCALARS) -> "QBlockMatrix":
        return cls(_identity_grid(n, table), _zero_grid(n, n, table), table)

    def to_supermatrix(self) -> SuperMatrix:
        rows = [tuple(ra) + tuple(rb) for ra, rb in zip(self.a, self.b)]
        rows += [tuple(rb) + tuple(ra) for ra, rb in zip(self.a, self.b)]
        return SuperMatrix(Format(self.n, self.n), tuple(rows), self.table)

    def matmul(self, other: "QBlockMatrix") -> "QBlockMatrix":
        t = self.table
        a = grid_add(grid_mul(self.a, other.a, t), grid_mul(self.b, other.b, t))
        b = grid_add(grid_mul(self.a, other.b, t), grid_mul(self.b, other.a, t))
        return QBlockMatrix(a, b, t)

    def power(self, k: int) -> "QBlockMatrix":
        result = QBlockMatrix.identity(self.n, self.table)
        for _ in range(k):
            result = result.matmul(self)
        return result

    def qtr(self) -> Polynomial:
        return grid_trace(self.b, self.table)


def qtr(x) -> Polynomial:
    """Queer trace: (A B; B A) -> tr B."""
    if isinstance(x, SuperMatrix):
        x = QBlockMatrix.from_supermatrix(x)
    return x.qtr()


def qet(x, alternating: bool | None = None) -> LocalizedElement:
    """Queer determinant sum_k tr((A^-1 B)^(2k+1)) / (2k+1), localized at det(A).

    ``alternating=True`` inserts the factor (-1)^k. That series is the one
    matching blocks multiplied as (A B; -B A), such as the arena's Y; it is
    not additive on (A B; B A) products. ``None`` takes the fixture's
    ``qet_series``.
    """
    if alternating is None:
        alternating = conventions.qet_alternating()
    if isinstance(x, SuperMatrix):
        x = QBlockMatrix.from_supermatrix(x)
    table = x.table
    det_a = det_even(x.a, table)
    if det_a.is_zero():
        raise NonInvertibleError("qet needs det(A) != 0")
    m = grid_mul(adjugate(x.a, table), x.b, table)
    m_sq = grid_mul(m, m, table)
    total = LocalizedElement(Polynomial(table), det_a, 0)
    power_odd = m
    for k in range(table.odd_count() + 2):
        if grid_is_zero(power_odd):
            return total
        j = 2 * k + 1
        coef = Fraction((-1) ** k if alternating else 1, j)
        total = total + LocalizedElement(grid_trace(power_odd, table).scale(coef), det_a, j)
        power_odd = grid_mul(power_odd, m_sq, table)
    raise NonTerminatingError("qet series did not terminate")


supertrace = str_
