# superinv/linalg.py
"""Exact sparse linear algebra over Q on top of sympy's DomainMatrix.

Vectors are plain ``dict[int, Fraction]`` maps from column index to a nonzero
entry. Column order is the pivot order, so callers index columns by the
canonical monomial order.
"""
from fractions import Fraction
from math import gcd, lcm

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import NonInvertibleError


def to_qq(c):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def domain_matrix(rows: list, ncols: int) -> DomainMatrix:
    dod = {}
    for i, row in enumerate(rows):
        clean = {j: to_qq(v) for j, v in row.items() if v}
        if clean:
            dod[i] = clean
    return DomainMatrix(dod, (len(rows), ncols), QQ)


def _sparse_rows(dm: DomainMatrix) -> dict:
    return dm.to_sparse().rep


def row_echelon(rows: list, ncols: int) -> tuple[list, tuple]:
    """Reduced row echelon form: (nonzero rows as dicts, pivot columns)."""
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = domain_matrix(rows, ncols).rref()
    sparse = _sparse_rows(reduced)
    out = []
    for r in range(len(pivots)):
        row = sparse.get(r, {})
        out.append({j: from_qq(v) for j, v in sorted(row.items())})
    return out, tuple(pivots)


def rank(rows: list, ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    return domain_matrix(rows, ncols).rank()


def nullspace(rows: list, ncols: int) -> list:
    """Basis of {v : rows . v = 0}, one vector per free column in increasing order."""
    echelon, pivots = row_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: Fraction(1)}
        for row, pivot in zip(echelon, pivots):
            entry = row.get(free)
            if entry:
                vec[pivot] = -entry
        basis.append(dict(sorted(vec.items())))
    return basis


def inverse(matrix: list) -> list:
    n = len(matrix)
    if n == 0:
        return []
    dm = DomainMatrix([[to_qq(c) for c in row] for row in matrix], (n, n), QQ)
    try:
        inv = dm.inv()
    except (DMNonInvertibleMatrixError, ZeroDivisionError):
        raise NonInvertibleError("matrix is singular") from None
    return [[from_qq(x) for x in row] for row in inv.to_list()]


def integer_normalize(vec: dict) -> dict:
    """Scale a rational vector to coprime integers with a positive first entry."""
    if not vec:
        return {}
    den = lcm(*(v.denominator for v in vec.values()))
    ints = {k: int(v * den) for k, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    first = ints[min(ints)]
    sign = -1 if first < 0 else 1
    return {k: Fraction(sign * v // g) for k, v in ints.items()}
