# superinv/combinatorics.py
"""Hook partitions, (n|m)-semistandard tableaux and the super Cauchy dimension count."""
import logging

from sympy.utilities.iterables import partitions

from .errors import InvalidSpecError
from .models.report import CauchyReport, CauchyRow

log = logging.getLogger(__name__)

Partition = tuple  # weakly decreasing positive parts


def _as_tuple(p: dict) -> Partition:
    return tuple(part for part in sorted(p, reverse=True) for _ in range(p[part]))


def all_partitions(size: int) -> list[Partition]:
    """Partitions of size in reverse lexicographic order; size 0 gives the empty partition."""
    if size < 0:
        return []
    # sympy reuses the yielded dict
    return [_as_tuple(dict(p)) for p in partitions(size)]


def in_hook(lam: Partition, n: int, m: int) -> bool:
    return len(lam) <= n or lam[n] <= m


def hook_partitions(n: int, m: int, size: int) -> list[Partition]:
    return [lam for lam in all_partitions(size) if in_hook(lam, n, m)]


def ssyt_count(lam: Partition, n: int, m: int) -> int:
    """Count (n|m)-semistandard fillings of lam.

    Letters 0..n-1 are unprimed, n..n+m-1 primed. Unprimed letters weakly increase
    along rows and strictly down columns; primed letters do the opposite.
    """
    lam = tuple(lam)
    if not lam:
        return 1
    if not in_hook(lam, n, m):
        return 0
    letters = n + m
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    grid: dict = {}

    def fits(v: int, r: int, c: int) -> bool:
        primed = v >= n
        if c > 0:
            left = grid[(r, c - 1)]
            if v < left or (primed and v == left):
                return False
        if r > 0:
            above = grid[(r - 1, c)]
            if v < above or (not primed and v == above):
                return False
        return True

    def fill(pos: int) -> int:
        if pos == len(cells):
            return 1
        r, c = cells[pos]
        total = 0
        for v in range(letters):
            if fits(v, r, c):
                grid[(r, c)] = v
                total += fill(pos + 1)
        grid.pop((r, c), None)
        return total

    return fill(0)


def strict_partitions(n: int, size: int | None = None, max_size: int = 10) -> list[Partition]:
    """Strict partitions with exactly n parts, of the given size or of every size up to max_size."""
    if n < 1:
        raise InvalidSpecError("strict partitions need n >= 1")
    sizes = [size] if size is not None else range(n * (n + 1) // 2, max_size + 1)
    out = []
    for total in sizes:
        for p in partitions(total, m=n) if total > 0 else ():
            if len(p) == n and all(mult == 1 for mult in p.values()):
                out.append(_as_tuple(dict(p)))
    return out


def cauchy_check(dim_u: tuple[int, int], dim_v: tuple[int, int], k: int) -> CauchyReport:
    """dim S^k(U (x) V) against sum over hook partitions of the tableau count products."""
    from .action import build_arena
    from .solver import monomial_basis

    if k < 0:
        raise InvalidSpecError("degree k must be >= 0")
    arena = build_arena(dim_v, (dim_u[0], dim_u[1], 0, 0))
    lhs = len(monomial_basis(arena, k))
    report = CauchyReport(tuple(dim_u), tuple(dim_v), k, lhs)
    for lam in all_partitions(k):
        du, dv = ssyt_count(lam, *dim_u), ssyt_count(lam, *dim_v)
        if du and dv:
            report.rows.append(CauchyRow(lam, du, dv))
    log.info("cauchy U=%s V=%s k=%d: lhs=%d rhs=%d", dim_u, dim_v, k, report.lhs, report.rhs)
    return report
