# superinv/samples.py
"""Seeded random Grassmann points and the qet / Berezinian sample suites.

Samples live over a small table of free Grassmann generators. Every value is
an exact polynomial in those generators; determinants of sampled blocks have
nonzero rational bodies, so the localized results reduce to polynomials.
"""
import logging
import random
from fractions import Fraction
from itertools import combinations

from .errors import NonInvertibleError
from .linalg import inverse
from .models.report import SampleReport
from .models.variable import VarTable
from .parsers.poly_text import canonical_text
from .superpoly import Polynomial, add, nilpotent_exp
from .supermatrix import (
    Format,
    QBlockMatrix,
    SuperMatrix,
    berezinian,
    exp_nilpotent,
    matmul,
    qet,
    qtr,
    str_,
)

log = logging.getLogger(__name__)

COEFFS = (-2, -1, 1, 2)


def _sparse_sum(rng: random.Random, table: VarTable, monos, density: float = 0.5) -> Polynomial:
    terms = {m: rng.choice(COEFFS) for m in monos if rng.random() < density}
    return Polynomial(table, terms)


def _products(table: VarTable, degrees) -> list:
    ids = range(len(table))
    return [tuple((v, 1) for v in combo) for d in degrees for combo in combinations(ids, d)]


def random_odd(rng: random.Random, table: VarTable) -> Polynomial:
    return _sparse_sum(rng, table, _products(table, (1, 3)))


def random_even(rng: random.Random, table: VarTable, body=None) -> Polynomial:
    """Even element: the given rational body plus a random nilpotent part."""
    nil = _sparse_sum(rng, table, _products(table, (2, 4)), density=0.4)
    if body is None:
        return nil
    return add(nil, Polynomial.constant(table, body))


def _invertible_body(rng: random.Random, n: int) -> list:
    while True:
        body = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        try:
            inverse(body)
        except NonInvertibleError:
            continue
        return body


def random_q_point(rng: random.Random, n: int, table: VarTable) -> QBlockMatrix:
    """(A B; B A) with even A of invertible body and odd B."""
    body = _invertible_body(rng, n)
    a = tuple(tuple(random_even(rng, table, body[i][j]) for j in range(n)) for i in range(n))
    b = tuple(tuple(random_odd(rng, table) for _ in range(n)) for _ in range(n))
    return QBlockMatrix(a, b, table)


def random_nilpotent_q(rng: random.Random, n: int, table: VarTable) -> QBlockMatrix:
    a = tuple(tuple(random_even(rng, table) for _ in range(n)) for _ in range(n))
    b = tuple(tuple(random_odd(rng, table) for _ in range(n)) for _ in range(n))
    return QBlockMatrix(a, b, table)


def _even_supermatrix(rng: random.Random, fmt: Format, table: VarTable, bodies) -> SuperMatrix:
    fmt = Format(*fmt)
    rows = []
    for i in range(fmt.size):
        row = []
        for j in range(fmt.size):
            if fmt.parity(i) != fmt.parity(j):
                row.append(random_odd(rng, table))
            else:
                row.append(random_even(rng, table, bodies(i, j) if bodies else None))
        rows.append(tuple(row))
    return SuperMatrix(fmt, tuple(rows), table)


def random_even_supermatrix(rng: random.Random, fmt: Format, table: VarTable) -> SuperMatrix:
    """Even supermatrix whose diagonal blocks have invertible bodies."""
    fmt = Format(*fmt)
    body_a = _invertible_body(rng, fmt.even)
    body_d = _invertible_body(rng, fmt.odd)

    def bodies(i, j):
        if i < fmt.even:
            return body_a[i][j]
        return body_d[i - fmt.even][j - fmt.even]

    return _even_supermatrix(rng, fmt, table, bodies)


def random_nilpotent_supermatrix(rng: random.Random, fmt: Format, table: VarTable) -> SuperMatrix:
    return _even_supermatrix(rng, fmt, table, None)


def _run(name: str, samples: int, check) -> SampleReport:
    report = SampleReport(name, samples)
    for k in range(samples):
        witness = check()
        if witness is not None:
            report.failures += 1
            if not report.witness:
                report.witness = f"sample {k}: {witness}"
    log.info("%s: %d/%d samples passed", name, samples - report.failures, samples)
    return report


def _mismatch(lhs: Polynomial, rhs: Polynomial) -> str | None:
    if lhs == rhs:
        return None
    return f"{canonical_text(lhs)} != {canonical_text(rhs)}"


def qet_additivity(n: int, samples: int, seed: int, generators: int = 4,
                   alternating: bool = False) -> SampleReport:
    rng = random.Random(seed)
    table = VarTable.grassmann(generators)

    def check():
        x, y = random_q_point(rng, n, table), random_q_point(rng, n, table)
        lhs = qet(x.matmul(y), alternating).to_polynomial()
        rhs = qet(x, alternating).to_polynomial() + qet(y, alternating).to_polynomial()
        return _mismatch(lhs, rhs)

    return _run("qet_additivity" + ("_alternating" if alternating else ""), samples, check)


def qet_exp(n: int, samples: int, seed: int, generators: int = 4) -> SampleReport:
    rng = random.Random(seed)
    table = VarTable.grassmann(generators)

    def check():
        m = random_nilpotent_q(rng, n, table)
        lhs = qet(exp_nilpotent(m.to_supermatrix())).to_polynomial()
        return _mismatch(lhs, qtr(m))

    return _run("qet_exp", samples, check)


def ber_multiplicativity(fmt: Format, samples: int, seed: int, generators: int = 4) -> SampleReport:
    rng = random.Random(seed)
    table = VarTable.grassmann(generators)

    def check():
        x, y = random_even_supermatrix(rng, fmt, table), random_even_supermatrix(rng, fmt, table)
        lhs = berezinian(matmul(x, y)).to_polynomial()
        rhs = berezinian(x).to_polynomial() * berezinian(y).to_polynomial()
        return _mismatch(lhs, rhs)

    return _run("ber_multiplicativity", samples, check)


def ber_exp(fmt: Format, samples: int, seed: int, generators: int = 4) -> SampleReport:
    rng = random.Random(seed)
    table = VarTable.grassmann(generators)

    def check():
        m = random_nilpotent_supermatrix(rng, fmt, table)
        lhs = berezinian(exp_nilpotent(m)).to_polynomial()
        return _mismatch(lhs, nilpotent_exp(str_(m)))

    return _run("ber_exp", samples, check)


def qet_demo(n: int, samples: int, seed: int) -> list[SampleReport]:
    """The qet-demo suite; each property draws from its own seeded stream."""
    return [
        qet_additivity(n, samples, seed),
        qet_exp(n, samples, seed + 1),
        ber_multiplicativity(Format(n, n), samples, seed + 2),
        ber_exp(Format(n, n), samples, seed + 3),
    ]
