# superinv/superpoly.py
"""Exact supercommutative polynomials over Q.

A polynomial lives over a `VarTable` of even and odd generators. Monomials are
tuples of ``(variable id, exponent)`` pairs in increasing id order; odd
variables always carry exponent 1. Products follow the Sign Rule: odd factors
are sorted by id and every transposition of two odd factors flips the sign.
"""
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (
    MissingAssignmentError,
    NonHomogeneousError,
    NonTerminatingError,
    NotDivisibleError,
    ParityError,
    TableMismatchError,
)
from .models.variable import EVEN, ODD, SCALARS, VarTable

Monomial = tuple  # tuple[tuple[int, int], ...]

ONE_MONOMIAL: Monomial = ()


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def monomial_key(mono: Monomial) -> tuple:
    """Graded canonical order: total degree, then the expanded id sequence."""
    expanded = tuple(v for v, e in mono for _ in range(e))
    return (len(expanded), expanded)


def monomial_parity(table: VarTable, mono: Monomial) -> int:
    par = table.parities
    return sum(par[v] for v, _ in mono) & 1


def mul_monomials(table: VarTable, a: Monomial, b: Monomial):
    """Return ``(sign, monomial)`` for a*b, or ``None`` when an odd variable repeats."""
    par = table.parities
    a_odd = [v for v, _ in a if par[v]]
    b_odd = [v for v, _ in b if par[v]]
    inversions = 0
    if a_odd and b_odd:
        a_set = set(a_odd)
        for v in b_odd:
            if v in a_set:
                return None
            # odd variables of `a` sitting to the right of v after sorting
            inversions += len(a_odd) - bisect_right(a_odd, v)
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if inversions & 1 else 1), tuple(out)


def _check_tables(a: "Polynomial", b: "Polynomial") -> None:
    if a.table is not b.table and a.table != b.table:
        raise TableMismatchError(f"variable tables differ: {a.table.name!r} vs {b.table.name!r}")


class Polynomial:
    """Sparse supercommutative polynomial; immutable, canonical."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: dict | None = None):
        clean = {}
        par = table.parities
        for mono, coef in (terms or {}).items():
            coef = Fraction(coef)
            if coef == 0:
                continue
            for v, e in mono:
                if e <= 0:
                    raise ValueError(f"non-positive exponent in {mono}")
                if par[v] == ODD and e > 1:
                    coef = Fraction(0)
                    break
            if coef:
                clean[mono] = coef
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return (Polynomial, (self.table, self.terms))

    # constructors
    @classmethod
    def zero(cls, table: VarTable = SCALARS) -> "Polynomial":
        return cls(table)

    @classmethod
    def constant(cls, table: VarTable, c) -> "Polynomial":
        return cls(table, {ONE_MONOMIAL: c})

    @classmethod
    def variable(cls, table: VarTable, vid: int, coef=1) -> "Polynomial":
        return cls(table, {((vid, 1),): coef})

    @classmethod
    def monomial(cls, table: VarTable, mono: Monomial, coef=1) -> "Polynomial":
        return cls(table, {mono: coef})

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(ONE_MONOMIAL, Fraction(0))

    def terms_in_order(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]))

    def leading_term(self):
        """Largest term in the canonical order (the division order)."""
        mono = max(self.terms, key=monomial_key)
        return mono, self.terms[mono]

    def degree(self) -> int:
        return max((monomial_degree(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(m) for m in self.terms}) <= 1

    def parity(self) -> int:
        parities = {monomial_parity(self.table, m) for m in self.terms}
        if len(parities) > 1:
            raise NonHomogeneousError("polynomial mixes even and odd terms")
        return parities.pop() if parities else EVEN

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def body(self) -> "Polynomial":
        """The part free of odd variables."""
        par = self.table.parities
        return Polynomial(self.table, {
            m: c for m, c in self.terms.items() if not any(par[v] for v, _ in m)
        })

    # arithmetic
    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.table, {m: c * v for m, v in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.table, other)
        return add(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.table, other)
        return add(self, other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        return mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> "Polynomial":
        result = Polynomial.constant(self.table, 1)
        for _ in range(e):
            result = mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.table, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.table is other.table or self.table == other.table) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        from .parsers.poly_text import canonical_text
        return f"Polynomial({canonical_text(self)!r})"


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    _check_tables(a, b)
    table = a.table
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            prod = mul_monomials(table, ma, mb)
            if prod is None:
                continue
            sign, mono = prod
            out[mono] = out.get(mono, 0) + sign * ca * cb
    return Polynomial(table, out)


def add(a: Polynomial, b: Polynomial, c=1) -> Polynomial:
    """Return a + c*b."""
    _check_tables(a, b)
    c = Fraction(c)
    out = dict(a.terms)
    for mono, coef in b.terms.items():
        out[mono] = out.get(mono, 0) + c * coef
    return Polynomial(a.table, out)


def product(table: VarTable, factors) -> Polynomial:
    result = Polynomial.constant(table, 1)
    for f in factors:
        result = mul(result, f)
    return result


def _divides(small: Monomial, big: Monomial) -> bool:
    exps = dict(big)
    return all(exps.get(v, 0) >= e for v, e in small)


def _quotient_monomial(big: Monomial, small: Monomial) -> Monomial:
    exps = dict(big)
    for v, e in small:
        exps[v] -= e
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def _divide_even(a: Polynomial, e: Polynomial) -> Polynomial:
    """Long division by a polynomial in even variables only."""
    lead_m, lead_c = e.leading_term()
    table = a.table
    quotient: dict = {}
    rest = a
    while not rest.is_zero():
        mono, coef = rest.leading_term()
        if not _divides(lead_m, mono):
            raise NotDivisibleError("leading term is not divisible", remainder=rest)
        q_mono = _quotient_monomial(mono, lead_m)
        q_coef = coef / lead_c
        quotient[q_mono] = quotient.get(q_mono, 0) + q_coef
        rest = add(rest, mul(Polynomial.monomial(table, q_mono, q_coef), e), -1)
    return Polynomial(table, quotient)


def _divide_monomial(a: Polynomial, b: Polynomial) -> Polynomial:
    (b_mono, b_coef), = b.terms.items()
    table = a.table
    out: dict = {}
    for mono, coef in a.terms.items():
        if not _divides(b_mono, mono):
            raise NotDivisibleError("term does not contain the divisor", remainder=a)
        q_mono = _quotient_monomial(mono, b_mono)
        sign, _ = mul_monomials(table, q_mono, b_mono)
        out[q_mono] = out.get(q_mono, 0) + coef / (sign * b_coef)
    return Polynomial(table, out)


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Return q with q*b == a, or raise NotDivisibleError."""
    _check_tables(a, b)
    if b.is_zero():
        raise ZeroDivisionError("exact_div by the zero polynomial")
    if a.is_zero():
        return Polynomial(a.table)
    body = b.body()
    if body.is_zero():
        if len(b.terms) != 1:
            raise NotDivisibleError("divisor has no invertible body", remainder=a)
        quotient = _divide_monomial(a, b)
    else:
        nil = b - body
        # a/b = sum_k (-1)^k a nil^k / body^(k+1); nil is nilpotent
        powers = [Polynomial.constant(a.table, 1)]
        while not nil.is_zero():
            nxt = mul(powers[-1], nil)
            if nxt.is_zero():
                break
            powers.append(nxt)
        top = len(powers) - 1
        numerator = Polynomial(a.table)
        for k, nk in enumerate(powers):
            term = mul(mul(a, nk), body ** (top - k))
            numerator = add(numerator, term, (-1) ** k)
        quotient = numerator
        for _ in range(top + 1):
            quotient = _divide_even(quotient, body)
    if mul(quotient, b) != a:
        raise NotDivisibleError("quotient check failed", remainder=add(a, mul(quotient, b), -1))
    return quotient


def evaluate(f: Polynomial, assignment: dict, target: VarTable | None = None) -> Polynomial:
    """Apply the parity-preserving algebra morphism defined on generators."""
    if target is None:
        tables = {v.table for v in assignment.values() if isinstance(v, Polynomial)}
        target = tables.pop() if len(tables) == 1 else SCALARS
    values = {}
    for vid, value in assignment.items():
        if not isinstance(value, Polynomial):
            value = Polynomial.constant(target, value)
        if value.table != target:
            raise TableMismatchError("assignment values must share one table")
        if not value.is_zero() and value.parity() != f.table.parity(vid):
            raise ParityError(f"{f.table[vid].label} is {'odd' if f.table.parity(vid) else 'even'}, "
                              "assigned value has the other parity")
        values[vid] = value
    result = Polynomial(target)
    for mono, coef in f.terms_in_order():
        term = Polynomial.constant(target, coef)
        for vid, e in mono:
            if vid not in values:
                raise MissingAssignmentError(f"no value for {f.table[vid].label}")
            term = mul(term, values[vid] ** e)
        result = add(result, term)
    return result


def nilpotent_exp(f: Polynomial) -> Polynomial:
    """exp(f) for an even element without body, as a finite sum."""
    if not f.body().is_zero():
        raise NonTerminatingError("exp of an element with a nonzero body does not terminate")
    result = Polynomial.constant(f.table, 1)
    power = Polynomial.constant(f.table, 1)
    bound = f.table.odd_count() + 1
    for k in range(1, bound + 2):
        power = mul(power, f)
        if power.is_zero():
            return result
        result = add(result, power, Fraction(1, factorial(k)))
    raise NonTerminatingError("nilpotent series did not terminate")


@dataclass(frozen=True)
class LocalizedElement:
    """numerator / base**exponent in the localization at one fixed base."""
    numerator: Polynomial
    base: Polynomial
    exponent: int = 0

    @classmethod
    def of(cls, f: Polynomial, base: Polynomial) -> "LocalizedElement":
        return cls(f, base, 0)

    def reduce(self) -> "LocalizedElement":
        num, exp = self.numerator, self.exponent
        while exp > 0:
            try:
                num = exact_div(num, self.base)
            except NotDivisibleError:
                break
            exp -= 1
        return LocalizedElement(num, self.base, exp)

    def is_polynomial(self) -> bool:
        return self.reduce().exponent == 0

    def to_polynomial(self) -> Polynomial:
        red = self.reduce()
        if red.exponent:
            raise NotDivisibleError("element keeps a denominator", remainder=red.numerator)
        return red.numerator

    def _common(self, other: "LocalizedElement"):
        if self.exponent and other.exponent and self.base != other.base:
            raise TableMismatchError("localized elements use different denominator bases")
        return self.base if self.exponent else other.base

    def __add__(self, other: "LocalizedElement") -> "LocalizedElement":
        base = self._common(other)
        exp = max(self.exponent, other.exponent)
        num = add(mul(self.numerator, base ** (exp - self.exponent)),
                  mul(other.numerator, base ** (exp - other.exponent)))
        return LocalizedElement(num, base, exp).reduce()

    def __neg__(self) -> "LocalizedElement":
        return LocalizedElement(self.numerator.scale(-1), self.base, self.exponent)

    def __sub__(self, other: "LocalizedElement") -> "LocalizedElement":
        return self + (-other)

    def __mul__(self, other) -> "LocalizedElement":
        if isinstance(other, Polynomial):
            return LocalizedElement(mul(self.numerator, other), self.base, self.exponent).reduce()
        base = self._common(other)
        return LocalizedElement(mul(self.numerator, other.numerator), base,
                                self.exponent + other.exponent).reduce()

    def __rmul__(self, other: Polynomial) -> "LocalizedElement":
        return LocalizedElement(mul(other, self.numerator), self.base, self.exponent).reduce()

    def scale(self, c) -> "LocalizedElement":
        return LocalizedElement(self.numerator.scale(c), self.base, self.exponent)

    def equals(self, other) -> bool:
        if isinstance(other, Polynomial):
            other = LocalizedElement.of(other, self.base)
        left = mul(self.numerator, other.base ** other.exponent)
        right = mul(other.numerator, self.base ** self.exponent)
        return left == right

    def parity(self) -> int:
        return self.numerator.parity()
