# superinv/parsers/poly_text.py
import re
from fractions import Fraction

from ..errors import ParseError
from ..models.variable import VarTable
from ..superpoly import ONE_MONOMIAL, Polynomial, mul

_FACTOR_RE = re.compile(r"^(x\[[^\]]+\]|xs\[[^\]]+\]|g\d+)(?:\^(\d+))?$")


def _render_monomial(table: VarTable, mono) -> str:
    parts = []
    for vid, e in mono:
        label = table[vid].label
        parts.append(f"{label}^{e}" if e > 1 else label)
    return "*".join(parts)


def canonical_text(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for mono, coef in f.terms_in_order():
        if mono == ONE_MONOMIAL:
            out.append(str(coef))
        else:
            out.append(f"{coef} * {_render_monomial(f.table, mono)}")
    return " + ".join(out)


def _parse_term(table: VarTable, term: str) -> Polynomial:
    coef_text, _, factors_text = term.partition(" * ")
    try:
        coef = Fraction(coef_text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coefficient in {term!r}") from None
    result = Polynomial.constant(table, coef)
    if not factors_text:
        return result
    for factor in factors_text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise ParseError(f"bad factor {factor!r}")
        label, exp = m.group(1), int(m.group(2) or 1)
        try:
            vid = table.lookup(label)
        except KeyError:
            raise ParseError(f"unknown variable {label!r} for table {table.name!r}") from None
        result = mul(result, Polynomial.variable(table, vid) ** exp)
    return result


def parse(text: str, table: VarTable) -> Polynomial:
    """Inverse of canonical_text (also accepts non-canonical factor order)."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial text")
    result = Polynomial(table)
    if text == "0":
        return result
    for term in text.split(" + "):
        result = result + _parse_term(table, term)
    return result
