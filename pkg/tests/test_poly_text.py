import pytest
from hypothesis import given

from superinv.action import build_arena
from superinv.errors import ParseError
from superinv.parsers.poly_text import canonical_text, parse
from superinv.superpoly import Polynomial, mul

from strategies import GRASSMANN, MIXED, polynomials

ARENA = build_arena((1, 1), (1, 1, 1, 1))


def test_zero_and_constants():
    assert canonical_text(Polynomial(MIXED)) == "0"
    assert canonical_text(Polynomial.constant(MIXED, "3/2")) == "3/2"
    assert parse("0", MIXED).is_zero()


def test_sign_rule_in_text():
    g1, g2 = Polynomial.variable(GRASSMANN, 0), Polynomial.variable(GRASSMANN, 1)
    assert canonical_text(mul(g2, g1)) == "-1 * g1*g2"
    assert parse("-1 * g1*g2", GRASSMANN) == mul(g2, g1)


def test_arena_labels():
    labels = [v.label for v in ARENA.table.variables]
    assert labels == ["x[1,1]", "x[1,1']", "x[1',1]", "x[1',1']",
                      "xs[1,1]", "xs[1',1]", "xs[1,1']", "xs[1',1']"]


def test_exponents():
    x = ARENA.x(0, 0)
    assert canonical_text(mul(x, x)) == "1 * x[1,1]^2"
    assert parse("1 * x[1,1]^2", ARENA.table) == mul(x, x)


def test_non_canonical_factor_order_is_accepted():
    f = parse("1 * xs[1',1]*x[1,1']", ARENA.table)
    assert f == mul(ARENA.xs(1, 0), ARENA.x(0, 1))
    assert canonical_text(f) == "-1 * x[1,1']*xs[1',1]"


@pytest.mark.parametrize("text", ["", "abc", "1 * y[1]", "1 * x[9,9]", "x * x[1,1]"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text, ARENA.table)


@given(polynomials(ARENA.table))
def test_canonical_text_parses_back(f):
    assert parse(canonical_text(f), ARENA.table) == f


@given(polynomials())
def test_canonical_text_is_stable(f):
    text = canonical_text(f)
    assert canonical_text(parse(text, MIXED)) == text
