import pytest
from fractions import Fraction
from hypothesis import given, strategies as st

from superinv.errors import (
    MissingAssignmentError,
    NonHomogeneousError,
    NonTerminatingError,
    NotDivisibleError,
    ParityError,
    TableMismatchError,
)
from superinv.models.variable import EVEN, ODD
from superinv.parsers.poly_text import canonical_text
from superinv.superpoly import LocalizedElement, Polynomial, add, evaluate, exact_div, mul, nilpotent_exp

from strategies import GRASSMANN, MIXED, grassmann_values, polynomials

x = Polynomial.variable(MIXED, 0)
y = Polynomial.variable(MIXED, 1)
g1, g2, g3 = (Polynomial.variable(MIXED, k) for k in (2, 3, 4))
h1, h2, h3, h4 = (Polynomial.variable(GRASSMANN, k) for k in range(4))


def test_odd_square_vanishes():
    assert mul(g1, g1).is_zero()


def test_odd_generators_anticommute():
    assert mul(g2, g1) == -mul(g1, g2)
    assert canonical_text(mul(g2, g1)) == "-1 * g1*g2"


def test_even_square_with_nilpotent_part():
    f = x + mul(g1, g2)
    assert f * f == x * x + mul(x, mul(g1, g2)).scale(2)


def test_add_cancels():
    assert add(x, x, -1).is_zero()
    assert add(mul(g1, g2), mul(g2, g1)).is_zero()


def test_add_with_rational_coefficient():
    f = add(x * x, mul(g1, g2), Fraction(1, 2))
    assert canonical_text(f) == "1 * x[1,1]^2 + 1/2 * g1*g2"


def test_constant_first_in_canonical_order():
    assert canonical_text(x * x + 2) == "2 + 1 * x[1,1]^2"
    assert canonical_text(Polynomial(MIXED)) == "0"


def test_parity_of_mixed_polynomial_raises():
    with pytest.raises(NonHomogeneousError):
        (x + g1).parity()
    assert Polynomial(MIXED).parity() == EVEN
    assert mul(g1, mul(g2, g3)).parity() == ODD


def test_foreign_tables_do_not_mix():
    with pytest.raises(TableMismatchError):
        mul(x, h1)


def test_exact_div_by_even_variable():
    a = mul(x * x, g1) + mul(x, g2)
    assert exact_div(a, x) == mul(x, g1) + g2


def test_exact_div_by_invertible_element():
    unit = 1 + mul(g1, g2)
    assert exact_div(mul(unit, x + g3), unit) == x + g3


def test_exact_div_by_odd_monomial():
    a = mul(mul(g1, g2), x)
    assert exact_div(a, g2) == mul(x, g1)


def test_exact_div_reports_remainder():
    with pytest.raises(NotDivisibleError) as info:
        exact_div(g1, x)
    assert info.value.remainder is not None


def test_exact_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(x, Polynomial(MIXED))


def test_evaluate_substitutes_generators():
    f = mul(x, g1)
    value = evaluate(f, {0: 2 + mul(h1, h2), 2: h3})
    assert value == h3.scale(2) + mul(mul(h1, h2), h3)


def test_evaluate_checks_parity():
    with pytest.raises(ParityError):
        evaluate(x, {0: h1})


def test_evaluate_needs_every_variable():
    with pytest.raises(MissingAssignmentError):
        evaluate(mul(x, g1), {0: h1 * h2})


def test_nilpotent_exp_terminates():
    assert nilpotent_exp(mul(h1, h2)) == 1 + mul(h1, h2)
    a, b = mul(h1, h2), mul(h3, h4)
    assert nilpotent_exp(a + b) == 1 + a + b + mul(a, b)


def test_nilpotent_exp_refuses_a_body():
    with pytest.raises(NonTerminatingError):
        nilpotent_exp(Polynomial.constant(GRASSMANN, 1) + mul(h1, h2))


def test_localized_element_reduces():
    assert LocalizedElement(mul(x, g1), x, 1).to_polynomial() == g1
    stuck = LocalizedElement(g1, x, 1)
    assert not stuck.is_polynomial()
    with pytest.raises(NotDivisibleError):
        stuck.to_polynomial()


def test_localized_sum_shares_the_base():
    a = LocalizedElement(g1, x, 1)
    b = LocalizedElement(mul(y, g1), x, 2)
    total = a + b
    assert total.equals(LocalizedElement(mul(x, g1) + mul(y, g1), x, 2))


@given(st.data())
def test_supercommutativity(data):
    pa, pb = data.draw(st.sampled_from((EVEN, ODD))), data.draw(st.sampled_from((EVEN, ODD)))
    a = data.draw(polynomials(parity=pa))
    b = data.draw(polynomials(parity=pb))
    sign = -1 if pa * pb else 1
    assert mul(a, b) == mul(b, a).scale(sign)


@given(polynomials(), polynomials(), polynomials())
def test_associativity(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(polynomials(), polynomials(), polynomials())
def test_distributivity(a, b, c):
    assert mul(a, b + c) == mul(a, b) + mul(a, c)


@given(polynomials(parity=ODD))
def test_odd_elements_square_to_zero(f):
    assert mul(f, f).is_zero()


@given(st.data())
def test_evaluate_is_an_algebra_morphism(data):
    assignment = {vid: data.draw(grassmann_values(MIXED.parity(vid))) for vid in range(len(MIXED))}
    f, g = data.draw(polynomials()), data.draw(polynomials())
    lhs = evaluate(mul(f, g), assignment, GRASSMANN)
    rhs = mul(evaluate(f, assignment, GRASSMANN), evaluate(g, assignment, GRASSMANN))
    assert lhs == rhs


@given(polynomials(), polynomials(parity=EVEN))
def test_exact_div_inverts_multiplication_by_even_units(f, nil):
    unit = 2 + (nil - nil.body())
    assert exact_div(mul(f, unit), unit) == f
