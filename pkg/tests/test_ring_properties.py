import pytest
from hypothesis import given

from core.ring import LaurentPoly1, LaurentPoly2, parse_poly1, parse_poly2
from strategies import poly1s, poly2s

pytestmark = pytest.mark.property


@given(poly1s(), poly1s(), poly1s())
def test_one_variable_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == LaurentPoly1()
    assert a * LaurentPoly1.one() == a


@given(poly2s(), poly2s(), poly2s())
def test_two_variable_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b).swap() == a.swap() * b.swap()
    assert a + LaurentPoly2() == a


@given(poly1s(), poly1s())
def test_evaluation_is_a_ring_map(a, b):
    assert (a * b).at_one() == a.at_one() * b.at_one()
    assert (a + b).evaluate(2) == a.evaluate(2) + b.evaluate(2)


@given(poly1s())
def test_one_variable_print_parse_round_trip(p):
    assert parse_poly1(str(p)) == p


@given(poly2s())
def test_two_variable_print_parse_round_trip(p):
    assert parse_poly2(str(p)) == p


@given(poly1s(), poly1s())
def test_exact_division_recovers_factor(a, b):
    if b:
        assert (a * b).exact_div(b) == a
