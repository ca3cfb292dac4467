from fractions import Fraction

import pytest
from hypothesis import given, settings

from milnorfiber.errors import NotHomogeneous
from milnorfiber.parser import PolySyntaxError, parse_poly

from test_polyring import poly_strategy


def test_zariski_equation():
    f = parse_poly("(x^2+y^2)^3+(y^3+z^3)^2")
    assert f.degree == 6
    assert len(f) == 6


def test_rational_coefficients():
    f = parse_poly("3/2*x^3 - x*y*z")
    assert f.coeff((3, 0, 0)) == Fraction(3, 2)
    assert f.coeff((1, 1, 1)) == -1


def test_juxtaposition_and_power_spelling():
    assert parse_poly("(xz-y^2)^3-x^2*y^4") == parse_poly("(x*z-y^2)^3-x^2*y^4")
    assert parse_poly("2x**2") == parse_poly("2*x^2")
    assert parse_poly("(x+y)(x-y)") == parse_poly("x^2-y^2")


def test_not_homogeneous():
    with pytest.raises(NotHomogeneous):
        parse_poly("x^2 + y")
    with pytest.raises(NotHomogeneous):
        parse_poly("x - x")


@pytest.mark.parametrize("text", ["", "x +", "x^y", "(x+y", "x $ y", "1/0*x"])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text)


def test_error_position():
    with pytest.raises(PolySyntaxError) as info:
        parse_poly("x + $")
    assert info.value.pos == 4


@settings(max_examples=80, deadline=None)
@given(poly_strategy())
def test_print_parse_roundtrip(f):
    if f.is_zero():
        return
    g = parse_poly(str(f))
    assert g == f
    assert str(g) == str(f)
