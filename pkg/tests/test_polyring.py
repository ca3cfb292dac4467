from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorfiber import polyring as pr
from milnorfiber.polyring import HomogeneousPoly


def poly_strategy(max_degree=5):
    @st.composite
    def build(draw):
        k = draw(st.integers(0, max_degree))
        mons = pr.basis(k)
        coeff = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5))
        coeffs = draw(st.lists(coeff, min_size=len(mons), max_size=len(mons)))
        return HomogeneousPoly(k, dict(zip(mons, coeffs)))

    return build()


def test_dims_and_basis_order():
    assert [pr.dim(k) for k in range(-1, 5)] == [0, 1, 3, 6, 10, 15]
    assert pr.basis(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert all(len(pr.basis(k)) == pr.dim(k) for k in range(10))
    assert pr.index(3)[(0, 0, 3)] == 9


def test_arithmetic():
    x, y, z = (HomogeneousPoly.var(v) for v in "xyz")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert str(p) == "x^2 - y^2"
    assert (x + y) ** 3 == x**3 + (x * x * y).scale(3) + (x * y * y).scale(3) + y**3
    assert str((x * y).scale(Fraction(-3, 2)) + z * z) == "-3/2*x*y + z^2"
    with pytest.raises(ValueError):
        x + x * y


def test_diff_and_coords():
    f = HomogeneousPoly(3, {(2, 1, 0): 3, (0, 0, 3): -1})
    fx, fy, fz = f.partials()
    assert fx == HomogeneousPoly(2, {(1, 1, 0): 6})
    assert fy == HomogeneousPoly(2, {(2, 0, 0): 3})
    assert fz == HomogeneousPoly(2, {(0, 0, 2): -3})
    assert HomogeneousPoly.from_vector(3, f.coord_vector()) == f


def test_zero_keeps_degree():
    z = HomogeneousPoly.zero(4)
    assert z.is_zero() and z.degree == 4 and str(z) == "0"


@settings(max_examples=60, deadline=None)
@given(poly_strategy())
def test_euler_relation(f):
    if f.degree >= 1:
        assert pr.euler_defect(f).is_zero()


@settings(max_examples=40, deadline=None)
@given(poly_strategy(3), poly_strategy(3))
def test_product_is_bilinear_and_commutative(p, q):
    assert p * q == q * p
    assert (p * q).degree == p.degree + q.degree
