import pytest
from sympy import Poly

from milnorfiber.alexander import (
    T,
    AlexanderResult,
    MultiplicityBound,
    alexander,
    alexander_from_epsilon,
    cyclotomic,
    cyclotomic_factorization,
    delta0_delta2,
    format_factored,
    format_poly,
    multiplicity_bound,
    parse_t_poly,
)
from milnorfiber.errors import NonPolynomialResult, OrbitInconsistency


def test_bounds():
    b = multiplicity_bound(6, 1, {1: 0, 5: 1})
    assert (b.lower, b.upper, b.exact, b.order) == (1, 1, True, 6)
    b = multiplicity_bound(6, 2, {2: 2, 4: 1})
    assert (b.lower, b.upper, b.exact) == (2, 3, False)
    b = multiplicity_bound(12, 6, {6: 1})
    assert (b.lower, b.upper, b.exact, b.order) == (1, 2, False, 2)
    assert multiplicity_bound(12, 6, {}).exact


def test_bound_symmetry():
    eps = {1: 0, 2: 3, 3: 0, 4: 1, 5: 2}
    for k in range(1, 6):
        a, b = multiplicity_bound(6, k, eps), multiplicity_bound(6, 6 - k, eps)
        assert (a.lower, a.upper, a.exact) == (b.lower, b.upper, b.exact)


def test_certified_factorization():
    res = alexander_from_epsilon(6, {5: 1}, components=1)
    assert res.certified
    assert res.cyclotomic == [(6, 1)]
    assert format_poly(res.delta1) == "t^2-t+1"
    res = alexander_from_epsilon(6, {5: 3}, components=1)
    assert res.display() == "(t^2-t+1)^3"


def test_unity_factor_and_missing_components():
    res = alexander_from_epsilon(3, {}, components=3)
    assert res.cyclotomic == [(1, 2)]
    assert not alexander_from_epsilon(3, {}, None).certified


def test_uncertified_display():
    res = alexander_from_epsilon(12, {6: 1, 9: 2, 10: 1, 11: 1}, components=12)
    assert not res.certified and res.cyclotomic is None
    assert "(t+1)^[1..2]" in res.display()
    assert res.to_json()["delta1_intervals"] == res.display()


def test_orbit_inconsistency():
    forged = AlexanderResult(
        5,
        [MultiplicityBound(k, 5 - k, e, 0, e, e, True) for k, e in [(1, 1), (2, 0), (3, 0), (4, 0)]],
        0,
    )
    with pytest.raises(OrbitInconsistency):
        cyclotomic_factorization(forged)


def test_formatting():
    assert format_poly(cyclotomic(12)) == "t^4-t^2+1"
    assert format_poly(Poly(2 * T**3, T)) == "2*t^3"
    assert format_factored([]) == "1"
    assert format_factored([(6, 1), (12, 1)]) == "(t^2-t+1)(t^4-t^2+1)"
    assert parse_t_poly("(t^2-t+1)(t^4-t^2+1)") == cyclotomic(6) * cyclotomic(12)


def test_delta0_delta2():
    d0, d2 = delta0_delta2(6, 4, Poly(T**2 - T + 1, T))
    assert d0 == Poly(T - 1, T)
    assert d2 == Poly((T**6 - 1) ** 4 * (T**2 - T + 1), T).quo(Poly(T - 1, T))
    d0, d2 = delta0_delta2(3, 1, Poly(1, T))
    assert format_poly(d2) == "t^2+t+1"
    with pytest.raises(NonPolynomialResult):
        delta0_delta2(6, -1, Poly(T**2 - T + 1, T))


def test_alexander_from_curve(curve):
    res = alexander(curve("zariski-sextic"))
    assert res.certified and format_poly(res.delta1) == "t^2-t+1"
