import pytest

from milnorfiber.errors import DegreeTooSmall, NonIsolatedSingularities
from milnorfiber.jacobian import (
    apply_triple,
    kr_dim,
    milnor_dim,
    milnor_slot,
    tjurina,
    validate,
)
from milnorfiber.parser import parse_poly
from milnorfiber.spectral import kr_rank


@pytest.mark.parametrize(
    "name, params, tau",
    [("zariski-sextic", {}, 12), ("nine-cusp-sextic", {}, 18), ("e14-sextic", {}, 19),
     ("hessian", {}, 93), ("fermat", {"d": 4}, 0)],
)
def test_tjurina(curve, name, params, tau):
    assert tjurina(curve(name, **params)) == tau


def test_validate_rejects():
    with pytest.raises(NonIsolatedSingularities):
        validate(parse_poly("x^2*y"))
    with pytest.raises(NonIsolatedSingularities):
        validate(parse_poly("(x^2+y^2+z^2)^2"))
    with pytest.raises(DegreeTooSmall):
        validate(parse_poly("x^2+y^2+z^2"))
    conic = validate(parse_poly("x^2+y^2+z^2"), allow_small_degree=True)
    assert tjurina(conic) == 0


def test_milnor_dim_small_degrees(curve):
    c = curve("zariski-sextic")
    assert milnor_dim(c, 4) == 15
    assert milnor_dim(c, 5) == 21 - 3
    assert milnor_dim(c, -1) == 0
    slot = milnor_slot(c, 5)
    assert slot.dim_M == 18 and len(slot.jacobian_subspace) == 3


def test_kr_formula_small_cases():
    assert kr_dim(6, 5) == 0
    assert kr_dim(6, 7) == 3
    assert kr_dim(4, 6) == 9


@pytest.mark.parametrize("name, params", [("zariski-sextic", {}), ("fermat", {"d": 4}), ("nine-cusp-sextic", {})])
def test_kr_rank_matches_formula(curve, name, params):
    c = curve(name, **params)
    for q in range(1, 2 * c.d + 4):
        assert kr_rank(c, q) == kr_dim(c.d, q)


def test_apply_triple_koszul(curve):
    c = curve("fermat", d=3)
    fx, fy, fz = c.partials
    zero = fx.scale(0)
    assert apply_triple(c, (fy, -fx, zero)).is_zero()
