import os
from unittest import mock

import pytest

from milnorfiber import catalog
from milnorfiber.jacobian import apply_triple, divergence, kr_dim
from milnorfiber.parser import parse_poly
from milnorfiber.polyring import HomogeneousPoly
from milnorfiber.spectral import (
    closed_syzygy_space,
    contract_one_form,
    delta_kernel_basis,
    delta_kernel_dim,
    e2_table,
    epsilon,
    euler_contraction,
    h2f_dim,
    injectivity_probe,
    koszul_in_kernel,
    split_q,
    witnesses,
)
from milnorfiber.syzygy import syzygy_dim


def test_split_q():
    assert split_q(5, 6) == (0, 5)
    assert split_q(6, 6) == (0, 6)
    assert split_q(7, 6) == (1, 1)
    assert split_q(18, 6) == (2, 6)


def test_kappa_examples(curve):
    assert delta_kernel_dim(curve("nine-cusp-sextic"), 7) == 6
    assert epsilon(curve("nine-cusp-sextic"), 5) == 3
    assert epsilon(curve("zariski-sextic"), 5) == 1


def test_smooth_kappa_is_koszul(curve):
    for d in (3, 4):
        c = curve("fermat", d=d)
        for q in range(1, 3 * d + 1):
            assert delta_kernel_dim(c, q) == kr_dim(d, q)


def test_cell_bounds(curve):
    for c in e2_table(curve("zariski-sextic")) + e2_table(curve("e14-sextic")):
        assert 0 <= c.epsilon
        assert c.dim_kr <= c.kappa <= c.dim_syz


def test_kernel_basis_members_are_syzygies(curve):
    c = curve("zariski-sextic")
    for q in (5, 7, 8):
        basis = delta_kernel_basis(c, q)
        assert len(basis) == delta_kernel_dim(c, q)
        assert all(apply_triple(c, t).is_zero() for t in basis)


def test_closed_forms_inside_kernel(curve):
    c = curve("zariski-sextic")
    for q in range(2, 10):
        closed = closed_syzygy_space(c, q)
        assert len(closed) <= delta_kernel_dim(c, q)
        assert all(w.check(c) and divergence(w.two_form).is_zero() for w in closed)
    assert len(closed_syzygy_space(c, 5)) == 1


def test_h2f_below_degree(curve):
    c = curve("nine-cusp-sextic")
    for q in range(2, c.d):
        assert h2f_dim(c, q) == len(closed_syzygy_space(c, q))
    f4 = curve("fermat", d=4)
    assert all(h2f_dim(f4, q) == 0 for q in range(1, 5))


def test_euler_contraction_examples():
    one, zero = HomogeneousPoly.monomial((0, 0, 0)), HomogeneousPoly.zero(0)
    P, Q, R = euler_contraction((one, zero, zero))
    assert (P.is_zero(), str(Q), str(R)) == (True, "-z", "y")
    x, y, z = (HomogeneousPoly.var(v) for v in "xyz")
    assert all(p.is_zero() for p in euler_contraction((x, y, z)))


def test_double_contraction_vanishes(curve):
    c = curve("zariski-sextic")
    for q in (5, 7):
        for t in delta_kernel_basis(c, q):
            assert contract_one_form(euler_contraction(t)).is_zero()


def test_injectivity(curve):
    assert injectivity_probe(curve("A", m=4), 5, 6).passed
    assert injectivity_probe(curve("e14-sextic"), 2, 3).passed
    assert not injectivity_probe(curve("zariski-sextic"), 3, 4).passed


def test_row_zero_epsilon_equals_kappa(curve):
    c = curve("nine-cusp-sextic")
    for cell in e2_table(c, qmax=c.d):
        assert cell.dim_kr == 0 and cell.epsilon == cell.kappa


def test_koszul_in_kernel(curve):
    for name in ("zariski-sextic", "nine-cusp-sextic"):
        c = curve(name)
        assert all(koszul_in_kernel(c, q) for q in range(1, 2 * c.d + 4))


def test_threads_give_same_table():
    text = "(x^2+y^2)^3+(y^3+z^3)^2"
    serial = e2_table(catalog.build("zariski-sextic"))
    with mock.patch.dict(os.environ, {"MILNOR_THREADS": "4"}):
        parallel = e2_table(catalog.build("zariski-sextic"))
    assert serial == parallel
    assert str(parse_poly(text)) == str(catalog.build("zariski-sextic").f)


def test_witnesses(curve):
    c = curve("nine-cusp-sextic")
    ws = witnesses(c, e2_table(c, qmax=c.d))
    assert [w.q for w in ws] == [5, 5, 5]
    assert all(w.check(c) for w in ws)
    assert all(contract_one_form(w.one_form).is_zero() for w in ws)


@pytest.mark.parametrize("q", [5, 6, 7])
def test_syz_dim_in_cells(curve, q):
    c = curve("zariski-sextic")
    cell = next(x for x in e2_table(c) if x.q == q)
    assert cell.dim_syz == syzygy_dim(c, q - 2)
