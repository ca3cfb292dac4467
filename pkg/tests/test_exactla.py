from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorfiber.exactla import (
    DimensionError,
    QMatrix,
    arithmetic_mode,
    in_span,
    kernel_basis,
    kernel_dim,
    pivot_columns,
    rank,
    rref,
    solve_membership,
)
from milnorfiber.exactla import _kernels, exact, modular

MODES = ("off", "verify", "trust")


def random_matrix(rng, m, n, density=0.6, rational=True):
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rng.random() > density:
                row.append(0)
            elif rational and rng.random() < 0.3:
                row.append(Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))))
            else:
                row.append(int(rng.integers(-9, 10)))
        rows.append(row)
    return QMatrix(rows, n) if m else QMatrix.zeros(0, n)


def low_rank(rng, m, n, r):
    a = rng.integers(-4, 5, size=(m, r))
    b = rng.integers(-4, 5, size=(r, n))
    return QMatrix((a @ b).tolist())


def test_trivial_cases():
    assert rank(QMatrix.identity(2)) == 2
    assert rank(QMatrix([[1] * 3] * 3)) == 1
    assert kernel_basis(QMatrix.identity(4)) == []
    assert len(kernel_basis(QMatrix.zeros(1, 3))) == 3
    assert rank(QMatrix.zeros(0, 0)) == 0


@pytest.mark.parametrize("mode", MODES)
def test_agrees_with_sympy(mode):
    rng = np.random.default_rng(11)
    with arithmetic_mode(mode):
        for _ in range(60):
            m, n = int(rng.integers(1, 8)), int(rng.integers(1, 9))
            M = random_matrix(rng, m, n) if rng.random() < 0.5 else low_rank(rng, m, n, int(rng.integers(0, 4)))
            S = sympy.Matrix(M.to_rows())
            assert rank(M) == S.rank()
            R, piv = S.rref()
            assert pivot_columns(M) == list(piv)
            ours = rref(M)
            assert [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in ours] == [
                list(R.row(i)) for i in range(len(piv))
            ]


@pytest.mark.parametrize("mode", MODES)
def test_kernel_residual_is_exactly_zero(mode):
    rng = np.random.default_rng(5)
    with arithmetic_mode(mode):
        for _ in range(10):
            M = low_rank(rng, 20, 30, int(rng.integers(5, 20)))
            K = kernel_basis(M)
            assert len(K) == 30 - rank(M)
            for v in K:
                assert all(x == 0 for x in M.apply(v))


def test_kernel_echelon_convention():
    M = QMatrix([[1, 2, 0, 3], [0, 0, 1, 4]])
    K = kernel_basis(M)
    assert K == [[-2, 1, 0, 0], [-3, 0, -4, 1]]


def test_rank_of_transpose():
    rng = np.random.default_rng(3)
    for _ in range(30):
        M = random_matrix(rng, int(rng.integers(1, 9)), int(rng.integers(1, 9)))
        assert rank(M) == rank(M.T)


def test_solve_membership():
    v = [Fraction(3), Fraction(-1, 2), Fraction(7)]
    assert solve_membership(QMatrix.identity(3), v) == v
    rank_one = QMatrix([[1, 2], [2, 4]])
    assert solve_membership(rank_one, [1, 0]) is None
    x = solve_membership(rank_one, [3, 6])
    assert rank_one.apply(x) == [3, 6]
    assert in_span(rank_one, [1, 2])
    with pytest.raises(DimensionError):
        solve_membership(rank_one, [1, 2, 3])


def test_block_structure_does_not_change_results():
    # a block-diagonal matrix and a version with the blocks interleaved
    A = QMatrix([[1, 2, 0, 0], [0, 0, 3, 3], [2, 4, 0, 0]])
    assert rank(A) == 2
    assert kernel_dim(A) == 2
    assert kernel_basis(A) == [[-2, 1, 0, 0], [0, 0, -1, 1]]


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7), st.data())
def test_flint_matches_bareiss(m, n, data):
    vals = data.draw(st.lists(st.integers(-20, 20), min_size=m * n, max_size=m * n))
    a = np.array(vals, dtype=object).reshape(m, n)
    assert exact.rank_int(a) == exact.rank_bareiss(a)
    R1, d1, p1 = exact.rref_int(a)
    R2, d2, p2 = exact.rref_bareiss(a)
    assert p1 == p2
    for i in range(len(p1)):
        assert [Fraction(int(x), d1) for x in R1[i]] == [Fraction(int(x), d2) for x in R2[i]]


def test_primes_and_reconstruction():
    ps = modular.primes(20)
    assert len(set(ps)) == 20 and all(sympy.isprime(p) for p in ps)
    m = ps[0] * ps[1]
    for num, den in [(3, 7), (-22, 5), (0, 1), (41152, 263), (-97, 1000)]:
        a = num * pow(den, -1, m) % m
        assert modular.rational_reconstruction(a, m) == (num, den)


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
def test_backends_agree():
    rng = np.random.default_rng(1)
    p = modular.primes(1)[0]
    saved = _kernels.backend()
    try:
        for _ in range(20):
            m, n = int(rng.integers(1, 30)), int(rng.integers(1, 30))
            a = rng.integers(0, 3, size=(m, n)).astype(np.int64) * rng.integers(0, p, size=(m, n))
            a %= p
            out = {}
            for name in ("numba", "numpy"):
                _kernels.set_backend(name)
                b = a.copy()
                r, piv = _kernels.rref_mod_p(b, p)
                out[name] = (r, tuple(piv), b.tobytes())
            assert out["numba"] == out["numpy"]
    finally:
        _kernels.set_backend(saved)


def test_zariski_delta5_rank(curve):
    from milnorfiber.jacobian import divergence
    from milnorfiber.syzygy import syzygy_space

    c = curve("zariski-sextic")
    syz = syzygy_space(c, 3)
    # J_{f,2} = 0 in degree 2 < d - 1, so delta_5 is the divergence itself
    cols = [divergence(s.triple).coord_vector() for s in syz]
    assert rank(QMatrix.from_columns(len(cols[0]), cols)) == len(syz) - 1


def test_nine_cusp_membership_count(curve):
    from milnorfiber.spectral import delta_kernel_basis

    c = curve("nine-cusp-sextic")
    assert len(delta_kernel_basis(c, 7)) == 6
