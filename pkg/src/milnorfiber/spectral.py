"""Divergence maps on syzygy 2-forms and the E2 numbers they produce.

For q = t*d + k with k in [1, d]:

* Syz_q is AR(f)_{q-2}, KR_q the Koszul part df ^ Omega^1,
* delta_q sends (a, b, c) to the class of a_x + b_y + c_z in M(f)_{q-3},
* kappa_q = dim ker delta_q and epsilon_q = kappa_q - dim KR_q.

kappa_q is read off ranks alone.  The pairs (v, w) with v in S_{q-2}^3 and
w in S_{q-d-2}^3 solving

    J v = 0,    div v - J w = 0

form the kernel of a block matrix Phi.  Projecting onto v has kernel
{(0, w) : J w = 0}, so kappa_q = null(Phi) - null(J_{q-3}).
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import polyring as pr
from .jacobian import (
    CurveInput,
    apply_triple,
    divergence,
    divergence_matrix,
    jacobian_generators,
    jacobian_matrix,
    koszul_matrix,
    kr_dim,
    milnor_dim,
    vector_to_triple,
)
from .exactla import QMatrix, kernel_basis, pivot_columns, rank
from .polyring import HomogeneousPoly
from .syzygy import syzygy_dim

Triple = tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]


def threads() -> int:
    try:
        n = int(os.environ.get("MILNOR_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, n)


def split_q(q: int, d: int) -> tuple[int, int]:
    """(t, k) with q = t*d + k and 1 <= k <= d."""
    t, k = divmod(q - 1, d)
    return t, k + 1


@dataclass(frozen=True)
class SpectralCell:
    q: int
    t: int
    k: int
    dim_syz: int
    dim_kr: int
    kappa: int
    epsilon: int

    def to_json(self) -> dict:
        return {
            "q": self.q, "t": self.t, "k": self.k, "dim_syz": self.dim_syz,
            "dim_kr": self.dim_kr, "kappa": self.kappa, "epsilon": self.epsilon,
        }


def _phi(curve: CurveInput, q: int) -> tuple[QMatrix, QMatrix]:
    j = q - 2
    M = jacobian_matrix(curve, j).raw()
    J = jacobian_generators(curve, q - 3).raw() if q >= 3 else np.zeros((0, 0), dtype=object)
    zero_top = np.zeros((M.shape[0], J.shape[1]), dtype=object)
    top = np.hstack([M, zero_top])
    if j > 0:
        D = divergence_matrix(j).raw()
        bottom = np.hstack([D, -J]) if J.shape[1] else D
        Phi = np.vstack([top, bottom])
    else:
        Phi = top
    return QMatrix._wrap(Phi), QMatrix._wrap(J)


def delta_kernel_dim(curve: CurveInput, q: int) -> int:
    """kappa_q = dim ker(Syz_q -> M(f)_{q-3})."""
    if q < 2:
        return 0

    def compute():
        Phi, J = _phi(curve, q)
        null_phi = Phi.cols - rank(Phi)
        null_j = J.cols - rank(J) if J.cols else 0
        return null_phi - null_j

    return curve.memo(("kappa", q), compute)


def epsilon(curve: CurveInput, q: int) -> int:
    return delta_kernel_dim(curve, q) - kr_dim(curve.d, q)


def cell(curve: CurveInput, q: int) -> SpectralCell:
    t, k = split_q(q, curve.d)
    kappa = delta_kernel_dim(curve, q)
    dkr = kr_dim(curve.d, q)
    return SpectralCell(q, t, k, syzygy_dim(curve, q - 2), dkr, kappa, kappa - dkr)


def e2_table(curve: CurveInput, qmax: int | None = None, qmin: int = 1) -> list[SpectralCell]:
    """Cells for qmin <= q <= qmax (default 2d), sorted by q."""
    if qmax is None:
        qmax = 2 * curve.d
    qs = range(max(qmin, 1), qmax + 1)
    n = threads()
    if n == 1:
        cells = [cell(curve, q) for q in qs]
    else:
        # large q first so the pool stays busy
        with ThreadPoolExecutor(max_workers=n) as pool:
            cells = list(pool.map(lambda q: cell(curve, q), sorted(qs, reverse=True)))
    return sorted(cells, key=lambda c: c.q)


def delta_kernel_basis(curve: CurveInput, q: int) -> list[Triple]:
    """Triples spanning ker delta_q (echelonized, so a basis)."""
    Phi, J = _phi(curve, q)
    n = 3 * pr.dim(q - 2)
    vs = [v[:n] for v in kernel_basis(Phi)]
    vs = [v for v in vs if any(vs_i for vs_i in v)]
    if not vs:
        return []
    V = QMatrix.from_columns(n, vs)
    keep = pivot_columns(V)
    return [vector_to_triple(vs[i], q - 2) for i in keep]


# forms ---------------------------------------------------------------------------

def euler_contraction(t: Sequence[HomogeneousPoly]) -> Triple:
    """1-form coefficients (P, Q, R) of the contraction of a dy^dz - b dx^dz + c dx^dy."""
    a, b, c = t
    x, y, z = (HomogeneousPoly.var(v) for v in "xyz")
    return b * z - c * y, c * x - a * z, a * y - b * x


def contract_one_form(w: Sequence[HomogeneousPoly]) -> HomogeneousPoly:
    """x P + y Q + z R."""
    x, y, z = (HomogeneousPoly.var(v) for v in "xyz")
    return x * w[0] + y * w[1] + z * w[2]


@dataclass(frozen=True)
class WitnessForm:
    q: int
    two_form: Triple
    one_form: Triple
    closed: bool

    @classmethod
    def of(cls, q: int, t: Sequence[HomogeneousPoly], closed: bool) -> "WitnessForm":
        t = tuple(t)
        return cls(q, t, euler_contraction(t), closed)

    def check(self, curve: CurveInput) -> bool:
        """Syzygy equation, plus honest closedness when flagged closed."""
        if not apply_triple(curve, self.two_form).is_zero():
            return False
        if self.closed and not divergence(self.two_form).is_zero():
            return False
        return True

    def to_json(self) -> dict:
        a, b, c = self.two_form
        return {
            "q": self.q,
            "closed": self.closed,
            # coefficients of dy^dz, dx^dz, dx^dy
            "two_form": [str(a), str(-b), str(c)],
            "one_form": [str(p) for p in self.one_form],
        }


def closed_syzygy_space(curve: CurveInput, q: int) -> list[WitnessForm]:
    """Basis of Z^2_{f,q}: syzygies whose divergence vanishes identically."""
    j = q - 2
    if j < 0:
        return []
    A = jacobian_matrix(curve, j)
    if j > 0:
        A = A.vstack(divergence_matrix(j))
    return [WitnessForm.of(q, vector_to_triple(v, j), True) for v in kernel_basis(A)]


def b2_matrix(curve: CurveInput, q: int) -> QMatrix:
    """Columns df ^ dg for monomials g of degree q - d, as triples in S_{q-2}^3."""
    j = q - 2
    k = q - curve.d
    n = 3 * pr.dim(j)
    if k < 1:
        # dg = 0 for constants
        return QMatrix.zeros(n, 0)
    fx, fy, fz = curve.partials
    cols = []
    for m in pr.basis(k):
        gx, gy, gz = HomogeneousPoly.monomial(m).partials()
        t = (fy * gz - fz * gy, fz * gx - fx * gz, fx * gy - fy * gx)
        cols.append([c for p in t for c in (p.coord_vector() if p else [0] * pr.dim(j))])
    return QMatrix.from_columns(n, cols)


def h2f_dim(curve: CurveInput, q: int) -> int:
    """dim Z^2_{f,q} - dim B^2_{f,q}."""
    z = len(closed_syzygy_space(curve, q))
    B = b2_matrix(curve, q)
    return z - (rank(B) if B.cols else 0)


def kr_rank(curve: CurveInput, q: int) -> int:
    K = koszul_matrix(curve, q)
    return rank(K) if K.cols else 0


def koszul_in_kernel(curve: CurveInput, q: int) -> bool:
    """Every Koszul relation of degree q has divergence in J_f (exact check)."""
    K = koszul_matrix(curve, q)
    if not K.cols or q - 2 <= 0:
        return True
    j = q - 2
    D = divergence_matrix(j)
    J = jacobian_generators(curve, q - 3)
    divs = D @ K
    if not J.cols:
        return all(x == 0 for x in divs.raw().flat)
    rank_j = pr.dim(q - 3) - milnor_dim(curve, q - 3)
    return rank(J.hstack(divs)) == rank_j


@dataclass(frozen=True)
class InjectivityReport:
    d1: int
    d2: int
    kappas: dict[int, int]

    @property
    def passed(self) -> bool:
        return all(v == 0 for v in self.kappas.values())


def injectivity_probe(curve: CurveInput, d1: int, d2: int) -> InjectivityReport:
    """kappa_{j+2} for d1 <= j < d2 (all should vanish for a free curve)."""
    return InjectivityReport(d1, d2, {j + 2: delta_kernel_dim(curve, j + 2) for j in range(d1, d2)})


# witnesses -----------------------------------------------------------------------

def witnesses(curve: CurveInput, table: Sequence[SpectralCell]) -> list[WitnessForm]:
    """Representative forms for the t = 0 cells with epsilon > 0.

    Closed syzygies come first; when they span fewer than epsilon_q dimensions
    the rest is filled from ker delta_q and flagged as not closed.
    """
    out: list[WitnessForm] = []
    for c in table:
        if c.t != 0 or c.epsilon <= 0:
            continue
        closed = closed_syzygy_space(curve, c.q)
        chosen = closed[: c.epsilon]
        if len(chosen) < c.epsilon:
            have = [_vec(w.two_form, c.q - 2) for w in chosen]
            for t in delta_kernel_basis(curve, c.q):
                if len(chosen) >= c.epsilon:
                    break
                v = _vec(t, c.q - 2)
                if rank(QMatrix.from_columns(len(v), have + [v])) > len(have):
                    have.append(v)
                    chosen.append(WitnessForm.of(c.q, t, divergence(t).is_zero()))
        out.extend(chosen)
    return out


def _vec(t: Sequence[HomogeneousPoly], j: int) -> list:
    return [c for p in t for c in (p.coord_vector() if p else [0] * pr.dim(j))]
