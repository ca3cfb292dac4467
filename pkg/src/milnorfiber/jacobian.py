"""Jacobian ideal, Milnor algebra and input validation.

Coordinates on S_j^3 are the a-, b- and c-blocks of basis(j) concatenated, so
a triple (a, b, c) is the vector ``a.coords + b.coords + c.coords``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from . import polyring as pr
from .errors import DegreeTooSmall, NonIsolatedSingularities
from .exactla import QMatrix, rank, rref
from .polyring import HomogeneousPoly

Triple = tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]


@dataclass(frozen=True, eq=False)
class CurveInput:
    """A validated reduced plane curve f = 0 with derived data and a memo table."""

    f: HomogeneousPoly
    components: int | None = None
    tau: int | None = None
    name: str | None = None
    _memo: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def d(self) -> int:
        return self.f.degree

    @property
    def partials(self) -> Triple:
        return self.memo("partials", self.f.partials)

    @property
    def int_partials(self) -> tuple[dict, dict, dict]:
        """Partials of the denominator-free multiple of f, as monomial -> int maps."""

        def build():
            den = self.f.denominator_lcm()
            return tuple(p.scale(den).integer_coeffs() if p else {} for p in self.partials)

        return self.memo("int_partials", build)

    def memo(self, key, compute: Callable):
        # insert-if-absent; two threads may compute the same slot, the first insert wins
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def with_components(self, r: int | None) -> "CurveInput":
        return CurveInput(self.f, r, self.tau, self.name)


# triples <-> vectors -----------------------------------------------------------

def triple_to_vector(t: Sequence[HomogeneousPoly], j: int) -> list[Fraction]:
    out: list[Fraction] = []
    for p in t:
        out.extend(p.coord_vector() if p else [Fraction(0)] * pr.dim(j))
    return out


def vector_to_triple(v: Sequence, j: int) -> Triple:
    n = pr.dim(j)
    if len(v) != 3 * n:
        raise ValueError(f"expected {3 * n} coordinates, got {len(v)}")
    return tuple(HomogeneousPoly.from_vector(j, v[i * n:(i + 1) * n]) for i in range(3))


def apply_triple(curve: CurveInput, t: Sequence[HomogeneousPoly]) -> HomogeneousPoly:
    """a*f_x + b*f_y + c*f_z."""
    fx, fy, fz = curve.partials
    return t[0] * fx + t[1] * fy + t[2] * fz


def divergence(t: Sequence[HomogeneousPoly]) -> HomogeneousPoly:
    """a_x + b_y + c_z."""
    return pr.sum_polys((t[0].diff(0), t[1].diff(1), t[2].diff(2)), max(t[0].degree - 1, 0))


# matrices --------------------------------------------------------------------------

def jacobian_matrix(curve: CurveInput, j: int) -> QMatrix:
    """S_j^3 -> S_{j+d-1}, (a, b, c) |-> a f_x + b f_y + c f_z (integer multiple of f)."""

    def build():
        n = pr.dim(j)
        tgt = pr.index(j + curve.d - 1)
        entries = []
        for i, part in enumerate(curve.int_partials):
            terms = list(part.items())
            for col, (a, b, c) in enumerate(pr.basis(j)):
                for (u, v, w), coeff in terms:
                    entries.append((tgt[(a + u, b + v, c + w)], i * n + col, coeff))
        return QMatrix.from_entries(len(tgt), 3 * n, entries)

    if j < 0:
        return QMatrix.zeros(pr.dim(j + curve.d - 1), 0)
    return curve.memo(("jac", j), build)


def jacobian_generators(curve: CurveInput, m: int) -> QMatrix:
    """Columns spanning J_{f,m} inside S_m (the products of basis(m-d+1) with each partial)."""
    if m - curve.d + 1 < 0:
        return QMatrix.zeros(pr.dim(m), 0)
    return jacobian_matrix(curve, m - curve.d + 1)


def divergence_matrix(j: int) -> QMatrix:
    """S_j^3 -> S_{j-1}, (a, b, c) |-> a_x + b_y + c_z."""
    return _divergence_matrix(j)


_div_cache: dict[int, QMatrix] = {}


def _divergence_matrix(j: int) -> QMatrix:
    if j in _div_cache:
        return _div_cache[j]
    n = pr.dim(j)
    tgt = pr.index(j - 1)
    entries = []
    for i in range(3):
        for col, m in enumerate(pr.basis(j)):
            e = m[i]
            if e:
                mm = list(m)
                mm[i] -= 1
                entries.append((tgt[tuple(mm)], i * n + col, e))
    M = QMatrix.from_entries(len(tgt), 3 * n, entries)
    _div_cache[j] = M
    return M


def koszul_matrix(curve: CurveInput, q: int) -> QMatrix:
    """Columns spanning the Koszul relations inside S_{q-2}^3.

    The families h*(f_y, -f_x, 0), h*(f_z, 0, -f_x), h*(0, f_z, -f_y) for h in
    basis(q-d-1); these are the 2-forms df ^ (h dz), df ^ (h dy), df ^ (h dx)
    up to sign.
    """
    j = q - 2
    k = q - curve.d - 1
    n = pr.dim(j)
    if k < 0 or j < 0:
        return QMatrix.zeros(3 * n, 0)
    fx, fy, fz = curve.partials
    zero = HomogeneousPoly.zero(curve.d - 1)
    pairs = ((fy, -fx, zero), (fz, zero, -fx), (zero, fz, -fy))
    cols = []
    for h in pr.basis(k):
        hp = HomogeneousPoly.monomial(h)
        for pat in pairs:
            cols.append(triple_to_vector([hp * p for p in pat], j))
    return QMatrix.from_columns(3 * n, cols)


# Milnor algebra -----------------------------------------------------------------

def milnor_dim(curve: CurveInput, m: int) -> int:
    """dim M(f)_m = dim S_m - dim J_{f,m}."""
    if m < 0:
        return 0
    if m - curve.d + 1 < 0:
        return pr.dim(m)
    return curve.memo(("milnor", m), lambda: pr.dim(m) - rank(jacobian_generators(curve, m)))


@dataclass(frozen=True)
class MilnorSlot:
    m: int
    jacobian_subspace: list[list[Fraction]]
    dim_M: int


def milnor_slot(curve: CurveInput, m: int) -> MilnorSlot:
    """Echelon basis of J_{f,m} (as rows) together with dim M(f)_m."""
    rows = rref(jacobian_generators(curve, m).transpose())
    return MilnorSlot(m, rows, pr.dim(m) - len(rows))


def kr_dim(d: int, q: int) -> int:
    """dim (df ^ Omega^1)_q for a curve with isolated singularities."""

    def c2(n: int) -> int:
        return comb(n, 2) if n >= 2 else 0

    return 3 * c2(q - d + 1) - c2(q - 2 * d + 2)


def tau_window(d: int) -> range:
    return range(max(3 * d - 6, 0), 3 * d + 3)


def find_plateau(values: dict[int, int]) -> int | None:
    ms = sorted(values)
    for a, b, c in zip(ms, ms[1:], ms[2:]):
        if values[a] == values[b] == values[c]:
            return values[a]
    return None


def validate(
    f: HomogeneousPoly,
    components: int | None = None,
    *,
    allow_small_degree: bool = False,
    name: str | None = None,
) -> CurveInput:
    """Accept f when deg f >= 3 and M(f) stabilises inside the probe window."""
    if f.is_zero():
        raise DegreeTooSmall("the zero polynomial does not define a curve")
    if f.degree < 3 and not allow_small_degree:
        raise DegreeTooSmall(f"degree {f.degree} < 3")
    if f.degree < 1:
        raise DegreeTooSmall("constant polynomial")
    if components is not None and components < 1:
        raise ValueError("number of components must be positive")
    curve = CurveInput(f, components, None, name)
    values = {m: milnor_dim(curve, m) for m in tau_window(f.degree)}
    tau = find_plateau(values)
    if tau is None:
        raise NonIsolatedSingularities(
            f"dim M(f)_m does not stabilise for m in {tau_window(f.degree).start}..{tau_window(f.degree).stop - 1}: "
            + ", ".join(f"{m}:{v}" for m, v in sorted(values.items()))
        )
    validated = CurveInput(f, components, tau, name)
    validated._memo.update(curve._memo)
    return validated


def tjurina(curve: CurveInput) -> int:
    if curve.tau is not None:
        return curve.tau
    values = {m: milnor_dim(curve, m) for m in tau_window(curve.d)}
    tau = find_plateau(values)
    if tau is None:
        raise NonIsolatedSingularities("no plateau of dim M(f)_m")
    return tau
