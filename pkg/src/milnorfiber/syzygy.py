"""Jacobian syzygies AR(f): graded pieces, minimal generators, freeness.

A triple rho = (a, b, c) of degree j with a f_x + b f_y + c f_z = 0 is the
2-form a dy^dz - b dx^dz + c dx^dy of form degree q = j + 2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import polyring as pr
from .errors import InconclusiveBound, InternalConsistencyError
from .exactla import QMatrix, kernel_basis, pivot_columns, rank
from .jacobian import (
    CurveInput,
    apply_triple,
    jacobian_matrix,
    milnor_dim,
    triple_to_vector,
    vector_to_triple,
)
from .polyring import HomogeneousPoly


@dataclass(frozen=True)
class SyzygyTriple:
    j: int
    a: HomogeneousPoly
    b: HomogeneousPoly
    c: HomogeneousPoly

    @classmethod
    def from_vector(cls, v, j: int) -> "SyzygyTriple":
        return cls(j, *vector_to_triple(v, j))

    @property
    def q(self) -> int:
        return self.j + 2

    @property
    def triple(self) -> tuple[HomogeneousPoly, HomogeneousPoly, HomogeneousPoly]:
        return self.a, self.b, self.c

    def vector(self) -> list[Fraction]:
        return triple_to_vector(self.triple, self.j)

    def is_syzygy(self, curve: CurveInput) -> bool:
        return apply_triple(curve, self.triple).is_zero()

    def times(self, g: HomogeneousPoly) -> "SyzygyTriple":
        return SyzygyTriple(self.j + g.degree, g * self.a, g * self.b, g * self.c)

    def to_json(self) -> list[str]:
        return [str(self.a), str(self.b), str(self.c)]


def syzygy_dim(curve: CurveInput, j: int) -> int:
    """dim AR(f)_j, from the rank of S_j^3 -> S_{j+d-1}."""
    if j < 0:
        return 0
    m = j + curve.d - 1
    return 3 * pr.dim(j) - (pr.dim(m) - milnor_dim(curve, m))


def syzygy_space(curve: CurveInput, j: int) -> list[SyzygyTriple]:
    """Echelon basis of AR(f)_j."""
    if j < 0:
        return []
    vecs = curve.memo(("ar_basis", j), lambda: kernel_basis(jacobian_matrix(curve, j)))
    return [SyzygyTriple.from_vector(v, j) for v in vecs]


# generators ----------------------------------------------------------------------

def _shift_entries(vec_entries, j: int, k: int):
    """Coordinates of mu * v for every monomial mu of degree k, v in S_j^3.

    ``vec_entries`` is a list of (component, monomial, value) triples.
    Yields (column, row, value) over the products, one column per mu.
    """
    n_out = pr.dim(j + k)
    idx = pr.index(j + k)
    for col, mu in enumerate(pr.basis(k)):
        for comp, (a, b, c), val in vec_entries:
            yield col, comp * n_out + idx[(a + mu[0], b + mu[1], c + mu[2])], val


def _entries(s: SyzygyTriple):
    out = []
    for comp, p in enumerate(s.triple):
        for m, v in p.items():
            out.append((comp, m, v))
    return out


def products_matrix(gens: list[SyzygyTriple], j: int) -> QMatrix:
    """Columns mu * g for every generator g of degree <= j and monomial mu of degree j - deg g."""
    rows = 3 * pr.dim(j)
    entries = []
    offset = 0
    for g in gens:
        k = j - g.j
        if k < 0:
            continue
        for col, row, val in _shift_entries(_entries(g), g.j, k):
            entries.append((row, offset + col, val))
        offset += pr.dim(k)
    return QMatrix.from_entries(rows, offset, entries)


@dataclass
class GeneratorProfile:
    jmax: int
    dim_ar: dict[int, int]
    new_gens: dict[int, int]
    generators: list[SyzygyTriple] = field(repr=False)
    boundary_warning: bool = False

    @property
    def degrees(self) -> list[int]:
        return sorted(g.j for g in self.generators)

    def rows(self) -> list[dict]:
        return [{"j": j, "dim_ar": self.dim_ar[j], "new_gens": self.new_gens[j]} for j in sorted(self.dim_ar)]


def default_jmax(d: int) -> int:
    return 2 * d - 2


def generator_profile(curve: CurveInput, jmax: int | None = None) -> GeneratorProfile:
    """Minimal generator degrees of AR(f) up to degree ``jmax``.

    In degree j the submodule generated by lower degrees is spanned by the
    monomial multiples of the generators already found; whatever AR(f)_j has
    beyond that needs new generators (graded Nakayama).
    """
    if jmax is None:
        jmax = default_jmax(curve.d)
    if jmax < 1:
        raise ValueError("jmax must be >= 1")

    def build():
        gens: list[SyzygyTriple] = []
        dims: dict[int, int] = {}
        new: dict[int, int] = {}
        for j in range(0, jmax + 1):
            dims[j] = syzygy_dim(curve, j)
            if dims[j] == 0:
                new[j] = 0
                continue
            P = products_matrix(gens, j)
            have = rank(P) if P.cols else 0
            g = dims[j] - have
            if g < 0:
                raise InternalConsistencyError(f"products of generators exceed dim AR_{j}")
            new[j] = g
            if g:
                gens.extend(_new_generators(curve, P, j, g))
        return GeneratorProfile(jmax, dims, new, gens, new[jmax] > 0)

    return curve.memo(("profile", jmax), build)


def _new_generators(curve: CurveInput, P: QMatrix, j: int, count: int) -> list[SyzygyTriple]:
    basis = syzygy_space(curve, j)
    B = QMatrix.from_columns(P.rows, [s.vector() for s in basis])
    piv = pivot_columns(P.hstack(B)) if P.cols else pivot_columns(B)
    chosen = [basis[c - P.cols] for c in piv if c >= P.cols]
    if len(chosen) != count:
        raise InternalConsistencyError(f"expected {count} new generators in degree {j}, found {len(chosen)}")
    return chosen


# classification -------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    kind: str  # "Free" | "NearlyFree" | "Other"
    degrees: tuple[int, ...]
    d1: int | None = None
    d2: int | None = None

    def __str__(self) -> str:
        if self.kind == "Other":
            return "Other{" + ",".join(map(str, self.degrees)) + "}"
        return f"{self.kind}({self.d1},{self.d2})"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "degrees": list(self.degrees)}
        if self.d1 is not None:
            out["d1"] = self.d1
            out["d2"] = self.d2
        return out


def classify_profile(profile: GeneratorProfile, d: int) -> Classification:
    degs = tuple(profile.degrees)
    if profile.boundary_warning:
        raise InconclusiveBound(
            f"new syzygy generators in degree {profile.jmax}; the generator list may be incomplete"
        )
    if len(degs) == 2:
        d1, d2 = degs
        if d1 + d2 != d - 1:
            raise InternalConsistencyError(f"two generators of degrees {degs} but d - 1 = {d - 1}")
        return Classification("Free", degs, d1, d2)
    if len(degs) == 3 and degs[1] == degs[2] and degs[0] + degs[1] == d:
        return Classification("NearlyFree", degs, degs[0], degs[1])
    return Classification("Other", degs)


def classify(curve: CurveInput, jmax: int | None = None) -> Classification:
    return classify_profile(generator_profile(curve, jmax), curve.d)


def free_ar_dim(d1: int, d2: int, k: int) -> int:
    """dim AR(f)_k for a free curve with exponents d1 <= d2."""

    def c(n: int) -> int:
        return comb(n, 2) if n >= 2 else 0

    return c(k - d1 + 2) + c(k - d2 + 2)


def nearly_free_relation(curve: CurveInput, gens: list[SyzygyTriple]):
    """Second-order syzygy a*rho1 + l2*rho2 + l3*rho3 = 0 for a nearly free curve.

    Returns ``(a, l2, l3)`` or None when the relation space is not
    one-dimensional with independent linear forms l2, l3.
    """
    if len(gens) != 3:
        return None
    r1, r2, r3 = sorted(gens, key=lambda g: g.j)
    if r2.j != r3.j:
        return None
    top = r2.j + 1
    ka = top - r1.j
    P = products_matrix([r1, r2, r3], top)
    ker = kernel_basis(P)
    if len(ker) != 1:
        return None
    v = ker[0]
    na, n1 = pr.dim(ka), pr.dim(1)
    a = HomogeneousPoly.from_vector(ka, v[:na])
    l2 = HomogeneousPoly.from_vector(1, v[na:na + n1])
    l3 = HomogeneousPoly.from_vector(1, v[na + n1:])
    if rank(QMatrix([l2.coord_vector(), l3.coord_vector()])) != 2:
        return None
    return a, l2, l3
