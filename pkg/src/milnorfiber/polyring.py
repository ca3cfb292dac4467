"""The graded ring S = Q[x, y, z].

Monomials are exponent triples ``(ex, ey, ez)``.  Every graded piece S_k has
a fixed basis in graded-lex order with x > y > z, so ``basis(k)[0] == (k, 0, 0)``.
Polynomials are sparse maps from monomials to ``Fraction``; the linear algebra
boundary uses dense coordinate vectors in that basis.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, int, int]

VARS = ("x", "y", "z")
UNIT = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def dim(k: int) -> int:
    """dim S_k, zero for negative k."""
    return comb(k + 2, 2) if k >= 0 else 0


@lru_cache(maxsize=None)
def basis(k: int) -> tuple[Monomial, ...]:
    if k < 0:
        return ()
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


@lru_cache(maxsize=None)
def index(k: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(basis(k))}


def _as_rat(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class HomogeneousPoly:
    """A homogeneous element of S_k with exact rational coefficients.

    Instances are immutable; zero coefficients are never stored.  The zero
    polynomial still carries a degree.
    """

    __slots__ = ("degree", "_coeffs", "_hash")

    def __init__(self, degree: int, coeffs: Mapping[Monomial, object] | None = None):
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        clean: dict[Monomial, Fraction] = {}
        for m, c in (coeffs or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != 3 or min(m) < 0 or sum(m) != degree:
                raise ValueError(f"monomial {m} is not of degree {degree}")
            c = _as_rat(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
        self.degree = degree
        self._coeffs = {m: c for m, c in clean.items() if c}
        self._hash = None

    # construction -----------------------------------------------------------
    @classmethod
    def zero(cls, degree: int) -> "HomogeneousPoly":
        return cls(degree)

    @classmethod
    def monomial(cls, m: Monomial, coeff=1) -> "HomogeneousPoly":
        return cls(sum(m), {m: coeff})

    @classmethod
    def var(cls, name: str) -> "HomogeneousPoly":
        return cls.monomial(UNIT[VARS.index(name)])

    @classmethod
    def from_vector(cls, degree: int, vec: Sequence) -> "HomogeneousPoly":
        b = basis(degree)
        if len(vec) != len(b):
            raise ValueError(f"expected {len(b)} coordinates, got {len(vec)}")
        return cls(degree, {m: c for m, c in zip(b, vec) if c})

    # access -----------------------------------------------------------------
    @property
    def coeffs(self) -> dict[Monomial, Fraction]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coeff(self, m: Monomial) -> Fraction:
        return self._coeffs.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in graded-lex order (largest first)."""
        return sorted(self._coeffs.items(), reverse=True)

    def coord_vector(self) -> list[Fraction]:
        idx = index(self.degree)
        v = [Fraction(0)] * len(idx)
        for m, c in self._coeffs.items():
            v[idx[m]] = c
        return v

    # arithmetic -------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, HomogeneousPoly):
            if not self._coeffs and not other._coeffs:
                return self.degree == other.degree
            return self.degree == other.degree and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._coeffs
            return self.degree == 0 and self._coeffs == {(0, 0, 0): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self._coeffs.items())))
        return self._hash

    def _check_same_degree(self, other: "HomogeneousPoly") -> None:
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        self._check_same_degree(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return HomogeneousPoly(self.degree, out)

    def __neg__(self) -> "HomogeneousPoly":
        return HomogeneousPoly(self.degree, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HomogeneousPoly":
        c = _as_rat(c)
        return HomogeneousPoly(self.degree, {m: c * v for m, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (a, b, c), u in self._coeffs.items():
            for (p, q, r), v in other._coeffs.items():
                m = (a + p, b + q, c + r)
                out[m] = out.get(m, 0) + u * v
        return HomogeneousPoly(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomogeneousPoly":
        if n < 0:
            raise ValueError("negative power")
        result = HomogeneousPoly(0, {(0, 0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff(self, var: int) -> "HomogeneousPoly":
        """Partial derivative with respect to variable number ``var`` (0, 1, 2)."""
        if self.degree == 0:
            return HomogeneousPoly(0)
        out = {}
        for m, c in self._coeffs.items():
            e = m[var]
            if e:
                mm = list(m)
                mm[var] -= 1
                out[tuple(mm)] = c * e
        return HomogeneousPoly(self.degree - 1, out)

    def partials(self) -> tuple["HomogeneousPoly", "HomogeneousPoly", "HomogeneousPoly"]:
        if self.degree < 1:
            raise ValueError("partials need degree >= 1")
        return self.diff(0), self.diff(1), self.diff(2)

    def denominator_lcm(self) -> int:
        return lcm(1, *(c.denominator for c in self._coeffs.values()))

    def integer_coeffs(self) -> dict[Monomial, int]:
        """Coefficients scaled by the common denominator, as Python ints."""
        den = self.denominator_lcm()
        return {m: int(c * den) for m, c in self._coeffs.items()}

    # printing ---------------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"HomogeneousPoly({self.degree}, {format_poly(self)!r})"


def format_monomial(m: Monomial) -> str:
    parts = []
    for v, e in zip(VARS, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: HomogeneousPoly) -> str:
    """Canonical text form, e.g. ``x^2*y - 3/2*z^3``; re-parseable."""
    if not p:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.terms()):
        mono = format_monomial(m)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def euler_defect(f: HomogeneousPoly) -> HomogeneousPoly:
    """x*f_x + y*f_y + z*f_z - d*f; identically zero for homogeneous f."""
    fx, fy, fz = f.partials()
    x, y, z = (HomogeneousPoly.var(v) for v in VARS)
    return x * fx + y * fy + z * fz - f.scale(f.degree)


def multiplication_entries(p: HomogeneousPoly, k: int) -> Iterable[tuple[int, int, Fraction]]:
    """Sparse (row, col, value) entries of S_k -> S_{k+deg p}, g |-> p*g."""
    tgt = index(k + p.degree)
    terms = list(p.items())
    for j, (a, b, c) in enumerate(basis(k)):
        for (u, v, w), coeff in terms:
            yield tgt[(a + u, b + v, c + w)], j, coeff


def sum_polys(polys: Iterable[HomogeneousPoly], degree: int) -> HomogeneousPoly:
    out: dict[Monomial, Fraction] = {}
    for p in polys:
        if p and p.degree != degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {degree}")
        for m, c in p.items():
            out[m] = out.get(m, 0) + c
    return HomogeneousPoly(degree, out)
