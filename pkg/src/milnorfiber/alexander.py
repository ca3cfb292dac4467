"""Alexander polynomial of a plane curve from the t = 0 row of the E2 table.

Writing lambda_k = exp(-2 pi i k / d) and k' = d - k, the multiplicity of
lambda_k as a root of Delta satisfies

    max(e_k, e_k') <= m(lambda_k) <= e_k + e_k'

where e_k = epsilon_k, with equality when either number vanishes.  For
k = d/2 the two indices coincide and only [e, 2e] is known.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from sympy import Poly, cyclotomic_poly, divisors, symbols

from .errors import NonPolynomialResult, OrbitInconsistency
from .jacobian import CurveInput

T = symbols("t")


@dataclass(frozen=True)
class MultiplicityBound:
    k: int
    kprime: int
    eps_k: int
    eps_kprime: int
    lower: int
    upper: int
    exact: bool

    @property
    def order(self) -> int:
        """Multiplicative order of lambda_k (it is a primitive root of Phi_order)."""
        return (self.k + self.kprime) // gcd(self.k, self.k + self.kprime)

    @property
    def root(self) -> bool:
        return self.upper > 0

    def to_json(self) -> dict:
        return {"k": self.k, "lower": self.lower, "upper": self.upper, "exact": self.exact}


def multiplicity_bound(d: int, k: int, eps: dict[int, int]) -> MultiplicityBound:
    kp = d - k
    a, b = eps.get(k, 0), eps.get(kp, 0)
    if k == kp:
        return MultiplicityBound(k, kp, a, b, a, 2 * a, a == 0)
    return MultiplicityBound(k, kp, a, b, max(a, b), a + b, a == 0 or b == 0)


@dataclass
class AlexanderResult:
    d: int
    bounds: list[MultiplicityBound]
    unity_multiplicity: int | None = None
    cyclotomic: list[tuple[int, int]] | None = field(default=None)

    @property
    def certified(self) -> bool:
        return self.unity_multiplicity is not None and all(b.exact for b in self.bounds)

    @property
    def delta1(self) -> Poly | None:
        if self.cyclotomic is None:
            return None
        return product(self.cyclotomic)

    def orbit_intervals(self) -> list[tuple[int, int, int]]:
        """(e, lo, hi) per order e > 1, intersecting the bounds over the Galois orbit."""
        by_e: dict[int, list[MultiplicityBound]] = {}
        for b in self.bounds:
            by_e.setdefault(b.order, []).append(b)
        return [
            (e, max(b.lower for b in bs), min(b.upper for b in bs))
            for e, bs in sorted(by_e.items())
        ]

    def display(self) -> str:
        if self.cyclotomic is not None:
            return format_factored(self.cyclotomic)
        parts = []
        if self.unity_multiplicity:
            parts.append(_power(format_poly(cyclotomic(1)), self.unity_multiplicity, 1))
        elif self.unity_multiplicity is None:
            parts.append("(t-1)^?")
        for e, lo, hi in self.orbit_intervals():
            if hi == 0:
                continue
            base = format_poly(cyclotomic(e))
            exp = str(lo) if lo == hi else f"[{lo}..{hi}]"
            parts.append(f"({base})^{exp}")
        return "".join(parts) or "1"

    def to_json(self) -> dict:
        out: dict = {"certified": self.certified}
        if self.unity_multiplicity is not None:
            out["unity_multiplicity"] = self.unity_multiplicity
        out["bounds"] = [b.to_json() for b in self.bounds]
        if self.cyclotomic is not None:
            out["delta1"] = format_factored(self.cyclotomic)
            out["delta1_expanded"] = format_poly(self.delta1)
            out["cyclotomic"] = [{"e": e, "mult": m} for e, m in self.cyclotomic]
        else:
            out["delta1_intervals"] = self.display()
        return out


def alexander_from_epsilon(d: int, eps: dict[int, int], components: int | None = None) -> AlexanderResult:
    """Assemble the result from epsilon_k, k in [1, d-1]."""
    bounds = [multiplicity_bound(d, k, eps) for k in range(1, d)]
    unity = components - 1 if components is not None else None
    res = AlexanderResult(d, bounds, unity)
    if res.certified:
        res.cyclotomic = cyclotomic_factorization(res)
    return res


def alexander(curve: CurveInput, table=None) -> AlexanderResult:
    from .spectral import e2_table

    if table is None:
        table = e2_table(curve, qmax=curve.d)
    eps = {c.q: c.epsilon for c in table if c.t == 0}
    missing = [k for k in range(1, curve.d) if k not in eps]
    if missing:
        raise ValueError(f"E2 table lacks the t = 0 cells {missing}")
    return alexander_from_epsilon(curve.d, eps, curve.components)


# cyclotomic bookkeeping ------------------------------------------------------------

def cyclotomic(e: int) -> Poly:
    return Poly(cyclotomic_poly(e, T), T)


def cyclotomic_factorization(result: AlexanderResult) -> list[tuple[int, int]]:
    """[(e, multiplicity)] with e | d, ascending; requires an orbit-constant certified result."""
    if not result.certified:
        raise OrbitInconsistency("factorization needs a certified result")
    by_e: dict[int, set[int]] = {}
    for b in result.bounds:
        by_e.setdefault(b.order, set()).add(b.lower)
    out = []
    if result.unity_multiplicity:
        out.append((1, result.unity_multiplicity))
    for e in divisors(result.d):
        if e == 1 or e not in by_e:
            continue
        mults = by_e[e]
        if len(mults) != 1:
            raise OrbitInconsistency(f"multiplicities {sorted(mults)} differ across primitive {e}-th roots of unity")
        m = mults.pop()
        if m:
            out.append((e, m))
    return out


def product(factors: Sequence[tuple[int, int]]) -> Poly:
    p = Poly(1, T)
    for e, m in factors:
        p *= cyclotomic(e) ** m
    return p


def format_poly(p: Poly) -> str:
    """Compact form such as t^4-t^2+1."""
    terms = []
    for (n,), c in p.terms():
        c = int(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if n == 0:
            body = str(a)
        else:
            mono = "t" if n == 1 else f"t^{n}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += sign + body
    return s


def _power(base: str, m: int, nfactors: int) -> str:
    if m == 1:
        return base if nfactors == 1 else f"({base})"
    return f"({base})^{m}"


def format_factored(factors: Sequence[tuple[int, int]]) -> str:
    if not factors:
        return "1"
    return "".join(_power(format_poly(cyclotomic(e)), m, len(factors)) for e, m in factors)


def parse_t_poly(text: str) -> Poly:
    """Read a polynomial in t; ^ means power and juxtaposed factors multiply."""
    from sympy.parsing.sympy_parser import (
        convert_xor,
        implicit_multiplication,
        parse_expr,
        standard_transformations,
    )

    rules = standard_transformations + (implicit_multiplication, convert_xor)
    return Poly(parse_expr(text, local_dict={"t": T}, transformations=rules), T)


def delta0_delta2(d: int, chi_u: int, result: AlexanderResult | Poly) -> tuple[Poly, Poly]:
    """Delta^0 = t - 1 and Delta^2 = (t^d - 1)^chi(U) * Delta^1 / (t - 1)."""
    if isinstance(result, AlexanderResult):
        if not result.certified:
            raise NonPolynomialResult("Delta^2 needs a certified Delta^1")
        delta1 = result.delta1
    else:
        delta1 = result
    d0 = Poly(T - 1, T)
    base = Poly(T**d - 1, T)
    if chi_u >= 0:
        num, den = base**chi_u * delta1, d0
    else:
        num, den = delta1, d0 * base ** (-chi_u)
    q, r = num.div(den)
    if not r.is_zero:
        raise NonPolynomialResult(f"(t^{d}-1)^{chi_u} * Delta^1 is not divisible as required")
    return d0, q
