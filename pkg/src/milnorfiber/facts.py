"""Evaluate catalog facts against a freshly computed curve."""
from __future__ import annotations

from dataclasses import dataclass

from .alexander import alexander, format_factored, parse_t_poly
from .exactla import QMatrix, rank
from .jacobian import CurveInput, apply_triple, divergence, milnor_dim, tjurina, triple_to_vector
from .parser import parse_poly
from .polyring import HomogeneousPoly
from .spectral import closed_syzygy_space, epsilon, h2f_dim
from .syzygy import classify, generator_profile, syzygy_dim


@dataclass(frozen=True)
class FactResult:
    id: str
    kind: str
    ok: bool
    expected: object
    observed: object

    def to_json(self) -> dict:
        return {"id": self.id, "kind": self.kind, "ok": self.ok, "expected": self.expected, "observed": self.observed}


def parse_at(text: str, degree: int) -> HomogeneousPoly:
    if text.strip() == "0":
        return HomogeneousPoly.zero(degree)
    p = parse_poly(text)
    if p.degree != degree:
        raise ValueError(f"{text!r} has degree {p.degree}, expected {degree}")
    return p


def parse_triple(texts, degree: int):
    return tuple(parse_at(t, degree) for t in texts)


def _closed_ok(curve: CurveInput, q: int, triples) -> tuple[bool, object]:
    j = q - 2
    span = [triple_to_vector(w.two_form, j) for w in closed_syzygy_space(curve, q)]
    observed = []
    ok = True
    for texts in triples:
        t = parse_triple(texts, j)
        is_syz = apply_triple(curve, t).is_zero()
        is_closed = divergence(t).is_zero()
        v = triple_to_vector(t, j)
        inside = bool(span) and rank(QMatrix.from_columns(len(v), span + [v])) == len(span)
        observed.append({"syzygy": is_syz, "closed": is_closed, "in_basis_span": inside})
        ok &= is_syz and is_closed and inside
    return ok, observed


def check(curve: CurveInput, fact: dict) -> FactResult:
    kind = fact["kind"]
    exp: object
    if kind == "classification":
        exp, obs = fact["value"], str(classify(curve))
    elif kind == "generator_degrees":
        prof = generator_profile(curve, fact.get("jmax"))
        exp, obs = fact["degrees"], prof.degrees
    elif kind == "dim_ar":
        exp, obs = fact["value"], syzygy_dim(curve, fact["j"])
    elif kind == "syzygy":
        t = parse_triple(fact["triple"], fact["j"])
        exp, obs = True, apply_triple(curve, t).is_zero()
    elif kind == "closed_form":
        ok, obs = _closed_ok(curve, fact["q"], fact["triples"])
        return FactResult(fact["id"], kind, ok, "closed syzygies", obs)
    elif kind == "epsilon":
        exp, obs = fact["value"], epsilon(curve, fact["q"])
    elif kind == "epsilon_support":
        exp = {int(q): v for q, v in fact["nonzero"].items()}
        obs = {q: e for q in range(fact["qmin"], fact["qmax"] + 1) if (e := epsilon(curve, q))}
    elif kind == "delta1":
        res = alexander(curve)
        if not res.certified:
            return FactResult(fact["id"], kind, False, fact["value"], res.display())
        ok = parse_t_poly(fact["value"]) == res.delta1
        return FactResult(fact["id"], kind, ok, fact["value"], format_factored(res.cyclotomic))
    elif kind == "bound":
        b = alexander(curve).bounds[fact["k"] - 1]
        exp = [fact["lower"], fact["upper"], fact["exact"]]
        obs = [b.lower, b.upper, b.exact]
    elif kind == "h2f_dim":
        exp, obs = fact["value"], h2f_dim(curve, fact["q"])
    elif kind == "tau":
        exp, obs = fact["value"], tjurina(curve)
    else:
        raise ValueError(f"unknown fact kind {kind!r}")
    return FactResult(fact["id"], kind, exp == obs, exp, obs)


__all__ = ["FactResult", "check", "parse_at", "parse_triple", "milnor_dim"]
