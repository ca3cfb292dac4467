"""Built-in curves with their known invariants.

Each entry knows how to build its polynomial (possibly from a parameter such as
``m`` or ``d``), how many irreducible components the curve has, and which
machine-checkable facts are expected of it.  The facts live in
``data/catalog_facts.json`` so other tools can consume them unchanged.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable

from .errors import BadParams, UnknownIdentifier
from .jacobian import CurveInput, validate
from .parser import parse_poly


@dataclass(frozen=True)
class CurveSpec:
    identifier: str
    description: str
    params: tuple[str, ...]
    equation: Callable[..., str]
    degree: Callable[..., int]
    components: Callable[..., int | None]
    check: Callable[..., None] = lambda **kw: None
    aliases: tuple[str, ...] = field(default=())


def _need(name: str, lo: int):
    def check(**kw):
        v = kw.get(name)
        if v is None:
            raise BadParams(f"parameter --{name} is required")
        if v < lo:
            raise BadParams(f"parameter {name} must be >= {lo}, got {v}")

    return check


SPECS: dict[str, CurveSpec] = {
    s.identifier: s
    for s in [
        CurveSpec(
            "A",
            "monomial line arrangement A(m,m,3)",
            ("m",),
            lambda m: f"(x^{m}-y^{m})*(x^{m}-z^{m})*(y^{m}-z^{m})",
            lambda m: 3 * m,
            lambda m: 3 * m,
            _need("m", 2),
            aliases=("monomial-arrangement",),
        ),
        CurveSpec(
            "hessian",
            "Hessian arrangement of 12 lines",
            (),
            lambda: "x*y*z*((x^3+y^3+z^3)^3-27*x^3*y^3*z^3)",
            lambda: 12,
            lambda: 12,
        ),
        CurveSpec(
            "C5m",
            "free curve C_{5m}; two components for even m, irreducible for odd m",
            ("m",),
            lambda m: f"(y^{m}*z^{m}-x^{2 * m})^2*y^{m}-x^{5 * m}",
            lambda m: 5 * m,
            lambda m: 2 if m % 2 == 0 else 1,
            _need("m", 1),
        ),
        CurveSpec(
            "e14-sextic",
            "rational cuspidal sextic with an E6 and an E14 point",
            (),
            lambda: "(x*z-y^2)^3-x^2*y^4",
            lambda: 6,
            lambda: 1,
        ),
        CurveSpec(
            "nine-cusp-sextic",
            "sextic with nine cusps (nearly free)",
            (),
            lambda: "x^6+y^6+z^6-2*(x^3*y^3+x^3*z^3+y^3*z^3)",
            lambda: 6,
            lambda: 1,
        ),
        CurveSpec(
            "zariski-sextic",
            "sextic with six cusps on a conic",
            (),
            lambda: "(x^2+y^2)^3+(y^3+z^3)^2",
            lambda: 6,
            lambda: 1,
        ),
        CurveSpec(
            "torus-3-4",
            "degree 12 curve of (3,4)-torus type with twelve E6 points",
            (),
            lambda: "(x^3+y^3)^4+(y^4+z^4)^3",
            lambda: 12,
            lambda: 1,
        ),
        CurveSpec(
            "fermat",
            "smooth Fermat curve x^d+y^d+z^d",
            ("d",),
            lambda d: f"x^{d}+y^{d}+z^{d}",
            lambda d: d,
            lambda d: 1,
            _need("d", 3),
        ),
    ]
}

_ALIASES = {a.lower(): s.identifier for s in SPECS.values() for a in (s.identifier, *s.aliases)}


def resolve(identifier: str) -> CurveSpec:
    key = _ALIASES.get(identifier.lower())
    if key is None:
        raise UnknownIdentifier(f"unknown catalog curve {identifier!r}; known: {', '.join(sorted(SPECS))}")
    return SPECS[key]


def _params(spec: CurveSpec, params: dict) -> dict:
    spec.check(**params)
    return {k: params[k] for k in spec.params}


def equation(identifier: str, **params) -> str:
    spec = resolve(identifier)
    return spec.equation(**_params(spec, params))


def label(identifier: str, **params) -> str:
    spec = resolve(identifier)
    p = _params(spec, params)
    return spec.identifier + "".join(f"[{k}={v}]" for k, v in p.items())


def build(identifier: str, **params) -> CurveInput:
    """Validated curve from the catalog, with its component count attached."""
    spec = resolve(identifier)
    p = _params(spec, params)
    f = parse_poly(spec.equation(**p))
    if f.degree != spec.degree(**p):
        raise AssertionError(f"catalog degree mismatch for {spec.identifier}")
    return validate(f, spec.components(**p), name=label(identifier, **params))


def list_specs() -> list[dict]:
    return [
        {"id": s.identifier, "params": list(s.params), "description": s.description, "aliases": list(s.aliases)}
        for s in SPECS.values()
    ]


@lru_cache(maxsize=None)
def _facts_data() -> dict:
    text = resources.files("milnorfiber").joinpath("data/catalog_facts.json").read_text()
    return json.loads(text)


def expected_facts(identifier: str, **params) -> list[dict]:
    """Machine-checkable facts for a catalog curve (possibly empty for untabulated parameters)."""
    spec = resolve(identifier)
    p = _params(spec, params)
    entry = _facts_data()["curves"].get(spec.identifier, {})
    key = ",".join(f"{k}={v}" for k, v in p.items()) or "-"
    return list(entry.get(key, []))
