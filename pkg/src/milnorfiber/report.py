"""Analysis reports and their JSON / CSV / table renderings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .alexander import AlexanderResult, MultiplicityBound
from .spectral import SpectralCell
from .syzygy import Classification

SCHEMA = 1
E2_FIELDS = ("q", "t", "k", "dim_syz", "dim_kr", "kappa", "epsilon")


def exact(value: Any) -> Any:
    """JSON-safe exact number: ints stay ints, other rationals become "p/q"."""
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {k: exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return value


def alexander_to_json(res: AlexanderResult) -> dict:
    out = res.to_json()
    out["bounds"] = [
        {**b.to_json(), "eps_k": b.eps_k, "eps_kprime": b.eps_kprime} for b in res.bounds
    ]
    return out


def alexander_from_json(d: int, data: dict) -> AlexanderResult:
    bounds = [
        MultiplicityBound(b["k"], d - b["k"], b["eps_k"], b["eps_kprime"], b["lower"], b["upper"], b["exact"])
        for b in data["bounds"]
    ]
    cyc = [(c["e"], c["mult"]) for c in data["cyclotomic"]] if "cyclotomic" in data else None
    return AlexanderResult(d, bounds, data.get("unity_multiplicity"), cyc)


def classification_from_json(data: dict) -> Classification:
    return Classification(data["kind"], tuple(data["degrees"]), data.get("d1"), data.get("d2"))


@dataclass
class AnalysisReport:
    input: dict
    meta: dict
    classification: Classification | None = None
    generator_profile: list[dict] | None = None
    generators: list[dict] | None = None
    e2: list[SpectralCell] | None = None
    alexander: AlexanderResult | None = None
    delta: dict | None = None
    witnesses: list[dict] | None = None
    facts: list[dict] | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {"schema": SCHEMA, "input": exact(self.input)}
        if self.classification is not None:
            out["classification"] = self.classification.to_json()
        if self.generator_profile is not None:
            out["generator_profile"] = self.generator_profile
        if self.generators is not None:
            out["generators"] = self.generators
        if self.e2 is not None:
            out["e2"] = [c.to_json() for c in sorted(self.e2, key=lambda c: c.q)]
        if self.alexander is not None:
            out["alexander"] = alexander_to_json(self.alexander)
        if self.delta is not None:
            out["delta"] = self.delta
        if self.witnesses is not None:
            out["witnesses"] = self.witnesses
        if self.facts is not None:
            out["facts"] = exact(self.facts)
        out.update(exact(self.extra))
        out["meta"] = self.meta
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AnalysisReport":
        if data.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        known = {"schema", "input", "meta", "classification", "generator_profile", "generators",
                 "e2", "alexander", "delta", "witnesses", "facts"}
        d = data["input"]["degree"]
        return cls(
            input=data["input"],
            meta=data["meta"],
            classification=classification_from_json(data["classification"]) if "classification" in data else None,
            generator_profile=data.get("generator_profile"),
            generators=data.get("generators"),
            e2=[SpectralCell(**row) for row in data["e2"]] if "e2" in data else None,
            alexander=alexander_from_json(d, data["alexander"]) if "alexander" in data else None,
            delta=data.get("delta"),
            witnesses=data.get("witnesses"),
            facts=data.get("facts"),
            extra={k: v for k, v in data.items() if k not in known},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


# plain-text renderings ---------------------------------------------------------------

def e2_csv(cells: list[SpectralCell]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(E2_FIELDS)
    for c in sorted(cells, key=lambda c: c.q):
        w.writerow([getattr(c, f) for f in E2_FIELDS])
    return buf.getvalue()


def rows_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _grid(header: list[str], rows: list[list]) -> str:
    cells = [[str(h) for h in header]] + [[str(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_table(rep: AnalysisReport) -> str:
    out = []
    inp = rep.input
    head = f"f = {inp['poly']}  (d = {inp['degree']}"
    if inp.get("components") is not None:
        head += f", r = {inp['components']}"
    if inp.get("tau") is not None:
        head += f", tau = {inp['tau']}"
    out.append(head + ")")
    if rep.classification is not None:
        out.append(f"classification: {rep.classification}")
    if rep.generator_profile is not None:
        out.append("")
        out.append(_grid(["j", "dim_ar", "new_gens"], [[r["j"], r["dim_ar"], r["new_gens"]] for r in rep.generator_profile]))
    if rep.generators:
        out.append("")
        out.append("generators:")
        for g in rep.generators:
            out.append(f"  j={g['j']}: ({', '.join(g['triple'])})")
    if rep.e2 is not None:
        out.append("")
        out.append(_grid(list(E2_FIELDS), [[getattr(c, f) for f in E2_FIELDS] for c in sorted(rep.e2, key=lambda c: c.q)]))
    if rep.alexander is not None:
        a = rep.alexander
        out.append("")
        out.append(_grid(
            ["k", "eps_k", "eps_k'", "lower", "upper", "exact"],
            [[b.k, b.eps_k, b.eps_kprime, b.lower, b.upper, "yes" if b.exact else "no"] for b in a.bounds if b.upper],
        ))
        label = "Delta1" if a.certified else "Delta1 (uncertified)"
        out.append(f"{label}: {a.display()}")
    if rep.delta is not None:
        out.append(f"Delta0: {rep.delta['delta0']}")
        out.append(f"Delta2: {rep.delta['delta2']}")
    if rep.witnesses:
        out.append("")
        out.append("witnesses (coefficients of dy^dz, dx^dz, dx^dy | dx, dy, dz):")
        for w in rep.witnesses:
            flag = "closed" if w["closed"] else "not closed"
            out.append(f"  q={w['q']} [{flag}]  ({', '.join(w['two_form'])}) | ({', '.join(w['one_form'])})")
    if rep.facts is not None:
        out.append("")
        for f in rep.facts:
            mark = "" if "ok" not in f else ("ok   " if f["ok"] else "FAIL ")
            out.append(f"  {mark}{f['id']} [{f['kind']}]")
    for k, v in rep.extra.items():
        out.append(f"{k}: {v}")
    mode = rep.meta.get("arithmetic_mode")
    tail = f"arithmetic: {mode}"
    if rep.meta.get("probabilistic"):
        tail += " (probabilistic)"
    if "elapsed_ms" in rep.meta:
        tail += f", {rep.meta['elapsed_ms']} ms"
    out.append("")
    out.append(tail)
    return "\n".join(out) + "\n"
