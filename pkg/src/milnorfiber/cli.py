"""Command line interface: ``milnor <command> [curve] [options]``."""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, catalog
from .alexander import alexander, delta0_delta2, format_poly
from .errors import InconclusiveBound, MilnorError
from .exactla import arithmetic_mode
from .facts import check
from .jacobian import CurveInput, validate
from .parser import parse_poly
from .report import AnalysisReport, e2_csv, render_table, rows_csv
from .spectral import e2_table, witnesses
from .syzygy import classify_profile, generator_profile

EXIT_OK, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 2, 3

COMMANDS = ("analyze", "alexander", "e2", "syzygies", "classify", "witnesses", "tjurina", "catalog")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="milnor", description="Milnor fiber cohomology of plane curves from Jacobian syzygies.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("action", nargs="?", choices=("list", "facts"), help="catalog sub-command")
    src = p.add_mutually_exclusive_group()
    src.add_argument("-f", dest="expr", metavar="EXPR", help="homogeneous polynomial in x, y, z")
    src.add_argument("--catalog", metavar="ID", help="built-in curve (see 'catalog list')")
    p.add_argument("--m", type=int, help="family parameter m")
    p.add_argument("--d", type=int, help="degree parameter d (fermat)")
    p.add_argument("--components", type=int, metavar="R", help="number of irreducible components")
    p.add_argument("--chi-u", type=int, dest="chi_u", metavar="N", help="Euler characteristic of the complement")
    p.add_argument("--qmax", type=int, help="largest form degree in the E2 table (default 2d)")
    p.add_argument("--jmax", type=int, help="generator search bound (default 2d-2)")
    p.add_argument("--modular", choices=("off", "verify", "trust"), default="off")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("--witnesses", action="store_true", help="include witness forms in 'analyze'")
    p.add_argument("--allow-intervals", action="store_true", help="exit 0 even when Delta is only bounded")
    p.add_argument("--allow-small-degree", action="store_true", help="accept curves of degree 1 or 2")
    p.add_argument("--check", action="store_true", help="evaluate catalog facts against a fresh computation")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed_ms (byte-stable output)")
    return p


def _catalog_params(args) -> dict:
    return {k: v for k, v in (("m", args.m), ("d", args.d)) if v is not None}


def load_curve(args) -> CurveInput:
    if args.catalog:
        params = _catalog_params(args)
        curve = catalog.build(args.catalog, **params)
        if args.components is not None:
            curve = curve.with_components(args.components)
        return curve
    if not args.expr:
        raise MilnorError("give a curve with -f EXPR or --catalog ID")
    f = parse_poly(args.expr)
    return validate(f, args.components, allow_small_degree=args.allow_small_degree)


def _input_echo(curve: CurveInput) -> dict:
    out = {"poly": str(curve.f), "degree": curve.d}
    if curve.components is not None:
        out["components"] = curve.components
    if curve.tau is not None:
        out["tau"] = curve.tau
    if curve.name:
        out["name"] = curve.name
    return out


def _profile(rep: AnalysisReport, curve: CurveInput, args, explicit: bool = False) -> bool:
    """Fill classification fields; returns False when the search bound was hit."""
    prof = generator_profile(curve, args.jmax)
    rep.generator_profile = prof.rows()
    if explicit:
        rep.generators = [{"j": g.j, "triple": g.to_json()} for g in prof.generators]
    try:
        rep.classification = classify_profile(prof, curve.d)
        return True
    except InconclusiveBound as exc:
        rep.extra["warning"] = str(exc)
        return False


def _alexander(rep: AnalysisReport, curve: CurveInput, args, table=None) -> bool:
    rep.alexander = alexander(curve, table)
    if args.chi_u is not None and rep.alexander.certified:
        d0, d2 = delta0_delta2(curve.d, args.chi_u, rep.alexander)
        rep.delta = {"chi_u": args.chi_u, "delta0": format_poly(d0), "delta2": format_poly(d2)}
    return rep.alexander.certified or args.allow_intervals


def run(args) -> tuple[AnalysisReport, int]:
    start = time.perf_counter()
    meta = {"arithmetic_mode": args.modular}
    if args.modular == "trust":
        meta["probabilistic"] = True
    code = EXIT_OK

    if args.command == "catalog":
        action = args.action or "list"
        if action == "list":
            rep = AnalysisReport(input={"poly": "", "degree": 0}, meta=meta, extra={"catalog": catalog.list_specs()})
        else:
            if not args.catalog:
                raise MilnorError("'catalog facts' needs --catalog ID")
            facts = catalog.expected_facts(args.catalog, **_catalog_params(args))
            curve = catalog.build(args.catalog, **_catalog_params(args))
            rep = AnalysisReport(input=_input_echo(curve), meta=meta)
            if args.check:
                facts = [{**f, **check(curve, f).to_json()} for f in facts]
                if not all(f["ok"] for f in facts):
                    code = EXIT_INCONCLUSIVE
            rep.facts = facts
    else:
        curve = load_curve(args)
        rep = AnalysisReport(input=_input_echo(curve), meta=meta)
        cmd = args.command
        if cmd == "classify":
            if not _profile(rep, curve, args):
                code = EXIT_INCONCLUSIVE
        elif cmd == "syzygies":
            if not _profile(rep, curve, args, explicit=True):
                code = EXIT_INCONCLUSIVE
        elif cmd == "e2":
            rep.e2 = e2_table(curve, args.qmax)
        elif cmd == "alexander":
            rep.e2 = e2_table(curve, qmax=curve.d)
            if not _alexander(rep, curve, args, rep.e2):
                code = EXIT_INCONCLUSIVE
        elif cmd == "witnesses":
            table = e2_table(curve, qmax=curve.d)
            rep.witnesses = [w.to_json() for w in witnesses(curve, table)]
        elif cmd == "tjurina":
            pass
        elif cmd == "analyze":
            ok = _profile(rep, curve, args)
            rep.e2 = e2_table(curve, args.qmax)
            ok &= _alexander(rep, curve, args, rep.e2)
            if args.witnesses:
                rep.witnesses = [w.to_json() for w in witnesses(curve, rep.e2)]
            if not ok:
                code = EXIT_INCONCLUSIVE
    if not args.no_timing:
        meta["elapsed_ms"] = int((time.perf_counter() - start) * 1000)
    return rep, code


def render(rep: AnalysisReport, args) -> str:
    if args.format == "json":
        return rep.dumps()
    if args.format == "table":
        return render_table(rep)
    # csv
    if rep.e2 is not None:
        return e2_csv(rep.e2)
    if rep.generator_profile is not None:
        return rows_csv(["j", "dim_ar", "new_gens"], [[r["j"], r["dim_ar"], r["new_gens"]] for r in rep.generator_profile])
    if rep.witnesses is not None:
        return rows_csv(["q", "closed", "a", "b", "c"], [[w["q"], w["closed"], *w["two_form"]] for w in rep.witnesses])
    if rep.facts is not None:
        return rows_csv(["id", "kind", "ok"], [[f["id"], f["kind"], f.get("ok", "")] for f in rep.facts])
    if "catalog" in rep.extra:
        return rows_csv(["id", "params", "description"], [[s["id"], " ".join(s["params"]), s["description"]] for s in rep.extra["catalog"]])
    return rows_csv(["poly", "degree", "tau"], [[rep.input["poly"], rep.input["degree"], rep.input.get("tau", "")]])


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with arithmetic_mode(args.modular):
            rep, code = run(args)
    except MilnorError as exc:
        if args.format == "json":
            err = {"schema": 1, "error": {"type": type(exc).__name__, "message": str(exc)}}
            sys.stdout.write(json.dumps(err, indent=2) + "\n")
        else:
            sys.stderr.write(f"milnor: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    sys.stdout.write(render(rep, args))
    return code


if __name__ == "__main__":
    sys.exit(main())
