"""Command-line front end.

Subcommands: check, walls, chambers, global, volume, neg-curves, render,
export, self-check.  All user-visible numbers are rational strings; JSON
goes to stdout, human-readable certificates to stderr.  Exit codes: 0
success, 1 stability-failure verdict, 2 usage error, 3 catalog error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .exact import line_label, rat, rat_str
from .picard import LatticeType, negative_curves, plane_lattice
from .surface import SurfaceModel
from .stability import stability_report, volume
from .mmp import apply_step
from .chambers import (Decomposition, classify_decomposition, coverage_check,
                       enumerate_chambers, merge_global)
from . import catalog as cat_mod
from .builtin import builtin_catalog


class UsageError(Exception):
    pass


def _load_catalog(path: str):
    if path in (None, "builtin"):
        return builtin_catalog()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return cat_mod.load(fh.read())
    except FileNotFoundError:
        raise cat_mod.CatalogError(f"catalog file not found: {path}")


def _find_entry(cat, type_label: str, ell: str | None):
    keys = {e.key: e for e in cat.types}
    if ell:
        key = f"{type_label}/{ell}"
        if key in keys:
            return keys[key]
    if type_label in keys:
        return keys[type_label]
    for e in cat.types:
        if e.type_label == type_label and ell is None:
            return e
        if f"{e.type_label}-{e.ell_choice}" == type_label:
            return e
    raise UsageError(f"unknown type {type_label!r}"
                     + (f" with ell choice {ell!r}" if ell else "")
                     + f"; known: {sorted(keys)}")


def _model_at_step(entry, step: str) -> SurfaceModel:
    if entry.seed is None:
        raise UsageError(f"{entry.key} is a region-only catalog entry (no models)")
    if step in (None, "0", "step0"):
        return entry.seed
    if not step.startswith("step") and not step.startswith("seg"):
        step = f"step{step}"
    models = {"step0": entry.seed}
    frontier = True
    while frontier:
        frontier = False
        for script in entry.transitions:
            if script.from_step in models and script.to_step not in models:
                m = models[script.from_step]
                for st in script.steps:
                    m = apply_step(m, st, wall=script.wall)
                models[script.to_step] = SurfaceModel(
                    m.type_label, script.to_step, m.components, m.gluings, m.points)
                frontier = True
        if step in models:
            return models[step]
    raise UsageError(f"{entry.key} has no step {step!r}; "
                     f"known: {sorted(models)}")


def _emit(args, payload: dict | list):
    if getattr(args, "format", "json") == "csv":
        _emit_csv(payload)
    else:
        sys.stdout.write(json.dumps(payload, indent=1, sort_keys=True) + "\n")


def _emit_csv(payload):
    rows = payload.get("chambers") if isinstance(payload, dict) else payload
    if not isinstance(rows, list):
        raise UsageError("csv output is only available for chamber listings")
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["label", "model", "dimension", "witness_b", "witness_c", "region"])
    for ch in rows:
        region = " & ".join(f"{d['qb']}b+{d['qc']}c+{d['q0']} {d['rel']}"
                            for d in ch["region"])
        writer.writerow([ch["label"], ch.get("model", ""), ch["dimension"],
                         ch["witness"][0], ch["witness"][1], region])
    sys.stdout.write(buf.getvalue())


def _decomposition_for(args, cat, entry) -> Decomposition:
    return classify_decomposition(enumerate_chambers(entry))


def _global_decomposition(cat) -> Decomposition:
    decs = [enumerate_chambers(e) for e in cat.types]
    return classify_decomposition(merge_global(decs, cat.global_chambers))


def cmd_check(args, cat):
    entry = _find_entry(cat, args.type, args.ell)
    model = _model_at_step(entry, args.step)
    bb, cc = rat(args.b), rat(args.c)
    rep = stability_report(model, at=(bb, cc))
    _emit(args, rep.to_json())
    if not rep.stable():
        for cert in rep.failing:
            kind = {"slc": "not slc", "ample": "not ample",
                    "volume": "volume mismatch"}[cert.condition]
            sys.stderr.write(f"{kind}: {cert.source} ({cert.poly} = "
                             f"{rat_str(cert.poly.at(bb, cc))} at b={args.b}, "
                             f"c={args.c})\n")
        return 1
    sys.stderr.write(f"stable at (b, c) = ({args.b}, {args.c})\n")
    return 0


def cmd_walls(args, cat):
    entry = _find_entry(cat, args.type, args.ell)
    dec = _decomposition_for(args, cat, entry)
    _emit(args, {"type": entry.key,
                 "walls": [w.to_json() for w in dec.walls],
                 "moduliChange": dec.moduli_change})
    return 0


def cmd_chambers(args, cat):
    entry = _find_entry(cat, args.type, args.ell)
    dec = _decomposition_for(args, cat, entry)
    _emit(args, {"type": entry.key, "count": len(dec.chambers),
                 "chambers": [ch.to_json() for ch in dec.chambers]})
    return 0


def cmd_global(args, cat):
    dec = _global_decomposition(cat)
    payload = dec.to_json()
    payload["count"] = len(dec.chambers)
    if args.coverage:
        total, bad = coverage_check(dec, args.coverage)
        payload["coverage"] = {"points": total, "misclassified": len(bad)}
    _emit(args, payload)
    return 0


def cmd_volume(args, cat):
    entry = _find_entry(cat, args.type, args.ell)
    model = _model_at_step(entry, args.step)
    vol = volume(model)
    from .surface import log_canonical_divisor
    from .picard import self_intersection
    parts = [{"component": comp.id,
              "divisor": str(log_canonical_divisor(comp)),
              "volume": str(self_intersection(log_canonical_divisor(comp)))}
             for comp in model.components]
    _emit(args, {"model": model.label(), "volume": str(vol),
                 "components": parts})
    return 0


def cmd_neg_curves(args, cat):
    lat = LatticeType.from_json(json.loads(args.lattice)) if args.lattice \
        else plane_lattice(6)
    ncs = negative_curves(lat)
    _emit(args, {"lattice": lat.to_json(),
                 "minusOne": [str(x) for x in ncs.minus_one],
                 "minusTwo": [str(x) for x in ncs.minus_two],
                 "extra": [str(x) for x in ncs.extra]})
    return 0


def cmd_render(args, cat):
    from .render import render_matplotlib, render_svg
    if args.type:
        entry = _find_entry(cat, args.type, args.ell)
        dec = _decomposition_for(args, cat, entry)
    else:
        dec = _global_decomposition(cat)
    if args.format == "svg" or args.out.endswith(".svg"):
        path = render_svg(dec, args.out)
    else:
        path = render_matplotlib(dec, args.out)
    sys.stderr.write(f"wrote {path}\n")
    return 0


def cmd_export(args, cat):
    text = cat_mod.serialize(cat)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        sys.stderr.write(f"wrote {args.out}\n")
    else:
        sys.stdout.write(text + "\n")
    return 0


def cmd_self_check(args, cat):
    rep = cat_mod.self_check(cat)
    _emit(args, {"ok": rep.ok(), "checked": rep.checked, "findings": rep.findings})
    sys.stderr.write(str(rep) + "\n")
    return 0 if rep.ok() else 1


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--catalog", default="builtin",
                        help="catalog JSON path or 'builtin'")
    parser = argparse.ArgumentParser(
        prog="cubicwalls",
        description="Exact wall-and-chamber engine for weighted stable "
                    "marked cubic surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_type=True, with_step=False):
        if with_type:
            p.add_argument("--type", required=False, help="type label or label/ell")
            p.add_argument("--ell", help="marked-line choice")
        if with_step:
            p.add_argument("--step", default="step0", help="model step label")
        p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("check", parents=[shared], help="stability verdict at a weight")
    common(p, with_step=True)
    p.add_argument("--b", required=True, help="weight b as p/q")
    p.add_argument("--c", required=True, help="weight c as p/q")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("walls", parents=[shared], help="wall list of a type decomposition")
    common(p)
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("chambers", parents=[shared], help="per-type chamber enumeration")
    common(p)
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("global", parents=[shared], help="merged global decomposition")
    common(p, with_type=False)
    p.add_argument("--coverage", type=int, default=0, metavar="DEN",
                   help="also run the exact grid coverage check")
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("volume", parents=[shared], help="volume polynomial of a model")
    common(p, with_step=True)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("neg-curves", parents=[shared], help="negative-curve census of a lattice")
    p.add_argument("--lattice", help="lattice as JSON; default general six points")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_neg_curves)

    p = sub.add_parser("render", parents=[shared], help="draw a decomposition (svg/png/pdf)")
    p.add_argument("--type", help="type label; omit for the global diagram")
    p.add_argument("--ell", help="marked-line choice")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=["svg", "png", "pdf"], default="svg")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("export", parents=[shared], help="serialize the catalog as JSON")
    p.add_argument("--out", help="output path; stdout when omitted")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("self-check", parents=[shared], help="semantic catalog validation")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_self_check)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        cat = _load_catalog(args.catalog)
    except cat_mod.CatalogError as exc:
        sys.stderr.write(f"catalog error: {exc}\n")
        return 3
    try:
        return args.func(args, cat)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except cat_mod.CatalogError as exc:
        sys.stderr.write(f"catalog error: {exc}\n")
        return 3


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
