"""Declarative catalog: surface types, seed models, transition scripts.

The catalog is data, the engine is logic: everything transcribed from the
source figures (component lattices, boundary multiplicities, gluing graphs,
multi-curve points, scripts, expected chamber tables) lives in versioned
JSON so transcription errors stay diffable.  Loading validates structure;
``self_check`` validates substance (volume identity, stability of seeds,
triple-point counts).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (AffinePoly, LinearConstraint, Region, affine, constraint,
                    rat, rat_str, EQ, GE, GT)
from .picard import LatticeType, DivisorClass, class_from_ints
from .surface import (BoundaryCurve, Component, ConductorCurve, MultiPoint,
                      SurfaceModel, validate_surface, ECKARDT_ALLOWED)
from .stability import TARGET_VOLUME, stability_report, volume
from .mmp import TransitionScript, _affine_json, _affine_from_json

SCHEMA_VERSION = 1


class CatalogError(ValueError):
    def __init__(self, msg: str, path: str = ""):
        super().__init__(f"{path}: {msg}" if path else msg)
        self.path = path


@dataclass(frozen=True)
class DeclaredChamber:
    label: str
    model: str
    region: Region

    def to_json(self) -> dict:
        return {"label": self.label, "model": self.model,
                "region": [
                    {"q0": rat_str(k.poly.q0), "qb": rat_str(k.poly.qb),
                     "qc": rat_str(k.poly.qc), "rel": k.rel}
                    for k in self.region.constraints]}


@dataclass(frozen=True)
class TypeEntry:
    type_label: str
    ell_choice: str
    seed: Optional[SurfaceModel]
    transitions: tuple[TransitionScript, ...]
    expected_chamber_count: int
    expected_walls: tuple[AffinePoly, ...]
    declared_chambers: tuple[DeclaredChamber, ...]

    @property
    def key(self) -> str:
        return f"{self.type_label}/{self.ell_choice}"

    def scripts_from(self, step: str) -> list[TransitionScript]:
        return [t for t in self.transitions if t.from_step == step]


@dataclass(frozen=True)
class CatalogFile:
    types: tuple[TypeEntry, ...]
    global_chambers: tuple[DeclaredChamber, ...]
    moduli_changing_walls: tuple[AffinePoly, ...]
    schema_version: int = SCHEMA_VERSION

    def entry(self, type_label: str, ell_choice: Optional[str] = None) -> TypeEntry:
        for t in self.types:
            if t.type_label == type_label and (ell_choice is None or t.ell_choice == ell_choice):
                return t
            if t.key == type_label:
                return t
        raise KeyError(f"no catalog entry {type_label!r}"
                       + (f"/{ell_choice!r}" if ell_choice else ""))


# ---------------------------------------------------------------------------
# JSON encoding


def _weight_json(w: AffinePoly) -> dict:
    return _affine_json(w)


def model_to_json(model: SurfaceModel) -> dict:
    comps = []
    for comp in model.components:
        comps.append({
            "id": comp.id,
            "kind": comp.kind,
            "lattice": comp.lattice.to_json(),
            "boundary": [
                {"class": list(bc.cls.int_vector()), "weight": _weight_json(bc.weight),
                 "role": bc.role}
                for bc in comp.boundary],
            "conductors": [
                {"class": list(cc.cls.int_vector()), "gluingId": cc.gluing_id}
                for cc in comp.conductors],
            "a1Nodes": [list(q.int_vector()) for q in comp.a1_nodes],
            "eckardt": [list(t) for t in comp.eckardt],
        })
    return {
        "typeLabel": model.type_label,
        "step": model.step,
        "components": comps,
        "gluings": [{"a": list(p[0]), "b": list(p[1])} for p in model.gluings],
        "points": [
            {"component": pt.component, "curves": [list(r) for r in pt.curves],
             "atA1": pt.at_a1}
            for pt in model.points],
    }


def model_from_json(d: dict, path: str = "model") -> SurfaceModel:
    comps = []
    for i, cd in enumerate(d.get("components", ())):
        p = f"{path}/components[{i}]"
        try:
            lat = LatticeType.from_json(cd["lattice"])
        except (KeyError, ValueError) as exc:
            raise CatalogError(str(exc), p + "/lattice")
        boundary = []
        for j, bd in enumerate(cd.get("boundary", ())):
            w = _affine_from_json(bd["weight"])
            if w.q0 != 0 or w.qb < 0 or w.qc < 0 or w.qb.denominator != 1 or w.qc.denominator != 1:
                raise CatalogError(f"illegal boundary weight {w}", f"{p}/boundary[{j}]")
            boundary.append(BoundaryCurve(class_from_ints(lat, bd["class"]), w,
                                          bd.get("role", "ordinary-line")))
        conductors = []
        for j, kd in enumerate(cd.get("conductors", ())):
            if "weight" in kd:
                raise CatalogError("conductors carry implicit weight 1",
                                   f"{p}/conductors[{j}]")
            conductors.append(ConductorCurve(class_from_ints(lat, kd["class"]),
                                             kd["gluingId"]))
        comps.append(Component(
            id=cd["id"], lattice=lat, boundary=tuple(boundary),
            conductors=tuple(conductors),
            a1_nodes=tuple(class_from_ints(lat, v) for v in cd.get("a1Nodes", ())),
            kind=cd.get("kind", "other"),
            eckardt=tuple(tuple(t) for t in cd.get("eckardt", ())),
        ))
    gluings = tuple(((g["a"][0], g["a"][1]), (g["b"][0], g["b"][1]))
                    for g in d.get("gluings", ()))
    points = tuple(MultiPoint(pd["component"],
                              tuple((r[0], r[1]) for r in pd["curves"]),
                              pd.get("atA1", False))
                   for pd in d.get("points", ()))
    return SurfaceModel(d["typeLabel"], d.get("step", "step0"),
                        tuple(comps), gluings, points)


def _entry_to_json(entry: TypeEntry) -> dict:
    return {
        "typeLabel": entry.type_label,
        "ellChoice": entry.ell_choice,
        "seedModel": model_to_json(entry.seed) if entry.seed is not None else None,
        "transitions": [t.to_json() for t in entry.transitions],
        "expectedChamberCount": entry.expected_chamber_count,
        "expectedWalls": [_affine_json(w) for w in entry.expected_walls],
        "declaredChambers": [c.to_json() for c in entry.declared_chambers],
    }


def serialize(cat: CatalogFile) -> str:
    doc = {
        "schemaVersion": cat.schema_version,
        "types": [_entry_to_json(t) for t in cat.types],
        "globalChambers": [c.to_json() for c in cat.global_chambers],
        "moduliChangingWalls": [_affine_json(w) for w in cat.moduli_changing_walls],
    }
    return json.dumps(doc, indent=1, sort_keys=True)


def load(text) -> CatalogFile:
    """Parse and structurally validate a catalog JSON document."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"not valid JSON: {exc}")
    if doc.get("schemaVersion") != SCHEMA_VERSION:
        raise CatalogError(f"unsupported schemaVersion {doc.get('schemaVersion')!r}",
                           "/schemaVersion")
    entries = []
    for i, td in enumerate(doc.get("types", ())):
        path = f"/types[{i}]"
        seed = None
        if td.get("seedModel") is not None:
            seed = model_from_json(td["seedModel"], path + "/seedModel")
            rep = validate_surface(seed)
            if not rep.ok():
                raise CatalogError(f"seed model invalid: {rep}", path + "/seedModel")
        transitions = tuple(TransitionScript.from_json(s)
                            for s in td.get("transitions", ()))
        steps_declared = {"step0"} | {t.to_step for t in transitions}
        for t in transitions:
            if t.from_step not in steps_declared:
                raise CatalogError(f"transition from unknown step {t.from_step!r}",
                                   path + "/transitions")
        chambers = tuple(
            DeclaredChamber(cd["label"], cd.get("model", ""),
                            Region.from_json(cd["region"]))
            for cd in td.get("declaredChambers", ()))
        entries.append(TypeEntry(
            type_label=td["typeLabel"], ell_choice=td.get("ellChoice", "generic"),
            seed=seed, transitions=transitions,
            expected_chamber_count=td["expectedChamberCount"],
            expected_walls=tuple(_affine_from_json(w) for w in td.get("expectedWalls", ())),
            declared_chambers=chambers,
        ))
    global_chambers = tuple(
        DeclaredChamber(cd["label"], cd.get("model", ""), Region.from_json(cd["region"]))
        for cd in doc.get("globalChambers", ()))
    walls = tuple(_affine_from_json(w) for w in doc.get("moduliChangingWalls", ()))
    return CatalogFile(tuple(entries), global_chambers, walls)


# ---------------------------------------------------------------------------
# semantic self check


@dataclass
class SelfCheckReport:
    findings: list[str] = field(default_factory=list)
    checked: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.findings

    def __str__(self) -> str:
        if self.ok():
            return f"catalog self-check passed ({len(self.checked)} checks)"
        return "catalog self-check findings: " + "; ".join(self.findings)


def _triple_point_count(model: SurfaceModel, comp: Component) -> int:
    declared = len(comp.eckardt)
    for pt in model.points:
        if pt.component != comp.id or pt.at_a1 or len(pt.curves) != 3:
            continue
        if all(kind == "b" for kind, _ in pt.curves):
            declared += 1
    return declared


def self_check(cat: CatalogFile) -> SelfCheckReport:
    """Volume identities, seed stability, triple-point counts, label sanity."""
    rep = SelfCheckReport()
    from .chambers import enumerate_chambers  # local import to avoid a cycle

    for entry in cat.types:
        if entry.seed is None:
            if not entry.declared_chambers:
                rep.findings.append(f"{entry.key}: neither seed nor declared chambers")
            if entry.expected_chamber_count != len(entry.declared_chambers) \
                    and entry.declared_chambers:
                rep.findings.append(
                    f"{entry.key}: declares {len(entry.declared_chambers)} chambers, "
                    f"expectedChamberCount is {entry.expected_chamber_count}")
            continue
        gap = volume(entry.seed) - TARGET_VOLUME
        if not gap.is_zero():
            rep.findings.append(f"{entry.key}: seed volume off target by {gap}")
        else:
            rep.checked.append(f"{entry.key}: volume identity")
        srep = stability_report(entry.seed)
        if srep.region.is_empty():
            rep.findings.append(f"{entry.key}: seed stable nowhere")
        else:
            w = srep.region.witness()
            pointwise = stability_report(entry.seed, at=w)
            if not pointwise.stable():
                rep.findings.append(f"{entry.key}: seed unstable at witness {w}")
            else:
                rep.checked.append(f"{entry.key}: seed stable at witness")
        for comp in entry.seed.components:
            allowed = ECKARDT_ALLOWED.get(comp.kind)
            if allowed is not None:
                n = _triple_point_count(entry.seed, comp)
                if n not in allowed:
                    rep.findings.append(
                        f"{entry.key}: component {comp.id} ({comp.kind}) has {n} "
                        f"triple points; allowed {sorted(allowed)}")
        try:
            dec = enumerate_chambers(entry)
            if len(dec.chambers) != entry.expected_chamber_count:
                rep.findings.append(
                    f"{entry.key}: scan found {len(dec.chambers)} chambers, "
                    f"expected {entry.expected_chamber_count}")
            else:
                rep.checked.append(f"{entry.key}: chamber count {len(dec.chambers)}")
        except Exception as exc:  # scan errors are findings, not crashes
            rep.findings.append(f"{entry.key}: scan failed: {exc}")
    return rep
