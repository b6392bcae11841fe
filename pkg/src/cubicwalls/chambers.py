"""Chamber scans, the global merged decomposition, and wall classification.

The per-type scan starts from the catalog seed at high weights, computes the
stability region of the current model, reads off its facets, and crosses
each unvisited wall through the catalog's script.  Pending crossings are
processed right-to-left and top-down: highest wall first, then largest b --
the "floor" discipline that also fixes the chamber numbering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import (AffinePoly, LinearConstraint, Region, affine, constraint,
                    grid_points, line_label, rat, rat_str, EQ, GE, GT)
from .stability import stability_region, stability_report
from .mmp import TransitionScript, cross_wall
from .surface import SurfaceModel


@dataclass
class Wall:
    poly: AffinePoly                       # canonical line form
    segment: tuple                         # exact endpoints
    failure: str                           # "SLC" | "AMPLE" | "VOLUME" | "BOUNDARY"
    sources: tuple[str, ...] = ()

    @property
    def slope_class(self) -> str:
        p = self.poly.primitive()
        if p.qc == 0:
            return "vertical"
        slope = -p.qb / p.qc
        if slope > 0:
            return "positive"
        if slope < 0:
            return "negative"
        return "zero"

    def line_key(self):
        return self.poly.key()

    def to_json(self) -> dict:
        return {"line": line_label(self.poly), "failure": self.failure,
                "segment": [[rat_str(x) for x in p] for p in self.segment],
                "slope": self.slope_class, "sources": list(self.sources)}


@dataclass
class Chamber:
    label: str
    model: str
    region: Region
    index: int = 0

    def witness(self):
        return self.region.witness()

    def to_json(self) -> dict:
        w = self.witness()
        return {"label": self.label, "model": self.model,
                "region": self.region.to_json(),
                "witness": [rat_str(w[0]), rat_str(w[1])],
                "dimension": self.region.dimension()}


@dataclass
class Decomposition:
    label: str
    chambers: list[Chamber] = field(default_factory=list)
    walls: list[Wall] = field(default_factory=list)
    adjacency: list[tuple[str, str, str]] = field(default_factory=list)  # (wall, ch, ch)
    moduli_change: dict = field(default_factory=dict)

    def wall_lines(self) -> set:
        return {w.line_key() for w in self.walls}

    def chamber_containing(self, b, c) -> Optional[Chamber]:
        for ch in self.chambers:
            if ch.region.contains(b, c):
                return ch
        return None

    def to_json(self) -> dict:
        return {"label": self.label,
                "chambers": [c.to_json() for c in self.chambers],
                "walls": [w.to_json() for w in self.walls],
                "adjacency": [list(a) for a in self.adjacency],
                "moduliChange": {k: v for k, v in sorted(self.moduli_change.items())}}


class ScanError(ValueError):
    pass


def _wall_facets(region: Region):
    """Facets supported by non-ambient constraints, i.e. actual walls."""
    ambient_keys = {k.line_key() for k in region.ambient}
    out = []
    for k, seg in region.facets():
        if k in [a for a in region.ambient]:
            continue
        key = k.line_key()
        supported = any(c.line_key() == key for c in region.constraints)
        if not supported and key in ambient_keys:
            continue
        out.append((k, seg))
    return out


def _failure_kind(region: Region, key) -> str:
    for k in region.constraints:
        if k.line_key() == key:
            if k.rel == EQ:
                return "VOLUME"
            if k.rel == GE:
                return "SLC"
            return "AMPLE"
    return "BOUNDARY"


def _label_for(region: Region, declared) -> tuple[str, bool]:
    for d in declared:
        if d.region.equals(region):
            return d.label, True
    return "", False


def enumerate_chambers(entry) -> Decomposition:
    """Scan one catalog type entry; declared-only entries are passed through."""
    dec = Decomposition(label=entry.key)
    if entry.seed is None:
        for i, d in enumerate(entry.declared_chambers):
            dec.chambers.append(Chamber(d.label, d.model, d.region, index=i))
        _collect_walls(dec)
        return dec

    visited: dict[str, Chamber] = {}
    pending: list[tuple] = []   # (sort key, source step, script)

    def emit(model: SurfaceModel, region: Region) -> Chamber:
        region = region.normalize()
        label, matched = _label_for(region, entry.declared_chambers)
        if not matched:
            label = f"{entry.key}:{model.step}"
        ch = Chamber(label, model.label(), region, index=len(dec.chambers))
        dec.chambers.append(ch)
        visited[model.step] = ch
        # queue crossings for every scripted wall of this chamber
        scripts = {s.wall.key(): s for s in entry.scripts_from(model.step)}
        seen_lines = set()
        for k, seg in _wall_facets(region):
            key = k.line_key()
            if key in seen_lines:
                continue
            seen_lines.add(key)
            script = scripts.get(key)
            if script is None:
                continue
            max_c = max(seg[0][1], seg[1][1])
            max_b = max(seg[0][0], seg[1][0])
            pending.append(((max_c, max_b), model, region, script))
        return ch

    seed_region = stability_region(entry.seed)
    if seed_region.is_empty():
        raise ScanError(f"{entry.key}: seed model is stable nowhere")
    emit(entry.seed, seed_region)

    guard = 0
    while pending:
        guard += 1
        if guard > 200:
            raise ScanError(f"{entry.key}: scan did not terminate")
        pending.sort(key=lambda item: item[0], reverse=True)
        (_, model, region, script) = pending.pop(0)
        result = cross_wall(model, script, source_region=region)
        if script.to_step in visited:
            # revisited chamber: the crossing must land exactly on it
            known = visited[script.to_step]
            if not known.region.equals(result.region.normalize()):
                raise ScanError(
                    f"{entry.key}: wall {script.wall} leads to an inconsistent "
                    f"model for step {script.to_step}")
            continue
        emit(result.model, result.region)

    if entry.expected_chamber_count and len(dec.chambers) != entry.expected_chamber_count:
        raise ScanError(
            f"{entry.key}: found {len(dec.chambers)} chambers, expected "
            f"{entry.expected_chamber_count}; missing transition script or "
            f"non-covering result")
    _collect_walls(dec)
    return dec


def _collect_walls(dec: Decomposition):
    """Derive the wall list and adjacency from the chamber regions."""
    seen: dict = {}
    for ch in dec.chambers:
        region = ch.region
        for k, seg in _wall_facets(region):
            key = k.line_key()
            lo = min(seg)
            hi = max(seg)
            if lo == hi:
                continue
            entry = seen.setdefault(key, {"poly": k.poly, "segs": [], "kinds": set(),
                                          "chambers": []})
            entry["segs"].append((lo, hi))
            entry["kinds"].add(_failure_kind(region, key))
            entry["chambers"].append(ch.label)
    for key, data in sorted(seen.items()):
        lo = min(s[0] for s in data["segs"])
        hi = max(s[1] for s in data["segs"])
        kind = "BOUNDARY"
        for cand in ("VOLUME", "AMPLE", "SLC"):
            if cand in data["kinds"]:
                kind = cand
                break
        dec.walls.append(Wall(data["poly"].primitive(), (lo, hi), kind,
                              tuple(sorted(set(data["chambers"])))))
        chs = sorted(set(data["chambers"]))
        for i in range(len(chs)):
            for j in range(i + 1, len(chs)):
                dec.adjacency.append((line_label(data["poly"]), chs[i], chs[j]))


def merge_global(decompositions, global_table=(), label="global") -> Decomposition:
    """Common refinement of per-type decompositions over the ambient domain.

    Chambers of different dimensions refine naturally: a one-dimensional
    chamber carries an EQ constraint, so intersecting it against another
    type's cells slices it at their boundaries.
    """
    cells: list[tuple[Region, list[str]]] = [(Region(()), [])]
    for dec in decompositions:
        new_cells = []
        for region, tags in cells:
            for ch in dec.chambers:
                meet = region.intersect(ch.region)
                if not meet.is_empty():
                    new_cells.append((meet, tags + [ch.label]))
        cells = new_cells
    out = Decomposition(label=label)
    used = set()
    for i, (region, tags) in enumerate(cells):
        region = region.normalize()
        lab = ""
        for d in global_table:
            if d.region.equals(region):
                lab = d.label
                break
        if not lab:
            lab = f"cell-{i}"
        if lab in used:
            raise ScanError(f"duplicate global chamber {lab}")
        used.add(lab)
        out.chambers.append(Chamber(lab, tags[-1] if tags else "", region, index=i))
    if global_table:
        expected = {d.label for d in global_table}
        got = {c.label for c in out.chambers}
        if got != expected:
            extra = sorted(got - expected)
            missing = sorted(expected - got)
            detail = []
            if extra:
                spurious = []
                for c in out.chambers:
                    if c.label in extra:
                        for k in c.region.normalize().constraints:
                            spurious.append(str(k.poly))
                detail.append(f"spurious cells {extra} cut by {sorted(set(spurious))}")
            if missing:
                detail.append(f"missing {missing}")
            raise ScanError("global refinement does not match the expected table: "
                            + "; ".join(detail))
    out.chambers.sort(key=lambda ch: ch.index)
    _collect_walls(out)
    return out


def coverage_check(dec: Decomposition, max_den: int = 60) -> tuple[int, list]:
    """Every ambient grid point must lie in exactly one chamber."""
    bad = []
    pts = grid_points(max_den)
    for (b, c) in pts:
        hits = [ch.label for ch in dec.chambers if ch.region.contains(b, c)]
        if len(hits) != 1:
            bad.append(((rat_str(b), rat_str(c)), hits))
    return len(pts), bad


#: wall lines where the coarse moduli space changes (the two marked families)
MODULI_CHANGING_LINES = (
    AffinePoly(q0=Fraction(-1), qc=Fraction(4)),                  # c = 1/4
    AffinePoly(q0=Fraction(-1), qb=Fraction(1), qc=Fraction(3)),  # c = -b/3 + 1/3
)


def classify_wall(wall: Wall, moduli_changing=MODULI_CHANGING_LINES) -> dict:
    """Isomorphism class of the wall crossing.

    Positive-slope walls whose upper chamber includes the wall never change
    the coarse space; the remaining classification is catalog metadata with
    exactly two changing families."""
    if wall.slope_class == "positive":
        return {"coarseModuliIsomorphic": True, "rule": "positive-slope wall"}
    keys = {p.key() for p in moduli_changing}
    if wall.line_key() in keys:
        return {"coarseModuliIsomorphic": False, "rule": "catalog: marked crossing"}
    return {"coarseModuliIsomorphic": True, "rule": "catalog"}


def classify_decomposition(dec: Decomposition) -> Decomposition:
    for w in dec.walls:
        dec.moduli_change[line_label(w.poly)] = classify_wall(w)
    return dec
