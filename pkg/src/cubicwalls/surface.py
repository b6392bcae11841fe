"""Reducible-surface data model.

A SurfaceModel is a set of components (lattice + weighted boundary curves +
conductor curves), gluing identifications pairing conductors across
components, and declared multi-curve points.  Components contracted to nodal
surfaces are represented by their minimal resolutions with the contracted
(-2) classes recorded in ``a1_nodes``; all intersection computations run on
the resolution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .exact import AffinePoly, affine, rat, rat_str
from .picard import (DivisorClass, LatticeType, canonical_class, class_from_ints,
                     intersection_number, negative_curves, parse_class, quad)

MARKED_LINE = "marked-line"
ORDINARY_LINE = "ordinary-line"
EXCEPTIONAL = "exceptional"

#: allowed numbers of triple points of boundary lines per surface kind
ECKARDT_ALLOWED = {
    "smooth-cubic": frozenset({0, 1, 2, 3, 4, 6, 9, 10, 18}),
    "cubic-1A1": frozenset({0, 1, 2, 3, 4, 6}),
    "cubic-2A1": frozenset({0, 1}),
    "cubic-3A1": frozenset({0, 1}),
    "cubic-4A1": frozenset({0}),
    "cubic-A2": frozenset({0, 1, 2, 3}),
    "crossing-quintet": frozenset({0, 1}),
    "other": None,  # unconstrained
}


@dataclass(frozen=True)
class BoundaryCurve:
    """Weighted irreducible curve in the boundary divisor."""

    cls: DivisorClass
    weight: AffinePoly
    role: str = ORDINARY_LINE

    def __post_init__(self):
        object.__setattr__(self, "weight", affine(self.weight))
        if self.weight.is_zero():
            raise ValueError("boundary curve with zero weight")

    def describe(self) -> str:
        return f"({self.weight})·[{self.cls}]"


@dataclass(frozen=True)
class ConductorCurve:
    """Gluing curve; carries coefficient 1 in the log canonical divisor."""

    cls: DivisorClass
    gluing_id: str


@dataclass(frozen=True)
class MultiPoint:
    """A declared point where several curves meet (triple points and worse).

    ``curves`` holds indices: ("b", i) boundary, ("d", i) conductor.
    ``at_a1`` marks points sitting at a contracted node.
    """

    component: str
    curves: tuple[tuple[str, int], ...]
    at_a1: bool = False


@dataclass(frozen=True)
class Component:
    id: str
    lattice: LatticeType
    boundary: tuple[BoundaryCurve, ...] = ()
    conductors: tuple[ConductorCurve, ...] = ()
    a1_nodes: tuple[DivisorClass, ...] = ()
    #: kind used for the triple-point count validation
    kind: str = "other"
    eckardt: tuple[tuple[int, int, int], ...] = ()

    def boundary_curve(self, i: int) -> BoundaryCurve:
        return self.boundary[i]

    def conductor(self, i: int) -> ConductorCurve:
        return self.conductors[i]

    def curve_class(self, ref: tuple[str, int]) -> DivisorClass:
        kind, i = ref
        return self.boundary[i].cls if kind == "b" else self.conductors[i].cls

    def curve_weight(self, ref: tuple[str, int]) -> AffinePoly:
        kind, i = ref
        return self.boundary[i].weight if kind == "b" else affine(1)


@dataclass(frozen=True)
class SurfaceModel:
    type_label: str
    step: str
    components: tuple[Component, ...]
    #: pairs of (component id, gluing id); a self pair repeats the id
    gluings: tuple[tuple[tuple[str, str], tuple[str, str]], ...] = ()
    points: tuple[MultiPoint, ...] = ()

    def component(self, cid: str) -> Component:
        for comp in self.components:
            if comp.id == cid:
                return comp
        raise KeyError(f"no component {cid!r}")

    def replace_component(self, comp: Component) -> "SurfaceModel":
        comps = tuple(comp if c.id == comp.id else c for c in self.components)
        return replace(self, components=comps)

    def label(self) -> str:
        return f"{self.type_label}/{self.step}"


def log_canonical_divisor(comp: Component) -> DivisorClass:
    """K + sum(weight_i * boundary_i) + sum(conductor_j), exact in (b, c)."""
    d = canonical_class(comp.lattice)
    for bc in comp.boundary:
        d = d + bc.cls.scale(bc.weight)
    for cc in comp.conductors:
        d = d + cc.cls
    return d


def arithmetic_genus(comp: Component, cls: DivisorClass) -> Fraction:
    k = canonical_class(comp.lattice)
    sq = intersection_number(cls, cls)
    ck = intersection_number(cls, k)
    val = (quad(sq).q0 + quad(ck).q0) / 2 + 1
    return val


@dataclass
class ValidationReport:
    violations: list[str] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str):
        self.violations.append(msg)

    def __str__(self) -> str:
        return "valid" if self.ok() else "; ".join(self.violations)


def validate_surface(model: SurfaceModel) -> ValidationReport:
    """Structural checks: gluing completeness, conductor rationality by
    adjunction, multipoint incidence, declared triple-point counts."""
    rep = ValidationReport()
    ids = [c.id for c in model.components]
    if len(set(ids)) != len(ids):
        rep.add("duplicate component ids")

    used: dict[tuple[str, str], int] = {}
    for pair in model.gluings:
        (a_comp, a_id), (b_comp, b_id) = pair
        for comp_id, glue_id in ((a_comp, a_id), (b_comp, b_id)):
            try:
                comp = model.component(comp_id)
            except KeyError:
                rep.add(f"gluing references unknown component {comp_id!r}")
                continue
            matches = [cc for cc in comp.conductors if cc.gluing_id == glue_id]
            if len(matches) != 1:
                rep.add(f"gluing id {glue_id!r} not unique on component {comp_id}")
            used[(comp_id, glue_id)] = used.get((comp_id, glue_id), 0) + 1
        if pair[0] == pair[1]:
            # self-gluing under an involution: one conductor, counted once
            used[pair[0]] -= 1
    for comp in model.components:
        for cc in comp.conductors:
            cnt = used.get((comp.id, cc.gluing_id), 0)
            if cnt == 0:
                rep.add(f"dangling gluing: {comp.id}/{cc.gluing_id}")
            elif cnt > 1:
                rep.add(f"conductor {comp.id}/{cc.gluing_id} appears in several pairs")

    for comp in model.components:
        for cc in comp.conductors:
            if not cc.cls.is_integral():
                rep.add(f"conductor {comp.id}/{cc.gluing_id} has non-integral class")
                continue
            if arithmetic_genus(comp, cc.cls) != 0:
                rep.add(f"conductor {comp.id}/{cc.gluing_id} is not a rational curve")
        for bc in comp.boundary:
            if not bc.cls.is_integral():
                rep.add(f"boundary curve {bc.describe()} on {comp.id} has affine class")
        for q in comp.a1_nodes:
            sq = quad(intersection_number(q, q)).q0
            if sq != -2:
                rep.add(f"a1 node class on {comp.id} has self-intersection {sq}")
        # declared triples of boundary curves must pairwise meet
        for t in comp.eckardt:
            for i, j in itertools.combinations(t, 2):
                n = quad(intersection_number(comp.boundary[i].cls, comp.boundary[j].cls)).q0
                if n < 1:
                    rep.add(f"eckardt triple {t} on {comp.id}: curves {i},{j} disjoint")
        allowed = ECKARDT_ALLOWED.get(comp.kind)
        if allowed is not None and len(comp.eckardt) not in allowed:
            rep.add(f"component {comp.id} ({comp.kind}) declares {len(comp.eckardt)} "
                    f"triple points; allowed counts are {sorted(allowed)}")

    for pt in model.points:
        try:
            comp = model.component(pt.component)
        except KeyError:
            rep.add(f"multipoint on unknown component {pt.component!r}")
            continue
        need = 2 if pt.at_a1 else 3
        if len(pt.curves) < need:
            rep.add(f"multipoint on {pt.component} has fewer than {need} incident curves")
        for ref in pt.curves:
            kind, i = ref
            pool = comp.boundary if kind == "b" else comp.conductors
            if not (0 <= i < len(pool)):
                rep.add(f"multipoint on {pt.component} references missing curve {ref}")
    return rep


def blow_up_point(comp: Component, incident: Sequence[tuple[str, int]],
                  new_weight: Optional[AffinePoly] = None,
                  new_role: str = EXCEPTIONAL,
                  as_conductor_id: Optional[str] = None) -> Component:
    """Blow up a declared point of the component.

    Every curve listed in ``incident`` has its class decremented by the new
    exceptional vector; line classes through two blown-up points turn into
    declared collinear triples so the negative-curve census stays correct.
    The new exceptional enters the boundary with ``new_weight`` or becomes a
    conductor with ``as_conductor_id``.
    """
    lat = comp.lattice
    if lat.rank + 1 > 9:
        raise ValueError("blow-up would exceed the supported rank")
    n_new = lat.n + 1
    off = 1 if lat.kind == "plane" else 2
    new_triples = list(lat.triples)
    for ref in incident:
        cls = comp.curve_class(ref)
        vec = cls.int_vector()
        if lat.kind == "plane" and vec[0] == 1:
            through = [i - off + 1 for i in range(off, len(vec)) if vec[i] == -1]
            if len(through) == 2:
                new_triples.append((through[0], through[1], n_new))
    new_lat = LatticeType(lat.kind, n_new, tuple(new_triples), lat.conics, lat.on_diagonal,
                          tuple(v + (0,) for v in lat.extra))

    def extend(cls: DivisorClass, hit: bool) -> DivisorClass:
        coeffs = list(cls.coeffs) + [affine(-1 if hit else 0)]
        return DivisorClass(new_lat, tuple(coeffs))

    hits = set(incident)
    boundary = tuple(
        BoundaryCurve(extend(bc.cls, ("b", i) in hits), bc.weight, bc.role)
        for i, bc in enumerate(comp.boundary))
    conductors = tuple(
        ConductorCurve(extend(cc.cls, ("d", i) in hits), cc.gluing_id)
        for i, cc in enumerate(comp.conductors))
    e_new_vec = [0] * new_lat.rank
    e_new_vec[-1] = 1
    e_new = class_from_ints(new_lat, e_new_vec)
    if as_conductor_id is not None:
        conductors = conductors + (ConductorCurve(e_new, as_conductor_id),)
    elif new_weight is not None:
        boundary = boundary + (BoundaryCurve(e_new, affine(new_weight), new_role),)
    a1 = tuple(extend(q, False) for q in comp.a1_nodes)
    return replace(comp, lattice=new_lat, boundary=boundary, conductors=conductors,
                   a1_nodes=a1)
