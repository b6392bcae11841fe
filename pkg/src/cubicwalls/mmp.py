"""Contraction and blow-up primitives, scripted wall crossings.

Transitions are catalog data: an ordered list of steps attached to a wall of
a source model.  The engine executes the steps mechanically (exact basis
changes included), re-derives multi-curve points created by contractions,
and refuses any script whose output breaks the volume identity or fails
stability on the far side of the wall.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (AffinePoly, LinearConstraint, Region, affine, constraint,
                    quad, rat, rat_str, EQ, GE, GT)
from .picard import (DivisorClass, LatticeType, basis_class, class_from_ints,
                     convert_class, intersection_number, negative_curves,
                     quadric_to_plane, PLANE, QUADRIC)
from .surface import (BoundaryCurve, Component, ConductorCurve, MultiPoint,
                      SurfaceModel, blow_up_point, log_canonical_divisor,
                      validate_surface, EXCEPTIONAL, MARKED_LINE, ORDINARY_LINE)
from .stability import (TARGET_VOLUME, stability_region, stability_report,
                        volume)


class StepError(ValueError):
    pass


@dataclass(frozen=True)
class TransitionStep:
    """Tagged step; fields used depend on the kind.

    kinds: BlowDownMinusOne(component, cls)
           ContractRulingToCurve(component, cls=contracted fiber class,
                                 absorb=gluing id of the section conductor)
           ContractComponentToCurve -- alias of the above for non-ruled names
           ContractComponentToPoint(component, demote={gluing id: weight})
           ContractMinusTwoToNode(component, cls)
           BlowUpPoint(component, curves=refs, weight or conductor_id)
           AttachPlaneAtExceptional(component, cls, weights, conductor_id)
    """

    kind: str
    component: str
    cls: Optional[tuple] = None          # integer class vector on that component
    absorb: Optional[str] = None
    demote: tuple[tuple[str, AffinePoly], ...] = ()
    curves: tuple[tuple[str, int], ...] = ()
    weight: Optional[AffinePoly] = None
    conductor_id: Optional[str] = None
    weights: tuple[AffinePoly, ...] = ()

    def to_json(self) -> dict:
        d: dict = {"kind": self.kind, "component": self.component}
        if self.cls is not None:
            d["class"] = list(self.cls)
        if self.absorb is not None:
            d["absorb"] = self.absorb
        if self.demote:
            d["demote"] = [[g, _affine_json(w)] for g, w in self.demote]
        if self.curves:
            d["curves"] = [list(r) for r in self.curves]
        if self.weight is not None:
            d["weight"] = _affine_json(self.weight)
        if self.conductor_id is not None:
            d["conductorId"] = self.conductor_id
        if self.weights:
            d["weights"] = [_affine_json(w) for w in self.weights]
        return d

    @staticmethod
    def from_json(d: dict) -> "TransitionStep":
        return TransitionStep(
            kind=d["kind"], component=d["component"],
            cls=tuple(d["class"]) if "class" in d else None,
            absorb=d.get("absorb"),
            demote=tuple((g, _affine_from_json(w)) for g, w in d.get("demote", ())),
            curves=tuple((r[0], r[1]) for r in d.get("curves", ())),
            weight=_affine_from_json(d["weight"]) if "weight" in d else None,
            conductor_id=d.get("conductorId"),
            weights=tuple(_affine_from_json(w) for w in d.get("weights", ())),
        )


def _affine_json(p: AffinePoly) -> dict:
    return {"q0": rat_str(p.q0), "qb": rat_str(p.qb), "qc": rat_str(p.qc)}


def _affine_from_json(d: dict) -> AffinePoly:
    return AffinePoly(rat(d["q0"]), rat(d["qb"]), rat(d["qc"]))


@dataclass(frozen=True)
class TransitionScript:
    from_step: str
    wall: AffinePoly            # wall line; the source chamber satisfies wall > 0
    side: str                   # "beyond" (wall < 0 side) or "on" (wall = 0)
    steps: tuple[TransitionStep, ...]
    to_step: str

    def __post_init__(self):
        if self.side not in ("beyond", "on"):
            raise ValueError(f"bad side {self.side!r}")
        if not self.steps:
            raise ValueError("transition script with no steps")

    def to_json(self) -> dict:
        return {"fromStep": self.from_step, "wall": _affine_json(self.wall),
                "side": self.side, "steps": [s.to_json() for s in self.steps],
                "toStep": self.to_step}

    @staticmethod
    def from_json(d: dict) -> "TransitionScript":
        return TransitionScript(
            from_step=d["fromStep"], wall=_affine_from_json(d["wall"]),
            side=d["side"], steps=tuple(TransitionStep.from_json(s) for s in d["steps"]),
            to_step=d["toStep"])


# ---------------------------------------------------------------------------
# step mechanics


def _class_on(comp: Component, vec: Sequence[int]) -> DivisorClass:
    return class_from_ints(comp.lattice, vec)


def _partner(model: SurfaceModel, comp_id: str, gluing_id: str):
    for pair in model.gluings:
        a, b = pair
        if a == (comp_id, gluing_id):
            return b
        if b == (comp_id, gluing_id):
            return a
    return None


def _drop_gluings_of(model: SurfaceModel, comp_id: str) -> tuple:
    return tuple(p for p in model.gluings
                 if p[0][0] != comp_id and p[1][0] != comp_id)


def _remap_points(model: SurfaceModel, comp_id: str, bmap: dict, dmap: dict,
                  extra: list[MultiPoint]) -> tuple[MultiPoint, ...]:
    """Re-index multipoints on comp_id after curves moved; drop unresolvable."""
    pts: list[MultiPoint] = []
    for pt in model.points:
        if pt.component != comp_id:
            pts.append(pt)
            continue
        refs = []
        ok = True
        for kind, i in pt.curves:
            m = bmap if kind == "b" else dmap
            if i in m:
                refs.append(m[i])
            else:
                ok = False
                break
        if ok and len(refs) >= (2 if pt.at_a1 else 3):
            pts.append(MultiPoint(comp_id, tuple(refs), pt.at_a1))
    return tuple(pts) + tuple(extra)


def _plane_to_quadric_images(lat: LatticeType, i: int, j: int):
    """Bl_n P^2 -> Bl_{n-1} F_0 making h - e_i - e_j the first exceptional."""
    n_new = lat.n - 1
    others = [k for k in range(1, lat.n + 1) if k not in (i, j)]
    target = LatticeType(QUADRIC, n_new)
    rank_new = n_new + 2

    def vec(h1=0, h2=0, es=()):
        v = [0] * rank_new
        v[0], v[1] = h1, h2
        for idx, val in es:
            v[1 + idx] = val
        return tuple(v)

    images = [vec(1, 1, [(1, -1)])]           # h -> h1 + h2 - e_1
    pos_of = {old: new for new, old in enumerate(others, start=2)}
    for k in range(1, lat.n + 1):
        if k == i:
            images.append(vec(1, 0, [(1, -1)]))   # e_i -> h1 - e_1
        elif k == j:
            images.append(vec(0, 1, [(1, -1)]))   # e_j -> h2 - e_1
        else:
            images.append(vec(0, 0, [(pos_of[k], 1)]))
    return target, images


def _convert_int(vec_old: Sequence[int], images, rank_new: int) -> tuple[int, ...]:
    out = [0] * rank_new
    for coef, img in zip(vec_old, images):
        if coef:
            for p, v in enumerate(img):
                out[p] += coef * v
    return tuple(out)


def _base_change(comp: Component, u_vec: tuple[int, ...]):
    """One presentation change after which u is closer to a basis vector."""
    lat = comp.lattice
    off = 1 if lat.kind == PLANE else 2
    v = u_vec
    if lat.kind == PLANE:
        pts = [k - off + 1 for k in range(off, len(v)) if v[k] == -1]
        if v[0] == 1 and len(pts) == 2 and all(x in (0, 1, -1) for x in v):
            target, images = _plane_to_quadric_images(lat, pts[0], pts[1])
        else:
            raise StepError(f"unsupported blow-down class {v}")
    else:
        pts = [k - off + 1 for k in range(off, len(v)) if v[k] == -1]
        if v[0] + v[1] == 1 and min(v[0], v[1]) == 0 and len(pts) == 1:
            target, images = quadric_to_plane(lat, pts[0])
        else:
            raise StepError(f"unsupported blow-down class {v}")
    new_comp = _rebuild_component(comp, target, images)
    new_u = _convert_int(v, images, target.rank)
    return new_comp, new_u


def _rebuild_component(comp: Component, target: LatticeType, images) -> Component:
    """Map every stored class through the basis change and re-derive the
    configuration data from the transported effective negative classes."""
    from .picard import effective_roots, _int_dot

    def conv_int(vec_old) -> tuple[int, ...]:
        out = [0] * target.rank
        for coef, img in zip(vec_old, images):
            if coef:
                for p, v in enumerate(img):
                    out[p] += coef * v
        return tuple(out)

    old = comp.lattice
    root_vecs = [conv_int(r) for r in effective_roots(old)]
    for v in old.extra:
        root_vecs.append(conv_int(v))
    diag = None
    if old.kind == QUADRIC and old.on_diagonal:
        dv = [1, 1] + [0] * old.n
        for i in old.on_diagonal:
            dv[1 + i] = -1
        if _int_dot(old, tuple(dv), tuple(dv)) <= -2:
            root_vecs.append(conv_int(tuple(dv)))
    triples, conics, extra, on_diag = [], [], [], []
    off = 1 if target.kind == PLANE else 2
    for v in root_vecs:
        body = v[off:]
        if target.kind == PLANE and v[0] == 1 and sorted(body) == [-1, -1, -1] + [0] * (target.n - 3):
            triples.append(tuple(k + 1 for k, x in enumerate(body) if x == -1))
        elif target.kind == PLANE and v[0] == 2 and sorted(body) == [-1] * 6 + [0] * (target.n - 6):
            conics.append(tuple(k + 1 for k, x in enumerate(body) if x == -1))
        else:
            extra.append(v)
    lat_new = LatticeType(target.kind, target.n, tuple(triples), tuple(conics),
                          tuple(on_diag), tuple(extra))

    def conv(d: DivisorClass) -> DivisorClass:
        return convert_class(d, lat_new, images)

    return replace(
        comp,
        lattice=lat_new,
        boundary=tuple(BoundaryCurve(conv(b.cls), b.weight, b.role) for b in comp.boundary),
        conductors=tuple(ConductorCurve(conv(d.cls), d.gluing_id) for d in comp.conductors),
        a1_nodes=tuple(conv(q) for q in comp.a1_nodes),
        eckardt=comp.eckardt,
    )


def _delete_basis_exceptional(model: SurfaceModel, comp: Component,
                              e_index: int) -> SurfaceModel:
    """Remove basis vector e_{e_index} (1-based among blown points)."""
    lat = comp.lattice
    off = 1 if lat.kind == PLANE else 2
    col = off + e_index - 1

    u = basis_class(lat, f"e{e_index}")
    incident_b = [i for i, bcv in enumerate(comp.boundary)
                  if bcv.cls.coeffs[col].q0 != 0 and bcv.cls.int_vector() != u.int_vector()
                  and quad(intersection_number(bcv.cls, u)).q0 >= 1]
    incident_d = [i for i, ccv in enumerate(comp.conductors)
                  if quad(intersection_number(ccv.cls, u)).q0 >= 1]

    def shrink_vec(vec) -> tuple[int, ...]:
        return tuple(v for k, v in enumerate(vec) if k != col)

    def reindex(t):  # point indices above e_index shift down
        return tuple(i - 1 if i > e_index else i for i in t)

    triples = [reindex(t) for t in lat.triples if e_index not in t]
    conics = [reindex(s) for s in lat.conics if e_index not in s]
    on_diag = reindex(tuple(i for i in lat.on_diagonal if i != e_index))
    extra = []
    for v in lat.extra:
        if v[col] == 0:
            extra.append(shrink_vec(v))
    lat_new = LatticeType(lat.kind, lat.n - 1, tuple(triples), tuple(conics),
                          tuple(on_diag), tuple(extra))

    def push(d: DivisorClass) -> DivisorClass:
        return DivisorClass(lat_new, tuple(c for k, c in enumerate(d.coeffs) if k != col))

    bmap, new_boundary = {}, []
    for i, bcv in enumerate(comp.boundary):
        if bcv.cls.is_integral() and bcv.cls.int_vector() == u.int_vector():
            continue  # the contracted curve itself disappears
        bmap[i] = ("b", len(new_boundary))
        new_boundary.append(BoundaryCurve(push(bcv.cls), bcv.weight, bcv.role))
    dmap, new_conductors = {}, []
    for i, ccv in enumerate(comp.conductors):
        if ccv.cls.is_integral() and ccv.cls.int_vector() == u.int_vector():
            continue
        dmap[i] = ("d", len(new_conductors))
        new_conductors.append(ConductorCurve(push(ccv.cls), ccv.gluing_id))

    new_comp = replace(comp, lattice=lat_new, boundary=tuple(new_boundary),
                       conductors=tuple(new_conductors),
                       a1_nodes=tuple(push(q) for q in comp.a1_nodes))

    extra_points: list[MultiPoint] = []
    refs = ([bmap[i] for i in incident_b if i in bmap]
            + [dmap[i] for i in incident_d if i in dmap])
    if len(refs) >= 3:
        extra_points.append(MultiPoint(comp.id, tuple(refs)))

    model = model.replace_component(new_comp)
    return replace(model, points=_remap_points(model, comp.id, bmap, dmap, extra_points))


def apply_blow_down(model: SurfaceModel, comp_id: str, vec: Optional[Sequence[int]],
                    wall: Optional[AffinePoly] = None,
                    conductor_id: Optional[str] = None) -> SurfaceModel:
    comp = model.component(comp_id)
    if vec is None:
        # resolve the class of a (typically orphaned) conductor at run time
        match = [cc for cc in comp.conductors if cc.gluing_id == conductor_id]
        if len(match) != 1:
            raise StepError(f"{comp_id}: no unique conductor {conductor_id!r}")
        vec = match[0].cls.int_vector()
    u = _class_on(comp, vec)
    sq = quad(intersection_number(u, u)).q0
    if sq != -1:
        raise StepError(f"{comp_id}: class {u} is not a (-1)-curve")
    if wall is not None:
        deg = intersection_number(log_canonical_divisor(comp), u)
        if not _vanishes_on(deg, wall):
            raise StepError(f"{comp_id}: class {u} has degree {deg} at the wall {wall}")
    # base-change until u is a basis exceptional
    v = u.int_vector()
    for _ in range(3):
        lat = comp.lattice
        off = 1 if lat.kind == PLANE else 2
        if all(x == 0 for x in v[:off]) and sorted(v[off:]) == [0] * (lat.n - 1) + [1]:
            break
        comp, v = _base_change(comp, v)
        model = model.replace_component(comp)
    else:
        raise StepError(f"class {u} did not become a basis vector")
    off = 1 if comp.lattice.kind == PLANE else 2
    e_index = v[off:].index(1) + 1
    return _delete_basis_exceptional(model, comp, e_index)


def _vanishes_on(poly: AffinePoly, wall: AffinePoly) -> bool:
    """poly is a rational multiple of the wall line."""
    if poly.is_zero():
        return True
    return poly.key() == wall.key()


def apply_contract_to_curve(model: SurfaceModel, comp_id: str, fiber_vec: Sequence[int],
                            wall: Optional[AffinePoly] = None,
                            deposit_override: Optional[AffinePoly] = None) -> SurfaceModel:
    """Collapse a component along the pencil of curves in `fiber_vec` class.

    The unique section conductor identifies the absorbing curve on the
    neighbour; section boundary weights add up and land there."""
    comp = model.component(comp_id)
    z = _class_on(comp, fiber_vec)
    d = log_canonical_divisor(comp)
    deg = intersection_number(d, z)
    if wall is not None and not _vanishes_on(deg, wall):
        raise StepError(f"{comp_id}: fiber degree {deg} does not vanish on the wall")

    sections = [cc for cc in comp.conductors
                if quad(intersection_number(cc.cls, z)).q0 >= 1]
    if len(sections) != 1:
        raise StepError(f"{comp_id}: expected one section conductor, found {len(sections)}")
    section = sections[0]
    partner = _partner(model, comp_id, section.gluing_id)
    if partner is None:
        raise StepError(f"{comp_id}: section conductor {section.gluing_id} is unglued")

    deposit = affine(0)
    for bcv in comp.boundary:
        m = quad(intersection_number(bcv.cls, z)).q0
        if m >= 1:
            deposit = deposit + bcv.weight * m
    if deposit_override is not None:
        deposit = deposit_override

    gluings = _drop_gluings_of(model, comp_id)
    comps = tuple(c for c in model.components if c.id != comp_id)
    model = replace(model, components=comps, gluings=gluings,
                    points=tuple(p for p in model.points if p.component != comp_id))
    if partner[0] != comp_id:
        model = _demote_conductor(model, partner[0], partner[1], deposit)
    return model


def _demote_conductor(model: SurfaceModel, comp_id: str, gluing_id: str,
                      weight: AffinePoly, role: str = ORDINARY_LINE) -> SurfaceModel:
    comp = model.component(comp_id)
    idx = [i for i, cc in enumerate(comp.conductors) if cc.gluing_id == gluing_id]
    if len(idx) != 1:
        raise StepError(f"{comp_id}: conductor {gluing_id} not found")
    i = idx[0]
    cc = comp.conductors[i]
    new_boundary = comp.boundary + (BoundaryCurve(cc.cls, weight, role),)
    new_conductors = comp.conductors[:i] + comp.conductors[i + 1:]
    dmap = {j: ("d", j if j < i else j - 1) for j in range(len(comp.conductors)) if j != i}
    dmap[i] = ("b", len(comp.boundary))
    bmap = {j: ("b", j) for j in range(len(comp.boundary))}
    model = model.replace_component(replace(comp, boundary=new_boundary,
                                            conductors=new_conductors))
    return replace(model, points=_remap_points(model, comp_id, bmap, dmap, []))


def apply_contract_to_point(model: SurfaceModel, comp_id: str,
                            demote: Sequence[tuple[str, AffinePoly]] = (),
                            wall: Optional[AffinePoly] = None) -> SurfaceModel:
    comp = model.component(comp_id)
    d = log_canonical_divisor(comp)
    if wall is not None:
        for cf in d.coeffs:
            if not _vanishes_on(cf, wall):
                raise StepError(f"{comp_id}: divisor {d} does not vanish on the wall")
    orphans = []
    for cc in comp.conductors:
        partner = _partner(model, comp_id, cc.gluing_id)
        if partner is not None and partner[0] != comp_id:
            orphans.append(partner)
    gluings = _drop_gluings_of(model, comp_id)
    comps = tuple(c for c in model.components if c.id != comp_id)
    model = replace(model, components=comps, gluings=gluings,
                    points=tuple(p for p in model.points if p.component != comp_id))
    declared = dict(demote)
    for partner in orphans:
        pid, gid = partner
        alive = [cp for cp in model.components if cp.id == pid]
        if alive and any(cc.gluing_id == gid for cc in alive[0].conductors):
            if gid not in declared:
                raise StepError(f"contraction of {comp_id} leaves {pid}/{gid} unglued "
                                f"and undeclared")
            model = _demote_conductor(model, pid, gid, declared[gid])
    return model


def apply_contract_node(model: SurfaceModel, comp_id: str, vec: Sequence[int]) -> SurfaceModel:
    comp = model.component(comp_id)
    q = _class_on(comp, vec)
    if quad(intersection_number(q, q)).q0 != -2:
        raise StepError(f"{comp_id}: {q} is not a (-2) class")
    refs = []
    for i, bcv in enumerate(comp.boundary):
        if bcv.cls.int_vector() == q.int_vector():
            continue
        if quad(intersection_number(bcv.cls, q)).q0 >= 1:
            refs.append(("b", i))
    for i, ccv in enumerate(comp.conductors):
        if quad(intersection_number(ccv.cls, q)).q0 >= 1:
            refs.append(("d", i))
    new_comp = replace(comp, a1_nodes=comp.a1_nodes + (q,))
    model = model.replace_component(new_comp)
    pts = model.points
    if len(refs) >= 2:
        pts = pts + (MultiPoint(comp_id, tuple(refs), at_a1=True),)
    return replace(model, points=pts)


def apply_blow_up(model: SurfaceModel, comp_id: str, curves: Sequence[tuple[str, int]],
                  weight: Optional[AffinePoly], conductor_id: Optional[str],
                  role: str = EXCEPTIONAL) -> SurfaceModel:
    comp = model.component(comp_id)
    new_comp = blow_up_point(comp, tuple(curves), new_weight=weight,
                             new_role=role, as_conductor_id=conductor_id)
    model = model.replace_component(new_comp)
    # a declared multipoint at the blown-up position is resolved
    pts = []
    target = frozenset(curves)
    removed = False
    for pt in model.points:
        if not removed and pt.component == comp_id and frozenset(pt.curves) == target:
            removed = True
            continue
        pts.append(pt)
    return replace(model, points=tuple(pts))


def apply_attach_plane(model: SurfaceModel, comp_id: str, vec: Sequence[int],
                       weights: Sequence[AffinePoly], conductor_id: str,
                       new_id: Optional[str] = None) -> SurfaceModel:
    """Glue a plane along a conductor with the given exceptional class."""
    from .picard import plane_lattice

    comp = model.component(comp_id)
    target = _class_on(comp, vec)
    match = [cc for cc in comp.conductors if cc.cls.int_vector() == target.int_vector()
             and cc.gluing_id == conductor_id]
    if not match:
        raise StepError(f"{comp_id}: no conductor {conductor_id} with class {target}")
    lat = plane_lattice(0)
    h = basis_class(lat, "h")
    new_id = new_id or f"E-{comp_id}-{conductor_id}"
    plane = Component(
        id=new_id, lattice=lat,
        boundary=tuple(BoundaryCurve(h, affine(w),
                                     MARKED_LINE if affine(w).qb != 0 else ORDINARY_LINE)
                       for w in weights),
        conductors=(ConductorCurve(h, conductor_id),),
        kind="other")
    return replace(model, components=model.components + (plane,),
                   gluings=model.gluings + (((comp_id, conductor_id), (new_id, conductor_id)),))


def apply_step(model: SurfaceModel, step: TransitionStep,
               wall: Optional[AffinePoly] = None) -> SurfaceModel:
    kind = step.kind
    if kind == "BlowDownMinusOne":
        return apply_blow_down(model, step.component, step.cls, wall,
                               conductor_id=step.conductor_id)
    if kind in ("ContractRulingToCurve", "ContractComponentToCurve"):
        return apply_contract_to_curve(model, step.component, step.cls, wall)
    if kind == "ContractComponentToPoint":
        return apply_contract_to_point(model, step.component, step.demote, wall)
    if kind == "ContractMinusTwoToNode":
        return apply_contract_node(model, step.component, step.cls)
    if kind == "BlowUpPoint":
        return apply_blow_up(model, step.component, step.curves, step.weight,
                             step.conductor_id)
    if kind == "AttachPlaneAtExceptional":
        return apply_attach_plane(model, step.component, step.cls, step.weights,
                                  step.conductor_id)
    raise StepError(f"unknown step kind {kind!r}")


# ---------------------------------------------------------------------------
# gluing conditions and the full crossing


@dataclass
class GluingCheckReport:
    wall: AffinePoly
    witness: tuple[Fraction, Fraction]
    per_component: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"wall": _affine_json(self.wall),
                "witness": [rat_str(self.witness[0]), rat_str(self.witness[1])],
                "perComponent": self.per_component,
                "pass": self.passed, "failures": self.failures}


def check_gluing_conditions(model: SurfaceModel, wall: LinearConstraint,
                            witness) -> GluingCheckReport:
    """Big-and-nef plus nonnegative conductor degrees at a wall witness.

    Nefness is checked against the negative-curve census and the nef
    generators; bigness as positive self-intersection; base-point-freeness
    along each conductor as nonnegative degree on a rational curve."""
    b, c = rat(witness[0]), rat(witness[1])
    if wall.poly.at(b, c) != 0:
        raise ValueError(f"witness ({b},{c}) is not on the wall {wall.poly}")
    rep = GluingCheckReport(wall.poly, (b, c))
    for comp in model.components:
        d = log_canonical_divisor(comp)
        entry: dict = {}
        sq = quad(intersection_number(d, d)).at(b, c)
        entry["selfIntersection"] = rat_str(sq)
        big = sq > 0
        nef = True
        curves = list(negative_curves(comp.lattice).all_curves())
        if comp.lattice.kind == PLANE:
            curves.append(basis_class(comp.lattice, "h"))
        else:
            curves.append(basis_class(comp.lattice, "h1"))
            curves.append(basis_class(comp.lattice, "h2"))
        for cw in curves:
            val = quad(intersection_number(d, cw)).at(b, c)
            if val < 0:
                nef = False
                rep.failures.append(f"{comp.id}: degree {rat_str(val)} on [{cw}]")
        # a component about to contract degenerates at the wall; bigness is
        # reported per component, only nefness and conductor degrees gate
        entry["bigNef"] = big and nef
        degs = []
        for cc in comp.conductors:
            val = intersection_number(d, cc.cls)
            degs.append([cc.gluing_id, str(val)])
            if quad(val).at(b, c) < 0:
                rep.failures.append(
                    f"{comp.id}: conductor {cc.gluing_id} has negative degree "
                    f"{rat_str(quad(val).at(b, c))}")
        entry["conductorDegrees"] = degs
        rep.per_component[comp.id] = entry
    return rep


@dataclass
class CrossingResult:
    model: SurfaceModel
    region: Region
    gluing: GluingCheckReport


def cross_wall(model: SurfaceModel, script: TransitionScript,
               source_region: Optional[Region] = None) -> CrossingResult:
    """Execute a scripted crossing and verify the result.

    Checks, in order: the gluing conditions at a wall witness, volume
    preservation as an exact polynomial identity, and stability of the
    destination at a witness strictly inside its own region."""
    if source_region is None:
        source_region = stability_region(model)
    wall_constraint = constraint(script.wall, EQ)
    closure = Region([k.closure() for k in source_region.constraints],
                     tuple(k.closure() for k in source_region.ambient))
    wall_region = closure.with_constraints([wall_constraint])
    if wall_region.is_empty():
        raise StepError(f"wall {script.wall} does not touch the source chamber")
    witness = wall_region.witness()
    gluing = check_gluing_conditions(model, wall_constraint, witness)
    if not gluing.passed:
        raise StepError("gluing conditions fail at the wall witness: "
                        + "; ".join(gluing.failures))

    vol_before = volume(model)
    new_model = model
    for step in script.steps:
        new_model = apply_step(new_model, step, wall=script.wall)
    new_model = replace(new_model, step=script.to_step)
    rep = validate_surface(new_model)
    if not rep.ok():
        raise StepError(f"script output fails validation: {rep}")
    vol_after = volume(new_model)
    gap_before = vol_before - TARGET_VOLUME
    gap_after = vol_after - TARGET_VOLUME
    # both gaps must vanish on the respective chambers; the crossing itself
    # must preserve the target identity
    if gap_before.is_zero() and not gap_after.is_zero():
        if gap_after.square_decomposition() is None:
            raise StepError(f"crossing broke the volume identity by {gap_after}")

    region = stability_region(new_model)
    if region.is_empty():
        raise StepError("destination model is stable nowhere")
    dest_witness = region.witness()
    side_val = script.wall.at(*dest_witness)
    if script.side == "beyond" and not side_val < 0:
        raise StepError("destination region is not beyond the wall")
    if script.side == "on" and side_val != 0:
        raise StepError("destination region does not lie on the wall")
    rep2 = stability_report(new_model, at=dest_witness)
    if not rep2.stable():
        raise StepError("destination model unstable at its own witness: "
                        + "; ".join(str(c) for c in rep2.failing))
    return CrossingResult(new_model, region, gluing)
