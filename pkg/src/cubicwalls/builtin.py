"""The bundled catalog, constructed programmatically.

Seed models sit at the top of the weight domain (both weights near 1) where
every marked line is a separate curve; triple points of lines are blown up
with a plane attached along the exceptional curve.  Scripts then walk the
scan down to the minimal corner.  Every seed is volume-checked on
construction, and the shipped JSON is just the serialization of what this
module builds.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exact import AffinePoly, B, C, ONE, Region, constraint, rat, EQ, GE, GT
from .picard import LatticeType, class_from_ints, plane_lattice, quadric_lattice
from .surface import (BoundaryCurve, Component, ConductorCurve, MultiPoint,
                      SurfaceModel, validate_surface, EXCEPTIONAL, MARKED_LINE,
                      ORDINARY_LINE)
from .stability import TARGET_VOLUME, stability_region, volume
from .mmp import TransitionScript, TransitionStep, apply_step
from .catalog import CatalogFile, DeclaredChamber, TypeEntry

b, c = B, C
HALF = Fraction(1, 2)


def _wall(*, q0=0, qb=0, qc=0) -> AffinePoly:
    return AffinePoly(rat(q0), rat(qb), rat(qc))


W_23 = _wall(q0=-2, qc=3)            # 3c - 2        (c = 2/3)
W_ECK = _wall(q0=-2, qb=1, qc=2)     # b + 2c - 2    (c = -b/2 + 1)
W_12 = _wall(q0=-1, qc=2)            # 2c - 1        (c = 1/2)
W_NB1 = _wall(q0=-1, qb=1, qc=1)     # b + c - 1     (c = -b + 1)
W_13 = _wall(q0=-1, qc=3)            # 3c - 1        (c = 1/3)
W_14 = _wall(q0=-1, qc=4)            # 4c - 1        (c = 1/4)
W_NB313 = _wall(q0=-1, qb=1, qc=3)   # b + 3c - 1    (c = -b/3 + 1/3)
W_16 = _wall(q0=-1, qc=6)            # 6c - 1        (c = 1/6)
W_15 = _wall(q0=-1, qc=5)            # 5c - 1        (c = 1/5)
W_B3 = _wall(qb=-1, qc=3)            # 3c - b        (c = b/3)
W_B4 = _wall(qb=-1, qc=4)            # 4c - b        (c = b/4)
W_BC = _wall(qb=1, qc=-1)            # b - c         (b = c)
W_AMP = _wall(q0=-1, qb=-1, qc=10)   # 10c - b - 1   (the ample bound)


def _gt(p) -> "constraint":
    return constraint(p, GT)


def _ge(p) -> "constraint":
    return constraint(p, GE)


def _eq(p) -> "constraint":
    return constraint(p, EQ)


def region(*cons) -> Region:
    return Region(cons)


def _vec(rank: int, **coords) -> tuple[int, ...]:
    """Coordinates by label: h/h1/h2 and e1..e8."""
    v = [0] * rank
    for key, val in coords.items():
        if key == "h" or key == "h1":
            v[0] = val
        elif key == "h2":
            v[1] = val
        else:
            v[int(key[1:]) + (0 if "h2" not in coords and key != "h2" else 0)] = val
    return tuple(v)


class _ComponentBuilder:
    def __init__(self, cid: str, lattice: LatticeType, kind: str = "other"):
        self.cid = cid
        self.lattice = lattice
        self.kind = kind
        self.boundary: list[BoundaryCurve] = []
        self.conductors: list[ConductorCurve] = []

    def _cls(self, vec):
        return class_from_ints(self.lattice, vec)

    def line(self, vec, weight, role=ORDINARY_LINE):
        w = weight if isinstance(weight, AffinePoly) else AffinePoly(q0=rat(weight))
        self.boundary.append(BoundaryCurve(self._cls(vec), w, role))
        return self

    def glue(self, vec, gluing_id):
        self.conductors.append(ConductorCurve(self._cls(vec), gluing_id))
        return self

    def done(self) -> Component:
        return Component(self.cid, self.lattice, tuple(self.boundary),
                         tuple(self.conductors), kind=self.kind)


def _plane_vec(n, h=0, es=()):
    v = [0] * (n + 1)
    v[0] = h
    for i in es:
        v[i] -= 1
    return tuple(v)


def _quad_vec(n, h1=0, h2=0, es=()):
    v = [0] * (n + 2)
    v[0], v[1] = h1, h2
    for i in es:
        v[1 + i] -= 1
    return tuple(v)


def _e(n, i, quadric=False):
    v = [0] * (n + (2 if quadric else 1))
    v[(1 if quadric else 0) + i] = 1
    return tuple(v)


def _model(type_label, step, comps, gluings, points=()) -> SurfaceModel:
    model = SurfaceModel(type_label, step, tuple(comps),
                         tuple(((g[0], g[1]), (g[2], g[3])) for g in gluings),
                         tuple(points))
    rep = validate_surface(model)
    if not rep.ok():
        raise AssertionError(f"bad builtin model {type_label}/{step}: {rep}")
    gap = volume(model) - TARGET_VOLUME
    if not gap.is_zero() and gap.square_decomposition() is None:
        raise AssertionError(f"builtin model {type_label}/{step} volume gap {gap}")
    return model


def _check_scripts(seed: SurfaceModel, scripts) -> tuple[TransitionScript, ...]:
    """Dry-run every script from its source model so vectors stay honest."""
    models = {"step0": seed}
    remaining = list(scripts)
    progress = True
    while remaining and progress:
        progress = False
        for s in list(remaining):
            if s.from_step in models:
                m = models[s.from_step]
                out = m
                for st in s.steps:
                    out = apply_step(out, st, wall=s.wall)
                out = SurfaceModel(out.type_label, s.to_step, out.components,
                                   out.gluings, out.points)
                gap = volume(out) - TARGET_VOLUME
                if not gap.is_zero() and gap.square_decomposition() is None:
                    raise AssertionError(
                        f"script {s.from_step}->{s.to_step} breaks the volume "
                        f"identity by {gap}")
                models.setdefault(s.to_step, out)
                remaining.remove(s)
                progress = True
    if remaining:
        raise AssertionError(f"unreachable scripts: "
                             f"{[(s.from_step, s.to_step) for s in remaining]}")
    return tuple(scripts)


# ---------------------------------------------------------------------------
# the 27 lines of a six-point plane lattice


def _lines27(n_extra: int = 0):
    """Class vectors of the 27 lines on Bl_6 P^2, padded to 6+n_extra points.

    Returns a dict name -> vector: e1..e6, L12..L56, C1..C6 (conic missing i).
    """
    n = 6 + n_extra
    out = {}
    for i in range(1, 7):
        out[f"e{i}"] = _e(n, i)
    for i, j in itertools.combinations(range(1, 7), 2):
        out[f"L{i}{j}"] = _plane_vec(n, 1, (i, j))
    for i in range(1, 7):
        out[f"C{i}"] = _plane_vec(n, 2, tuple(k for k in range(1, 7) if k != i))
    return out


def _sub_e(vec, idx):
    v = list(vec)
    v[idx] -= 1
    return tuple(v)


# ---------------------------------------------------------------------------
# smooth cubics


def _smooth_entry() -> TypeEntry:
    # marked line through one triple point, a second triple point off it
    lat = plane_lattice(8, triples=[(1, 4, 7), (2, 5, 7), (3, 6, 7),
                                    (1, 5, 8), (2, 6, 8), (3, 4, 8)])
    lines = _lines27(2)
    S = _ComponentBuilder("S", lat, kind="smooth-cubic")
    for name, vec in lines.items():
        if name in ("L14", "L25", "L36"):
            vec = _sub_e(vec, 7)
        if name in ("L15", "L26", "L34"):
            vec = _sub_e(vec, 8)
        if name == "L15":
            S.line(vec, b, MARKED_LINE)
        else:
            S.line(vec, c)
    S.glue(_e(8, 7), "eckA")
    S.glue(_e(8, 8), "eckB")
    EA = _ComponentBuilder("EA", plane_lattice(0))
    for _ in range(3):
        EA.line((1,), c)
    EA.glue((1,), "eckA")
    EB = _ComponentBuilder("EB", plane_lattice(0))
    EB.line((1,), b, MARKED_LINE)
    EB.line((1,), c)
    EB.line((1,), c)
    EB.glue((1,), "eckB")
    seed = _model("smooth", "step0", [S.done(), EA.done(), EB.done()],
                  [("S", "eckA", "EA", "eckA"), ("S", "eckB", "EB", "eckB")])

    t2 = TransitionScript("step0", W_23, "beyond", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(8, 7)),
        TransitionStep("ContractComponentToPoint", "EA"),
    ), "step1")
    # after deleting e7, the second point shifts to index 7
    t3 = TransitionScript("step1", W_ECK, "beyond", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(7, 7)),
        TransitionStep("ContractComponentToPoint", "EB"),
    ), "step2")
    scripts = _check_scripts(seed, [t2, t3])

    declared = (
        DeclaredChamber("Y_(2/3,1]", "smooth/step0", region(_gt(W_23))),
        DeclaredChamber("Y^>_(1/2,2/3]", "smooth/step1",
                        region(_ge(-W_23), _gt(W_ECK))),
        DeclaredChamber("Y_(1/9,2/3]", "smooth/step2",
                        region(_ge(-W_23), _ge(-W_ECK))),
    )
    return TypeEntry("smooth", "generic", seed, scripts, 3,
                     (W_23, W_ECK), declared)


# ---------------------------------------------------------------------------
# one-node cubics (type DA1)


def _da1_core(ell_through_node: bool):
    """Common structure: resolution glued to a quadric tower over the node."""
    n_extra = 1 if ell_through_node else 2
    n = 6 + n_extra
    triples = [(1, 4, 7), (2, 5, 7), (3, 6, 7)]
    if not ell_through_node:
        triples += [(1, 2, 8), (3, 4, 8), (5, 6, 8)]
    lat = plane_lattice(n, triples=triples, conics=[(1, 2, 3, 4, 5, 6)])
    S = _ComponentBuilder("S", lat, kind="cubic-1A1")
    for i, j in itertools.combinations(range(1, 7), 2):
        vec = _plane_vec(n, 1, (i, j))
        if (i, j) in ((1, 4), (2, 5), (3, 6)):
            vec = _sub_e(vec, 7)
        if not ell_through_node and (i, j) in ((1, 2), (3, 4), (5, 6)):
            vec = _sub_e(vec, 8)
        if not ell_through_node and (i, j) == (1, 2):
            S.line(vec, b, MARKED_LINE)
        else:
            S.line(vec, c)
    S.glue(_plane_vec(n, 2, (1, 2, 3, 4, 5, 6)), "node")
    for i in range(1, 7):
        S.glue(_e(n, i), f"fa{i}")
    S.glue(_e(n, 7), "eckA")
    if not ell_through_node:
        S.glue(_e(n, 8), "eckB")

    Q2 = _ComponentBuilder("Q2", quadric_lattice(6, on_diagonal=range(1, 7)))
    for i in range(1, 7):
        w1 = b if (ell_through_node and i == 1) else c
        Q2.line(_quad_vec(6, 1, 0, (i,)), w1,
                MARKED_LINE if w1 is b else ORDINARY_LINE)
        Q2.line(_quad_vec(6, 0, 1, (i,)), c)
    Q2.glue(_quad_vec(6, 1, 1, (1, 2, 3, 4, 5, 6)), "node")
    for i in range(1, 7):
        Q2.glue(_e(6, i, quadric=True), f"fb{i}")

    comps = [S.done(), Q2.done()]
    gluings = [("S", "node", "Q2", "node")]
    for i in range(1, 7):
        F = _ComponentBuilder(f"F{i}", quadric_lattice(0))
        # the marked line is a chain: its pieces also cross the towers over
        # the gluing curves it meets (from the quadric side when it runs
        # through the node, from the resolution side otherwise)
        w1 = b if (ell_through_node and i == 1) else c
        F.line((1, 0), w1, MARKED_LINE if w1 is b else ORDINARY_LINE)
        F.line((1, 0), c)
        for k in range(5):
            marked = (not ell_through_node) and i in (1, 2) and k == 0
            w2 = b if marked else c
            F.line((0, 1), w2, MARKED_LINE if w2 is b else ORDINARY_LINE)
        F.glue((1, 0), f"fa{i}")
        F.glue((0, 1), f"fb{i}")
        comps.append(F.done())
        gluings += [("S", f"fa{i}", f"F{i}", f"fa{i}"),
                    ("Q2", f"fb{i}", f"F{i}", f"fb{i}")]

    EA = _ComponentBuilder("EA", plane_lattice(0))
    for _ in range(3):
        EA.line((1,), c)
    EA.glue((1,), "eckA")
    comps.append(EA.done())
    gluings.append(("S", "eckA", "EA", "eckA"))
    if not ell_through_node:
        EB = _ComponentBuilder("EB", plane_lattice(0))
        EB.line((1,), b, MARKED_LINE)
        EB.line((1,), c)
        EB.line((1,), c)
        EB.glue((1,), "eckB")
        comps.append(EB.done())
        gluings.append(("S", "eckB", "EB", "eckB"))
    return comps, gluings


def _da1_smooth_entry() -> TypeEntry:
    comps, gluings = _da1_core(ell_through_node=False)
    seed = _model("DA1", "step0", comps, gluings)
    h2f = (0, 1)
    t2 = TransitionScript("step0", W_23, "beyond", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(8, 7)),
        TransitionStep("ContractComponentToPoint", "EA"),
    ), "step1")
    t3 = TransitionScript("step1", W_ECK, "beyond", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(7, 7)),
        TransitionStep("ContractComponentToPoint", "EB"),
    ), "step2")
    t4 = TransitionScript("step2", W_12, "beyond", tuple(
        [TransitionStep("ContractRulingToCurve", f"F{i}", cls=h2f) for i in range(1, 7)]
        # descending order keeps the remaining script vectors stable
        + [TransitionStep("BlowDownMinusOne", "Q2", cls=_e(i, i, quadric=True))
           for i in range(6, 0, -1)]
    ), "step3")
    t5 = TransitionScript("step3", W_16, "beyond", (
        TransitionStep("ContractComponentToPoint", "Q2",
                       demote=(("node", 6 * c),)),
        TransitionStep("ContractMinusTwoToNode", "S",
                       cls=_plane_vec(6, 2, (1, 2, 3, 4, 5, 6))),
    ), "step4")
    scripts = _check_scripts(seed, [t2, t3, t4, t5])
    declared = (
        DeclaredChamber("Sch(2/3,1]", "DA1/step0", region(_gt(W_23))),
        DeclaredChamber("(-b/2+1,2/3]", "DA1/step1", region(_ge(-W_23), _gt(W_ECK))),
        DeclaredChamber("Sch(1/2,2/3]", "DA1/step2",
                        region(_gt(W_12), _ge(-W_ECK))),
        DeclaredChamber("(1/6,1/2]", "DA1/step3", region(_ge(-W_12), _gt(W_16))),
        DeclaredChamber("(1/9,1/6]", "DA1/step4", region(_ge(-W_16))),
    )
    return TypeEntry("DA1", "smooth-locus", seed, scripts, 5,
                     (W_23, W_ECK, W_12, W_16), declared)


def _da1_one_node_entry() -> TypeEntry:
    comps, gluings = _da1_core(ell_through_node=True)
    seed = _model("DA1-n", "step0", comps, gluings)
    h1f, h2f = (1, 0), (0, 1)
    t2 = TransitionScript("step0", W_23, "beyond", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(7, 7)),
        TransitionStep("ContractComponentToPoint", "EA"),
    ), "step1")
    t4 = TransitionScript("step1", W_12, "beyond", tuple(
        [TransitionStep("ContractRulingToCurve", f"F{i}", cls=h2f) for i in range(2, 7)]
        + [TransitionStep("BlowDownMinusOne", "Q2", cls=_e(i, i, quadric=True))
           for i in range(6, 1, -1)]
    ), "step2")
    t5 = TransitionScript("step2", W_NB1, "beyond", (
        TransitionStep("ContractRulingToCurve", "F1", cls=h2f),
        TransitionStep("BlowDownMinusOne", "Q2", cls=_e(1, 1, quadric=True)),
    ), "step3")
    t10 = TransitionScript("step2", W_15, "beyond", (
        TransitionStep("ContractRulingToCurve", "F1", cls=h1f),
        TransitionStep("BlowDownMinusOne", "S", cls=_e(6, 1)),
    ), "step4")
    t6 = TransitionScript("step3", W_B4, "on", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(6, 1)),
    ), "seg-b4")
    # the triple point (marked piece, its twin, the diagonal) is resolved
    t7 = TransitionScript("seg-b4", W_B4, "beyond", (
        TransitionStep("BlowUpPoint", "Q2",
                       curves=(("b", 0), ("b", 1), ("d", 0)), weight=5 * c),
    ), "step4")
    t8 = TransitionScript("step3", W_16, "beyond", (
        TransitionStep("ContractRulingToCurve", "Q2", cls=h1f),
    ), "step5")
    t9 = TransitionScript("step5", W_BC, "on", (
        TransitionStep("ContractMinusTwoToNode", "S",
                       cls=_plane_vec(6, 2, (1, 2, 3, 4, 5, 6))),
    ), "seg-bc")
    scripts = _check_scripts(seed, [t2, t4, t5, t10, t6, t7, t8, t9])
    declared = (
        DeclaredChamber("Sch(2/3,1]", "DA1-n/step0", region(_gt(W_23))),
        DeclaredChamber("Sch(1/2,2/3]", "DA1-n/step1", region(_ge(-W_23), _gt(W_12))),
        DeclaredChamber("(1/5,1/2]>", "DA1-n/step2",
                        region(_ge(-W_12), _gt(W_NB1), _gt(W_15))),
        DeclaredChamber("(1/6,1/2]<=", "DA1-n/step3",
                        region(_ge(-W_12), _ge(-W_NB1), _gt(W_B4), _gt(W_16))),
        DeclaredChamber("(b/10+1/10,1/5]", "DA1-n/step4",
                        region(_ge(-W_15), _gt(-W_B4))),
        DeclaredChamber("(c=b/4)", "DA1-n/seg-b4",
                        region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        DeclaredChamber("(b/10+1/10,1/6]", "DA1-n/step5",
                        region(_ge(-W_16), _gt(W_BC))),
        DeclaredChamber("Sch(1/9,1/6]=", "DA1-n/seg-bc",
                        region(_eq(W_BC), _ge(-W_16))),
    )
    return TypeEntry("DA1", "one-node", seed, scripts, 8,
                     (W_23, W_12, W_NB1, W_15, W_B4, W_16, W_BC), declared)


# ---------------------------------------------------------------------------
# two-node cubics, marked line through both nodes (type E2A1)


def _e2a1_two_nodes_entry() -> TypeEntry:
    # resolution component: two collinear triples plus a triple point of
    # three of its weight-c lines, blown up at p7
    latS = plane_lattice(7, triples=[(1, 2, 3), (3, 4, 5),
                                     (1, 4, 7), (2, 5, 7), (3, 6, 7)])
    S = _ComponentBuilder("S", latS, kind="cubic-2A1")
    S.line(_plane_vec(7, 1, (1, 4, 7)), c)          # through p7
    S.line(_plane_vec(7, 1, (1, 5)), c)
    S.line(_plane_vec(7, 1, (2, 4)), c)
    S.line(_plane_vec(7, 1, (2, 5, 7)), c)          # through p7
    S.line(_plane_vec(7, 1, (3, 6, 7)), c)          # through p7
    S.line(_plane_vec(7, 2, (1, 2, 4, 5, 6)), c)    # the conic
    S.line(_e(7, 6), c)
    for i, vec in (("1", _e(7, 1)), ("2", _e(7, 2)),
                   ("3", _plane_vec(7, 1, (4, 6))), ("4", _plane_vec(7, 1, (5, 6))),
                   ("5", _e(7, 4)), ("6", _e(7, 5)),
                   ("7", _plane_vec(7, 1, (1, 6))), ("8", _plane_vec(7, 1, (2, 6)))):
        S.glue(vec, f"m2-{i}")
    S.glue(_plane_vec(7, 1, (1, 2, 3)), "nodeA")
    S.glue(_plane_vec(7, 1, (3, 4, 5)), "nodeB")
    S.glue(_e(7, 3), "axis")
    S.glue(_e(7, 7), "eckA")

    EA = _ComponentBuilder("EA", plane_lattice(0))
    for _ in range(3):
        EA.line((1,), c)
    EA.glue((1,), "eckA")

    def quad5(cid, node_id, tangent_id):
        Q = _ComponentBuilder(cid, quadric_lattice(5, on_diagonal=range(1, 6)))
        for i in range(2, 6):
            Q.line(_quad_vec(5, 1, 0, (i,)), c)
            Q.line(_quad_vec(5, 0, 1, (i,)), c)
        Q.glue(_quad_vec(5, 1, 1, (1, 2, 3, 4, 5)), node_id)
        Q.glue(_e(5, 1, quadric=True), tangent_id)
        for i in range(2, 6):
            Q.glue(_e(5, i, quadric=True), f"{cid}-f{i - 1}")
        Q.glue(_quad_vec(5, 1, 0, (1,)), f"{cid}-p")
        Q.glue(_quad_vec(5, 0, 1, (1,)), f"{cid}-q")
        return Q

    Q2a = quad5("2a", "nodeA", "tA")
    Q2b = quad5("2b", "nodeB", "tB")

    # the marked-line component: five points with two collinear triples,
    # blown up at the triple point of the marked line with two others
    latP = plane_lattice(6, triples=[(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)])
    P = _ComponentBuilder("3p", latP, kind="crossing-quintet")
    P.line(_plane_vec(6, 1, (2, 4, 6)), b, MARKED_LINE)
    P.line(_plane_vec(6, 1, (2, 5)), c)
    P.line(_plane_vec(6, 1, (3, 4)), c)
    P.line(_plane_vec(6, 1, (3, 5, 6)), c)
    P.line(_plane_vec(6, 1, (1, 6)), c)
    P.glue(_plane_vec(6, 1, (1, 2, 3)), "tA")
    P.glue(_plane_vec(6, 1, (1, 4, 5)), "tB")
    P.glue(_e(6, 1), "axis")
    P.glue(_e(6, 2), "4pa-j")
    P.glue(_e(6, 3), "4a-j")
    P.glue(_e(6, 4), "4pb-j")
    P.glue(_e(6, 5), "4b-j")
    P.glue(_e(6, 6), "eckB")

    EB = _ComponentBuilder("EB", plane_lattice(0))
    EB.line((1,), b, MARKED_LINE)
    EB.line((1,), c)
    EB.line((1,), c)
    EB.glue((1,), "eckB")

    def f0(cid, n_h1, n_h2, glue_h1, glue_h2, ell_h1=False):
        F = _ComponentBuilder(cid, quadric_lattice(0))
        for k in range(n_h1):
            w = b if (ell_h1 and k == 0) else c
            F.line((1, 0), w, MARKED_LINE if w is b else ORDINARY_LINE)
        for _ in range(n_h2):
            F.line((0, 1), c)
        F.glue((1, 0), glue_h1)
        for gid in glue_h2:
            F.glue((0, 1), gid)
        return F

    comps = [S.done(), EA.done(), Q2a.done(), Q2b.done(), P.done(), EB.done(),
             f0("4a", 2, 4, "2a-q", ["4a-j"]).done(),
             f0("4b", 2, 4, "2b-q", ["4b-j"]).done(),
             f0("4pa", 2, 4, "2a-p", ["4pa-j"], ell_h1=True).done(),
             f0("4pb", 2, 4, "2b-p", ["4pb-j"], ell_h1=True).done()]
    gluings = [("S", "eckA", "EA", "eckA"),
               ("S", "nodeA", "2a", "nodeA"), ("S", "nodeB", "2b", "nodeB"),
               ("S", "axis", "3p", "axis"),
               ("3p", "tA", "2a", "tA"), ("3p", "tB", "2b", "tB"),
               ("3p", "eckB", "EB", "eckB"),
               ("2a", "2a-p", "4pa", "2a-p"), ("2b", "2b-p", "4pb", "2b-p"),
               ("2a", "2a-q", "4a", "2a-q"), ("2b", "2b-q", "4b", "2b-q"),
               ("3p", "4pa-j", "4pa", "4pa-j"), ("3p", "4pb-j", "4pb", "4pb-j"),
               ("3p", "4a-j", "4a", "4a-j"), ("3p", "4b-j", "4b", "4b-j")]
    for k in range(1, 9):
        side = "2a" if k <= 4 else "2b"
        fslot = f"{side}-f{(k - 1) % 4 + 1}"
        F = f0(f"5a{k}", 2, 3, f"m2-{k}", [fslot, f"5y-{k}"])
        comps.append(F.done())
        gluings += [("S", f"m2-{k}", f"5a{k}", f"m2-{k}"),
                    (side, fslot, f"5a{k}", fslot)]
    for m in range(1, 5):
        ka, kb = 2 * m - 1, 2 * m
        Fb = _ComponentBuilder(f"5b{m}", quadric_lattice(0))
        for _ in range(2):
            Fb.line((1, 0), c)
        for _ in range(2):
            Fb.line((0, 1), c)
        Fb.glue((1, 0), f"5y-{ka}")
        Fb.glue((0, 1), f"5y-{kb}")
        comps.append(Fb.done())
        gluings += [(f"5a{ka}", f"5y-{ka}", f"5b{m}", f"5y-{ka}"),
                    (f"5a{kb}", f"5y-{kb}", f"5b{m}", f"5y-{kb}")]

    seed = _model("E2A1", "step0", comps, gluings)

    h1f, h2f = (1, 0), (0, 1)
    t2 = TransitionScript("step0", W_23, "beyond", (
        TransitionStep("BlowDownMinusOne", "S", cls=_e(7, 7)),
        TransitionStep("ContractComponentToPoint", "EA"),
    ), "step1")
    t3 = TransitionScript("step1", W_ECK, "beyond", (
        TransitionStep("BlowDownMinusOne", "3p", cls=_e(6, 6)),
        TransitionStep("ContractComponentToPoint", "EB"),
    ), "step2")
    t4 = TransitionScript("step2", W_12, "beyond", tuple(
        [TransitionStep("ContractRulingToCurve", f"5a{k}", cls=h2f) for k in range(1, 9)]
        + [TransitionStep("ContractComponentToPoint", f"5b{m}") for m in range(1, 5)]
        + [TransitionStep("ContractRulingToCurve", "4a", cls=h2f),
           TransitionStep("ContractRulingToCurve", "4b", cls=h2f)]
        + [TransitionStep("BlowDownMinusOne", side, cls=_e(i, i, quadric=True))
           for side in ("2a", "2b") for i in (5, 4, 3, 2)]
        + [TransitionStep("BlowDownMinusOne", "3p", cls=_e(5, 5)),
           TransitionStep("BlowDownMinusOne", "3p", cls=_e(4, 3))]
    ), "step3")
    t5 = TransitionScript("step3", W_NB1, "beyond", (
        TransitionStep("ContractRulingToCurve", "4pa", cls=h2f),
        TransitionStep("ContractRulingToCurve", "4pb", cls=h2f),
        TransitionStep("BlowDownMinusOne", "3p", cls=_e(3, 3)),
        TransitionStep("BlowDownMinusOne", "3p", cls=_e(2, 2)),
    ), "step4")
    t6 = TransitionScript("step3", W_14, "beyond", (
        TransitionStep("ContractRulingToCurve", "4pa", cls=h1f),
        TransitionStep("ContractRulingToCurve", "4pb", cls=h1f),
        TransitionStep("BlowDownMinusOne", "2a", cls=(1, 0, -1)),
        TransitionStep("BlowDownMinusOne", "2b", cls=(1, 0, -1)),
    ), "step5")
    t8 = TransitionScript("step4", W_NB313, "beyond", (
        TransitionStep("ContractComponentToCurve", "3p", cls=(1, -1)),
        TransitionStep("BlowDownMinusOne", "2a", cls=(0, 0, 1)),
        TransitionStep("BlowDownMinusOne", "2b", cls=(0, 0, 1)),
    ), "step6")
    t9 = TransitionScript("step4", W_B3, "on", (
        TransitionStep("BlowDownMinusOne", "2a", cls=(1, 0, -1)),
        TransitionStep("BlowDownMinusOne", "2b", cls=(1, 0, -1)),
    ), "seg-b3")
    t10 = TransitionScript("seg-b3", W_B3, "beyond", (
        TransitionStep("BlowUpPoint", "3p", curves=(("b", 0), ("b", 1), ("d", 0)),
                       weight=4 * c),
        TransitionStep("BlowUpPoint", "3p", curves=(("b", 0), ("b", 2), ("d", 1)),
                       weight=4 * c),
    ), "step5")
    t11 = TransitionScript("step5", W_16, "beyond", (
        TransitionStep("ContractComponentToCurve", "2a", cls=(1, -1)),
        TransitionStep("ContractComponentToCurve", "2b", cls=(1, -1)),
        TransitionStep("BlowDownMinusOne", "3p", conductor_id="tA"),
        TransitionStep("BlowDownMinusOne", "3p", conductor_id="tB"),
    ), "step7")
    t12 = TransitionScript("step6", W_16, "beyond", (
        TransitionStep("ContractRulingToCurve", "2a", cls=h1f),
        TransitionStep("ContractRulingToCurve", "2b", cls=h1f),
    ), "step8")
    t14 = TransitionScript("step7", W_NB313, "beyond", (
        TransitionStep("ContractComponentToCurve", "2p" if False else "3p", cls=(1, -1)),
    ), "step8")
    t13 = TransitionScript("step8", W_BC, "on", (
        TransitionStep("ContractMinusTwoToNode", "S", cls=_plane_vec(6, 1, (1, 2, 3))),
        TransitionStep("ContractMinusTwoToNode", "S", cls=_plane_vec(6, 1, (3, 4, 5))),
    ), "seg-bc")
    scripts = _check_scripts(seed, [t2, t3, t4, t5, t6, t8, t9, t10, t11, t12, t14, t13])

    declared = (
        DeclaredChamber("Sch(2/3,1]", "E2A1/step0", region(_gt(W_23))),
        DeclaredChamber("(-b/2+1,2/3]", "E2A1/step1", region(_ge(-W_23), _gt(W_ECK))),
        DeclaredChamber("Sch(1/2,2/3]", "E2A1/step2", region(_gt(W_12), _ge(-W_ECK))),
        DeclaredChamber("(1/4,1/2]>", "E2A1/step3", region(_ge(-W_12), _gt(W_14), _gt(W_NB1))),
        DeclaredChamber("Sch(1/4,1/2]", "E2A1/step4",
                        region(_ge(-W_NB1), _gt(W_NB313), _gt(W_B3))),
        DeclaredChamber("(b/10+1/10,1/4]", "E2A1/step5",
                        region(_ge(-W_14), _gt(W_16), _gt(-W_B3))),
        DeclaredChamber("(c=b/3)", "E2A1/seg-b3", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        DeclaredChamber("Sch(1/6,1/4]", "E2A1/step6", region(_ge(-W_NB313), _gt(W_16))),
        DeclaredChamber("(b/10+1/10,1/6]>", "E2A1/step7", region(_ge(-W_16), _gt(W_NB313))),
        DeclaredChamber("(b/10+1/10,1/6]<=", "E2A1/step8",
                        region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        DeclaredChamber("Sch(1/9,1/6]=", "E2A1/seg-bc", region(_eq(W_BC), _ge(-W_16))),
    )
    return TypeEntry("E2A1", "two-nodes", seed, scripts, 11,
                     (W_23, W_ECK, W_12, W_NB1, W_14, W_NB313, W_B3, W_16, W_BC),
                     declared)


# ---------------------------------------------------------------------------
# region-only entries: types whose component tables live outside this corpus
# carry their chamber regions and expected walls as declared data


def _declared_entry(type_label, ell, chambers, walls) -> TypeEntry:
    declared = tuple(DeclaredChamber(lab, f"{type_label}/{ell}:n{i}", reg)
                     for i, (lab, reg) in enumerate(chambers))
    return TypeEntry(type_label, ell, None, (), len(declared), tuple(walls), declared)


def _e2a1_smooth_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("(-b/2+1,2/3]", region(_ge(-W_23), _gt(W_ECK))),
        ("Sch(1/2,2/3]", region(_gt(W_12), _ge(-W_ECK))),
        ("(1/4,1/2]", region(_ge(-W_12), _gt(W_14))),
        ("(1/6,1/4]", region(_ge(-W_14), _gt(W_16))),
        ("(b/10+1/10,1/6]", region(_ge(-W_16))),
    ]


def _e2a1_one_node_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("Sch(1/2,2/3]", region(_ge(-W_23), _gt(W_12))),
        ("(1/4,1/2]>", region(_ge(-W_12), _gt(W_14), _gt(W_NB1))),
        ("Sch(1/4,1/2]", region(_ge(-W_12), _gt(W_14), _ge(-W_NB1))),
        ("(1/6,1/4]", region(_ge(-W_14), _gt(W_16), _gt(W_B4), _ge(-W_NB1))),
        ("(1/5,1/4]>", region(_ge(-W_14), _gt(W_15), _gt(W_NB1))),
        ("(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("(b/10+1/10,1/6]", region(_ge(-W_16), _gt(W_BC))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e3a1_two_nodes_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("(-b/2+1,2/3]", region(_ge(-W_23), _gt(W_ECK))),
        ("Sch(1/2,2/3]", region(_gt(W_12), _ge(-W_ECK))),
        ("(1/4,1/2]>", region(_ge(-W_12), _gt(W_14), _gt(W_NB1))),
        ("Sch(1/4,1/2]", region(_ge(-W_12), _gt(W_14), _ge(-W_NB1))),
        ("(-b/3+1/3,1/4]", region(_ge(-W_14), _gt(W_NB313), _gt(W_B3))),
        ("(b/10+1/10,1/4]>", region(_ge(-W_14), _gt(W_16), _gt(-W_B3))),
        ("(c=b/3)", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        ("Sch(1/6,1/4]", region(_ge(-W_NB313), _gt(W_16))),
        ("(b/10+1/10,1/6]>", region(_ge(-W_16), _gt(W_NB313))),
        ("(b/10+1/10,1/6]<=", region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _da1_e2a1_two_nodes_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("Sch(1/2,2/3]", region(_ge(-W_23), _gt(W_12))),
        ("(1/4,1/2]>", region(_ge(-W_12), _gt(W_14), _gt(W_NB1))),
        ("Sch(1/4,1/2]", region(_ge(-W_NB1), _gt(W_NB313), _gt(W_B3))),
        ("Sch(1/6,1/4]", region(_ge(-W_NB313), _gt(W_16))),
        ("(b/10+1/10,1/6]<=", region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        ("(c=1/4)", region(_eq(W_14), _gt(B - Fraction(3, 4)))),
        ("(1/5,1/4)>", region(_gt(-W_14), _gt(W_15), _gt(W_NB1))),
        ("(b/4,b/3)", region(_gt(W_16), _ge(-W_NB1), _gt(W_B4), _gt(-W_B3))),
        ("(b/10+1/10,1/6]>", region(_ge(-W_16), _gt(W_NB313))),
        ("(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("(c=b/3)", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        ("(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _d3a2_smooth_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("(-b/2+1,2/3]", region(_ge(-W_23), _gt(W_ECK))),
        ("Sch(1/3,2/3]", region(_gt(W_13), _ge(-W_ECK))),
        ("(b/10+1/10,1/3]", region(_ge(-W_13), _gt(W_BC))),
        ("Sch(1/9,1/3]=", region(_eq(W_BC), _ge(-W_13))),
    ]


def _da1_d3a2_smooth_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("(-b/2+1,2/3]", region(_ge(-W_23), _gt(W_ECK))),
        ("Sch(1/2,2/3]", region(_gt(W_12), _ge(-W_ECK))),
        ("Sch(1/3,1/2]", region(_ge(-W_12), _gt(W_13))),
        ("(1/6,1/3]", region(_ge(-W_13), _gt(W_16), _gt(W_BC))),
        ("(b/10+1/10,1/6]", region(_ge(-W_16), _gt(W_BC))),
        ("Sch(1/6,1/3]=", region(_eq(W_BC), _ge(-W_13), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _da1_d3a2_one_node_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("Sch(1/2,2/3]", region(_ge(-W_23), _gt(W_12))),
        ("(1/3,1/2]>", region(_ge(-W_12), _gt(W_13), _gt(W_NB1))),
        ("Sch(1/3,1/2]", region(_ge(-W_12), _gt(W_13), _ge(-W_NB1))),
        ("(1/6,1/3]<=", region(_ge(-W_13), _ge(-W_NB1), _gt(W_B4), _gt(W_16), _gt(W_BC))),
        ("(-b+1,1/3]>", region(_ge(-W_13), _gt(W_NB1), _gt(W_15))),
        ("(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("(b/10+1/10,1/6]", region(_ge(-W_16), _gt(W_BC))),
        ("Sch(1/6,1/3]=", region(_eq(W_BC), _ge(-W_13), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e2a1_d3a2_smooth_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("(-b/2+1,2/3]", region(_ge(-W_23), _gt(W_ECK))),
        ("Sch(1/2,2/3]", region(_gt(W_12), _ge(-W_ECK))),
        ("Sch(1/3,1/2]", region(_ge(-W_12), _gt(W_13))),
        ("(1/4,1/3]", region(_ge(-W_13), _gt(W_14), _gt(W_BC))),
        ("(1/6,1/4]", region(_ge(-W_14), _gt(W_16), _gt(W_BC))),
        ("(b/10+1/10,1/6]", region(_ge(-W_16), _gt(W_BC))),
        ("Sch(1/4,1/3]=", region(_eq(W_BC), _ge(-W_13), _gt(W_14))),
        ("Sch(1/6,1/4]=", region(_eq(W_BC), _ge(-W_14), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e2a1_d3a2_one_node_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("Sch(1/2,2/3]", region(_ge(-W_23), _gt(W_12))),
        ("(1/3,1/2]>", region(_ge(-W_12), _gt(W_13), _gt(W_NB1))),
        ("Sch(1/3,1/2]", region(_ge(-W_12), _gt(W_13), _ge(-W_NB1))),
        ("(1/4,1/3]<=", region(_ge(-W_13), _gt(W_14), _ge(-W_NB1), _gt(W_BC))),
        ("(1/4,1/3]>", region(_ge(-W_13), _gt(W_14), _gt(W_NB1))),
        ("(1/6,1/4]<=", region(_ge(-W_14), _gt(W_16), _gt(W_B4), _ge(-W_NB1), _gt(W_BC))),
        ("(1/5,1/4]>", region(_ge(-W_14), _gt(W_15), _gt(W_NB1))),
        ("(b/10+1/10,1/6]", region(_ge(-W_16), _gt(W_BC))),
        ("(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("Sch(1/4,1/3]=", region(_eq(W_BC), _ge(-W_13), _gt(W_14))),
        ("Sch(1/6,1/4]=", region(_eq(W_BC), _ge(-W_14), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e2a1_d3a2_two_nodes_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("(-b/2+1,2/3]", region(_ge(-W_23), _gt(W_ECK))),
        ("Sch(1/2,2/3]", region(_gt(W_12), _ge(-W_ECK))),
        ("(1/3,1/2]>", region(_ge(-W_12), _gt(W_13), _gt(W_NB1))),
        ("Sch(1/3,1/2]", region(_ge(-W_12), _gt(W_13), _ge(-W_NB1))),
        ("(-b/3+1/3,1/3]", region(_ge(-W_13), _gt(W_NB313), _gt(W_B3),
                                  _ge(-W_NB1), _gt(W_BC))),
        ("(1/4,1/3]>", region(_ge(-W_13), _gt(W_14), _gt(W_NB1))),
        ("(b/10+1/10,1/4]>", region(_ge(-W_14), _gt(W_16), _gt(-W_B3))),
        ("(c=b/3)", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        ("Sch(1/6,1/4]", region(_ge(-W_NB313), _gt(W_16), _gt(W_BC))),
        ("(b/10+1/10,1/6]>", region(_ge(-W_16), _gt(W_NB313))),
        ("(b/10+1/10,1/6]<=", region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        ("Sch(1/4,1/3]=", region(_eq(W_BC), _ge(-W_13), _gt(W_14))),
        ("Sch(1/6,1/4]=", region(_eq(W_BC), _ge(-W_14), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e2a1_d3a2_degen_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("Sch(1/2,2/3]", region(_ge(-W_23), _gt(W_12))),
        ("(1/3,1/2]>", region(_ge(-W_12), _gt(W_13), _gt(W_NB1))),
        ("Sch(1/3,1/2]", region(_ge(-W_12), _gt(W_13), _ge(-W_NB1))),
        ("(-b/3+1/3,1/3]", region(_ge(-W_13), _gt(W_NB313), _gt(W_B3),
                                  _ge(-W_NB1), _gt(W_BC))),
        ("(1/4,1/3]>", region(_ge(-W_13), _gt(W_14), _gt(W_NB1))),
        ("Sch(1/6,1/4]", region(_ge(-W_NB313), _gt(W_16), _gt(W_BC))),
        ("(b/4,b/3)", region(_gt(W_16), _ge(-W_NB1), _gt(W_B4), _gt(-W_B3))),
        ("(1/5,1/4)>", region(_gt(-W_14), _gt(W_15), _gt(W_NB1))),
        ("(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("(b/10+1/10,1/6]>", region(_ge(-W_16), _gt(W_NB313))),
        ("(b/10+1/10,1/6]<=", region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        ("(c=1/4)", region(_eq(W_14), _gt(B - Fraction(3, 4)))),
        ("(c=b/3)", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        ("(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("Sch(1/4,1/3]=", region(_eq(W_BC), _ge(-W_13), _gt(W_14))),
        ("Sch(1/6,1/4]=", region(_eq(W_BC), _ge(-W_14), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e3a1_degen_chambers():
    return [
        ("Sch(2/3,1]", region(_gt(W_23))),
        ("Sch(1/2,2/3]", region(_ge(-W_23), _gt(W_12))),
        ("(1/4,1/2]>", region(_ge(-W_12), _gt(W_14), _gt(W_NB1))),
        ("Sch(1/4,1/2]", region(_ge(-W_12), _gt(W_14), _ge(-W_NB1))),
        ("(-b/3+1/3,1/4]", region(_ge(-W_14), _gt(W_NB313), _gt(W_B3))),
        ("Sch(1/6,1/4]", region(_ge(-W_NB313), _gt(W_16))),
        ("(1/5,1/4)>", region(_gt(-W_14), _gt(W_15), _gt(W_NB1))),
        ("(b/4,b/3)", region(_gt(W_16), _ge(-W_NB1), _gt(W_B4), _gt(-W_B3))),
        ("(b/10+1/10,1/6]>", region(_ge(-W_16), _gt(W_NB313))),
        ("(b/10+1/10,1/6]<=", region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        ("(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("(c=1/4)", region(_eq(W_14), _gt(B - Fraction(3, 4)))),
        ("(c=b/3)", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        ("(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("Sch(1/9,1/6]=", region(_eq(W_BC), _ge(-W_16))),
    ]


def _e3a1_d3a2_two_nodes_chambers():
    # like the two-node compound case, with the full quarter-line wall
    # splitting off the wedge above it
    out = list(_e2a1_d3a2_two_nodes_chambers())
    out[5] = ("(1/4,1/3]<=", region(_ge(-W_13), _gt(W_14), _ge(-W_NB1), _gt(W_BC)))
    out.insert(6, ("(-b/3+1/3,1/4]", region(_ge(-W_14), _gt(W_NB313), _gt(W_B3))))
    return out


def _e3a1_d3a2_degen_chambers():
    out = list(_e2a1_d3a2_degen_chambers())
    out[4] = ("(1/4,1/3]<=", region(_ge(-W_13), _gt(W_14), _ge(-W_NB1), _gt(W_BC)))
    out.insert(5, ("(-b/3+1/3,1/4]", region(_ge(-W_14), _gt(W_NB313), _gt(W_B3))))
    return out


# ---------------------------------------------------------------------------
# the global table and catalog assembly


def _global_chambers():
    amp = W_AMP  # the open lower boundary belongs to the ambient domain
    return (
        ("Y_(2/3,1]", region(_gt(W_23))),
        ("Y^>_(1/2,2/3]", region(_ge(-W_23), _gt(W_12), _gt(W_ECK))),
        ("Y^<=_(1/2,2/3]", region(_ge(-W_23), _gt(W_12), _ge(-W_ECK))),
        ("Y^>_(1/3,1/2]", region(_ge(-W_12), _gt(W_13), _gt(W_NB1))),
        ("Y^<=_(1/3,1/2]", region(_ge(-W_12), _gt(W_13), _ge(-W_NB1))),
        ("Y^>_(1/4,1/3]", region(_ge(-W_13), _gt(W_14), _gt(W_NB1))),
        ("Y^<=_(1/4,1/3]", region(_ge(-W_13), _gt(W_14), _ge(-W_NB1), _gt(W_BC))),
        ("Y^=_(1/4,1/3]", region(_eq(W_BC), _ge(-W_13), _gt(W_14))),
        ("Y_(c=1/4)", region(_eq(W_14), _gt(B - Fraction(3, 4)))),
        ("Y^>_(1/5,1/4)", region(_gt(-W_14), _gt(W_15), _gt(W_NB1))),
        ("Y_(b/10+1/10,1/5]", region(_ge(-W_15), _gt(-W_B4))),
        ("Y_(c=b/4)", region(_eq(W_B4), _ge(-W_15), _gt(W_16))),
        ("Y_(b/4,b/3)", region(_gt(-W_B3), _gt(W_B4), _gt(W_16), _ge(-W_NB1))),
        ("Y_(c=b/3)", region(_eq(W_B3), _ge(-W_14), _gt(W_16))),
        ("Y_(-b/3+1/3,1/4]", region(_ge(-W_14), _gt(W_NB313), _gt(W_B3))),
        ("Y_(1/6,-b/3+1/3]", region(_ge(-W_NB313), _gt(W_16), _gt(W_BC))),
        ("Y^=_(1/6,1/4]", region(_eq(W_BC), _ge(-W_14), _gt(W_16))),
        ("Y^>_(b/10+1/10,1/6]", region(_ge(-W_16), _gt(W_NB313))),
        ("Y^<=_(b/10+1/10,1/6]", region(_ge(-W_16), _ge(-W_NB313), _gt(W_BC))),
        ("Y^=_(1/9,1/6]", region(_eq(W_BC), _ge(-W_16))),
    )


@lru_cache(maxsize=1)
def builtin_catalog() -> CatalogFile:
    entries = [
        _smooth_entry(),
        _da1_smooth_entry(),
        _da1_one_node_entry(),
        _e2a1_two_nodes_entry(),
        _declared_entry("E2A1", "smooth-locus", _e2a1_smooth_chambers(),
                        (W_23, W_ECK, W_12, W_14, W_16)),
        _declared_entry("E2A1", "one-node", _e2a1_one_node_chambers(),
                        (W_23, W_12, W_NB1, W_14, W_15, W_B4, W_16, W_BC)),
        _declared_entry("E3A1", "smooth-locus", _e2a1_smooth_chambers(),
                        (W_23, W_ECK, W_12, W_14, W_16)),
        _declared_entry("E3A1", "one-node", _e2a1_one_node_chambers(),
                        (W_23, W_12, W_NB1, W_14, W_15, W_B4, W_16, W_BC)),
        _declared_entry("E3A1", "two-nodes", _e3a1_two_nodes_chambers(),
                        (W_23, W_ECK, W_12, W_NB1, W_14, W_NB313, W_B3, W_16, W_BC)),
        _declared_entry("E3A1+DA1", "two-nodes", _e3a1_degen_chambers(),
                        (W_23, W_12, W_NB1, W_14, W_NB313, W_B3, W_B4, W_15,
                         W_16, W_BC)),
        _declared_entry("E4A1", "smooth-locus", _e2a1_smooth_chambers(),
                        (W_23, W_ECK, W_12, W_14, W_16)),
        _declared_entry("E4A1", "two-nodes", _e3a1_two_nodes_chambers(),
                        (W_23, W_ECK, W_12, W_NB1, W_14, W_NB313, W_B3, W_16, W_BC)),
        _declared_entry("D3A2", "smooth-locus", _d3a2_smooth_chambers(),
                        (W_23, W_ECK, W_13, W_BC)),
        _declared_entry("DA1+D3A2", "smooth-locus", _da1_d3a2_smooth_chambers(),
                        (W_23, W_ECK, W_12, W_13, W_16, W_BC)),
        _declared_entry("DA1+D3A2", "one-node", _da1_d3a2_one_node_chambers(),
                        (W_23, W_12, W_NB1, W_13, W_15, W_B4, W_16, W_BC)),
        _declared_entry("DA1+E2A1", "two-nodes", _da1_e2a1_two_nodes_chambers(),
                        (W_23, W_12, W_NB1, W_14, W_NB313, W_B3, W_B4, W_15,
                         W_16, W_BC)),
        _declared_entry("E2A1+D3A2", "smooth-locus", _e2a1_d3a2_smooth_chambers(),
                        (W_23, W_ECK, W_12, W_13, W_14, W_16, W_BC)),
        _declared_entry("E2A1+D3A2", "one-node", _e2a1_d3a2_one_node_chambers(),
                        (W_23, W_12, W_NB1, W_13, W_14, W_15, W_B4, W_16, W_BC)),
        _declared_entry("E2A1+D3A2", "two-nodes", _e2a1_d3a2_two_nodes_chambers(),
                        (W_23, W_ECK, W_12, W_NB1, W_13, W_14, W_NB313, W_B3,
                         W_16, W_BC)),
        _declared_entry("E2A1+D3A2", "degenerate-two-nodes", _e2a1_d3a2_degen_chambers(),
                        (W_23, W_12, W_NB1, W_13, W_14, W_NB313, W_B3, W_B4,
                         W_15, W_16, W_BC)),
        _declared_entry("E3A1+D3A2", "smooth-locus", _e2a1_d3a2_smooth_chambers(),
                        (W_23, W_ECK, W_12, W_13, W_14, W_16, W_BC)),
        _declared_entry("E3A1+D3A2", "one-node", _e2a1_d3a2_one_node_chambers(),
                        (W_23, W_12, W_NB1, W_13, W_14, W_15, W_B4, W_16, W_BC)),
        _declared_entry("E3A1+D3A2", "two-nodes", _e3a1_d3a2_two_nodes_chambers(),
                        (W_23, W_ECK, W_12, W_NB1, W_13, W_14, W_NB313, W_B3,
                         W_16, W_BC)),
        _declared_entry("E3A1+D3A2", "degenerate-two-nodes", _e3a1_d3a2_degen_chambers(),
                        (W_23, W_12, W_NB1, W_13, W_14, W_NB313, W_B3, W_B4,
                         W_15, W_16, W_BC)),
    ]
    global_chambers = tuple(
        DeclaredChamber(lab, "", reg) for lab, reg in _global_chambers())
    return CatalogFile(tuple(entries), global_chambers, (W_14, W_NB313))
