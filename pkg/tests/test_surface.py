from dataclasses import replace
from fractions import Fraction as F

import pytest

from cubicwalls.exact import AffinePoly, B, C, QuadPoly, affine
from cubicwalls.picard import (basis_class, class_from_ints, plane_lattice,
                               self_intersection)
from cubicwalls.surface import (BoundaryCurve, Component, ConductorCurve,
                                MultiPoint, SurfaceModel, blow_up_point,
                                log_canonical_divisor, validate_surface)
from cubicwalls.builtin import builtin_catalog
from cubicwalls.cli import _model_at_step


@pytest.fixture(scope="module")
def e2a1(catalog):
    return catalog.entry("E2A1", "two-nodes")


def test_log_canonical_divisor_step1_component(e2a1):
    model = _model_at_step(e2a1, "step2")
    d = log_canonical_divisor(model.component("S"))
    assert [str(x) for x in d.coeffs] == \
        ["7c + 3", "- 3c", "- 3c", "- c", "- 3c", "- 3c", "- c - 3"]


def test_log_canonical_divisor_plane():
    lat = plane_lattice(0)
    h = basis_class(lat, "h")
    comp = Component("E", lat,
                     boundary=tuple(BoundaryCurve(h, C) for _ in range(3)),
                     conductors=(ConductorCurve(h, "x"),))
    assert str(log_canonical_divisor(comp)) == "(3c - 2)h"
    bare = Component("K", lat)
    assert log_canonical_divisor(bare).int_vector() == (-3,)


def test_validate_builtin_seed(e2a1):
    assert validate_surface(e2a1.seed).ok()
    # the in-corpus generic variant has 21 components (no marked-line plane)
    assert len(e2a1.seed.components) == 22


def test_validate_dangling_gluing(e2a1):
    broken = replace(e2a1.seed, gluings=e2a1.seed.gluings[1:])
    rep = validate_surface(broken)
    assert any("dangling" in v for v in rep.violations)


def test_validate_eckardt_count():
    lat = plane_lattice(6)
    lines = []
    import itertools
    for i, j in itertools.combinations(range(1, 7), 2):
        vec = [1] + [0] * 6
        vec[i] -= 1
        vec[j] -= 1
        lines.append(BoundaryCurve(class_from_ints(lat, vec), C))
    comp = Component("S", lat, boundary=tuple(lines), kind="smooth-cubic",
                     eckardt=((0, 14, 1), (0, 14, 2), (0, 14, 3),
                              (0, 14, 4), (0, 14, 5)))
    model = SurfaceModel("t", "s", (comp,))
    rep = validate_surface(model)
    assert any("allowed counts" in v for v in rep.violations)


def test_blow_up_decrements_and_divisor(e2a1):
    model = _model_at_step(e2a1, "step1")
    comp = model.component("S")
    point = [p for p in model.points if p.component == "S"][0]
    blown = blow_up_point(comp, point.curves, as_conductor_id="eckA")
    d = log_canonical_divisor(blown)
    assert str(d.coeffs[-1]) == "- 3c + 2"   # -(3c - 2) on the new curve
    for ref in point.curves:
        cls = blown.curve_class(ref)
        assert cls.coeffs[-1].q0 == -1


def test_blow_up_point_off_curves_pullback_square():
    lat = plane_lattice(1)
    comp = Component("X", lat,
                     boundary=(BoundaryCurve(basis_class(lat, "e1"), 2 * C),),
                     conductors=(ConductorCurve(class_from_ints(lat, (1, -1)), "g"),))
    d = log_canonical_divisor(comp)
    blown = blow_up_point(comp, (), new_weight=None)   # pure basis extension
    d2 = log_canonical_divisor(blown)
    # K gains the exceptional, so the square drops by exactly one
    assert self_intersection(d2) == self_intersection(d) - QuadPoly(q0=1)


def test_eckardt_blow_up_volume_cancellation(e2a1, catalog):
    from cubicwalls.stability import volume, TARGET_VOLUME
    step0 = e2a1.seed
    step1 = _model_at_step(e2a1, "step1")
    assert (volume(step0) - TARGET_VOLUME).is_zero()
    assert (volume(step1) - TARGET_VOLUME).is_zero()
    # the attached plane and the exceptional term cancel coefficient-wise
    EA = step0.component("EA")
    assert self_intersection(log_canonical_divisor(EA)) == \
        QuadPoly(qcc=9, qc=-12, q0=4)
    dS0 = log_canonical_divisor(step0.component("S"))
    dS1 = log_canonical_divisor(step1.component("S"))
    assert self_intersection(dS1) - self_intersection(dS0) == QuadPoly(qcc=9, qc=-12, q0=4)


def test_conductor_genus_enforced():
    lat = plane_lattice(6)
    bad = Component("S", lat,
                    conductors=(ConductorCurve(class_from_ints(
                        lat, (3, -1, -1, -1, -1, -1, -1)), "g"),))
    rep = validate_surface(SurfaceModel("t", "s", (bad,),
                                        gluings=((("S", "g"), ("S", "g")),)))
    assert any("rational" in v for v in rep.violations)
