"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Every criterion prints a ``[criterion N] PASS`` line on success (pytest -s
shows them; the summary line doubles as the audit trail).  Tolerances are
exact equality of rationals, polynomials, constraint sets and regions.
"""

import itertools
from fractions import Fraction as F

import pytest

from cubicwalls.exact import (AffinePoly, B, C, QuadPoly, Region,
                              SQUARE_DOMAIN, constraint, line_label, GT)
from cubicwalls.picard import (canonical_class, intersection_number,
                               negative_curves, plane_lattice,
                               positivity_certificates, self_intersection)
from cubicwalls.surface import log_canonical_divisor
from cubicwalls.stability import (TARGET_VOLUME, slc_constraints,
                                  stability_report, volume)
from cubicwalls.mmp import TransitionStep, apply_step, cross_wall
from cubicwalls.stability import stability_region
from cubicwalls.chambers import (classify_decomposition, coverage_check,
                                 enumerate_chambers, merge_global)
from cubicwalls.builtin import (builtin_catalog, W_14, W_NB313, W_23)
from cubicwalls.cli import _model_at_step


def _ok(n, msg):
    print(f"[criterion {n}] PASS: {msg}")


def test_criterion_1_amp_derivation():
    """Ample region of the general marked smooth cubic."""
    lat = plane_lattice(6)
    k = canonical_class(lat)
    lines = negative_curves(lat).minus_one
    marked = [x for x in lines if x.int_vector() == (0, 1, 0, 0, 0, 0, 0)][0]
    d = k + marked.scale(B)
    for x in lines:
        if x != marked:
            d = d + x.scale(C)
    certs = positivity_certificates(lat, d)
    region = Region([constraint(p, GT) for p, _ in certs], SQUARE_DOMAIN).normalize()
    want = Region([constraint(10 * C - B - 1, GT)], SQUARE_DOMAIN)
    assert region.equals(want)
    assert [k2.poly.key() for k2 in region.constraints] == [(10 * C - B - 1).key()]
    sources = [cw for p, cw in certs if p.key() == (10 * C - B - 1).key()]
    assert [x.int_vector() for x in sources] == [marked.int_vector()]
    _ok(1, "ample region is exactly {c > b/10 + 1/10}, bound by the marked line")


def test_criterion_2_volume_identity(catalog):
    """Constant volume of the twenty-component model, summand by summand."""
    entry = catalog.entry("E2A1", "two-nodes")
    step2 = _model_at_step(entry, "step2")
    assert volume(step2) == TARGET_VOLUME
    counts = {}
    for comp in step2.components:
        counts.setdefault(str(self_intersection(log_canonical_divisor(comp))), 0)
        counts[str(self_intersection(log_canonical_divisor(comp)))] += 1
    assert counts == {
        "11c^2 + 36c": 1,
        "16c^2 + 16c - 5": 2,
        "- b^2 + 4bc + 5c^2 + 2b + 4c - 3": 1,
        "16c^2 - 12c + 2": 2,
        "8bc + 8c^2 - 2b - 10c + 2": 2,
        "12c^2 - 6c": 8,
        "8c^2 - 8c + 2": 4,
    }
    blown = self_intersection(log_canonical_divisor(entry.seed.component("S")))
    assert blown == QuadPoly(qcc=2, qc=48, q0=-4)
    assert volume(entry.seed) == TARGET_VOLUME
    _ok(2, "volume -b^2+20bc-2b+224c^2-52c+3 with all summands, "
           "blown component oracle 2c^2+48c-4")


def test_criterion_3_negative_curve_census():
    """27 lines, Schläfli incidence, special-position (-2) sets, bound check."""
    lat = plane_lattice(6)
    ncs = negative_curves(lat)
    assert len(ncs.minus_one) == 27 and not ncs.minus_two
    for cw in ncs.minus_one:
        meets = sum(1 for other in ncs.minus_one
                    if other != cw and intersection_number(cw, other).q0 > 0)
        assert meets == 10
    conic = plane_lattice(6, conics=[(1, 2, 3, 4, 5, 6)])
    assert [x.int_vector() for x in negative_curves(conic).minus_two] == \
        [(2, -1, -1, -1, -1, -1, -1)]
    for k in (2, 3, 4):
        triples = [(1, 2, 3), (3, 4, 5), (1, 5, 6), (2, 4, 6)][:k]
        lat_k = plane_lattice(6, triples=triples)
        twos = {x.int_vector() for x in negative_curves(lat_k).minus_two}
        want = set()
        for t in triples:
            vec = [1, 0, 0, 0, 0, 0, 0]
            for i in t:
                vec[i] = -1
            want.add(tuple(vec))
        assert twos == want
    for cfg in (lat, conic, plane_lattice(6, triples=[(1, 2, 3), (3, 4, 5)])):
        base, wide = negative_curves(cfg), negative_curves(cfg, bound_bump=1)
        assert {x.int_vector() for x in base.minus_one} == \
            {x.int_vector() for x in wide.minus_one}
        assert {x.int_vector() for x in base.minus_two} == \
            {x.int_vector() for x in wide.minus_two}
    _ok(3, "27 lines with Schläfli incidence; special (-2) sets; "
           "enlarged bound finds nothing new")


def test_criterion_4_slc_walls(catalog):
    """Triple-point and node constraints."""
    entry = catalog.entry("E2A1", "two-nodes")
    step1 = _model_at_step(entry, "step1")
    triple = [k for k in slc_constraints(step1)
              if "point of 3 curves" in k.source and k.poly.qb == 0]
    assert any(str(k.poly) == "- 3c + 2" for k in triple)
    terminal = _model_at_step(entry, "seg-bc")
    node = [k for k in slc_constraints(terminal) if "node point" in k.source]
    assert node
    for k in node:
        # along b = c the node bound is exactly c <= 1/6
        assert k.poly.at(F(1, 6), F(1, 6)) == 0
        assert k.poly.at(F(1, 5), F(1, 5)) < 0
        assert k.poly.at(F(1, 8), F(1, 8)) > 0
    _ok(4, "three concurrent lines give 3c <= 2; terminal node gives "
           "c <= 1/6 at b = c")


def test_criterion_5_per_type_counts(catalog, decs):
    """Chamber counts and exact wall lists of the scanned types."""
    expected = {
        ("smooth", "generic"): 3,
        ("DA1", "smooth-locus"): 5,
        ("DA1", "one-node"): 8,
        ("E2A1", "two-nodes"): 11,
    }
    for (label, ell), count in expected.items():
        entry = catalog.entry(label, ell)
        dec = decs[entry.key]
        assert len(dec.chambers) == count, entry.key
        assert dec.wall_lines() == {w.key() for w in entry.expected_walls}, entry.key
        by_label = {ch.label: ch for ch in dec.chambers}
        for declared in entry.declared_chambers:
            assert by_label[declared.label].region.equals(declared.region)
    _ok(5, "3 / 5 / 8 / 11 chambers with exact wall lists and regions")


def test_criterion_6_global_merge(catalog, global_dec):
    """Twenty global chambers, row for row, with exact grid coverage."""
    assert len(global_dec.chambers) == 20
    by_label = {ch.label: ch for ch in global_dec.chambers}
    for d in catalog.global_chambers:
        assert by_label[d.label].region.equals(d.region), d.label
    segments = [ch for ch in global_dec.chambers if ch.region.dimension() == 1]
    assert len(segments) == 6
    total, bad = coverage_check(global_dec, 60)
    assert bad == []
    _ok(6, f"20 chambers row-for-row; {total} grid points each in exactly "
           f"one chamber")


def test_criterion_7_wall_classification(global_dec):
    """Exactly the two marked wall families change the coarse space."""
    changing = {line for line, v in global_dec.moduli_change.items()
                if not v["coarseModuliIsomorphic"]}
    assert changing == {line_label(W_14), line_label(W_NB313)}
    for w in global_dec.walls:
        if w.slope_class == "positive":
            assert global_dec.moduli_change[line_label(w.poly)][
                "coarseModuliIsomorphic"]
    _ok(7, "moduli change exactly at c = 1/4 and c = -b/3 + 1/3; "
           "positive-slope walls isomorphic")


def test_criterion_8_transition_soundness(catalog):
    """Volume preservation, destination stability, round trip, cancellation."""
    checked = 0
    for entry in catalog.types:
        if entry.seed is None:
            continue
        models = {"step0": (entry.seed, stability_region(entry.seed))}
        remaining = list(entry.transitions)
        while remaining:
            ready = [s for s in remaining if s.from_step in models]
            assert ready
            for script in ready:
                model, region = models[script.from_step]
                res = cross_wall(model, script, region)
                gap = volume(res.model) - TARGET_VOLUME
                assert gap.is_zero() or gap.square_decomposition() is not None
                assert stability_report(res.model, at=res.region.witness()).stable()
                models.setdefault(script.to_step, (res.model, res.region))
                remaining.remove(script)
                checked += 1
    e2a1 = catalog.entry("E2A1", "two-nodes")
    down = apply_step(e2a1.seed, TransitionStep(
        "BlowDownMinusOne", "S", cls=(0, 0, 0, 0, 0, 0, 0, 1)), wall=W_23)
    point = [p for p in down.points if p.component == "S"][0]
    up = apply_step(down, TransitionStep(
        "BlowUpPoint", "S", curves=point.curves, conductor_id="eckA"))
    orig, back = e2a1.seed.component("S"), up.component("S")
    assert orig.lattice == back.lattice
    assert sorted((str(x.cls), str(x.weight)) for x in orig.boundary) == \
        sorted((str(x.cls), str(x.weight)) for x in back.boundary)
    d0 = log_canonical_divisor(orig)
    d1 = log_canonical_divisor(down.component("S"))
    assert self_intersection(d1) - self_intersection(d0) == \
        QuadPoly(qcc=9, qc=-12, q0=4)          # +(3c-2)^2 exactly
    _ok(8, f"{checked} scripted crossings sound; round trip is the identity; "
           f"(3c-2)^2 cancellation exact")
