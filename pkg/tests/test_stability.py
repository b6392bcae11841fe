from fractions import Fraction as F

import pytest

from cubicwalls.exact import AffinePoly, B, C, QuadPoly, GE, GT, EQ
from cubicwalls.stability import (TARGET_VOLUME, ample_constraints,
                                  slc_constraints, stability_report, volume,
                                  volume_constraints)
from cubicwalls.picard import self_intersection
from cubicwalls.surface import log_canonical_divisor
from cubicwalls.builtin import builtin_catalog
from cubicwalls.cli import _model_at_step


@pytest.fixture(scope="module")
def e2a1(catalog):
    return catalog.entry("E2A1", "two-nodes")


@pytest.fixture(scope="module")
def step2(e2a1):
    # the twenty-component model stable on (1/2, 2/3]
    return _model_at_step(e2a1, "step2")


def test_concurrent_lines_constraint(step2):
    certs = [k for k in slc_constraints(step2) if "point of 3 curves" in k.source]
    polys = {str(k.poly) for k in certs if k.poly.qb == 0}
    assert "- 3c + 2" in polys           # three weight-c lines: 3c <= 2


def test_terminal_node_constraint(e2a1):
    terminal = _model_at_step(e2a1, "seg-bc")
    node_certs = [k for k in slc_constraints(terminal) if "node point" in k.source]
    assert node_certs, "terminal model lost its node points"
    polys = {str(k.poly) for k in node_certs}
    assert polys == {"- b - 11c + 2"}
    # at b = c the bound is exactly c <= 1/6
    for k in node_certs:
        assert k.poly.at(F(1, 6), F(1, 6)) == 0
        assert k.poly.at(F(1, 7), F(1, 7)) > 0


def test_volume_step1_components(step2):
    assert volume(step2) == TARGET_VOLUME
    by_comp = {}
    for comp in step2.components:
        sq = self_intersection(log_canonical_divisor(comp))
        by_comp.setdefault(str(sq), []).append(comp.id)
    expected = {
        "11c^2 + 36c": 1,                      # the resolution component
        "16c^2 + 16c - 5": 2,                  # five-point quadric blow-ups
        "- b^2 + 4bc + 5c^2 + 2b + 4c - 3": 1,  # the marked-line component
        "16c^2 - 12c + 2": 2,                  # plain quadrics
        "8bc + 8c^2 - 2b - 10c + 2": 2,        # marked-line quadrics
        "12c^2 - 6c": 8,
        "8c^2 - 8c + 2": 4,
    }
    got = {k: len(v) for k, v in by_comp.items()}
    assert got == expected


def test_volume_blown_type1_oracle(e2a1):
    # squaring the stated divisor is authoritative: 2c^2 + 48c - 4
    comp = e2a1.seed.component("S")
    sq = self_intersection(log_canonical_divisor(comp))
    assert sq == QuadPoly(qcc=2, qc=48, q0=-4)
    assert (volume(e2a1.seed) - TARGET_VOLUME).is_zero()


def test_single_quadric_summand(step2):
    vols = {str(self_intersection(log_canonical_divisor(c))) for c in step2.components
            if c.id.startswith("5b")}
    assert vols == {"8c^2 - 8c + 2"}
    empty = type(step2)("t", "s", ())
    assert volume(empty).is_zero()


def test_stability_report_stable_point(step2):
    rep = stability_report(step2, at=(F(13, 20), F(3, 5)))
    assert rep.stable()
    assert rep.volume_matches


def test_stability_report_wall_point(step2):
    rep = stability_report(step2, at=(F(1), F(1, 2)))
    assert not rep.stable()
    rulings = [c for c in rep.failing
               if c.condition == "ample" and "ruling" in c.source]
    assert rulings, "expected a ruling certificate at c = 1/2"
    assert any(str(c.poly) == "2c - 1" for c in rulings)


def test_slc_failure_certificate(step2):
    rep = stability_report(step2, at=(F(1), F(7, 10)))
    slc = [c for c in rep.failing if c.condition == "slc"]
    assert slc, "three concurrent lines must fail above c = 2/3"


def test_volume_wall_model(e2a1):
    seg = _model_at_step(e2a1, "seg-b3")
    matches, certs = volume_constraints(seg)
    assert not matches
    assert [k.rel for k in (c.constraint() for c in certs)] == [EQ]
    assert certs[0].poly.key() == (B - 3 * C).key()
    gap = volume(seg) - TARGET_VOLUME
    assert gap == QuadPoly(qbb=2, qbc=-12, qcc=18)   # 2(b - 3c)^2


def test_ample_constraint_sign_catalog(step2):
    # mixed-sign ample constraints are catalogued walls or vacuous in the
    # ambient domain (their violation set never meets it)
    from cubicwalls.exact import Region, constraint
    walls = {(10 * C - B - 1).key(), (3 * C - B).key(), (B - C).key()}
    for cert in ample_constraints(step2):
        p = cert.poly
        if p.qb < 0 or p.qc < 0:
            if p.key() in walls:
                continue
            assert Region([constraint(-p, GE)]).is_empty(), str(p)
