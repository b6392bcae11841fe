from fractions import Fraction as F

import pytest

from cubicwalls.exact import B, C, constraint, EQ
from cubicwalls.mmp import (StepError, TransitionStep, apply_step,
                            check_gluing_conditions, cross_wall)
from cubicwalls.picard import self_intersection
from cubicwalls.stability import (TARGET_VOLUME, stability_region,
                                  stability_report, volume)
from cubicwalls.surface import log_canonical_divisor, validate_surface
from cubicwalls.builtin import builtin_catalog, W_12, W_23, W_B3
from cubicwalls.cli import _model_at_step


@pytest.fixture(scope="module")
def e2a1(catalog):
    return catalog.entry("E2A1", "two-nodes")


def _script(entry, from_step, wall):
    for s in entry.transitions:
        if s.from_step == from_step and s.wall.key() == wall.key():
            return s
    raise AssertionError(f"no script from {from_step} at {wall}")


def test_blow_down_step0_to_step1_divisor(e2a1):
    model = e2a1.seed
    step = TransitionStep("BlowDownMinusOne", "S", cls=(0, 0, 0, 0, 0, 0, 0, 1))
    out = apply_step(model, step, wall=W_23)
    d = log_canonical_divisor(out.component("S"))
    assert [str(x) for x in d.coeffs] == \
        ["7c + 3", "- 3c", "- 3c", "- c", "- 3c", "- 3c", "- c - 3"]


def test_blow_down_requires_wall_degree(e2a1):
    step = TransitionStep("BlowDownMinusOne", "S", cls=(0, 0, 0, 0, 0, 0, 0, 1))
    with pytest.raises(StepError):
        apply_step(e2a1.seed, step, wall=W_12)


def test_ruling_contraction_step2(e2a1):
    model = _model_at_step(e2a1, "step3")
    # after crossing c = 1/2 the marked-line quadrics survive with the
    # displayed bidegree
    d = log_canonical_divisor(model.component("4pa"))
    assert sorted(str(x) for x in d.coeffs) == ["4c - 1", "b + c - 1"]


def test_contract_to_point_volume_pairing(e2a1):
    # the plane and the exceptional disappear together; volume is unchanged
    before = volume(e2a1.seed)
    out = e2a1.seed
    for step in _script(e2a1, "step0", W_23).steps:
        out = apply_step(out, step, wall=W_23)
    assert volume(out) == before == TARGET_VOLUME


def test_gluing_check_passes_at_witness(e2a1):
    rep = check_gluing_conditions(e2a1.seed, constraint(W_23, EQ), (F(4, 5), F(2, 3)))
    assert rep.passed
    assert rep.per_component["S"]["bigNef"]


def test_gluing_check_negative_conductor(e2a1):
    rep = check_gluing_conditions(_model_at_step(e2a1, "step2"),
                                  constraint(2 * C - F(2, 5), EQ), (F(1, 2), F(1, 5)))
    assert not rep.passed
    assert any("negative degree" in f or "degree" in f for f in rep.failures)


def test_gluing_check_wall_witness_enforced(e2a1):
    with pytest.raises(ValueError):
        check_gluing_conditions(e2a1.seed, constraint(W_23, EQ), (F(4, 5), F(1, 2)))


def test_volume_wall_report_on_segment(e2a1):
    seg = _model_at_step(e2a1, "seg-b3")
    rep = stability_report(seg, at=(F(3, 5), F(1, 5)))
    assert rep.volume_matches is False
    assert rep.stable()   # on the line b = 3c the pair is stable


def test_cross_wall_full_chain_preserves_volume(e2a1):
    model, region = e2a1.seed, None
    for wall, to_step in ((W_23, "step1"),):
        res = cross_wall(model, _script(e2a1, model.step, wall), region)
        assert volume(res.model) == TARGET_VOLUME
        model, region = res.model, res.region


def test_cross_wall_every_script_sound(e2a1):
    # every catalog script: volume identity, destination stable at witness
    models = {"step0": (e2a1.seed, stability_region(e2a1.seed))}
    remaining = list(e2a1.transitions)
    while remaining:
        progress = [s for s in remaining if s.from_step in models]
        assert progress, "unreachable scripts"
        for s in progress:
            model, region = models[s.from_step]
            res = cross_wall(model, s, region)
            gap = volume(res.model) - TARGET_VOLUME
            assert gap.is_zero() or gap.square_decomposition() is not None
            w = res.region.witness()
            assert stability_report(res.model, at=w).stable()
            models.setdefault(s.to_step, (res.model, res.region))
            remaining.remove(s)


def test_opposite_strictness_on_shared_wall(e2a1):
    from cubicwalls.chambers import enumerate_chambers
    dec = enumerate_chambers(e2a1)
    by_label = {ch.label: ch for ch in dec.chambers}
    upper = by_label["Sch(1/2,2/3]"]
    lower = by_label["(1/4,1/2]>"]
    # c = 1/2 is strict below (ample) and non-strict above (entered region)
    upper_kinds = {k.rel for k in upper.region.normalize().constraints
                   if k.poly.key() == W_12.key()}
    lower_kinds = {k.rel for k in lower.region.normalize().constraints
                   if k.poly.key() == W_12.key()}
    assert upper_kinds == {"GT"} and lower_kinds == {"GE"}
    # and the two regions neither overlap nor leave a gap along the wall
    meet = upper.region.intersect(lower.region)
    assert meet.is_empty()


def test_blow_down_blow_up_round_trip(e2a1):
    model = e2a1.seed
    down = apply_step(model, TransitionStep(
        "BlowDownMinusOne", "S", cls=(0, 0, 0, 0, 0, 0, 0, 1)), wall=W_23)
    point = [p for p in down.points if p.component == "S"][0]
    up = apply_step(down, TransitionStep(
        "BlowUpPoint", "S", curves=point.curves, conductor_id="eckA"))
    orig, back = model.component("S"), up.component("S")
    assert orig.lattice == back.lattice
    assert sorted((str(x.cls), str(x.weight)) for x in orig.boundary) == \
        sorted((str(x.cls), str(x.weight)) for x in back.boundary)
    assert sorted((str(x.cls), x.gluing_id) for x in orig.conductors) == \
        sorted((str(x.cls), x.gluing_id) for x in back.conductors)


def test_identity_script_rejected():
    with pytest.raises(ValueError):
        from cubicwalls.mmp import TransitionScript
        TransitionScript("a", W_23, "beyond", (), "b")
