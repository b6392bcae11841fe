from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicwalls.exact import (AMBIENT, AffinePoly, B, C, LinearConstraint,
                              QuadPoly, Region, affine, constraint, rat,
                              rat_str, EQ, GE, GT)

CONST_VOL = QuadPoly(q0=3, qb=-2, qc=-52, qbb=-1, qbc=20, qcc=224)


def test_rational_strings():
    assert rat("2/3") == F(2, 3)
    assert rat_str(F(-4, 6)) == "-2/3"
    assert rat_str(F(5)) == "5"


def test_eval_examples():
    assert CONST_VOL.at(1, 1) == 192
    assert QuadPoly().at("3/7", "1/2") == 0
    assert (10 * C - B - 1).at(F(1, 2), F(1, 5)) == F(1, 2)


def test_poly_str():
    assert str(10 * C - B - 1) == "- b + 10c - 1"
    assert str(AffinePoly()) == "0"


rationals = st.fractions(min_value=-8, max_value=8, max_denominator=12)


def affines():
    return st.builds(AffinePoly, rationals, rationals, rationals)


@given(affines(), affines(), affines(), rationals, rationals)
@settings(max_examples=60, deadline=None)
def test_ring_laws(p, q, r, b0, c0):
    assert ((p + q) - q).at(b0, c0) == p.at(b0, c0)
    assert (p * (q + r)).at(b0, c0) == (p * q).at(b0, c0) + (p * r).at(b0, c0)
    lhs, rhs = p * q, q * p
    assert lhs.at(b0, c0) == rhs.at(b0, c0)


@given(affines(), affines())
@settings(max_examples=40, deadline=None)
def test_product_matches_pointwise(p, q):
    prod = p * q
    for pt in ((0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), F(1, 3))):
        assert prod.at(*pt) == p.at(*pt) * q.at(*pt)


def test_region_intersect_corner_points():
    r = Region([constraint(C - F(2, 3), GT)])
    pts = sorted(set(r.closure_polygon()))
    assert pts == [(F(2, 3), F(2, 3)), (F(1), F(2, 3)), (F(1), F(1))]


def test_region_intersect_identity_and_empty():
    r = Region([constraint(C - F(2, 3), GT)])
    assert r.intersect(Region(())).equals(r)
    bad = Region([constraint(C - F(1, 2), GT), constraint(F(1, 3) - C, GE)])
    assert bad.is_empty()


def test_segment_region_nonempty():
    seg = Region([constraint(B - C, EQ), constraint(C - F(1, 4), GT),
                  constraint(F(1, 3) - C, GE)])
    assert not seg.is_empty()
    assert seg.dimension() == 1
    w = seg.witness()
    assert seg.contains(*w)


def test_clipped_volume_wall_segment():
    # c = b/3 with 1/2 < b <= 3/4 clips to the segment (1/2,1/6)..(3/4,1/4)
    seg = Region([constraint(3 * C - B, EQ), constraint(B - F(1, 2), GT),
                  constraint(F(3, 4) - B, GE)])
    lo, hi = seg._segment()
    assert lo == (F(1, 2), F(1, 6))
    assert hi == (F(3, 4), F(1, 4))


def test_ambient_facet_on_ample_bound():
    facets = Region(()).facets()
    amp = [seg for k, seg in facets if k.poly.key() == (10 * C - B - 1).key()]
    assert amp, "ample-bound facet missing"
    lo, hi = sorted(amp[0])
    assert lo == (F(1, 9), F(1, 9))
    assert hi == (F(1), F(1, 5))


def test_strict_segment_is_empty():
    # a strict constraint active on the whole segment empties it
    r = Region([constraint(B - C, EQ), constraint(C - B, GT)])
    assert r.is_empty()


def test_normalize_drops_redundant():
    r = Region([constraint(C - F(2, 3), GT), constraint(C - F(1, 3), GT)])
    n = r.normalize()
    assert len(n.constraints) == 1
    assert n.equals(r)


@given(st.lists(st.sampled_from([
    constraint(C - F(2, 3), GT), constraint(F(2, 3) - C, GE),
    constraint(C - F(1, 2), GT), constraint(B + C - 1, GT),
    constraint(1 - B - C, GE), constraint(B - 3 * C, EQ),
]), min_size=0, max_size=3))
@settings(max_examples=40, deadline=None)
def test_intersect_commutative_idempotent(cons):
    r1 = Region(cons)
    r2 = Region(list(reversed(cons)))
    assert r1.equals(r2)
    assert r1.intersect(r1).equals(r1)


@given(st.lists(st.sampled_from([
    constraint(C - F(2, 3), GT), constraint(F(2, 3) - C, GE),
    constraint(C - F(1, 2), GT), constraint(B + C - 1, GT),
    constraint(B - 3 * C, EQ), constraint(B - C, EQ),
]), min_size=0, max_size=3))
@settings(max_examples=60, deadline=None)
def test_witness_satisfies_all_constraints(cons):
    r = Region(cons)
    if r.is_empty():
        return
    w = r.witness()
    assert r.contains(*w)


def test_square_decomposition():
    gap = QuadPoly(qbb=2, qbc=-12, qcc=18)   # 2(b - 3c)^2
    dec = gap.square_decomposition()
    assert dec is not None and len(dec) == 1
    lam, line = dec[0]
    assert line.key() == (B - 3 * C).key()
    mixed = QuadPoly(qbb=1, qcc=-1)
    assert mixed.square_decomposition() is None
