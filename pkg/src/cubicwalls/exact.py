"""Exact rational arithmetic in the weight plane.

Everything here is built on :class:`fractions.Fraction`: affine and quadratic
polynomials in the two weight symbols ``b`` and ``c``, half-plane constraints,
and two-dimensional regions cut out by finitely many constraints inside a
fixed ambient domain.  No floats anywhere; emptiness, facets and witness
points are decided by exact vertex enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rat = Fraction

GT = "GT"
GE = "GE"
EQ = "EQ"


def rat(x) -> Fraction:
    """Coerce ints, strings like '2/3' and Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def rat_str(x: Fraction) -> str:
    """Serialize as 'p/q' (or 'p' when integral)."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AffinePoly:
    """q0 + qb*b + qc*c with exact rational coefficients."""

    q0: Fraction = Fraction(0)
    qb: Fraction = Fraction(0)
    qc: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q0", rat(self.q0))
        object.__setattr__(self, "qb", rat(self.qb))
        object.__setattr__(self, "qc", rat(self.qc))

    def at(self, b, c) -> Fraction:
        return self.q0 + self.qb * rat(b) + self.qc * rat(c)

    def __add__(self, other: "AffinePoly") -> "AffinePoly":
        other = affine(other)
        return AffinePoly(self.q0 + other.q0, self.qb + other.qb, self.qc + other.qc)

    __radd__ = __add__

    def __neg__(self) -> "AffinePoly":
        return AffinePoly(-self.q0, -self.qb, -self.qc)

    def __sub__(self, other) -> "AffinePoly":
        return self + (-affine(other))

    def __rsub__(self, other) -> "AffinePoly":
        return affine(other) + (-self)

    def scale(self, k) -> "AffinePoly":
        k = rat(k)
        return AffinePoly(self.q0 * k, self.qb * k, self.qc * k)

    def __mul__(self, other):
        """Product; drops back to AffinePoly when the result stays linear."""
        if isinstance(other, AffinePoly):
            q = QuadPoly(
                q0=self.q0 * other.q0,
                qb=self.q0 * other.qb + self.qb * other.q0,
                qc=self.q0 * other.qc + self.qc * other.q0,
                qbb=self.qb * other.qb,
                qbc=self.qb * other.qc + self.qc * other.qb,
                qcc=self.qc * other.qc,
            )
            if q.qbb == 0 and q.qbc == 0 and q.qcc == 0:
                return AffinePoly(q.q0, q.qb, q.qc)
            return q
        return self.scale(other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.q0 == 0 and self.qb == 0 and self.qc == 0

    def is_constant(self) -> bool:
        return self.qb == 0 and self.qc == 0

    def primitive(self) -> "AffinePoly":
        """Scale by a positive rational so coefficients are coprime integers."""
        nums = [self.q0, self.qb, self.qc]
        dens = [x.denominator for x in nums]
        lcm = 1
        for d in dens:
            lcm = lcm * d // _gcd(lcm, d)
        ints = [int(x * lcm) for x in nums]
        g = 0
        for v in ints:
            g = _gcd(g, abs(v))
        if g == 0:
            return AffinePoly()
        return self.scale(Fraction(lcm, g))

    def key(self) -> tuple:
        """Sign-normalized primitive form; identifies the supporting line."""
        p = self.primitive()
        t = (p.qb, p.qc, p.q0)
        for v in t:
            if v != 0:
                return t if v > 0 else (-t[0], -t[1], -t[2])
        return t

    def __str__(self) -> str:
        parts = []
        for coef, name in ((self.qb, "b"), (self.qc, "c"), (self.q0, "")):
            if coef == 0:
                continue
            s = rat_str(abs(coef))
            term = name if s == "1" and name else (s + name if name else s)
            parts.append(("- " if coef < 0 else "+ " if parts else "") + term)
        return " ".join(parts) if parts else "0"


def affine(x) -> AffinePoly:
    if isinstance(x, AffinePoly):
        return x
    return AffinePoly(q0=rat(x))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class QuadPoly:
    """Quadratic polynomial q0 + qb*b + qc*c + qbb*b^2 + qbc*b*c + qcc*c^2."""

    q0: Fraction = Fraction(0)
    qb: Fraction = Fraction(0)
    qc: Fraction = Fraction(0)
    qbb: Fraction = Fraction(0)
    qbc: Fraction = Fraction(0)
    qcc: Fraction = Fraction(0)

    def __post_init__(self):
        for f in ("q0", "qb", "qc", "qbb", "qbc", "qcc"):
            object.__setattr__(self, f, rat(getattr(self, f)))

    def at(self, b, c) -> Fraction:
        b, c = rat(b), rat(c)
        return (self.q0 + self.qb * b + self.qc * c
                + self.qbb * b * b + self.qbc * b * c + self.qcc * c * c)

    def __add__(self, other) -> "QuadPoly":
        other = quad(other)
        return QuadPoly(*(getattr(self, f) + getattr(other, f)
                          for f in ("q0", "qb", "qc", "qbb", "qbc", "qcc")))

    __radd__ = __add__

    def __neg__(self) -> "QuadPoly":
        return QuadPoly(*(-getattr(self, f) for f in ("q0", "qb", "qc", "qbb", "qbc", "qcc")))

    def __sub__(self, other) -> "QuadPoly":
        return self + (-quad(other))

    def scale(self, k) -> "QuadPoly":
        k = rat(k)
        return QuadPoly(*(getattr(self, f) * k for f in ("q0", "qb", "qc", "qbb", "qbc", "qcc")))

    def is_zero(self) -> bool:
        return all(getattr(self, f) == 0 for f in ("q0", "qb", "qc", "qbb", "qbc", "qcc"))

    def square_decomposition(self) -> Optional[list[tuple[Fraction, AffinePoly]]]:
        """Write the polynomial as a sum lam_i * L_i^2 with lam_i > 0.

        Returns None when no such decomposition exists.  Used to turn a
        volume mismatch into the equality locus where the model is valid.
        """
        if self.is_zero():
            return []
        # complete the square in b first, then in c
        terms: list[tuple[Fraction, AffinePoly]] = []
        p = self
        if p.qbb != 0:
            lam = p.qbb
            if lam < 0:
                return None
            # L = b + (qbc/(2 qbb)) c + (qb/(2 qbb))
            L = AffinePoly(q0=p.qb / (2 * lam), qb=Fraction(1), qc=p.qbc / (2 * lam))
            terms.append((lam, L))
            p = p - (L * L).scale(lam)
        if p.qbb != 0 or p.qbc != 0 or p.qb != 0:
            return None
        if p.qcc != 0:
            lam = p.qcc
            if lam < 0:
                return None
            L = AffinePoly(q0=p.qc / (2 * lam), qc=Fraction(1))
            terms.append((lam, L))
            p = p - (L * L).scale(lam)
        if not p.is_zero():
            # leftover constant: positive constants are not a vanishing locus
            return None
        return [(lam, L.primitive()) for lam, L in terms]

    def __str__(self) -> str:
        names = (("qbb", "b^2"), ("qbc", "bc"), ("qcc", "c^2"),
                 ("qb", "b"), ("qc", "c"), ("q0", ""))
        parts = []
        for f, name in names:
            coef = getattr(self, f)
            if coef == 0:
                continue
            s = rat_str(abs(coef))
            term = name if s == "1" and name else (s + name if name else s)
            parts.append(("- " if coef < 0 else "+ " if parts else "") + term)
        return " ".join(parts) if parts else "0"


def quad(x) -> QuadPoly:
    if isinstance(x, QuadPoly):
        return x
    if isinstance(x, AffinePoly):
        return QuadPoly(q0=x.q0, qb=x.qb, qc=x.qc)
    return QuadPoly(q0=rat(x))


@dataclass(frozen=True)
class LinearConstraint:
    """poly ⋈ 0 with ⋈ in {GT, GE, EQ}."""

    poly: AffinePoly
    rel: str = GT

    def __post_init__(self):
        if self.rel not in (GT, GE, EQ):
            raise ValueError(f"bad relation {self.rel!r}")

    def holds_at(self, b, c) -> bool:
        v = self.poly.at(b, c)
        if self.rel == GT:
            return v > 0
        if self.rel == GE:
            return v >= 0
        return v == 0

    def closure(self) -> "LinearConstraint":
        return self if self.rel != GT else LinearConstraint(self.poly, GE)

    def negation_pieces(self) -> list["LinearConstraint"]:
        """Constraints whose union is the complement of this one."""
        if self.rel == GT:
            return [LinearConstraint(-self.poly, GE)]
        if self.rel == GE:
            return [LinearConstraint(-self.poly, GT)]
        return [LinearConstraint(self.poly, GT), LinearConstraint(-self.poly, GT)]

    def is_strict(self) -> bool:
        return self.rel == GT

    def line_key(self) -> tuple:
        return self.poly.key()

    def canonical(self) -> "LinearConstraint":
        p = self.poly.primitive()
        if self.rel == EQ:
            t = self.poly.key()
            p = AffinePoly(q0=t[2], qb=t[0], qc=t[1])
        return LinearConstraint(p, self.rel)

    def __str__(self) -> str:
        op = {GT: "> 0", GE: ">= 0", EQ: "= 0"}[self.rel]
        return f"{self.poly} {op}"


def constraint(poly, rel: str = GT) -> LinearConstraint:
    return LinearConstraint(affine(poly), rel)


B = AffinePoly(qb=Fraction(1))
C = AffinePoly(qc=Fraction(1))
ONE = AffinePoly(q0=Fraction(1))

#: 1/9 < b <= 1, 1/9 < c <= 1, b >= c, c > b/10 + 1/10
AMBIENT = (
    constraint(B - Fraction(1, 9), GT),
    constraint(ONE - B, GE),
    constraint(C - Fraction(1, 9), GT),
    constraint(ONE - C, GE),
    constraint(B - C, GE),
    constraint(10 * C - B - 1, GT),
)

#: the plain square 1/9 < b <= 1, 1/9 < c <= 1 (no b >= c, no ample bound)
SQUARE_DOMAIN = (
    constraint(B - Fraction(1, 9), GT),
    constraint(ONE - B, GE),
    constraint(C - Fraction(1, 9), GT),
    constraint(ONE - C, GE),
)

Point = tuple[Fraction, Fraction]

_BOX = (
    constraint(B + 10, GE),
    constraint(10 - B, GE),
    constraint(C + 10, GE),
    constraint(10 - C, GE),
)


def _line_intersection(p: AffinePoly, q: AffinePoly) -> Optional[Point]:
    det = p.qb * q.qc - p.qc * q.qb
    if det == 0:
        return None
    b = (-p.q0 * q.qc + q.q0 * p.qc) / det
    c = (-p.qb * q.q0 + q.qb * p.q0) / det
    return (b, c)


def _clip(poly: list[Point], half: AffinePoly) -> list[Point]:
    """Sutherland–Hodgman clip of a convex polygon against half >= 0."""
    if not poly:
        return []
    out: list[Point] = []
    n = len(poly)
    for i in range(n):
        cur, nxt = poly[i], poly[(i + 1) % n]
        vc = half.at(*cur)
        vn = half.at(*nxt)
        if vc >= 0:
            out.append(cur)
        if (vc > 0 and vn < 0) or (vc < 0 and vn > 0):
            t = vc / (vc - vn)
            out.append((cur[0] + t * (nxt[0] - cur[0]), cur[1] + t * (nxt[1] - cur[1])))
    dedup: list[Point] = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if dedup and len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


class Region:
    """Finite intersection of linear constraints clipped to an ambient domain.

    Chamber boundaries are half-open (slc gives >=, ampleness gives >), so
    strictness is tracked exactly through every operation.
    """

    def __init__(self, constraints: Iterable[LinearConstraint] = (), ambient=AMBIENT):
        self.constraints: tuple[LinearConstraint, ...] = tuple(constraints)
        self.ambient: tuple[LinearConstraint, ...] = tuple(ambient)
        self._poly_cache: Optional[list[Point]] = None

    # -- basic structure ---------------------------------------------------

    def all_constraints(self) -> tuple[LinearConstraint, ...]:
        return self.constraints + self.ambient

    def with_constraints(self, extra: Iterable[LinearConstraint]) -> "Region":
        return Region(self.constraints + tuple(extra), self.ambient)

    def intersect(self, other: "Region") -> "Region":
        if self.ambient != other.ambient:
            raise ValueError("regions live in different ambient domains")
        return Region(self.constraints + other.constraints, self.ambient)

    __and__ = intersect

    def contains(self, b, c) -> bool:
        b, c = rat(b), rat(c)
        return all(k.holds_at(b, c) for k in self.all_constraints())

    # -- exact geometry ----------------------------------------------------

    def _equalities(self) -> list[LinearConstraint]:
        return [k for k in self.all_constraints() if k.rel == EQ and not k.poly.is_zero()]

    def closure_polygon(self) -> list[Point]:
        """Vertices of the closure, counterclockwise; [] when empty."""
        if self._poly_cache is not None:
            return self._poly_cache
        poly: list[Point] = [(-Fraction(10), -Fraction(10)), (Fraction(10), -Fraction(10)),
                             (Fraction(10), Fraction(10)), (-Fraction(10), Fraction(10))]
        for k in self.all_constraints():
            if k.poly.is_zero():
                if k.rel == GT:
                    poly = []
                    break
                continue
            if k.rel == EQ:
                poly = _clip(poly, k.poly)
                poly = _clip(poly, -k.poly)
            else:
                poly = _clip(poly, k.poly)
            if not poly:
                break
        self._poly_cache = poly
        return poly

    def _segment(self) -> Optional[tuple[Point, Point]]:
        """Endpoints of the closure when it is 0- or 1-dimensional."""
        poly = self.closure_polygon()
        if not poly:
            return None
        pts = sorted(set(poly))
        return (pts[0], pts[-1])

    def dimension(self) -> int:
        """-1 empty, else dimension of the region itself (not the closure)."""
        poly = self.closure_polygon()
        if not poly:
            return -1
        pts = sorted(set(poly))
        if len(pts) >= 3 and _polygon_area2(poly) != 0:
            # full-dimensional closure: strict constraints only shave boundary
            return 2
        lo, hi = pts[0], pts[-1]
        if lo == hi:
            return 0 if self.contains(*lo) else -1
        # 1-dimensional closure: a strict constraint vanishing on the whole
        # segment empties the region
        for k in self.all_constraints():
            if k.rel == GT and k.poly.at(*lo) == 0 and k.poly.at(*hi) == 0:
                return -1
        # endpoints may be shaved; the open part survives regardless
        return 1

    def is_empty(self) -> bool:
        return self.dimension() < 0

    def witness(self) -> Point:
        """A rational point satisfying every constraint, strictness included."""
        dim = self.dimension()
        if dim < 0:
            raise ValueError("empty region has no witness")
        poly = self.closure_polygon()
        pts = sorted(set(poly))
        if dim == 2:
            n = len(poly)
            cand = (sum((p[0] for p in poly), Fraction(0)) / n,
                    sum((p[1] for p in poly), Fraction(0)) / n)
            if self.contains(*cand):
                return cand
            # nudge from the centroid toward each vertex until strictness holds
            for v in poly:
                for t in (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)):
                    q = (cand[0] + t * (v[0] - cand[0]), cand[1] + t * (v[1] - cand[1]))
                    if self.contains(*q):
                        return q
            raise ValueError("no witness found in nondegenerate region")
        lo, hi = pts[0], pts[-1]
        if lo == hi:
            return lo
        mid = ((lo[0] + hi[0]) / 2, (lo[1] + hi[1]) / 2)
        if self.contains(*mid):
            return mid
        # strict cap at one end; walk toward the closed end
        for t in (Fraction(3, 4), Fraction(7, 8), Fraction(1, 4), Fraction(1, 8)):
            q = (lo[0] + t * (hi[0] - lo[0]), lo[1] + t * (hi[1] - lo[1]))
            if self.contains(*q):
                return q
        raise ValueError("no witness found on segment")

    def facets(self) -> list[tuple[LinearConstraint, tuple[Point, Point]]]:
        """Each supporting constraint with exact segment endpoints.

        For a 2-dimensional region: one entry per polygon edge, attributed to
        a constraint whose line supports it.  Degenerate regions report their
        supporting equalities with the segment endpoints.
        """
        dim = self.dimension()
        if dim < 0:
            return []
        poly = self.closure_polygon()
        if dim < 2:
            seg = self._segment()
            assert seg is not None
            lo, hi = seg
            out = []
            seen = set()
            for k in self.all_constraints():
                if k.poly.is_zero():
                    continue
                if k.poly.at(*lo) == 0 and k.poly.at(*hi) == 0:
                    key = k.line_key()
                    if key not in seen:
                        seen.add(key)
                        out.append((k, (lo, hi)))
            return out
        out = []
        seen = set()
        n = len(poly)
        for i in range(n):
            p1, p2 = poly[i], poly[(i + 1) % n]
            if p1 == p2:
                continue
            for k in self.all_constraints():
                if k.poly.is_zero():
                    continue
                if k.poly.at(*p1) == 0 and k.poly.at(*p2) == 0:
                    key = (k.line_key(), tuple(sorted((p1, p2))))
                    if key not in seen:
                        seen.add(key)
                        out.append((k, (p1, p2)))
                    break
        return out

    # -- normalization and comparison --------------------------------------

    def normalize(self) -> "Region":
        """Drop duplicate and redundant constraints (exact emptiness tests)."""
        kept: list[LinearConstraint] = []
        seen = set()
        for k in self.constraints:
            c = k.canonical()
            sig = (c.poly.q0, c.poly.qb, c.poly.qc, c.rel)
            if sig not in seen:
                seen.add(sig)
                kept.append(c)
        # a constraint is redundant when adding its negation to the rest
        # (including ambient) yields nothing
        changed = True
        while changed:
            changed = False
            for i, k in enumerate(kept):
                if k.rel == EQ:
                    continue
                rest = kept[:i] + kept[i + 1:]
                pieces = k.negation_pieces()
                if all(Region(rest + [p], self.ambient).is_empty() for p in pieces):
                    kept = rest
                    changed = True
                    break
        return Region(kept, self.ambient)

    def contains_region(self, other: "Region") -> bool:
        """Every point of `other` satisfies this region's constraints."""
        for k in self.constraints:
            for piece in k.negation_pieces():
                if not other.with_constraints([piece]).is_empty():
                    return False
        return True

    def equals(self, other: "Region") -> bool:
        return self.contains_region(other) and other.contains_region(self)

    def to_json(self) -> list[dict]:
        out = []
        for k in self.normalize().constraints:
            out.append({"q0": rat_str(k.poly.q0), "qb": rat_str(k.poly.qb),
                        "qc": rat_str(k.poly.qc), "rel": k.rel})
        return out

    @staticmethod
    def from_json(items: Sequence[dict], ambient=AMBIENT) -> "Region":
        cons = [LinearConstraint(AffinePoly(rat(d["q0"]), rat(d["qb"]), rat(d["qc"])), d["rel"])
                for d in items]
        return Region(cons, ambient)

    def __repr__(self) -> str:
        inner = "; ".join(str(k) for k in self.constraints)
        return f"Region[{inner}]"


def _polygon_area2(poly: Sequence[Point]) -> Fraction:
    s = Fraction(0)
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        s += x1 * y2 - x2 * y1
    return s


def ambient_region() -> Region:
    return Region((), AMBIENT)


def grid_points(max_den: int = 60) -> list[Point]:
    """All points (i/max_den, j/max_den) of the ambient domain."""
    amb = ambient_region()
    out = []
    for i in range(1, max_den + 1):
        b = Fraction(i, max_den)
        for j in range(1, i + 1):
            c = Fraction(j, max_den)
            if amb.contains(b, c):
                out.append((b, c))
    return out


def line_label(poly: AffinePoly) -> str:
    """Human form of a wall line, solved for c when possible."""
    p = poly.primitive()
    if p.qc != 0:
        # c = -(q0 + qb b)/qc
        s = AffinePoly(q0=-p.q0 / p.qc, qb=-p.qb / p.qc)
        return f"c = {s}"
    if p.qb != 0:
        return f"b = {rat_str(-p.q0 / p.qb)}"
    return str(p)
