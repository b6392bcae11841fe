"""Picard lattices of rational surfaces and their negative curves.

Two lattice kinds are supported: blow-ups of the plane (basis h, e1..en with
h^2 = 1, ei^2 = -1) and blow-ups of a smooth quadric (basis h1, h2, e1..en
with h1.h2 = 1, h1^2 = h2^2 = 0, ei^2 = -1).  Point-configuration data
(collinear triples, six points on a conic, blow-up points on the quadric
diagonal) determines which numerical (-1)/(-2) classes are classes of
irreducible curves; everything downstream (ample cones, walls) is driven by
that curve list.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .exact import (AffinePoly, LinearConstraint, QuadPoly, affine, constraint,
                    quad, rat, GT, EQ)

PLANE = "plane"
QUADRIC = "quadric"


@dataclass(frozen=True)
class LatticeType:
    """A marked rational-surface lattice with configuration data.

    kind      -- "plane" (Bl_n P^2) or "quadric" (Bl_n F_0)
    n         -- number of blown-up points (0 <= n <= 8)
    triples   -- 3-subsets of point indices that are collinear
    conics    -- 6-subsets lying on a common conic (plane kind only)
    on_diagonal -- indices of points on the diagonal (quadric kind only)
    extra     -- further irreducible classes of self-intersection <= -2,
                 as raw coefficient vectors (used after base changes)
    """

    kind: str
    n: int
    triples: tuple[tuple[int, ...], ...] = ()
    conics: tuple[tuple[int, ...], ...] = ()
    on_diagonal: tuple[int, ...] = ()
    extra: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.kind not in (PLANE, QUADRIC):
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if not (0 <= self.n <= 8):
            raise ValueError("supported lattices have at most 8 blown-up points")
        object.__setattr__(self, "triples",
                           tuple(sorted(tuple(sorted(t)) for t in self.triples)))
        object.__setattr__(self, "conics",
                           tuple(sorted(tuple(sorted(t)) for t in self.conics)))
        object.__setattr__(self, "on_diagonal", tuple(sorted(self.on_diagonal)))
        object.__setattr__(self, "extra", tuple(sorted(tuple(v) for v in self.extra)))
        for v in self.extra:
            if len(v) != self.rank:
                raise ValueError("extra class vector does not match lattice rank")
        for t in self.triples:
            if len(t) != 3 or not all(1 <= i <= self.n for i in t):
                raise ValueError(f"bad collinear triple {t}")
        for pair in itertools.combinations(self.triples, 2):
            if len(set(pair[0]) & set(pair[1])) > 1:
                raise ValueError(f"triples {pair} share more than one point")
        for s in self.conics:
            if len(s) != 6 or not all(1 <= i <= self.n for i in s):
                raise ValueError(f"bad conic sixtuple {s}")

    @property
    def rank(self) -> int:
        return self.n + (1 if self.kind == PLANE else 2)

    def basis_labels(self) -> list[str]:
        heads = ["h"] if self.kind == PLANE else ["h1", "h2"]
        return heads + [f"e{i}" for i in range(1, self.n + 1)]

    def gram_diagonal(self) -> list[list[Fraction]]:
        r = self.rank
        g = [[Fraction(0)] * r for _ in range(r)]
        if self.kind == PLANE:
            g[0][0] = Fraction(1)
            off = 1
        else:
            g[0][1] = g[1][0] = Fraction(1)
            off = 2
        for i in range(off, r):
            g[i][i] = Fraction(-1)
        return g

    def to_json(self) -> dict:
        d = {"kind": self.kind, "n": self.n}
        if self.triples:
            d["colinearTriples"] = [list(t) for t in self.triples]
        if self.conics:
            d["conics"] = [list(t) for t in self.conics]
        if self.on_diagonal:
            d["onDiagonal"] = list(self.on_diagonal)
        if self.extra:
            d["extraCurves"] = [list(v) for v in self.extra]
        return d

    @staticmethod
    def from_json(d: dict) -> "LatticeType":
        return LatticeType(
            kind=d["kind"], n=d["n"],
            triples=tuple(tuple(t) for t in d.get("colinearTriples", ())),
            conics=tuple(tuple(t) for t in d.get("conics", ())),
            on_diagonal=tuple(d.get("onDiagonal", ())),
            extra=tuple(tuple(v) for v in d.get("extraCurves", ())),
        )


def plane_lattice(n: int, triples=(), conics=()) -> LatticeType:
    return LatticeType(PLANE, n, tuple(triples), tuple(conics))


def quadric_lattice(n: int, on_diagonal=()) -> LatticeType:
    return LatticeType(QUADRIC, n, on_diagonal=tuple(on_diagonal))


@dataclass(frozen=True)
class DivisorClass:
    """Coefficient vector in the declared basis; entries are affine in (b,c)."""

    lattice: LatticeType
    coeffs: tuple[AffinePoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(affine(c) for c in self.coeffs))
        if len(self.coeffs) != self.lattice.rank:
            raise ValueError("coefficient vector does not match lattice rank")

    def is_integral(self) -> bool:
        return all(c.qb == 0 and c.qc == 0 and c.q0.denominator == 1 for c in self.coeffs)

    def int_vector(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"not an integral class: {self}")
        return tuple(int(c.q0) for c in self.coeffs)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.lattice, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(-a for a in self.coeffs))

    def scale(self, k) -> "DivisorClass":
        return DivisorClass(self.lattice, tuple(a * k for a in self.coeffs))

    def __mul__(self, k):
        return self.scale(k)

    __rmul__ = __mul__

    def _check(self, other: "DivisorClass"):
        if self.lattice != other.lattice:
            raise ValueError("divisor classes live on different lattices")

    def dot(self, other: "DivisorClass"):
        return intersection_number(self, other)

    def __str__(self) -> str:
        labels = self.lattice.basis_labels()
        parts = []
        for coef, name in zip(self.coeffs, labels):
            if coef.is_zero():
                continue
            if coef.is_constant() and coef.q0 == 1:
                parts.append(("+ " if parts else "") + name)
            elif coef.is_constant() and coef.q0 == -1:
                parts.append("- " + name)
            else:
                parts.append(("+ " if parts else "") + f"({coef}){name}")
        return " ".join(parts) if parts else "0"


def class_from_ints(lattice: LatticeType, vec: Sequence[int]) -> DivisorClass:
    return DivisorClass(lattice, tuple(affine(v) for v in vec))


def basis_class(lattice: LatticeType, label: str) -> DivisorClass:
    labels = lattice.basis_labels()
    vec = [0] * lattice.rank
    vec[labels.index(label)] = 1
    return class_from_ints(lattice, vec)


def parse_class(lattice: LatticeType, entries: Sequence) -> DivisorClass:
    return DivisorClass(lattice, tuple(affine(rat(x)) if not isinstance(x, AffinePoly) else x
                                       for x in entries))


def intersection_number(d1: DivisorClass, d2: DivisorClass):
    """Bilinear pairing; AffinePoly when one side is integral, else QuadPoly."""
    d1._check(d2)
    lat = d1.lattice
    if lat.kind == PLANE:
        total = quad(d1.coeffs[0] * d2.coeffs[0])
        off = 1
    else:
        total = quad(d1.coeffs[0] * d2.coeffs[1]) + quad(d1.coeffs[1] * d2.coeffs[0])
        off = 2
    for i in range(off, lat.rank):
        total = total - quad(d1.coeffs[i] * d2.coeffs[i])
    if total.qbb == 0 and total.qbc == 0 and total.qcc == 0:
        return AffinePoly(total.q0, total.qb, total.qc)
    return total


def self_intersection(d: DivisorClass) -> QuadPoly:
    return quad(intersection_number(d, d))


def canonical_class(lattice: LatticeType) -> DivisorClass:
    if lattice.kind == PLANE:
        vec = [-3] + [1] * lattice.n
    else:
        vec = [-2, -2] + [1] * lattice.n
    return class_from_ints(lattice, vec)


@dataclass(frozen=True)
class NegativeCurveSet:
    """Irreducible curve classes of negative self-intersection."""

    minus_one: tuple[DivisorClass, ...]
    minus_two: tuple[DivisorClass, ...]
    #: irreducible classes of self-intersection <= -3 (diagonal transforms)
    extra: tuple[DivisorClass, ...] = ()

    def all_curves(self) -> tuple[DivisorClass, ...]:
        return self.minus_one + self.minus_two + self.extra


def _int_dot(lat: LatticeType, u: tuple[int, ...], v: tuple[int, ...]) -> int:
    if lat.kind == PLANE:
        s = u[0] * v[0]
        off = 1
    else:
        s = u[0] * v[1] + u[1] * v[0]
        off = 2
    for i in range(off, lat.rank):
        s -= u[i] * v[i]
    return s


def effective_roots(lattice: LatticeType) -> list[tuple[int, ...]]:
    """Integer vectors of the declared irreducible (-2) classes."""
    roots = []
    off = 1 if lattice.kind == PLANE else 2
    for t in lattice.triples:
        vec = [0] * lattice.rank
        vec[0] = 1
        for i in t:
            vec[off - 1 + i] = -1
        roots.append(tuple(vec))
    for s in lattice.conics:
        vec = [0] * lattice.rank
        vec[0] = 2
        for i in s:
            vec[off - 1 + i] = -1
        roots.append(tuple(vec))
    return roots


def _diagonal_transform(lattice: LatticeType) -> Optional[tuple[int, ...]]:
    if lattice.kind != QUADRIC or not lattice.on_diagonal:
        return None
    vec = [1, 1] + [0] * lattice.n
    for i in lattice.on_diagonal:
        vec[1 + i] = -1
    return tuple(vec)


def _enumerate_with_sums(n: int, total: int, total_sq: int, bound: int) -> Iterable[tuple[int, ...]]:
    """Nonnegative n-tuples with given sum and sum of squares, descending-free."""

    def rec(i: int, rem: int, rem_sq: int, acc: list[int]):
        if i == n:
            if rem == 0 and rem_sq == 0:
                yield tuple(acc)
            return
        left = n - i
        for m in range(min(bound, rem, int(rem_sq ** 0.5) + 1), -1, -1):
            if m * m > rem_sq:
                continue
            if rem - m > (left - 1) * bound:
                continue
            acc.append(m)
            yield from rec(i + 1, rem - m, rem_sq - m * m, acc)
            acc.pop()

    yield from rec(0, total, total_sq, [])


def _plane_candidates(lattice: LatticeType, k_target: int, sq_target: int) -> list[tuple[int, ...]]:
    """Integral classes a·h - sum m_i e_i with C.K = k_target, C^2 = sq_target."""
    n = lattice.n
    out = []
    # exceptional-type classes with a = 0
    if sq_target == -1 and k_target == -1:
        for i in range(n):
            vec = [0] * (n + 1)
            vec[1 + i] = 1
            out.append(tuple(vec))
    a_max = 3 if n <= 6 else 6
    for a in range(1, a_max + 1):
        # C.K = -3a + sum m = k_target ; C^2 = a^2 - sum m^2 = sq_target
        s = 3 * a + k_target
        s2 = a * a - sq_target
        if s < 0 or s2 <= 0:
            continue
        for ms in _enumerate_with_sums(n, s, s2, a):
            vec = (a,) + tuple(-m for m in ms)
            out.append(vec)
    return out


def _quadric_candidates(lattice: LatticeType, k_target: int, sq_target: int) -> list[tuple[int, ...]]:
    n = lattice.n
    out = []
    if sq_target == -1 and k_target == -1:
        for i in range(n):
            vec = [0, 0] + [0] * n
            vec[2 + i] = 1
            out.append(tuple(vec))
    for a1 in range(0, 4):
        for a2 in range(0, 4):
            if a1 == 0 and a2 == 0:
                continue
            # C.K = -2(a1+a2) + sum m ; C^2 = 2 a1 a2 - sum m^2
            s = 2 * (a1 + a2) + k_target
            s2 = 2 * a1 * a2 - sq_target
            if s < 0 or s2 < 0:
                continue
            bound = max(a1, a2)
            if s2 == 0:
                if s == 0:
                    out.append((a1, a2) + (0,) * n)
                continue
            for ms in _enumerate_with_sums(n, s, s2, bound):
                out.append((a1, a2) + tuple(-m for m in ms))
    return out


@lru_cache(maxsize=None)
def negative_curves(lattice: LatticeType, bound_bump: int = 0) -> NegativeCurveSet:
    """Exhaustive bounded enumeration with configuration-driven filtering.

    A numerical (-2) class is a curve exactly when declared by the
    configuration (collinear triple, conic sixtuple or diagonal); a numerical
    (-1) class is a curve unless it meets a declared negative class
    negatively, in which case it splits off that class and is reducible.
    ``bound_bump`` enlarges the search box for the bound-check oracle.
    """
    if lattice.rank > 9:
        raise ValueError("negative-curve enumeration supports rank <= 9 only")
    roots = effective_roots(lattice)
    diag = _diagonal_transform(lattice)
    blockers = list(roots) + [v for v in lattice.extra]
    if diag is not None and _int_dot(lattice, diag, diag) <= -2:
        blockers.append(diag)

    if lattice.kind == PLANE:
        cands1 = _plane_candidates(lattice, -1, -1)
        cands2 = _plane_candidates(lattice, 0, -2)
    else:
        cands1 = _quadric_candidates(lattice, -1, -1)
        cands2 = _quadric_candidates(lattice, 0, -2)

    if bound_bump:
        # widen the degree box; used only by the verification oracle
        if lattice.kind == PLANE:
            n = lattice.n
            extra1, extra2 = [], []
            a_max = (3 if n <= 6 else 6) + bound_bump
            for a in range(1, a_max + 1):
                for k_target, sq_target, sink in ((-1, -1, extra1), (0, -2, extra2)):
                    s = 3 * a + k_target
                    s2 = a * a - sq_target
                    if s < 0 or s2 <= 0:
                        continue
                    for ms in _enumerate_with_sums(n, s, s2, a + bound_bump):
                        sink.append((a,) + tuple(-m for m in ms))
            cands1 = list(dict.fromkeys(cands1 + extra1))
            cands2 = list(dict.fromkeys(cands2 + extra2))

    minus_one = []
    for vec in sorted(set(cands1)):
        if all(_int_dot(lattice, vec, r) >= 0 for r in blockers):
            minus_one.append(class_from_ints(lattice, vec))
    minus_two = [class_from_ints(lattice, r) for r in sorted(set(roots))]
    extra = []
    for v in lattice.extra:
        sq = _int_dot(lattice, v, v)
        if sq == -2:
            minus_two.append(class_from_ints(lattice, v))
        else:
            extra.append(class_from_ints(lattice, v))
    if diag is not None and _int_dot(lattice, diag, diag) <= -1:
        if _int_dot(lattice, diag, diag) == -1:
            if tuple(diag) not in {tuple(c.int_vector()) for c in minus_one}:
                minus_one.append(class_from_ints(lattice, diag))
        elif _int_dot(lattice, diag, diag) == -2:
            minus_two.append(class_from_ints(lattice, diag))
        else:
            extra.append(class_from_ints(lattice, diag))
    return NegativeCurveSet(tuple(minus_one), tuple(minus_two), tuple(extra))


def positivity_certificates(lattice: LatticeType, d: DivisorClass,
                            exclude: Sequence[DivisorClass] = ()
                            ) -> list[tuple[AffinePoly, DivisorClass]]:
    """(degree, curve) pairs over the irreducible negative curves plus the
    nef generators (h for the plane; h1, h2 for the quadric).  Classes in
    `exclude` (contracted (-2) classes) are skipped."""
    curves = list(negative_curves(lattice).all_curves())
    if lattice.kind == PLANE:
        curves.append(basis_class(lattice, "h"))
        if lattice.n == 1:
            # the ruling of F_1 is extremal but not a negative curve
            curves.append(class_from_ints(lattice, (1, -1)))
    else:
        curves.append(basis_class(lattice, "h1"))
        curves.append(basis_class(lattice, "h2"))
    skip = {tuple(e.int_vector()) for e in exclude}
    out = []
    for cw in curves:
        if tuple(cw.int_vector()) in skip:
            continue
        deg = intersection_number(d, cw)
        if isinstance(deg, QuadPoly):
            raise ValueError("positivity needs affine degrees; divisor not affine")
        out.append((deg, cw))
    return out


def positivity_constraints(lattice: LatticeType, d: DivisorClass,
                           exclude: Sequence[DivisorClass] = ()) -> list[LinearConstraint]:
    """One strict constraint d.C > 0 per irreducible negative curve C."""
    return [constraint(deg, GT)
            for deg, _cw in positivity_certificates(lattice, d, exclude)]


# -- presentation changes -------------------------------------------------


def quadric_to_plane(lattice: LatticeType, pivot: int) -> tuple[LatticeType, list[tuple[int, ...]]]:
    """Bl_n F_0 = Bl_{n+1} P^2 pivoting at blown-up point `pivot`.

    Returns the plane lattice and the images of the old basis vectors:
    h1 -> h - u, h2 -> h - v, e_pivot -> h - u - v where u, v are the two new
    exceptional labels; other e_i keep their slots.
    """
    if lattice.kind != QUADRIC or not (1 <= pivot <= lattice.n):
        raise ValueError("pivot must be a blown-up point of a quadric lattice")
    n_new = lattice.n + 1
    # new labels: others keep order, pivot is replaced by two new points u, v
    # placed at positions pivot and n_new
    plane = LatticeType(PLANE, n_new)
    images = []
    r_new = n_new + 1

    def vec(h=0, es=()):
        v = [0] * r_new
        v[0] = h
        for idx, val in es:
            v[idx] = val
        return tuple(v)

    u_pos, v_pos = pivot, n_new
    images.append(vec(1, [(u_pos, -1)]))            # h1 -> h - u
    images.append(vec(1, [(v_pos, -1)]))            # h2 -> h - v
    for i in range(1, lattice.n + 1):
        if i == pivot:
            images.append(vec(1, [(u_pos, -1), (v_pos, -1)]))  # e_pivot -> h-u-v
        else:
            images.append(vec(0, [(i, 1)]))
    return plane, images


def convert_class(d: DivisorClass, target: LatticeType,
                  images: list[tuple[int, ...]]) -> DivisorClass:
    coeffs = [affine(0)] * target.rank
    for coef, img in zip(d.coeffs, images):
        for j, v in enumerate(img):
            if v:
                coeffs[j] = coeffs[j] + coef * v
    return DivisorClass(target, tuple(coeffs))
