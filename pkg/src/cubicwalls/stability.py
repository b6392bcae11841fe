"""KSBA stability as exact symbolic regions.

Three tests drive the wall-and-chamber machinery:

* semi-log-canonicity: every boundary weight stays <= 1 and at every declared
  multi-curve point the incident weights (conductors counting 1, branches
  counted with multiplicity) sum to <= 2 -- the same bound at smooth points
  and at nodes;
* ampleness of the per-component log canonical divisor, expressed through
  the negative-curve census, with contracted (-2) classes turning into
  equality constraints;
* the constant-volume identity: the summed self-intersections must equal the
  reference polynomial coefficient-wise, a mismatch being admissible only on
  its vanishing locus (a positive combination of squares of affine forms).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exact import (AffinePoly, LinearConstraint, QuadPoly, Region, affine,
                    constraint, quad, rat, GE, GT, EQ)
from .picard import (intersection_number, positivity_certificates,
                     self_intersection)
from .surface import Component, SurfaceModel, log_canonical_divisor

#: volume of every stable model: -b^2 + 20bc - 2b + 224c^2 - 52c + 3
TARGET_VOLUME = QuadPoly(q0=3, qb=-2, qc=-52, qbb=-1, qbc=20, qcc=224)


@dataclass(frozen=True)
class Certificate:
    condition: str          # "slc" | "ample" | "volume"
    source: str             # component id / point description / curve class
    poly: AffinePoly
    rel: str

    def constraint(self) -> LinearConstraint:
        return LinearConstraint(self.poly, self.rel)

    def __str__(self) -> str:
        return f"{self.condition}: {self.source} ({self.poly} {self.rel.lower()} 0)"


def slc_constraints(model: SurfaceModel) -> list[Certificate]:
    out: list[Certificate] = []
    for comp in model.components:
        for bc in comp.boundary:
            out.append(Certificate("slc", f"{comp.id}: weight of {bc.describe()}",
                                   affine(1) - bc.weight, GE))
    for pt in model.points:
        comp = model.component(pt.component)
        total = affine(0)
        if pt.at_a1:
            # branches through the node count with multiplicity C.Q
            node = _node_for_point(model, pt)
            for ref in pt.curves:
                mult = quad(intersection_number(comp.curve_class(ref), node)).q0 if node else 1
                mult = max(mult, Fraction(1))
                total = total + comp.curve_weight(ref) * mult
            where = f"{comp.id}: node point"
        else:
            for ref in pt.curves:
                total = total + comp.curve_weight(ref)
            where = f"{comp.id}: point of {len(pt.curves)} curves"
        out.append(Certificate("slc", where, affine(2) - total, GE))
    return out


def _node_for_point(model: SurfaceModel, pt) -> Optional:
    comp = model.component(pt.component)
    for q in comp.a1_nodes:
        if all(quad(intersection_number(comp.curve_class(ref), q)).q0 >= 1
               for ref in pt.curves):
            return q
    return None


def ample_constraints(model: SurfaceModel) -> list[Certificate]:
    out: list[Certificate] = []
    for comp in model.components:
        d = log_canonical_divisor(comp)
        names = {}
        if comp.lattice.kind == "quadric":
            names = {(1, 0) + (0,) * comp.lattice.n: "ruling h1",
                     (0, 1) + (0,) * comp.lattice.n: "ruling h2"}
        for deg, cw in positivity_certificates(comp.lattice, d,
                                               exclude=comp.a1_nodes):
            name = names.get(tuple(cw.int_vector()), f"curve [{cw}]")
            out.append(Certificate("ample", f"{comp.id}: {name}", deg, GT))
        for q in comp.a1_nodes:
            deg = intersection_number(d, q)
            if isinstance(deg, QuadPoly):
                raise ValueError("a1 class degree must be affine")
            if not deg.is_zero():
                out.append(Certificate("ample", f"{comp.id}: contracted node class [{q}]",
                                       deg, EQ))
    return out


def volume(model: SurfaceModel) -> QuadPoly:
    total = QuadPoly()
    for comp in model.components:
        total = total + self_intersection(log_canonical_divisor(comp))
    return total


def volume_constraints(model: SurfaceModel) -> tuple[bool, list[Certificate]]:
    """(matches identically, equality-locus certificates).

    A mismatch must decompose as a positive combination of squares of affine
    forms; the model is then valid exactly on the common zero locus.
    """
    gap = volume(model) - TARGET_VOLUME
    if gap.is_zero():
        return True, []
    dec = gap.square_decomposition()
    if dec is None:
        raise ValueError(f"volume mismatch {gap} is not a sum of squares; "
                         f"the model is wrong everywhere")
    certs = [Certificate("volume", "volume identity locus", L, EQ) for _lam, L in dec]
    return False, certs


@dataclass
class StabilityReport:
    model_label: str
    slc_region: Region
    ample_region: Region
    vol: QuadPoly
    volume_matches: bool
    region: Region
    failing: list[Certificate] = field(default_factory=list)
    at: Optional[tuple[Fraction, Fraction]] = None

    def stable(self) -> bool:
        return self.at is not None and not self.failing

    def to_json(self) -> dict:
        d = {
            "model": self.model_label,
            "volume": str(self.vol),
            "volumeMatchesTarget": self.volume_matches,
            "region": self.region.to_json(),
        }
        if self.at is not None:
            d["at"] = [str(self.at[0]), str(self.at[1])]
            d["stable"] = self.stable()
            d["certificates"] = [str(c) for c in self.failing]
        return d


def stability_region(model: SurfaceModel) -> Region:
    certs = slc_constraints(model) + ample_constraints(model)
    _, vol_certs = volume_constraints(model)
    return Region([c.constraint() for c in certs + vol_certs])


def stability_report(model: SurfaceModel, at=None) -> StabilityReport:
    slc = slc_constraints(model)
    amp = ample_constraints(model)
    matches, vol_certs = volume_constraints(model)
    region = Region([c.constraint() for c in slc + amp + vol_certs])
    rep = StabilityReport(
        model_label=model.label(),
        slc_region=Region([c.constraint() for c in slc]),
        ample_region=Region([c.constraint() for c in amp]),
        vol=volume(model),
        volume_matches=matches,
        region=region,
    )
    if at is not None:
        b, c = rat(at[0]), rat(at[1])
        rep.at = (b, c)
        for cert in slc + amp + vol_certs:
            if not cert.constraint().holds_at(b, c):
                rep.failing.append(cert)
    return rep
