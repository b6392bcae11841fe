"""Exact wall-and-chamber engine for weighted stable marked cubic surfaces.

Models reducible surfaces as glued rational components with weighted
boundary curves, tests KSBA stability symbolically in the two weights
(b, c), applies scripted birational transitions across walls, and produces
the per-type and merged chamber decompositions of the weight domain.
"""

from .exact import (AffinePoly, LinearConstraint, QuadPoly, Region, rat,
                    rat_str, AMBIENT, SQUARE_DOMAIN, EQ, GE, GT)
from .picard import (DivisorClass, LatticeType, NegativeCurveSet,
                     canonical_class, intersection_number, negative_curves,
                     plane_lattice, positivity_constraints, quadric_lattice,
                     self_intersection)
from .surface import (BoundaryCurve, Component, ConductorCurve, MultiPoint,
                      SurfaceModel, blow_up_point, log_canonical_divisor,
                      validate_surface)
from .stability import (TARGET_VOLUME, StabilityReport, ample_constraints,
                        slc_constraints, stability_report, volume)
from .mmp import (TransitionScript, TransitionStep, apply_step,
                  check_gluing_conditions, cross_wall)
from .chambers import (Chamber, Decomposition, Wall, classify_wall,
                       coverage_check, enumerate_chambers, merge_global)
from .catalog import CatalogFile, load, self_check, serialize
from .builtin import builtin_catalog

__version__ = "0.1.0"
