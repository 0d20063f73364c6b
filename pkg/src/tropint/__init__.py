"""Exact tropical geometry over rational value groups.

Polyhedra and fans live in :mod:`tropint.convex` and :mod:`tropint.fan`,
tropical polynomials in :mod:`tropint.tropical`, truncated series in
:mod:`tropint.series`, intersection multiplicities in
:mod:`tropint.intersect`, and the independent checks in :mod:`tropint.oracle`.
"""

from .convex import (Cone, PolyhedralComplex, Polyhedron, face, lattice_volume, minkowski_sum,
                     mixed_volume, normal_fan, recession_cone, refine_intersect, vertices)
from .errors import *  # noqa: F401,F403
from .fan import (ExtendedPoint, Fan, closure_polyhedron, project_quotient, trop_point)
from .intersect import (Component, MultiplicityReport, Thickening, admissible_translation,
                        component_closure, components, intersection_complex, point_multiplicity,
                        stable_multiplicity, stable_points, thicken)
from .series import TruncatedSeries, min_weight, restrict_to_laurent, stability_radius, vertices_on_P
from .tropical import (TropicalHypersurface, TropicalPolynomial, face_polynomial, hypersurface,
                       initial_support, newton_fan, newton_polytope, stratified_closure, translate,
                       weight)

__version__ = "0.1.0"
