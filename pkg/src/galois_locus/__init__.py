"""Galois points of plane curves over finite fields."""

__version__ = "0.1.0"

from .fields import (CapExceeded, FieldElement, FieldError, FieldSpec, embed, enumerate_field,
                     extension, field_of_order, make_field)
from .polys import (BinForm, HomPoly3, P1Point, UniPoly, derivative, implicitize,
                    root_multiplicity, roots_over_extension, substitute_line, uni_gcd)
from .geometry import (ProjLine, ProjPoint, change_coordinates, enumerate_plane, join, meet,
                       pencil_lines)
from .curves import (PlaneCurve, SingularityRecord, intersection_multiplicity, is_smooth_point,
                     multiplicity, projection_ramification_smooth, singular_points, tangent_line)
from .parametrized import (RationalMap, branch_ramification, branch_tangent,
                           compose_projection, evaluate, fiber, local_expansion_order)
from .galois import (CentralHomology, GaloisReport, MobiusTransform, Verdict,
                     fiber_uniformity_filter, galois_locus, homology_automorphisms,
                     is_galois_point, mobius_automorphisms, verify_covering_structure)
from .catalog import CatalogEntry, ballico_hefez, hermitian, klein_quartic, mutate

__all__ = [
    "CapExceeded", "FieldElement", "FieldError", "FieldSpec", "embed", "enumerate_field",
    "extension", "field_of_order", "make_field",
    "BinForm", "HomPoly3", "P1Point", "UniPoly", "derivative", "implicitize",
    "root_multiplicity", "roots_over_extension", "substitute_line", "uni_gcd",
    "ProjLine", "ProjPoint", "change_coordinates", "enumerate_plane", "join", "meet",
    "pencil_lines",
    "PlaneCurve", "SingularityRecord", "intersection_multiplicity", "is_smooth_point",
    "multiplicity", "projection_ramification_smooth", "singular_points", "tangent_line",
    "RationalMap", "branch_ramification", "branch_tangent", "compose_projection", "evaluate",
    "fiber", "local_expansion_order",
    "CentralHomology", "GaloisReport", "MobiusTransform", "Verdict", "fiber_uniformity_filter",
    "galois_locus", "homology_automorphisms", "is_galois_point", "mobius_automorphisms",
    "verify_covering_structure",
    "CatalogEntry", "ballico_hefez", "hermitian", "klein_quartic", "mutate",
]
