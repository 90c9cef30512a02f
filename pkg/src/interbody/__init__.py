"""Exact intersection bodies of polytopes in dimensions 2 and 3."""

from .arrangement import Chamber, SignVector, central_arrangement, enumerate_chambers
from .convexity import (ConvexityReport, Witness, admissible_edge_positions, convexity_report_2d, gardner_check,
                        midpoint_convexity_probe, nonconvexity_witness, parallelepiped_report, prism_slice_check)
from .exceptions import InterbodyError
from .io import load_polytope, parse_polytope
from .polytope import Polytope, build_polygon, build_polytope, cross_section, translate
from .radial import RadialPiece, chamber_radial_piece, radial_oracle, radial_value
from .translation import affine_arrangement, radial_polynomial_in_t, region_of, verify_cocircuit_stability

__all__ = [
    "Chamber", "SignVector", "central_arrangement", "enumerate_chambers",
    "ConvexityReport", "Witness", "admissible_edge_positions", "convexity_report_2d", "gardner_check",
    "midpoint_convexity_probe", "nonconvexity_witness", "parallelepiped_report", "prism_slice_check",
    "InterbodyError", "load_polytope", "parse_polytope",
    "Polytope", "build_polygon", "build_polytope", "cross_section", "translate",
    "RadialPiece", "chamber_radial_piece", "radial_oracle", "radial_value",
    "affine_arrangement", "radial_polynomial_in_t", "region_of", "verify_cocircuit_stability",
]
