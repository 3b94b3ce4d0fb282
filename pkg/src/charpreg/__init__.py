"""Commutative algebra over prime fields: Groebner bases, Frobenius powers,
free resolutions and regularity, with periodic resolutions over hypersurfaces.
"""
from .groebner import (DegreeGuardError, Ideal, ModuleOrder, bracket_power, buchberger,
                       colon, dehomogenize, homogenize, ideal_membership, intersect,
                       normal_form, quotient_by_element, s_polynomial)
from .hypersurface import (HypersurfaceContext, PeriodicResolution, resolve_over_hypersurface,
                           syz_over_hypersurface)
from .idealfile import IdealFile, format_polynomial, parse_ideal_file, parse_polynomial
from .resolution import (BettiTable, FreeVector, GradedFreeModule, GradedMap, Resolution,
                         free_resolution, ideal_regularity, minimal_generator_degrees,
                         minimalize, module_gb, quotient_regularity, regularity,
                         resolve_quotient, syzygies)
from .ringcore import (NEG_INF, Monomial, MonomialOrder, Ordering, Polynomial,
                       PolynomialRing, PrimeFieldElement, frobenius_pow, gauge,
                       monomial_compare, poly_arith)
from .frobscan import (ScanReport, colon_degree_scan, gauge_bound_report, reg_growth_scan,
                       singular_locus_dim)
from .determinantal import determinantal_family, verify_section4_identities

__version__ = "0.1.0"

__all__ = [
    "NEG_INF", "Monomial", "MonomialOrder", "Ordering", "Polynomial", "PolynomialRing",
    "PrimeFieldElement", "frobenius_pow", "gauge", "monomial_compare", "poly_arith",
    "DegreeGuardError", "Ideal", "ModuleOrder", "bracket_power", "buchberger", "colon",
    "dehomogenize", "homogenize", "ideal_membership", "intersect", "normal_form",
    "quotient_by_element", "s_polynomial",
    "BettiTable", "FreeVector", "GradedFreeModule", "GradedMap", "Resolution",
    "free_resolution", "ideal_regularity", "minimal_generator_degrees", "minimalize",
    "module_gb", "quotient_regularity", "regularity", "resolve_quotient", "syzygies",
    "HypersurfaceContext", "PeriodicResolution", "resolve_over_hypersurface",
    "syz_over_hypersurface",
    "ScanReport", "colon_degree_scan", "gauge_bound_report", "reg_growth_scan",
    "singular_locus_dim",
    "determinantal_family", "verify_section4_identities",
    "IdealFile", "format_polynomial", "parse_ideal_file", "parse_polynomial",
]
