"""Farthest distances, farthest-point maps, and Chebyshev centers for
right Bregman distances under four named Legendre generators."""

from .bregman import (
    DivergenceName,
    distance,
    distance_matrix,
    four_point_residual,
    named_divergence,
    three_point_residual,
)
from .center import (
    CenterCertificate,
    HullProjection,
    SolverName,
    certify,
    default_start,
    dual_hull_projection,
    solve_fixed_point,
    solve_subgradient,
)
from .closedform import (
    CaseConfig,
    Generator,
    center_euclidean,
    center_is,
    center_kl,
    farthest_structure,
    g_of,
    h_of,
    k_of,
    mu_coefficients,
    threshold_a,
)
from .compactset import CompactSet, make_segment, validate
from .errors import DomainError, NonConvergence
from .farthest import (
    FarthestResult,
    directional_derivative,
    farthest,
    farthest_values,
    monotonicity_witness,
    subdifferential,
)
from .legendre import Kind, LegendreFunction, energy, negentropy, neglog, quadratic
from .tolerances import DEFAULT, Tolerances

__all__ = [
    "CaseConfig",
    "CenterCertificate",
    "CompactSet",
    "DEFAULT",
    "DivergenceName",
    "DomainError",
    "FarthestResult",
    "Generator",
    "HullProjection",
    "Kind",
    "LegendreFunction",
    "NonConvergence",
    "SolverName",
    "Tolerances",
    "center_euclidean",
    "center_is",
    "center_kl",
    "certify",
    "default_start",
    "directional_derivative",
    "distance",
    "distance_matrix",
    "dual_hull_projection",
    "energy",
    "farthest",
    "farthest_structure",
    "farthest_values",
    "four_point_residual",
    "g_of",
    "h_of",
    "k_of",
    "make_segment",
    "monotonicity_witness",
    "mu_coefficients",
    "named_divergence",
    "negentropy",
    "neglog",
    "quadratic",
    "solve_fixed_point",
    "solve_subgradient",
    "subdifferential",
    "three_point_residual",
    "threshold_a",
    "validate",
]
