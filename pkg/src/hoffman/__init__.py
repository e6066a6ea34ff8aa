"""Spectral bounds for the independence ratio and chromatic number.

Hoffman-type bounds computed from the extreme spectrum of adjacency-like
operators, for three families: finite graphs, translation-invariant graphs
on R^n with forbidden distances, and distance graphs on the unit sphere.
"""

from .errors import (
    BoundInapplicableError,
    ConvergenceError,
    NoNegativeSpectrumError,
    SpectralBoundError,
    UncertifiedRangeError,
    VacuousBoundError,
)
from .euclidean import (
    ExtremaReport,
    RadialMeasure,
    chromatic_bound_euclidean,
    density_bound,
    fourier_radial,
    global_extrema,
    optimize_radial_measure,
    radial_measure_from_json,
    radial_measure_to_json,
    steinhardt_measure,
    unit_distance_bound,
)
from .graphs import (
    Graph,
    WeightedAdjacency,
    adjacency_matrix,
    brute_force_alpha,
    brute_force_chi,
    fractional_chi_bound,
    hoffman_chi_bound,
    is_independent,
    optimize_weights,
    parse_graph,
    ratio_bound,
    read_graph,
)
from .reports import (
    KIND_ALPHA_RATIO_UB,
    KIND_CHI_FRAC_LB,
    KIND_CHI_LB,
    BoundReport,
)
from .simplex import simplex_maximize, solve_matrix_game
from .specfun import (
    JacobiParams,
    bessel_first_zero,
    bessel_j,
    jacobi_normalized,
    jacobi_sequence,
    omega,
)
from .spectral import Spectrum, SymMatrix, eigen_decompose, numerical_range
from .sphere import (
    EigenSequence,
    SphereMeasure,
    eigenvalue_sequence,
    operator_range,
    optimize_sphere_measure,
    single_t_bounds,
    sphere_measure_from_json,
    sphere_measure_to_json,
)
from .torus import (
    CirculantGraph,
    build_torus_graph,
    circulant_spectrum,
    circulant_to_graph,
    convergence_csv,
    convergence_study,
    symmetrize,
)

__version__ = "1.0.0"

__all__ = [
    "BoundInapplicableError",
    "BoundReport",
    "CirculantGraph",
    "ConvergenceError",
    "EigenSequence",
    "ExtremaReport",
    "Graph",
    "JacobiParams",
    "KIND_ALPHA_RATIO_UB",
    "KIND_CHI_FRAC_LB",
    "KIND_CHI_LB",
    "NoNegativeSpectrumError",
    "RadialMeasure",
    "Spectrum",
    "SpectralBoundError",
    "SphereMeasure",
    "SymMatrix",
    "UncertifiedRangeError",
    "VacuousBoundError",
    "WeightedAdjacency",
    "adjacency_matrix",
    "bessel_first_zero",
    "bessel_j",
    "brute_force_alpha",
    "brute_force_chi",
    "build_torus_graph",
    "chromatic_bound_euclidean",
    "circulant_spectrum",
    "circulant_to_graph",
    "convergence_csv",
    "convergence_study",
    "density_bound",
    "eigen_decompose",
    "eigenvalue_sequence",
    "fourier_radial",
    "fractional_chi_bound",
    "global_extrema",
    "hoffman_chi_bound",
    "is_independent",
    "jacobi_normalized",
    "jacobi_sequence",
    "numerical_range",
    "omega",
    "operator_range",
    "optimize_radial_measure",
    "optimize_sphere_measure",
    "optimize_weights",
    "parse_graph",
    "radial_measure_from_json",
    "radial_measure_to_json",
    "ratio_bound",
    "read_graph",
    "simplex_maximize",
    "single_t_bounds",
    "solve_matrix_game",
    "sphere_measure_from_json",
    "sphere_measure_to_json",
    "steinhardt_measure",
    "symmetrize",
    "unit_distance_bound",
]
