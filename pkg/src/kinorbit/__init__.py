"""Exact-arithmetic toolkit for planar kinematical Lie algebras.

The package encodes the twelve planar kinematical Lie algebras and their
anisotropic, centrally extended and noncentrally extended variants as
exact rational structure constants, builds coadjoint-orbit symplectic
structures, classifies the resulting noncommutative phase spaces,
integrates the modified Hamilton equations, and implements the extended
Static group together with its orbit realization and invariants.
"""

from .algebra_core import (
    AlgebraElement,
    GeneratorLabel,
    JacobiViolation,
    StructureConstants,
    bracket,
    check_jacobi,
)
from .catalog import (
    AlgebraDescriptor,
    CatalogError,
    CatalogRecord,
    KinematicalParams,
    admissible_central_extensions,
    build,
    list_catalog,
)
from .coadjoint import (
    DegenerateChartError,
    DualPoint,
    MagneticCouplings,
    OrbitChart,
    OrbitInvariant,
    StandardOrbit,
    SymplecticStructure,
    casimir_residual,
    classify,
    finite_difference_gradient,
    kirillov_matrix,
    magnetic_fields,
    poisson_bracket,
    restrict,
    standard_orbit,
)
from .mechanics import (
    CANONICAL_BRACKET_MATRIX,
    HamiltonianSpec,
    IntegrationError,
    MinimalCouplingResult,
    NCPhaseSpace2D,
    NCTrajectory,
    bracket_pushforward,
    hamilton_rhs,
    hamiltonian_value,
    integrate,
    minimal_coupling_galilei,
    minimal_coupling_paragalilei,
)
from .rational_linalg import SingularMatrixError, rarray, rat, rat_inv, rat_rank
from .static_group import (
    StaticConstants,
    StaticGroupElement,
    StaticOrbitState,
    compose,
    identity_element,
    inverse,
    multiplication_cocycle,
    noncentral_invariants,
    realize,
    static_invariants,
    static_symplectic,
    time_evolution,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraDescriptor",
    "AlgebraElement",
    "CANONICAL_BRACKET_MATRIX",
    "CatalogError",
    "CatalogRecord",
    "DegenerateChartError",
    "DualPoint",
    "GeneratorLabel",
    "HamiltonianSpec",
    "IntegrationError",
    "JacobiViolation",
    "KinematicalParams",
    "MagneticCouplings",
    "MinimalCouplingResult",
    "NCPhaseSpace2D",
    "NCTrajectory",
    "OrbitChart",
    "OrbitInvariant",
    "SingularMatrixError",
    "StandardOrbit",
    "StaticConstants",
    "StaticGroupElement",
    "StaticOrbitState",
    "StructureConstants",
    "SymplecticStructure",
    "admissible_central_extensions",
    "bracket",
    "bracket_pushforward",
    "build",
    "casimir_residual",
    "check_jacobi",
    "classify",
    "compose",
    "finite_difference_gradient",
    "hamilton_rhs",
    "hamiltonian_value",
    "identity_element",
    "integrate",
    "inverse",
    "kirillov_matrix",
    "list_catalog",
    "magnetic_fields",
    "minimal_coupling_galilei",
    "minimal_coupling_paragalilei",
    "multiplication_cocycle",
    "noncentral_invariants",
    "poisson_bracket",
    "rarray",
    "rat",
    "rat_inv",
    "rat_rank",
    "realize",
    "restrict",
    "standard_orbit",
    "static_invariants",
    "static_symplectic",
    "time_evolution",
    "__version__",
]
