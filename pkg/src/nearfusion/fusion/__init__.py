"""Fusion rings: the core type, invariants, constructors and catalog."""

from .catalog import UnknownName, catalog_get, catalog_names, from_rules
from .constructors import construct_group_ring, construct_near_group, construct_rmn, direct_product
from .dims import Dimensions, ExactUnavailable, exact_fpdims, fpdim_basis, numeric_fpdims
from .factor import PointedFactorization, factor_pointed
from .iso import are_isomorphic, grothendieck_iso
from .ring import FusionRing, MalformedTensor, NotGeneralizedNearGroup, VerificationReport, Violation, verify_axioms
from .structure import (
    GradingInconsistent,
    GradingStructure,
    InvertibleGroup,
    Orbits,
    Subring,
    adjoint_subring,
    dimensional_grading,
    fixed_point_subgroup,
    grading_homomorphism,
    invertibles,
    orbit_decomposition,
    subring_generated,
    universal_grading,
)

__all__ = [
    "Dimensions", "ExactUnavailable", "FusionRing", "GradingInconsistent", "GradingStructure",
    "InvertibleGroup", "MalformedTensor", "NotGeneralizedNearGroup", "Orbits", "PointedFactorization",
    "Subring", "UnknownName", "VerificationReport", "Violation", "adjoint_subring", "are_isomorphic",
    "catalog_get", "catalog_names", "construct_group_ring", "construct_near_group", "construct_rmn",
    "dimensional_grading", "direct_product", "exact_fpdims", "factor_pointed", "fixed_point_subgroup",
    "fpdim_basis", "from_rules", "grading_homomorphism", "grothendieck_iso", "invertibles",
    "numeric_fpdims", "orbit_decomposition", "subring_generated", "universal_grading", "verify_axioms",
]
