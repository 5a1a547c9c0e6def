"""Generalized near-group profiles, branch filters, classification and enumeration."""

from .conjecture import EvidenceRow, TemplateMatch, conjecture_report, match_conjecture
from .driver import (
    IrrationalClassification,
    Rejection,
    RingVerdict,
    Survivor,
    adjoint_dichotomy,
    classify_irrational,
    classify_ring,
    nilpotency_class,
)
from .enumerate import enumerate_gnq, enumerate_gnq_naive, naive_search
from .filters import (
    EXCLUSION_TAG,
    SUPER_TANNAKIAN,
    TANNAKIAN,
    BranchVerdict,
    TraceStep,
    categorifiability_filter,
    supertannakian_branch_filter,
    tannakian_branch_filter,
)
from .profile import GnqProfile, RationalDimension, RationalGlobalDimension, gnq_profile

__all__ = [
    "BranchVerdict", "EXCLUSION_TAG", "EvidenceRow", "GnqProfile", "IrrationalClassification",
    "RationalDimension", "RationalGlobalDimension", "Rejection", "RingVerdict", "SUPER_TANNAKIAN",
    "Survivor", "TANNAKIAN", "TemplateMatch", "TraceStep", "adjoint_dichotomy",
    "categorifiability_filter", "classify_irrational", "classify_ring", "conjecture_report",
    "enumerate_gnq", "enumerate_gnq_naive", "gnq_profile", "match_conjecture", "naive_search",
    "nilpotency_class", "supertannakian_branch_filter", "tannakian_branch_filter",
]
