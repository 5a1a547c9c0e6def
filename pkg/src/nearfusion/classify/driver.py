"""Classification of braided generalized near-group rings with irrational dimension."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..fusion.catalog import catalog_get
from ..fusion.factor import PointedFactorization, factor_pointed
from ..fusion.iso import grothendieck_iso
from ..fusion.ring import FusionRing
from ..fusion.structure import adjoint_subring
from .filters import (
    BranchVerdict,
    categorifiability_filter,
    supertannakian_branch_filter,
    tannakian_branch_filter,
)
from .profile import GnqProfile, RationalGlobalDimension, gnq_profile

MIN_BOUNDS = (2, 4, 4)
SURVIVOR_CATALOG = ("fib", "gnq8")


@dataclass(frozen=True)
class Survivor:
    k: int
    H_order: int
    profile: GnqProfile
    verdicts: tuple[BranchVerdict, ...]
    catalog_name: str | None

    @property
    def branches(self) -> list[str]:
        return [v.branch for v in self.verdicts if v.accepted]

    def as_dict(self) -> dict:
        return {
            "k": self.k, "H_order": self.H_order, "d": str(self.profile.d),
            "branches": self.branches, "catalog": self.catalog_name,
        }


@dataclass(frozen=True)
class Rejection:
    r: int
    H_order: int
    stage: str
    detail: str
    verdicts: tuple[BranchVerdict, ...] = ()

    def as_dict(self) -> dict:
        out = {"r": self.r, "H_order": self.H_order, "stage": self.stage, "detail": self.detail}
        if self.verdicts:
            out["verdicts"] = [v.as_dict() for v in self.verdicts]
        return out


@dataclass(frozen=True)
class IrrationalClassification:
    bounds: tuple[int, int, int]
    survivors: tuple[Survivor, ...]
    rejections: tuple[Rejection, ...] = field(repr=False)


def _catalog_profiles() -> list[tuple[str, GnqProfile]]:
    out = []
    for name in SURVIVOR_CATALOG:
        out.append((name, gnq_profile(catalog_get(name))))
    return out


def classify_irrational(K_max: int = 8, H_max: int = 8, G_max: int = 16) -> IrrationalClassification:
    """Run every ``(r, |H|)`` with ``r <= K_max |H|`` through the filters.

    ``G_max`` is validated but does not enter the filters: they depend on
    ``(k, |H|)`` only, and ``|G|`` is recovered afterwards from the pointed factor.
    """
    if K_max < MIN_BOUNDS[0] or H_max < MIN_BOUNDS[1] or G_max < MIN_BOUNDS[2]:
        raise ValueError(f"bounds (K_max, H_max, G_max) must be at least {MIN_BOUNDS}")
    catalog = _catalog_profiles()
    survivors, rejections = [], []
    for H in range(1, H_max + 1):
        for r in range(0, K_max * H + 1):
            p = GnqProfile.from_parameters(H, H, r)
            if p.d.is_rational:
                rejections.append(Rejection(r, H, "rational", f"d = {p.d} is rational"))
                continue
            if not categorifiability_filter(p):
                rejections.append(Rejection(r, H, "categorifiability", f"|H| = {H} does not divide r = {r}"))
                continue
            k = p.k
            if k == 0:
                rejections.append(Rejection(r, H, "rational", f"k = 0, FPdim = {p.total_fpdim} is rational"))
                continue
            verdicts = (tannakian_branch_filter(k, H), supertannakian_branch_filter(k, H))
            if not any(v.accepted for v in verdicts):
                detail = "; ".join(
                    f"{v.branch}: " + (f"excluded [{v.exclusion_tag}]" if v.exclusion_tag else str(v.first_failure))
                    for v in verdicts)
                rejections.append(Rejection(r, H, "branch", detail, verdicts))
                continue
            name = next((n for n, cp in catalog
                         if (cp.k, cp.H_order, cp.d) == (k, H, p.d)), None)
            survivors.append(Survivor(k, H, p, verdicts, name))
    return IrrationalClassification((K_max, H_max, G_max), tuple(survivors), tuple(rejections))


@dataclass(frozen=True)
class RingVerdict:
    ring_name: str
    profile: GnqProfile
    verdicts: tuple[BranchVerdict, ...]
    survivor_class: str | None
    factorization: PointedFactorization | None
    note: str = ""

    @property
    def L_name(self) -> str | None:
        return self.factorization.L.name if self.factorization else None

    def as_dict(self) -> dict:
        return {
            "ring": self.ring_name, "profile": self.profile.as_dict(),
            "survivor_class": self.survivor_class, "pointed_factor": self.L_name,
            "verdicts": [v.as_dict() for v in self.verdicts], "note": self.note,
        }


def classify_ring(ring: FusionRing) -> RingVerdict:
    p = gnq_profile(ring)
    if p.total_fpdim.is_rational:
        raise RationalGlobalDimension(f"FPdim = {p.total_fpdim} is rational; outside the irrational classification")
    name = ring.name or "ring"
    if not categorifiability_filter(p):
        return RingVerdict(name, p, (), None, None, f"|H| = {p.H_order} does not divide r = {p.r}")
    verdicts = (tannakian_branch_filter(p.k, p.H_order), supertannakian_branch_filter(p.k, p.H_order))
    if not any(v.accepted for v in verdicts):
        return RingVerdict(name, p, verdicts, None, None, "rejected by both branch filters")
    fact = factor_pointed(ring)
    for cname in SURVIVOR_CATALOG:
        if grothendieck_iso(fact.core.ring, catalog_get(cname)) is not None:
            return RingVerdict(name, p, verdicts, cname, fact)
    return RingVerdict(name, p, verdicts, None, fact, "filters pass but the core matches no catalog survivor")


def nilpotency_class(ring: FusionRing) -> int | None:
    """Length of the adjoint chain down to the trivial ring; ``None`` if it stalls."""
    count = 0
    current = ring
    while current.rank > 1:
        ad = adjoint_subring(current)
        if ad.rank == current.rank:
            return None
        current = ad.ring
        count += 1
    return count


def adjoint_dichotomy(ring: FusionRing) -> bool:
    """``(R_ad)_ad`` equals ``R_ad`` or is trivial."""
    ad = adjoint_subring(ring).ring
    ad2 = adjoint_subring(ad)
    return ad2.rank == ad.rank or ad2.rank == 1
