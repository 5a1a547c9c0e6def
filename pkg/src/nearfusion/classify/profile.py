"""Generalized near-group profiles: ``(|G|, |H|, r, k, d)`` read off a ring."""

from __future__ import annotations

from dataclasses import dataclass

from ..fusion.dims import fpdim_basis
from ..fusion.ring import FusionRing, NotGeneralizedNearGroup
from ..fusion.structure import fixed_point_subgroup, invertibles
from ..scalars import QuadraticValue, largest_root_quadratic


class RationalDimension(ValueError):
    pass


class RationalGlobalDimension(ValueError):
    pass


@dataclass(frozen=True)
class GnqProfile:
    G_order: int
    H_order: int
    r: int
    k: int | None
    d: QuadraticValue
    noninv_count: int
    total_fpdim: QuadraticValue

    @classmethod
    def from_parameters(cls, G_order: int, H_order: int, r: int) -> GnqProfile:
        """Profile determined by the parameters alone (no ring needed)."""
        if G_order % H_order:
            raise ValueError("|H| must divide |G|")
        d = largest_root_quadratic(r, H_order)
        k = r // H_order if r % H_order == 0 else None
        noninv = G_order // H_order
        # |G| + noninv * d^2 with d^2 = r d + |H|
        total = 2 * G_order + noninv * r * d
        return cls(G_order, H_order, r, k, d, noninv, total)

    def as_dict(self) -> dict:
        return {
            "G_order": self.G_order, "H_order": self.H_order, "r": self.r, "k": self.k,
            "d": str(self.d), "noninv_count": self.noninv_count, "total_fpdim": str(self.total_fpdim),
        }


def gnq_profile(ring: FusionRing) -> GnqProfile:
    H = fixed_point_subgroup(ring)  # raises NotGeneralizedNearGroup
    G = invertibles(ring)
    nonin = ring.noninvertibles
    x = nonin[0]
    xx = ring.N[x, ring.dual[x]]
    for y in nonin[1:]:
        if (ring.N[y, ring.dual[y]] != xx).any():
            raise NotGeneralizedNearGroup(
                f"x x* differs between {ring.labels[x]} and {ring.labels[y]}")
    r = int(sum(xx[z] for z in nonin))
    inv_part = sorted(int(g) for g in G.elements if xx[g])
    if inv_part != sorted(H.elements) or any(xx[g] != 1 for g in inv_part):
        raise NotGeneralizedNearGroup("invertible part of x x* is not the fixed-point subgroup")
    p = GnqProfile.from_parameters(G.order, H.order, r)
    if p.noninv_count != len(nonin):
        raise NotGeneralizedNearGroup("noninvertible count is not |G|/|H|")
    d = p.d
    if d * d - r * d - H.order != 0:
        raise ArithmeticError("d does not solve its defining quadratic")
    dims = fpdim_basis(ring)
    if dims.exact is not None and dims.exact[x] != d:
        raise ArithmeticError(f"FPdim({ring.labels[x]}) = {dims.exact[x]} but the profile gives {d}")
    if dims.exact is None and abs(dims.numeric[x] - float(d)) > 1e-9:
        raise ArithmeticError(f"FPdim({ring.labels[x]}) ~ {dims.numeric[x]} but the profile gives {d}")
    return p
