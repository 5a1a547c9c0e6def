"""Evidence that nilpotent generalized near-group rings are ``R(m, n) x ZK``."""

from __future__ import annotations

from dataclasses import dataclass

from ..fusion.constructors import construct_group_ring, construct_rmn, direct_product
from ..fusion.iso import grothendieck_iso
from ..fusion.ring import FusionRing
from ..fusion.structure import fixed_point_subgroup, invertibles
from ..groups import AbelianGroup, abelian_groups_of_order, abelian_groups_up_to, describe
from ..premetric import sign_form_exists
from .driver import nilpotency_class
from .enumerate import enumerate_gnq


@dataclass(frozen=True)
class TemplateMatch:
    m: int
    n: int
    K: tuple[int, ...]

    def __str__(self):
        return f"R({self.m},{self.n}) x Z[{describe(self.K)}]"


def match_conjecture(ring: FusionRing) -> TemplateMatch | None:
    """Find ``(m, n, K)`` with ``ring`` Grothendieck-isomorphic to ``R(m,n) x ZK``."""
    G = invertibles(ring).order
    c = len(ring.noninvertibles)
    m = 1
    while 2 ** (m - 1) <= c:
        if c % 2 ** (m - 1) == 0:
            K_order = c // 2 ** (m - 1)
            rest = G // K_order
            if G % K_order == 0 and rest % 2 ** m == 0 and rest > 2 ** (m - 1):
                n = (rest // 2 ** (m - 1)).bit_length() - 1
                if 2 ** (m + n - 1) == rest and n >= 1:
                    base = construct_rmn(m, n)
                    for K in abelian_groups_of_order(K_order):
                        cand = direct_product(base, construct_group_ring(K)) if K else base
                        if cand.rank == ring.rank and grothendieck_iso(ring, cand) is not None:
                            return TemplateMatch(m, n, tuple(K))
        m += 1
    return None


@dataclass(frozen=True)
class EvidenceRow:
    group: tuple[int, ...]
    H_order: int
    ring: FusionRing
    nilpotency: int | None
    match: TemplateMatch | None
    # H admits a nondegenerate sign-valued form, which a braiding would need
    H_sign_form: bool

    def as_dict(self) -> dict:
        return {
            "G": describe(self.group), "H_order": self.H_order, "ring": self.ring.name,
            "rank": self.ring.rank, "nilpotency_class": self.nilpotency, "H_sign_form": self.H_sign_form,
            "match": str(self.match) if self.match else None,
        }


def conjecture_report(G_max: int = 8, noninv_max: int = 4) -> dict[str, list[EvidenceRow]]:
    """Enumerate nilpotent generalized near-group rings and test the templates.

    Nilpotent here means ``r = 0``: then ``x x*`` is pointed, and otherwise the
    adjoint chain never leaves the noninvertibles.  Unmatched rows are
    reported, never treated as errors.
    """
    if G_max > 8 or noninv_max > 4:
        raise ValueError("conjecture_report is limited to |G| <= 8 and at most 4 noninvertibles")
    seen: list[FusionRing] = []
    matched, unmatched = [], []
    for factors in abelian_groups_up_to(G_max):
        G = AbelianGroup(factors)
        for H in G.subgroups():
            if len(H) == 1 or G.order // len(H) > noninv_max:
                continue
            for ring in enumerate_gnq(factors, sorted(H), 0, mult_bound=0):
                if any(s.rank == ring.rank and grothendieck_iso(ring, s) is not None for s in seen):
                    continue
                seen.append(ring)
                H_inv = fixed_point_subgroup(ring).invariants()
                row = EvidenceRow(tuple(factors), len(H), ring, nilpotency_class(ring), match_conjecture(ring),
                                  sign_form_exists(H_inv).exists)
                (matched if row.match else unmatched).append(row)
    return {"matched": matched, "unmatched": unmatched}
