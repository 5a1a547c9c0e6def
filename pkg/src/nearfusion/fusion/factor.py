"""Splitting off a pointed tensor factor: ``R = core x ZL``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constructors import direct_product
from .ring import FusionRing
from .structure import InvertibleGroup, Subring, _invertible_group, invertibles, restrict, universal_grading


@dataclass(frozen=True)
class PointedFactorization:
    core: Subring
    L: InvertibleGroup
    # basis index of ring for each basis element (c, l) of core x ZL, in product order
    product_map: tuple[int, ...]

    @property
    def is_trivial(self) -> bool:
        return self.L.order == 1


def factor_pointed(ring: FusionRing) -> PointedFactorization:
    """Largest subgroup ``L`` of ``G_R`` with ``R`` isomorphic to ``core x ZL``.

    ``core`` runs over unions of universal-grading components indexed by a
    subgroup ``K`` complementary to the degrees of ``L``; a candidate is
    accepted only when ``(c, l) -> c*l`` matches the structure constants of the
    direct product exactly.
    """
    G = invertibles(ring)
    U = universal_grading(ring)
    u_subgroups = U.group.subgroups()
    for L_pos in sorted(G.group.subgroups(), key=lambda s: (-len(s), sorted(s))):
        L = [G.elements[i] for i in sorted(L_pos)]
        degrees = [U.component_of[g] for g in L]
        if len(set(degrees)) != len(L) or U.order % len(L):
            continue
        for K in u_subgroups:
            if len(K) * len(L) != U.order or set(K) & set(degrees) != {0}:
                continue
            basis = sorted(x for k in K for x in U.components[k])
            if len(basis) * len(L) != ring.rank:
                continue
            found = _try_split(ring, basis, L)
            if found is not None:
                return found
    raise AssertionError("the trivial factorization always exists")


def _try_split(ring: FusionRing, basis: list[int], L: list[int]) -> PointedFactorization | None:
    core = restrict(ring, basis, f"core({ring.name})" if ring.name else "core")
    pointed = restrict(ring, L, "ZL")
    image = []
    for c in basis:
        for g in L:
            sup = ring.support(c, g)
            if len(sup) != 1 or ring.N[c, g, sup[0]] != 1:
                return None
            image.append(sup[0])
    if len(set(image)) != ring.rank:
        return None
    prod = direct_product(core.ring, pointed.ring)
    ix = np.array(image)
    if not np.array_equal(prod.N, ring.N[np.ix_(ix, ix, ix)]):
        return None
    if [prod.dual[i] for i in range(prod.rank)] != [image.index(ring.dual[image[i]]) for i in range(prod.rank)]:
        return None
    return PointedFactorization(core, _invertible_group(ring, L), tuple(image))
