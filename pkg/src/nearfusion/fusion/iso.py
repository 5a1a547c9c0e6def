"""Grothendieck equivalence: basis-preserving isomorphisms of fusion rings."""

from __future__ import annotations

import numpy as np

from .dims import numeric_fpdims
from .ring import FusionRing


def _signatures(ring: FusionRing) -> list[tuple]:
    dims = numeric_fpdims(ring)
    N = ring.N
    sigs = []
    for x in range(ring.rank):
        sigs.append((
            round(float(dims[x]), 8),
            ring.dual[x] == x,
            int(N[x, x, x]),
            tuple(sorted(N[x].ravel().tolist())),
            tuple(sorted(N[:, x].ravel().tolist())),
            tuple(sorted(N[:, :, x].ravel().tolist())),
            tuple(sorted(N[x, x].tolist())),
        ))
    return sigs


def grothendieck_iso(a: FusionRing, b: FusionRing) -> tuple[int, ...] | None:
    """A bijection ``p`` with ``N_a[i][j][k] == N_b[p[i]][p[j]][p[k]]``, or None.

    Exhaustive backtracking over unit- and dual-preserving bijections; each
    element may only map to elements with the same invariant signature.
    """
    if a.rank != b.rank:
        return None
    sa, sb = _signatures(a), _signatures(b)
    if sorted(sa) != sorted(sb):
        return None
    r = a.rank
    cands = [[y for y in range(r) if sb[y] == sa[x]] for x in range(r)]
    if 0 not in cands[0]:
        return None
    Na, Nb = a.N, b.N
    perm = [-1] * r
    used = [False] * r
    order = sorted(range(1, r), key=lambda x: (len(cands[x]), x))

    def consistent(x: int) -> bool:
        assigned = [u for u in range(r) if perm[u] >= 0]
        px = perm[x]
        for u in assigned:
            pu = perm[u]
            for v in assigned:
                pv = perm[v]
                if (Na[x, u, v] != Nb[px, pu, pv] or Na[u, x, v] != Nb[pu, px, pv]
                        or Na[u, v, x] != Nb[pu, pv, px]):
                    return False
        return True

    def assign(x: int, y: int, trail: list[int]) -> bool:
        if perm[x] == y:
            return True
        if perm[x] >= 0 or used[y] or y not in cands[x]:
            return False
        perm[x] = y
        used[y] = True
        trail.append(x)
        if not consistent(x):
            return False
        return assign(a.dual[x], b.dual[y], trail)

    def undo(trail: list[int]) -> None:
        for x in trail:
            used[perm[x]] = False
            perm[x] = -1

    def search(i: int) -> bool:
        while i < len(order) and perm[order[i]] >= 0:
            i += 1
        if i == len(order):
            return True
        x = order[i]
        for y in cands[x]:
            trail: list[int] = []
            if assign(x, y, trail) and search(i + 1):
                return True
            undo(trail)
        return False

    trail: list[int] = []
    if not assign(0, 0, trail):
        return None
    if not search(0):
        return None
    p = tuple(perm)
    ix = np.array(p)
    if not np.array_equal(Na, Nb[np.ix_(ix, ix, ix)]):
        raise AssertionError("backtracking produced an invalid witness")
    return p


def are_isomorphic(a: FusionRing, b: FusionRing) -> bool:
    return grothendieck_iso(a, b) is not None
