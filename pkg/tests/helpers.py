"""Shared test utilities."""

import numpy as np

from nearfusion.fusion import FusionRing

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def mutate_entry(ring: FusionRing, rng: np.random.Generator, max_value: int = 3):
    """Copy of ``ring`` with one uniformly chosen entry of N changed to a new value in [0, max_value]."""
    N = ring.N.copy()
    i, j, k = (int(t) for t in rng.integers(0, ring.rank, size=3))
    old = int(N[i, j, k])
    choices = [v for v in range(max_value + 1) if v != old]
    new = int(rng.choice(choices))
    N[i, j, k] = new
    return FusionRing(N, ring.dual, ring.labels, ring.name + "*"), (i, j, k, old, new)


def permutation_group_table(generators):
    """Cayley table (identity first) of the permutation group generated by ``generators``."""
    n = len(generators[0])
    identity = tuple(range(n))
    elems = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in generators:
                b = tuple(g[a[i]] for i in range(n))
                if b not in elems:
                    elems.append(b)
                    nxt.append(b)
        frontier = nxt
    idx = {e: i for i, e in enumerate(elems)}
    return [[idx[tuple(a[b[i]] for i in range(n))] for b in elems] for a in elems]
