"""Constructors: group rings, near-group rings, direct products and R(m, n)."""

from __future__ import annotations

import numpy as np

from ..groups import AbelianGroup, FiniteGroup
from .ring import FusionRing
from .structure import subring_generated


def _as_group(data) -> FiniteGroup:
    """Accept a FiniteGroup, an AbelianGroup, invariant factors, or a Cayley table."""
    if isinstance(data, FiniteGroup):
        return data
    if isinstance(data, AbelianGroup):
        return data.cayley()
    data = list(data)
    if all(isinstance(n, int) for n in data):
        return AbelianGroup(data).cayley()
    return FiniteGroup(data)


def _group_labels(G: FiniteGroup, prefix: str = "g") -> list[str]:
    labels = ["1"]
    for s in G.labels[1:]:
        labels.append(prefix + s if s.startswith("(") else s)
    return labels


def construct_group_ring(data, name: str = "") -> FusionRing:
    """``ZG`` from invariant factors or a Cayley table (identity first)."""
    G = _as_group(data)
    n = G.order
    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, G.mul(a, b)] = 1
    if not name:
        inv = G.invariants()
        name = f"Z[{G.describe()}]" if inv is not None else f"Z[G{n}]"
    return FusionRing(N, G.inverses, _group_labels(G), name)


def construct_near_group(data, ell: int, name: str = "") -> FusionRing:
    """``R(G, ell)``: ``g rho = rho g = rho`` and ``rho**2 = ell*rho + sum(G)``."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    G = _as_group(data)
    n = G.order
    rho = n
    N = np.zeros((n + 1, n + 1, n + 1), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, G.mul(a, b)] = 1
        N[a, rho, rho] = 1
        N[rho, a, rho] = 1
        N[rho, rho, a] = 1
    N[rho, rho, rho] = ell
    dual = list(G.inverses) + [rho]
    labels = _group_labels(G) + ["rho"]
    if not name:
        name = f"R({G.describe()},{ell})"
    return FusionRing(N, dual, labels, name)


def direct_product(a: FusionRing, b: FusionRing, name: str = "") -> FusionRing:
    """Basis pairs ``(i, j)`` at index ``i * b.rank + j``."""
    N = np.einsum("ikm,jln->ijklmn", a.N, b.N).reshape(a.rank * b.rank, a.rank * b.rank, a.rank * b.rank)
    dual = [a.dual[i] * b.rank + b.dual[j] for i in range(a.rank) for j in range(b.rank)]

    def pair(x, y):
        if y == "1":
            return x
        if x == "1":
            return y
        return f"{x}.{y}"

    labels = [pair(x, y) for x in a.labels for y in b.labels]
    return FusionRing(N, dual, labels, name or f"{a.name} x {b.name}")


def construct_rmn(m: int, n: int) -> FusionRing:
    """``R(m, n)``: subring of ``Z C_{2^m} x R(C_2^n, 0)`` generated by ``g x rho``."""
    if m < 1 or n < 1:
        raise ValueError("R(m, n) needs m, n >= 1")
    cyc = construct_group_ring([2**m])
    ty = construct_near_group([2] * n, 0)
    big = direct_product(cyc, ty)
    g = 1  # generator (1,) of C_{2^m}
    rho = ty.rank - 1
    sub = subring_generated(big, [g * ty.rank + rho])
    return sub.ring.renamed(f"R({m},{n})")
