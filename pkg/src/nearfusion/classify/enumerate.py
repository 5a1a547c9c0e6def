"""Exhaustive enumeration of generalized near-group rings over an abelian group.

Basis layout: the elements of ``G`` (in ``AbelianGroup.elements`` order) and
then one noninvertible ``x_c`` for each coset ``c`` in ``Q = G/H``.  Invertibles
act by ``g x_c = x_c g = x_{c + [g]}``.  Writing ``x_0* = x_{c0}``, every such
ring is fixed by ``c0`` and ``P = x_0 x_0* = sum_H h + sum_c beta_c x_c``:

    x_a x_b = (a + b - c0) P,        x_c* = x_{c0 - c}.

The pruned search only visits ``beta`` with ``sum(beta) = r`` and
``beta_c = beta_{c0 - c}`` (forced by ``P* = P``); the naive search visits
everything and keeps what ``verify_axioms`` accepts.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from ..fusion.iso import grothendieck_iso
from ..fusion.ring import FusionRing, verify_axioms
from ..fusion.structure import fixed_point_subgroup, invertibles
from ..groups import AbelianGroup, InvalidSubgroup, Quotient, describe, label_tuple
from .profile import gnq_profile

MAX_GROUP = 16
MAX_MULT = 4


class _Layout:
    def __init__(self, factors: Sequence[int], H_gens: Iterable):
        self.G = AbelianGroup(factors)
        G = self.G
        gens = []
        for h in H_gens:
            h = tuple(h) if not isinstance(h, int) else (h,)
            if len(h) != len(G.factors) or any(not 0 <= a < n for a, n in zip(h, G.factors)):
                raise InvalidSubgroup(f"{h} is not an element of {G.describe()}")
            gens.append(h)
        self.H = G.closure(gens)
        self.quo = Quotient(G, self.H)
        self.Q = self.quo.target
        self.proj = [self.quo.project(g) for g in G.elements]
        self.n = G.order
        self.rank = G.order + self.Q.order
        self.qidx = self.Q.index

    def x(self, c) -> int:
        return self.n + self.qidx[self.Q.normalize(c)]

    def build(self, c0, alpha, beta, name: str) -> FusionRing | None:
        """``alpha``: coefficients of ``G`` in ``P``; ``beta``: coefficients of ``Q``."""
        G, Q, n = self.G, self.Q, self.n
        N = np.zeros((self.rank, self.rank, self.rank), dtype=np.int64)
        gi = G.index
        for a, g in enumerate(G.elements):
            for b, h in enumerate(G.elements):
                N[a, b, gi[G.add(g, h)]] = 1
            for c in Q.elements:
                N[a, self.x(c), self.x(Q.add(c, self.proj[a]))] = 1
                N[self.x(c), a, self.x(Q.add(c, self.proj[a]))] = 1
        lift = {}
        for a, g in enumerate(G.elements):
            lift.setdefault(self.proj[a], g)
        for ca in Q.elements:
            for cb in Q.elements:
                shift = G.add(G.add(lift[ca], lift[cb]), G.neg(lift[Q.normalize(c0)]))
                s = self.proj[gi[shift]]
                row = N[self.x(ca), self.x(cb)]
                for a, g in enumerate(G.elements):
                    row[gi[G.add(g, shift)]] += alpha[a]
                for j, c in enumerate(Q.elements):
                    row[self.x(Q.add(c, s))] += beta[j]
        dual = [gi[G.neg(g)] for g in G.elements]
        dual += [self.x(Q.add(c0, Q.neg(c))) for c in Q.elements]
        labels = ["1"] + ["g" + label_tuple(g) for g in G.elements[1:]]
        labels += ["x" + label_tuple(c) for c in Q.elements]
        try:
            return FusionRing(N, dual, labels, name)
        except ValueError:
            return None


def _name(layout: _Layout, c0, beta) -> str:
    return f"gnq[{describe(layout.G.factors)};|H|={len(layout.H)};c0={label_tuple(c0)};beta={list(beta)}]"


def _resolve_r(d_spec, H_order: int) -> int:
    if isinstance(d_spec, int):
        r = d_spec
    else:
        k, h = d_spec
        if h != H_order:
            raise ValueError(f"d_spec asks for |H| = {h} but the subgroup has order {H_order}")
        r = k * h
    if r < 0:
        raise ValueError("r must be nonnegative")
    return r


def _check_bounds(layout: _Layout, mult_bound: int):
    if layout.G.order > MAX_GROUP:
        raise ValueError(f"|G| = {layout.G.order} exceeds {MAX_GROUP}")
    if not 0 <= mult_bound <= MAX_MULT:
        raise ValueError(f"mult_bound must lie in [0, {MAX_MULT}]")


def _symmetric_betas(Q: AbelianGroup, c0, r: int, bound: int):
    """``beta`` on ``Q`` with ``beta_c = beta_{c0-c}``, entries ``<= bound``, summing to ``r``."""
    idx = Q.index
    pairs = []
    seen = set()
    for c in Q.elements:
        if c in seen:
            continue
        partner = Q.add(c0, Q.neg(c))
        seen.update({c, partner})
        pairs.append((idx[c], idx[partner]))
    beta = [0] * Q.order

    def rec(i: int, remaining: int):
        if i == len(pairs):
            if remaining == 0:
                yield tuple(beta)
            return
        a, b = pairs[i]
        weight = 1 if a == b else 2
        for v in range(min(bound, remaining // weight) + 1):
            beta[a] = beta[b] = v
            yield from rec(i + 1, remaining - weight * v)
        beta[a] = beta[b] = 0

    yield from rec(0, r)


def _dedupe(rings: list[FusionRing]) -> list[FusionRing]:
    reps: list[FusionRing] = []
    for ring in rings:
        if not any(grothendieck_iso(ring, s) is not None for s in reps):
            reps.append(ring)
    return reps


def enumerate_gnq(G, H, d_spec, mult_bound: int = 1, up_to_iso: bool = True) -> list[FusionRing]:
    """All commutative generalized near-group rings with data ``(G, H, r)``.

    ``G`` is a list of invariant factors, ``H`` a list of generators, and
    ``d_spec`` either ``r`` or a pair ``(k, |H|)`` meaning ``r = k |H|``.
    Multiplicities of noninvertibles in ``x x*`` are bounded by ``mult_bound``.
    """
    layout = _Layout(G, H)
    _check_bounds(layout, mult_bound)
    r = _resolve_r(d_spec, len(layout.H))
    if len(layout.H) == 1 and r == 0:
        return []  # x x* = 1 would make x invertible
    Q = layout.Q
    alpha = [1 if g in layout.H else 0 for g in layout.G.elements]
    found = []
    for c0 in Q.elements:
        for beta in _symmetric_betas(Q, c0, r, mult_bound):
            ring = layout.build(c0, alpha, beta, _name(layout, c0, beta))
            if ring is not None and verify_axioms(ring, first_only=True).ok:
                found.append(ring)
    return _dedupe(found) if up_to_iso else found


def naive_search(G, H, mult_bound: int = 1) -> dict[int, list[FusionRing]]:
    """Unpruned reference search over the same basis layout, keyed by ``r``.

    Every ``c0``, every ``beta`` in ``[0, mult_bound]^Q`` and every 0/1 pattern
    of invertibles in ``P`` is tried; survivors must pass ``verify_axioms`` and
    have fixed-point subgroup ``H`` and all of ``G`` invertible.
    """
    layout = _Layout(G, H)
    _check_bounds(layout, mult_bound)
    Q = layout.Q
    H_idx = sorted(layout.G.index[h] for h in layout.H)
    found: dict[int, list[FusionRing]] = {}
    for c0 in Q.elements:
        for alpha in itertools.product((0, 1), repeat=layout.G.order):
            for beta in itertools.product(range(mult_bound + 1), repeat=Q.order):
                ring = layout.build(c0, alpha, beta, _name(layout, c0, beta))
                if ring is None or not verify_axioms(ring, first_only=True).ok:
                    continue
                try:
                    p = gnq_profile(ring)
                    H_ring = fixed_point_subgroup(ring)
                except ValueError:
                    continue
                if sorted(H_ring.elements) == H_idx and invertibles(ring).order == layout.G.order:
                    found.setdefault(p.r, []).append(ring)
    return found


def enumerate_gnq_naive(G, H, d_spec, mult_bound: int = 1, up_to_iso: bool = True) -> list[FusionRing]:
    layout = _Layout(G, H)
    r = _resolve_r(d_spec, len(layout.H))
    found = naive_search(G, H, mult_bound).get(r, [])
    return _dedupe(found) if up_to_iso else found
