"""Invertibles, orbits, subrings and gradings of a fusion ring."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from ..groups import FiniteGroup, NotAGroup
from .dims import exact_fpdims
from .ring import FusionRing, NotGeneralizedNearGroup


class GradingInconsistent(ValueError):
    """A proposed partition is not a group grading of the ring."""


@dataclass(frozen=True)
class InvertibleGroup:
    """A group of invertible basis elements; ``group`` is indexed by position in ``elements``."""

    elements: tuple[int, ...]
    group: FiniteGroup
    name: str

    @property
    def order(self) -> int:
        return len(self.elements)

    def invariants(self) -> list[int] | None:
        return self.group.invariants()

    def __contains__(self, x) -> bool:
        return x in self.elements


def _product_element(ring: FusionRing, g: int, x: int) -> int:
    """``g * x`` for invertible ``g`` (a single basis element)."""
    return int(np.argmax(ring.N[g, x]))


def _invertible_group(ring: FusionRing, elements: Sequence[int]) -> InvertibleGroup:
    elements = tuple(sorted(elements))
    pos = {x: i for i, x in enumerate(elements)}
    table = []
    for g in elements:
        row = []
        for h in elements:
            k = _product_element(ring, g, h)
            if k not in pos:
                raise NotAGroup(f"{ring.labels[g]} * {ring.labels[h]} leaves the subset")
            row.append(pos[k])
        table.append(row)
    group = FiniteGroup(table, labels=[ring.labels[x] for x in elements])
    return InvertibleGroup(elements, group, group.describe())


def invertibles(ring: FusionRing) -> InvertibleGroup:
    """``G_R``: basis elements ``x`` with ``x x* = 1``."""
    if "invertibles" not in ring._cache:
        elems = [x for x in range(ring.rank) if ring.is_invertible(x)]
        ring._cache["invertibles"] = _invertible_group(ring, elems)
    return ring._cache["invertibles"]


@dataclass(frozen=True)
class Orbits:
    orbits: tuple[tuple[int, ...], ...]

    @property
    def is_generalized_near_group(self) -> bool:
        return len(self.orbits) == 2

    def __len__(self):
        return len(self.orbits)


def orbit_decomposition(ring: FusionRing) -> Orbits:
    """Orbits of ``G_R`` acting on the basis by left multiplication."""
    G = invertibles(ring).elements
    seen: set[int] = set()
    orbits = []
    for x in range(ring.rank):
        if x in seen:
            continue
        orbit = sorted({_product_element(ring, g, x) for g in G})
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return Orbits(tuple(orbits))


def fixed_point_subgroup(ring: FusionRing) -> InvertibleGroup:
    """``H_R``: invertibles fixing a noninvertible basis element.

    The stabilizer is computed for every noninvertible element and required to
    agree; normality in ``G_R`` is checked as well.
    """
    if not orbit_decomposition(ring).is_generalized_near_group:
        raise NotGeneralizedNearGroup(f"{ring.name or 'ring'} does not have exactly two G_R-orbits")
    G = invertibles(ring)
    stabs = {
        x: tuple(g for g in G.elements if _product_element(ring, g, x) == x)
        for x in ring.noninvertibles
    }
    first = next(iter(stabs.values()))
    for x, s in stabs.items():
        if s != first:
            raise NotGeneralizedNearGroup(f"stabilizers differ across the noninvertible orbit at {ring.labels[x]}")
    H = _invertible_group(ring, first)
    pos = {x: i for i, x in enumerate(G.elements)}
    if not G.group.is_normal(pos[h] for h in H.elements):
        raise NotGeneralizedNearGroup("fixed-point subgroup is not normal")
    return H


@dataclass(frozen=True)
class Subring:
    ring: FusionRing
    embedding: tuple[int, ...]

    @property
    def rank(self) -> int:
        return self.ring.rank

    @property
    def is_trivial(self) -> bool:
        return self.ring.rank == 1


def closure(ring: FusionRing, seeds: Iterable[int]) -> list[int]:
    """Basis of the smallest based subring containing ``seeds``."""
    elems = {0}
    frontier = set(int(s) for s in seeds) | {0}
    while frontier:
        elems |= frontier
        new = set()
        for x in list(elems):
            for y in frontier:
                for a, b in ((x, y), (y, x)):
                    new.update(ring.support(a, b))
            new.add(ring.dual[x])
        for y in frontier:
            new.add(ring.dual[y])
        frontier = new - elems
    return sorted(elems)


def restrict(ring: FusionRing, basis: Sequence[int], name: str = "") -> Subring:
    basis = list(basis)
    ix = np.array(basis)
    N = ring.N[np.ix_(ix, ix, ix)]
    pos = {x: i for i, x in enumerate(basis)}
    if N.sum() != sum(ring.N[i, j].sum() for i in basis for j in basis):
        raise ValueError("basis is not closed under multiplication")
    dual = [pos[ring.dual[x]] for x in basis]
    labels = [ring.labels[x] for x in basis]
    return Subring(FusionRing(N, dual, labels, name), tuple(basis))


def subring_generated(ring: FusionRing, seeds: Iterable[int]) -> Subring:
    seeds = list(seeds)
    if not seeds:
        raise ValueError("subring_generated needs at least one seed")
    label = ",".join(ring.labels[s] for s in seeds)
    return restrict(ring, closure(ring, seeds), f"<{label}> in {ring.name}" if ring.name else f"<{label}>")


def adjoint_subring(ring: FusionRing) -> Subring:
    """Subring generated by the summands of ``x x*`` over all basis ``x``."""
    if "adjoint" not in ring._cache:
        seeds = set()
        for x in range(ring.rank):
            seeds.update(ring.support(x, ring.dual[x]))
        sub = restrict(ring, closure(ring, seeds), f"{ring.name}_ad" if ring.name else "ad")
        ring._cache["adjoint"] = sub
    return ring._cache["adjoint"]


@dataclass(frozen=True)
class GradingStructure:
    """Partition of the basis into components indexed by a finite group.

    ``group`` is indexed by component number; component 0 is the trivial one.
    """

    components: tuple[tuple[int, ...], ...]
    group: FiniteGroup
    component_of: tuple[int, ...]

    trivial_component: int = 0

    @property
    def order(self) -> int:
        return len(self.components)

    def describe(self) -> str:
        return self.group.describe()


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True

    def classes(self) -> list[tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for a in range(len(self.parent)):
            out.setdefault(self.find(a), []).append(a)
        return sorted((tuple(v) for v in out.values()), key=lambda c: c[0])


def grading_from_partition(ring: FusionRing, classes: Sequence[Sequence[int]]) -> GradingStructure:
    """Verify that ``classes`` is a group grading and build its group table."""
    classes = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0])
    comp = [-1] * ring.rank
    for ci, c in enumerate(classes):
        for x in c:
            comp[x] = ci
    if min(comp) < 0:
        raise GradingInconsistent("classes do not cover the basis")
    n = len(classes)
    table = [[-1] * n for _ in range(n)]
    for x in range(ring.rank):
        for y in range(ring.rank):
            targets = {comp[k] for k in ring.support(x, y)}
            if len(targets) != 1:
                raise GradingInconsistent(
                    f"{ring.labels[x]} * {ring.labels[y]} spans components {sorted(targets)}")
            t = targets.pop()
            cell = table[comp[x]][comp[y]]
            if cell not in (-1, t):
                raise GradingInconsistent(
                    f"component product {comp[x]}*{comp[y]} is not well defined")
            table[comp[x]][comp[y]] = t
    try:
        group = FiniteGroup(table, labels=[f"[{ring.labels[c[0]]}]" for c in classes])
    except NotAGroup as exc:
        raise GradingInconsistent(f"components do not form a group: {exc}") from exc
    return GradingStructure(tuple(classes), group, tuple(comp))


def universal_grading(ring: FusionRing) -> GradingStructure:
    """Components are the classes of ``y ~ a*y`` for ``a`` in the adjoint subring."""
    if "universal" not in ring._cache:
        ad = adjoint_subring(ring).embedding
        uf = _UnionFind(ring.rank)
        for a in ad:
            for y in range(ring.rank):
                for k in ring.support(a, y):
                    uf.union(y, k)
        grading = grading_from_partition(ring, uf.classes())
        if grading.components[0] != tuple(ad):
            raise GradingInconsistent("trivial component differs from the adjoint subring")
        ring._cache["universal"] = grading
    return ring._cache["universal"]


def coarsen_to_grading(ring: FusionRing, classes: Sequence[Sequence[int]]) -> GradingStructure:
    """Finest grading whose components are unions of the given classes."""
    uf = _UnionFind(ring.rank)
    for c in classes:
        for x in c[1:]:
            uf.union(c[0], x)
    changed = True
    while changed:
        changed = False
        for x in range(ring.rank):
            for y in range(ring.rank):
                sup = ring.support(x, y)
                for k in sup[1:]:
                    changed |= uf.union(sup[0], k)
        # component products must be well defined
        rep: dict[tuple[int, int], int] = {}
        for x in range(ring.rank):
            for y in range(ring.rank):
                key = (uf.find(x), uf.find(y))
                k = ring.support(x, y)[0]
                if key in rep:
                    changed |= uf.union(rep[key], k)
                else:
                    rep[key] = k
    return grading_from_partition(ring, uf.classes())


def dimensional_grading(ring: FusionRing) -> GradingStructure:
    """Grading by classes of ``FPdim(x)/FPdim(y)`` in Q, coarsened until it is a grading.

    The result is checked to be graded by an elementary abelian 2-group.
    """
    dims = exact_fpdims(ring)
    classes: list[list[int]] = []
    for x in range(ring.rank):
        for c in classes:
            if (dims[x] / dims[c[0]]).is_rational:
                c.append(x)
                break
        else:
            classes.append([x])
    grading = coarsen_to_grading(ring, classes)
    g = grading.group
    if not g.is_abelian or any(g.element_order(i) > 2 for i in range(g.order)):
        raise GradingInconsistent(f"dimensional grading group {g.describe()} is not elementary abelian")
    return grading


def grading_homomorphism(fine: GradingStructure, coarse: GradingStructure) -> list[int] | None:
    """Map from components of ``fine`` onto components of ``coarse`` if one exists."""
    image = []
    for c in fine.components:
        targets = {coarse.component_of[x] for x in c}
        if len(targets) != 1:
            return None
        image.append(targets.pop())
    n = fine.group.order
    for a in range(n):
        for b in range(n):
            if image[fine.group.mul(a, b)] != coarse.group.mul(image[a], image[b]):
                return None
    return image
