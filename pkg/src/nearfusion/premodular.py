"""Premodular data on a fusion ring: dimensions, twists and the balancing S-matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .fusion.dims import is_character
from .fusion.ring import FusionRing, NotGeneralizedNearGroup
from .fusion.structure import adjoint_subring, fixed_point_subgroup
from .premetric import PreMetricGroup
from .scalars import CycloValue, QuadraticValue, RationalAngle, embed_quadratic

MAX_CONDUCTOR = 400


class NotACharacter(ValueError):
    def __init__(self, pair, labels=None):
        x, y = pair
        names = (labels[x], labels[y]) if labels else pair
        super().__init__(f"dims are not a character: d({names[0]}) d({names[1]}) != sum N d")
        self.witness = pair


class SphericalityViolation(ValueError):
    pass


@dataclass(frozen=True)
class PremodularDatum:
    ring: FusionRing
    dims: tuple[QuadraticValue, ...]
    twists: tuple[RationalAngle, ...]
    conductor: int

    def dim(self, x: int) -> CycloValue:
        return embed_quadratic(self.dims[x], self.conductor)

    def theta(self, x: int) -> CycloValue:
        return self.twists[x].to_cyclo(self.conductor)


def make_datum(ring: FusionRing, dims: Sequence, twists: Sequence) -> PremodularDatum:
    if len(dims) != ring.rank or len(twists) != ring.rank:
        raise ValueError(f"dims and twists must have length {ring.rank}")
    dims = tuple(QuadraticValue.coerce(d) for d in dims)
    twists = tuple(t if isinstance(t, RationalAngle) else RationalAngle(Fraction(t)) for t in twists)
    if dims[0] != 1 or not twists[0].is_trivial:
        raise SphericalityViolation("the unit must have dimension 1 and trivial twist")
    for x in range(ring.rank):
        y = ring.dual[x]
        if dims[x] != dims[y]:
            raise SphericalityViolation(f"dim({ring.labels[x]}) != dim({ring.labels[y]})")
        if twists[x] != twists[y]:
            raise SphericalityViolation(f"theta({ring.labels[x]}) != theta({ring.labels[y]})")
    bad = is_character(ring, dims)
    if bad is not None:
        raise NotACharacter(bad, ring.labels)
    conductor = math.lcm(1, *(t.order for t in twists), *(d.conductor() for d in dims))
    if conductor > MAX_CONDUCTOR:
        raise ValueError(f"conductor {conductor} exceeds the exact-arithmetic cap {MAX_CONDUCTOR}")
    return PremodularDatum(ring, dims, twists, conductor)


def datum_from_premetric(pm: PreMetricGroup) -> PremodularDatum:
    """Pointed datum on ``ZG`` with twists ``theta_g = exp(2 pi i q(g))``."""
    from .fusion.constructors import construct_group_ring

    ring = construct_group_ring(pm.group)
    twists = [RationalAngle(pm(g)) for g in pm.group.elements]
    return make_datum(ring, [1] * ring.rank, twists)


def s_entry(datum: PremodularDatum, x: int, y: int) -> CycloValue:
    """``s_xy = theta_x^-1 theta_y^-1 sum_z N_xy^z theta_z dim(z)``."""
    N = datum.conductor
    total = CycloValue.zero(N)
    for z, c in datum.ring.product(x, y).items():
        total = total + datum.theta(z) * datum.dim(z) * CycloValue.constant(c, N)
    return total * (-(datum.twists[x] + datum.twists[y])).to_cyclo(N)


def s_matrix(datum: PremodularDatum) -> list[list[CycloValue]]:
    r = datum.ring.rank
    S = [[None] * r for _ in range(r)]
    for x in range(r):
        for y in range(x, r):
            S[x][y] = s_entry(datum, x, y)
            if y != x:
                S[y][x] = s_entry(datum, y, x)
    return S


def centralizes(datum: PremodularDatum, x: int, y: int) -> bool:
    return s_entry(datum, x, y) == embed_quadratic(datum.dims[x] * datum.dims[y], datum.conductor)


def symmetric_center(datum: PremodularDatum) -> list[int]:
    r = datum.ring.rank
    center = [x for x in range(r) if all(centralizes(datum, x, y) for y in range(r))]
    members = set(center)
    for x in center:
        if datum.ring.dual[x] not in members:
            raise ArithmeticError("symmetric center is not closed under duality")
        for y in center:
            if not set(datum.ring.support(x, y)) <= members:
                raise ArithmeticError("symmetric center is not closed under products")
    return center


@dataclass(frozen=True)
class TwistViolation:
    h: int
    twist: RationalAngle
    s_value: CycloValue
    fails_to_centralize: bool
    ring_is_adjoint: bool

    def describe(self, ring: FusionRing) -> str:
        what = "contradicts C = C_ad" if self.ring_is_adjoint else "allowed since C != C_ad"
        return (f"theta({ring.labels[self.h]}) = exp(2 pi i {self.twist}) != 1; "
                f"s(h, X) = {complex(self.s_value):.6g} != dim X ({what})")


def twist_constraint_on_H(datum: PremodularDatum) -> list[TwistViolation]:
    """Elements of the fixed-point subgroup with nontrivial twist.

    For ``h`` in ``H`` and noninvertible ``X`` the balancing sum has the
    single term ``h X = X``, so ``s_hX = theta_h^-1 dim X``; ``h`` centralizes
    ``X`` exactly when ``theta_h = 1``.
    """
    ring = datum.ring
    H = fixed_point_subgroup(ring)
    X = ring.noninvertibles[0]
    is_adjoint = adjoint_subring(ring).rank == ring.rank
    out = []
    for h in H.elements:
        if datum.twists[h].is_trivial:
            continue
        if ring.support(h, X) != [X]:
            raise NotGeneralizedNearGroup("fixed-point element does not fix X")
        s = s_entry(datum, h, X)
        fails = s != datum.dim(X)
        out.append(TwistViolation(h, datum.twists[h], s, fails, is_adjoint))
    return out
