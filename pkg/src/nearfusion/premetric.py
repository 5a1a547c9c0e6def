"""Pre-metric groups: finite abelian groups with a Q/Z-valued quadratic form."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .groups import AbelianGroup, InvalidSubgroup, Quotient, label_tuple
from .scalars import RationalAngle

MAX_ORDER = 2**12


class NotQuadratic(ValueError):
    def __init__(self, message: str, witness: tuple):
        super().__init__(f"{message} (witness {witness})")
        self.witness = witness


class NotIsotropic(ValueError):
    def __init__(self, element):
        super().__init__(f"q does not vanish on the subgroup: q{label_tuple(element)} != 0")
        self.witness = element


class IllDefined(ValueError):
    def __init__(self, coset_rep, values):
        super().__init__(f"q is not constant on the coset of {label_tuple(coset_rep)}: {sorted(map(str, values))}")
        self.witness = coset_rep


@dataclass(frozen=True)
class PreMetricGroup:
    group: AbelianGroup
    q: Mapping[tuple[int, ...], Fraction]

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.group.factors

    def __call__(self, g) -> Fraction:
        return self.q[self.group.normalize(g)]

    def angle(self, g) -> RationalAngle:
        return RationalAngle(self(g))

    def b(self, g, h) -> Fraction:
        G = self.group
        return (self(G.add(g, h)) - self(g) - self(h)) % 1

    def to_json(self) -> dict:
        return {
            "group": list(self.group.factors),
            "q": {label_tuple(g): str(v) for g, v in sorted(self.q.items())},
        }

    @classmethod
    def from_json(cls, data) -> PreMetricGroup:
        def key(s):
            s = s.strip().strip("()")
            return tuple(int(t) for t in s.split(",") if t.strip())
        return make_premetric(data["group"], {key(k): Fraction(str(v)) for k, v in data["q"].items()})


def make_premetric(invariant_factors: Sequence[int],
                   q_on_elements: Mapping | Callable) -> PreMetricGroup:
    """Validate a quadratic form given on every element (mapping or callable).

    Checks ``q(0) = 0``, ``q(c g) = c**2 q(g)`` for all ``c`` and ``g`` and that
    ``b(g, h) = q(g+h) - q(g) - q(h)`` is bi-additive.
    """
    G = AbelianGroup(invariant_factors)
    if G.order > MAX_ORDER:
        raise ValueError(f"|G| = {G.order} exceeds the supported bound {MAX_ORDER}")
    keep = [i for i, n in enumerate(invariant_factors) if n > 1]
    if callable(q_on_elements):
        lookup = q_on_elements
    else:
        table = {}
        for key, v in q_on_elements.items():
            key = (key,) if isinstance(key, int) else tuple(key)
            if len(key) == len(invariant_factors):
                key = tuple(key[i] for i in keep)
            table[G.normalize(key)] = v
        lookup = table.get
    q = {}
    for g in G.elements:
        v = lookup(g)
        if v is None:
            raise NotQuadratic("q is not given on every element", ("missing", g))
        q[g] = Fraction(v) % 1
    if q[G.zero] != 0:
        raise NotQuadratic("q(0) must be 0", (G.zero,))
    for g in G.elements:
        for c in range(2, G.element_order(g) + 2):
            lhs = q[G.scale(c, g)]
            if lhs != (c * c * q[g]) % 1:
                raise NotQuadratic("q(c g) != c^2 q(g)", ("scale", g, c))
    _check_biadditive(G, q)
    return PreMetricGroup(G, q)


def _check_biadditive(G: AbelianGroup, q: dict) -> None:
    if G.order == 1:
        return
    elems = G.elements
    idx = G.index
    denom = math.lcm(*(v.denominator for v in q.values()))
    Q = np.array([int(q[g] * denom) for g in elems], dtype=np.int64)
    gens = G.generators
    # b(x, e_i) for every x; bi-additivity forces b(x, y) = sum_i y_i b(x, e_i)
    add = np.array([[idx[G.add(x, e)] for e in gens] for x in elems])
    B = (Q[add] - Q[:, None] - Q[[idx[e] for e in gens]][None, :]) % denom
    coords = np.array(elems, dtype=np.int64)
    for xi, x in enumerate(elems):
        sums = np.array([idx[G.add(x, y)] for y in elems])
        actual = (Q[sums] - Q[xi] - Q) % denom
        predicted = (coords @ B[xi]) % denom
        bad = np.flatnonzero(actual != predicted)
        if len(bad):
            raise NotQuadratic("b is not bi-additive", ("bilinear", x, elems[bad[0]]))


@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple[tuple[Fraction, ...], ...]
    radical: frozenset

    @property
    def nondegenerate(self) -> bool:
        return len(self.radical) == 1


def bilinear_form(pm: PreMetricGroup) -> BilinearForm:
    G = pm.group
    gens = G.generators
    matrix = tuple(tuple(pm.b(e, f) for f in gens) for e in gens)
    radical = frozenset(g for g in G.elements if all(pm.b(g, e) == 0 for e in gens))
    return BilinearForm(matrix, radical)


@dataclass(frozen=True)
class Deequivariantization:
    premetric: PreMetricGroup
    subgroup: frozenset
    braided: bool
    projection: Mapping[tuple[int, ...], tuple[int, ...]]


def deequivariantize(pm: PreMetricGroup, H: Iterable) -> Deequivariantization:
    """Quotient ``(G, q)`` by an isotropic subgroup ``H``: ``q~(g + H) = q(g)``."""
    G = pm.group
    gens = [G.normalize(h) for h in H]
    sub = G.closure(gens)
    for h in sorted(sub):
        if pm(h) != 0:
            raise NotIsotropic(h)
    quo = Quotient(G, sub)
    if quo.target.order * len(sub) != G.order:
        raise InvalidSubgroup("order identity |G/H| |H| = |G| failed")
    proj = {g: quo.project(g) for g in G.elements}
    values: dict[tuple, set] = {}
    reps: dict[tuple, tuple] = {}
    for g in G.elements:
        values.setdefault(proj[g], set()).add(pm(g))
        reps.setdefault(proj[g], g)
    for c, vals in values.items():
        if len(vals) > 1:
            raise IllDefined(reps[c], vals)
    qt = {c: next(iter(v)) for c, v in values.items()}
    radical = bilinear_form(pm).radical
    braided = sub <= radical
    return Deequivariantization(make_premetric(quo.target.factors, qt), sub, braided, proj)


@dataclass(frozen=True)
class SignFormResult:
    exists: bool
    witness: tuple[tuple[Fraction, ...], ...] | None
    candidates_checked: int
    certificate: str


def sign_form_exists(factors: Sequence[int], exhaustive: bool = False) -> SignFormResult:
    """Is there a nondegenerate symmetric bi-additive form ``G x G -> {0, 1/2}``?

    Forms are enumerated by their symmetric generator matrix; entry ``(i, j)``
    may be 1/2 only when both cyclic factors are even.  Unless ``exhaustive``,
    a nonzero element killed by every candidate (``2 e_i`` for a factor larger
    than 2, or ``e_i`` for an odd factor) ends the search early.
    """
    G = AbelianGroup(factors)
    if G.order > 2**10:
        raise ValueError("sign_form_exists supports |G| <= 1024")
    k = len(G.factors)
    if k == 0:
        return SignFormResult(True, (), 1, "trivial group carries the empty form")
    if not exhaustive:
        for i, n in enumerate(G.factors):
            if n != 2:
                g = tuple(0 if j != i else (1 if n % 2 else 2) for j in range(k))
                return SignFormResult(False, None, 0, f"{label_tuple(g)} lies in the radical of every sign form")
    free = [(i, j) for i in range(k) for j in range(i, k) if G.factors[i] % 2 == 0 and G.factors[j] % 2 == 0]
    half = Fraction(1, 2)
    checked = 0
    elems = G.elements[1:]
    diagonal = tuple(int(i == j) for i, j in free)
    for bits in itertools.chain([diagonal], itertools.product((0, 1), repeat=len(free))):
        checked += 1
        M = [[Fraction(0)] * k for _ in range(k)]
        for bit, (i, j) in zip(bits, free):
            if bit:
                M[i][j] = M[j][i] = half
        if all(any((sum(g[i] * M[i][j] for i in range(k)) % 1) for j in range(k)) for g in elems):
            return SignFormResult(True, tuple(tuple(r) for r in M), checked, "nondegenerate witness found")
    return SignFormResult(False, None, checked, f"exhausted {checked - 1} symmetric sign matrices")
