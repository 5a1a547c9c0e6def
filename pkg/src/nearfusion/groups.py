"""Small finite groups: Cayley tables, finite abelian groups in mixed-radix form,
subgroup enumeration and quotients."""

from __future__ import annotations

import itertools
import math
from functools import cached_property
from typing import Iterable, Sequence

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.ntheory import factorint
from sympy.polys.domains import ZZ


class NotAGroup(ValueError):
    pass


class InvalidSubgroup(ValueError):
    pass


def invariant_factors_from_elementary(divisors: dict[int, list[int]]) -> list[int]:
    """Combine elementary divisors ``{p: [p**a, ...]}`` into invariant factors n1 | n2 | ..."""
    columns = [sorted(v, reverse=True) for v in divisors.values()]
    width = max((len(c) for c in columns), default=0)
    out = []
    for t in range(width):
        out.append(math.prod(c[t] for c in columns if t < len(c)))
    return sorted(out)


def normalize_factors(factors: Sequence[int]) -> list[int]:
    """Canonical invariant factors of ``C_{n1} x ... x C_{nk}``."""
    divisors: dict[int, list[int]] = {}
    for n in factors:
        if n < 1:
            raise ValueError(f"invalid cyclic factor {n}")
        for p, e in factorint(n).items():
            divisors.setdefault(p, []).append(p**e)
    return invariant_factors_from_elementary(divisors)


def describe(factors: Sequence[int]) -> str:
    factors = [n for n in factors if n > 1]
    return " x ".join(f"C{n}" for n in factors) if factors else "1"


class FiniteGroup:
    """A finite group given by its Cayley table; element 0 is the identity."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise NotAGroup("Cayley table must be a nonempty square")
        rows = [list(map(int, row)) for row in table]
        full = set(range(n))
        for i, row in enumerate(rows):
            if set(row) != full:
                raise NotAGroup(f"row {i} is not a permutation")
        for j in range(n):
            if {rows[i][j] for i in range(n)} != full:
                raise NotAGroup(f"column {j} is not a permutation")
        if rows[0] != list(range(n)) or [r[0] for r in rows] != list(range(n)):
            raise NotAGroup("element 0 is not the identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise NotAGroup(f"not associative at {(a, b, c)}")
        self.table = tuple(tuple(r) for r in rows)
        self.order = n
        self.labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    def power(self, a: int, k: int) -> int:
        x = 0
        for _ in range(k % self.element_order(a)):
            x = self.table[x][a]
        return x

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        elems = {0}
        frontier = [g for g in gens]
        elems.update(frontier)
        while frontier:
            new = []
            for a in list(elems):
                for b in frontier:
                    for c in (self.table[a][b], self.table[b][a]):
                        if c not in elems:
                            elems.add(c)
                            new.append(c)
            frontier = new
        return frozenset(elems)

    def subgroups(self) -> list[frozenset[int]]:
        """All subgroups, sorted by (order, elements)."""
        seen = {frozenset([0])}
        frontier = [frozenset([0])]
        while frontier:
            nxt = []
            for sub in frontier:
                for g in range(self.order):
                    if g not in sub:
                        bigger = self.closure(list(sub) + [g])
                        if bigger not in seen:
                            seen.add(bigger)
                            nxt.append(bigger)
            frontier = nxt
        return sorted(seen, key=lambda s: (len(s), sorted(s)))

    def is_normal(self, sub: Iterable[int]) -> bool:
        sub = set(sub)
        inv = self.inverses
        return all(self.table[self.table[g][h]][inv[g]] in sub for g in range(self.order) for h in sub)

    def invariants(self) -> list[int] | None:
        """Invariant factors when abelian, else None."""
        if not self.is_abelian:
            return None
        divisors: dict[int, list[int]] = {}
        for p, e in factorint(self.order).items():
            counts = []
            for i in range(e + 1):
                counts.append(sum(1 for a in range(self.order) if self.power(a, p**i) == 0))
            exps = [round(math.log(c, p)) for c in counts]
            # number of cyclic p-factors of exponent >= i is exps[i] - exps[i-1]
            parts_at_least = [exps[i] - exps[i - 1] for i in range(1, e + 1)]
            powers = []
            for i in range(1, e + 1):
                nxt = parts_at_least[i] if i < e else 0
                powers += [p**i] * (parts_at_least[i - 1] - nxt)
            divisors[p] = powers
        return invariant_factors_from_elementary(divisors)

    def describe(self) -> str:
        inv = self.invariants()
        if inv is None:
            return f"nonabelian group of order {self.order}"
        return describe(inv)

    def is_isomorphic_abelian(self, factors: Sequence[int]) -> bool:
        inv = self.invariants()
        return inv is not None and inv == normalize_factors(factors)


class AbelianGroup:
    """``C_{n1} x ... x C_{nk}`` with elements as mixed-radix tuples."""

    def __init__(self, factors: Sequence[int]):
        factors = [int(n) for n in factors]
        if any(n < 1 for n in factors):
            raise ValueError(f"invalid invariant factors {factors}")
        self.factors = tuple(n for n in factors if n > 1)

    @cached_property
    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.factors)))

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.factors)

    @property
    def generators(self) -> list[tuple[int, ...]]:
        k = len(self.factors)
        return [tuple(int(i == j) for j in range(k)) for i in range(k)]

    def add(self, g, h) -> tuple[int, ...]:
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def neg(self, g) -> tuple[int, ...]:
        return tuple(-a % n for a, n in zip(g, self.factors))

    def scale(self, c: int, g) -> tuple[int, ...]:
        return tuple(c * a % n for a, n in zip(g, self.factors))

    def normalize(self, g) -> tuple[int, ...]:
        g = tuple(g)
        if len(g) != len(self.factors):
            raise ValueError(f"element {g} does not match group {list(self.factors)}")
        return tuple(a % n for a, n in zip(g, self.factors))

    def element_order(self, g) -> int:
        return math.lcm(1, *(n // math.gcd(a, n) for a, n in zip(g, self.factors)))

    def closure(self, gens: Iterable) -> frozenset[tuple[int, ...]]:
        gens = [self.normalize(g) for g in gens]
        elems = {self.zero}
        frontier = [self.zero]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.add(x, g)
                    if y not in elems:
                        elems.add(y)
                        new.append(y)
            frontier = new
        return frozenset(elems)

    def cayley(self) -> FiniteGroup:
        idx = self.index
        table = [[idx[self.add(g, h)] for h in self.elements] for g in self.elements]
        return FiniteGroup(table, labels=[label_tuple(g) for g in self.elements])

    def subgroups(self) -> list[frozenset[tuple[int, ...]]]:
        cay = self.cayley()
        return [frozenset(self.elements[i] for i in s) for s in cay.subgroups()]

    def invariants(self) -> list[int]:
        return normalize_factors(self.factors)

    def describe(self) -> str:
        return describe(self.invariants())

    def __repr__(self):
        return f"AbelianGroup({list(self.factors)})"


def label_tuple(g: Sequence[int]) -> str:
    return "(" + ",".join(str(a) for a in g) + ")"


class Quotient:
    """``G/H`` for abelian ``G``, realised on its own invariant factors."""

    def __init__(self, group: AbelianGroup, sub: Iterable):
        sub = group.closure(sub)
        self.group = group
        self.subgroup = sub
        k = len(group.factors)
        rows = [[group.factors[i] if j == i else 0 for j in range(k)] for i in range(k)]
        rows += [list(h) for h in sorted(sub) if any(h)]
        if k == 0:
            self.target = AbelianGroup([])
            self._V = None
            self._keep = []
            return
        S, _U, V = smith_normal_decomp(Matrix(rows), domain=ZZ)
        diag = [abs(int(S[i, i])) for i in range(k)]
        if any(d == 0 for d in diag):
            raise InvalidSubgroup("relation matrix is not of full rank")
        self._V = [[int(V[i, j]) for j in range(k)] for i in range(k)]
        self._keep = [i for i, d in enumerate(diag) if d > 1]
        self._diag = diag
        self.target = AbelianGroup([diag[i] for i in self._keep])
        if self.target.order * len(sub) != group.order:
            raise InvalidSubgroup("quotient order mismatch")

    def project(self, g) -> tuple[int, ...]:
        if self._V is None:
            return ()
        g = self.group.normalize(g)
        k = len(g)
        image = [sum(g[i] * self._V[i][j] for i in range(k)) for j in range(k)]
        return tuple(image[j] % self._diag[j] for j in self._keep)


def abelian_groups_up_to(max_order: int) -> list[list[int]]:
    """Invariant-factor lists of all abelian groups of order <= max_order."""
    out = []
    for n in range(1, max_order + 1):
        out.extend(abelian_groups_of_order(n))
    return out


def abelian_groups_of_order(n: int) -> list[list[int]]:
    if n == 1:
        return [[]]
    per_prime = []
    for p, e in factorint(n).items():
        per_prime.append([[p**a for a in part] for part in _partitions(e)])
    out = []
    for combo in itertools.product(*per_prime):
        divisors = {i: list(c) for i, c in enumerate(combo)}
        out.append(invariant_factors_from_elementary(divisors))
    return sorted(out)


def _partitions(n: int, largest: int | None = None) -> list[list[int]]:
    largest = n if largest is None else largest
    if n == 0:
        return [[]]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append([first] + rest)
    return out
