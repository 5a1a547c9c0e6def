"""The fusion ring type and its axiom verifier."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np


class MalformedTensor(ValueError):
    """Structure constants of the wrong shape or type."""


class NotGeneralizedNearGroup(ValueError):
    """The invertible elements do not act on the basis with exactly two orbits."""


class FusionRing:
    """Based ring with finite basis ``0..rank-1``; index 0 is the unit.

    ``N[i, j, k]`` is the multiplicity of ``b_k`` in ``b_i * b_j``.  The ring is
    never validated on construction (``verify_axioms`` does that) so that broken
    inputs can still be inspected.
    """

    def __init__(self, N, dual: Sequence[int] | None = None, labels: Sequence[str] | None = None,
                 name: str = ""):
        try:
            arr = np.array(N, dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise MalformedTensor(f"structure constants are not an integer tensor: {exc}") from exc
        if arr.ndim != 3 or not (arr.shape[0] == arr.shape[1] == arr.shape[2]) or arr.shape[0] == 0:
            raise MalformedTensor(f"expected a rank x rank x rank tensor, got shape {arr.shape}")
        rank = arr.shape[0]
        arr.setflags(write=False)
        self.N = arr
        self.rank = rank
        if dual is None:
            dual = [self._infer_dual(i) for i in range(rank)]
        if len(dual) != rank:
            raise MalformedTensor(f"dual has length {len(dual)}, expected {rank}")
        self.dual = tuple(int(d) for d in dual)
        if any(not 0 <= d < rank for d in self.dual):
            raise MalformedTensor(f"dual {list(self.dual)} has entries out of range")
        if labels is None:
            labels = ["1"] + [f"b{i}" for i in range(1, rank)]
        if len(labels) != rank:
            raise MalformedTensor(f"labels has length {len(labels)}, expected {rank}")
        self.labels = tuple(str(s) for s in labels)
        self.name = name
        self._cache: dict = {}

    def _infer_dual(self, i: int) -> int:
        hits = np.flatnonzero(self.N[i, :, 0] == 1)
        return int(hits[0]) if len(hits) else 0

    def __repr__(self):
        return f"FusionRing({self.name or 'unnamed'}, rank={self.rank})"

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return self.dual == other.dual and np.array_equal(self.N, other.N)

    def __hash__(self):
        return hash((self.dual, self.N.tobytes()))

    def product(self, i: int, j: int) -> dict[int, int]:
        """``b_i * b_j`` as ``{k: multiplicity}``."""
        row = self.N[i, j]
        return {int(k): int(row[k]) for k in np.flatnonzero(row)}

    def support(self, i: int, j: int) -> list[int]:
        return [int(k) for k in np.flatnonzero(self.N[i, j])]

    def is_invertible(self, i: int) -> bool:
        return int(self.N[i, self.dual[i]].sum()) == 1

    @property
    def noninvertibles(self) -> list[int]:
        return [i for i in range(self.rank) if not self.is_invertible(i)]

    @property
    def is_pointed(self) -> bool:
        return not self.noninvertibles

    @property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.N, self.N.transpose(1, 0, 2)))

    def left_matrix(self, i: int) -> np.ndarray:
        """Matrix of ``y -> b_i * y`` acting on coordinate columns."""
        return self.N[i].T.copy()

    def renamed(self, name: str) -> FusionRing:
        return FusionRing(self.N, self.dual, self.labels, name)

    def permuted(self, order: Sequence[int], name: str | None = None) -> FusionRing:
        """Ring whose basis element ``t`` is this ring's ``order[t]``."""
        order = list(order)
        if sorted(order) != list(range(self.rank)) or order[0] != 0:
            raise ValueError("order must be a permutation fixing the unit")
        pos = {old: new for new, old in enumerate(order)}
        ix = np.array(order)
        N = self.N[np.ix_(ix, ix, ix)]
        dual = [pos[self.dual[o]] for o in order]
        labels = [self.labels[o] for o in order]
        return FusionRing(N, dual, labels, self.name if name is None else name)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.axiom} at {self.witness}: {self.detail}" if self.detail else f"{self.axiom} at {self.witness}"


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def axioms_violated(self) -> set[str]:
        return {v.axiom for v in self.violations}


def verify_axioms(ring: FusionRing, first_only: bool = False) -> VerificationReport:
    """Check nonnegativity, unit, duality, associativity and anti-involution.

    Each violated axiom is reported once, with the first witness found in
    lexicographic order.
    """
    N = ring.N
    r = ring.rank
    dual = ring.dual
    report = VerificationReport()

    def found(axiom, witness, detail=""):
        report.violations.append(Violation(axiom, tuple(int(w) for w in witness), detail))
        return first_only

    neg = np.argwhere(N < 0)
    if len(neg) and found("nonnegativity", neg[0], f"entry {int(N[tuple(neg[0])])}"):
        return report

    eye = np.eye(r, dtype=np.int64)
    bad = np.argwhere(N[0] != eye)
    if len(bad) and found("unit", (0, *bad[0]), "1 * b_j must equal b_j"):
        return report
    bad = np.argwhere(N[:, 0, :] != eye)
    if len(bad) and found("unit", (bad[0][0], 0, bad[0][1]), "b_i * 1 must equal b_i"):
        return report

    if dual[0] != 0 and found("duality", (0,), "the unit must be self-dual"):
        return report
    for i in range(r):
        if dual[dual[i]] != i:
            if found("duality", (i,), f"dual is not an involution: {i} -> {dual[i]} -> {dual[dual[i]]}"):
                return report
            break
    expected = np.zeros((r, r), dtype=np.int64)
    expected[np.arange(r), list(dual)] = 1
    bad = np.argwhere(N[:, :, 0] != expected)
    if len(bad):
        i, j = bad[0]
        if found("duality", (i, j, 0), f"c_(i,j)^0 = {int(N[i, j, 0])}, expected {int(expected[i, j])}"):
            return report

    # (b_i b_j) b_k  versus  b_i (b_j b_k), coefficient of b_l
    left = np.einsum("ijm,mkl->ijkl", N, N)
    right = np.einsum("jkm,iml->ijkl", N, N)
    bad = np.argwhere(left != right)
    if len(bad):
        w = bad[0]
        if found("associativity", w, f"(ij)k has {int(left[tuple(w)])}, i(jk) has {int(right[tuple(w)])}"):
            return report

    d = np.array(dual)
    flipped = N[np.ix_(d, d, d)].transpose(1, 0, 2)
    bad = np.argwhere(N != flipped)
    if len(bad):
        i, j, k = bad[0]
        found("anti-involution", (i, j, k), f"N[i][j][k]={int(N[i, j, k])} but N[j*][i*][k*]={int(flipped[i, j, k])}")
    return report
