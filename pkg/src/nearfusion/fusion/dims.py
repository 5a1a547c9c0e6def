"""Frobenius-Perron dimensions, numeric and exact."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..scalars import MixedFieldError, QuadraticValue
from .ring import FusionRing


class ExactUnavailable(ArithmeticError):
    """Dimensions are not all in one field of degree at most 2."""


@dataclass(frozen=True)
class Dimensions:
    numeric: tuple[float, ...]
    exact: tuple[QuadraticValue, ...] | None
    reason: str = ""

    def require_exact(self) -> tuple[QuadraticValue, ...]:
        if self.exact is None:
            raise ExactUnavailable(self.reason)
        return self.exact

    def total(self):
        """``FPdim(R) = sum FPdim(b)**2``, exact when possible."""
        if self.exact is not None:
            return sum((d * d for d in self.exact), QuadraticValue(0))
        return float(sum(x * x for x in self.numeric))


def perron_vector(ring: FusionRing, tol: float = 1e-12, max_iter: int = 100_000) -> np.ndarray:
    """Common Perron eigenvector of the left multiplication matrices, scaled so entry 0 is 1.

    Power iteration runs on the sum of all multiplication matrices, which has
    strictly positive entries for any fusion ring, so it converges.
    """
    M = ring.N.sum(axis=0).T.astype(float)
    v = np.ones(ring.rank)
    for _ in range(max_iter):
        w = M @ v
        w /= w[0]
        if np.max(np.abs(w - v)) < tol:
            return w
        v = w
    raise ArithmeticError("power iteration did not converge")


def numeric_fpdims(ring: FusionRing) -> np.ndarray:
    if "numeric_fpdims" not in ring._cache:
        v = perron_vector(ring)
        # v is a common eigenvector: L_x v = FPdim(x) v
        for x in range(ring.rank):
            if np.max(np.abs(ring.left_matrix(x) @ v - v[x] * v)) > 1e-9 * max(1.0, float(v.max())) ** 2:
                raise ArithmeticError(f"Perron vector is not an eigenvector of L_{x}")
        ring._cache["numeric_fpdims"] = v
    return ring._cache["numeric_fpdims"]


def _near_int(x: float, tol: float = 1e-7) -> int | None:
    n = round(x)
    return int(n) if abs(x - n) < tol else None


def _identify(ring: FusionRing, x: int, value: float) -> QuadraticValue | None:
    n = _near_int(value)
    if n is not None:
        return QuadraticValue(n)
    # a degree-2 dimension has its Galois conjugate among the eigenvalues of L_x
    for lam in np.linalg.eigvals(ring.left_matrix(x).astype(float)):
        if abs(lam.imag) > 1e-9 or abs(lam.real - value) < 1e-9:
            continue
        s = _near_int(value + lam.real)
        p = _near_int(value * lam.real)
        if s is None or p is None:
            continue
        disc = s * s - 4 * p
        if disc <= 0:
            continue
        cand = (QuadraticValue(s) + QuadraticValue.sqrt(disc)) / 2
        if abs(float(cand) - value) < 1e-9:
            return cand
    return None


def is_character(ring: FusionRing, values) -> tuple[int, int] | None:
    """First pair (x, y) where ``d_x d_y != sum_k N[x][y][k] d_k``, or None."""
    for x in range(ring.rank):
        for y in range(ring.rank):
            rhs = sum((int(c) * values[k] for k, c in ring.product(x, y).items()), QuadraticValue(0))
            if values[x] * values[y] != rhs:
                return (x, y)
    return None


def fpdim_basis(ring: FusionRing) -> Dimensions:
    """Frobenius-Perron dimensions of the basis.

    Exact values are returned when every dimension lies in a common
    ``Q(sqrt(D))``; they are certified by checking exactly that they form a
    positive character of the ring, which pins down FPdim uniquely.
    """
    if "fpdims" in ring._cache:
        return ring._cache["fpdims"]
    numeric = numeric_fpdims(ring)
    exact: list[QuadraticValue] = []
    reason = ""
    for x, value in enumerate(numeric):
        cand = _identify(ring, x, float(value))
        if cand is None:
            reason = f"FPdim({ring.labels[x]}) ~ {value:.12g} is not of degree <= 2"
            break
        exact.append(cand)
    result_exact = None
    if not reason:
        fields = {d.D for d in exact if not d.is_rational}
        if len(fields) > 1:
            reason = f"dimensions lie in different quadratic fields {sorted(fields)}"
        else:
            try:
                bad = is_character(ring, exact)
            except MixedFieldError as exc:
                bad, reason = None, str(exc)
            if bad is not None:
                reason = f"identified dimensions fail the character law at {bad}"
            elif not reason and all(d > 0 for d in exact):
                result_exact = tuple(exact)
                for d, v in zip(exact, numeric):
                    if abs(float(d) - v) > 1e-9:
                        raise ArithmeticError(f"exact {d} and numeric {v} disagree")
            elif not reason:
                reason = "identified character is not positive"
    dims = Dimensions(tuple(float(v) for v in numeric), result_exact, reason)
    ring._cache["fpdims"] = dims
    return dims


def exact_fpdims(ring: FusionRing) -> tuple[QuadraticValue, ...]:
    return fpdim_basis(ring).require_exact()
