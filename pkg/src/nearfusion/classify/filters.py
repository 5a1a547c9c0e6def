"""Necessary conditions on ``(k, |H|)`` for a braided categorification.

Each branch filter evaluates every step and records it in a trace, so a
rejection shows all failing constraints rather than only the first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..scalars import QuadraticValue, absolute_norm, galois_conjugate, largest_root_quadratic
from .profile import GnqProfile, RationalDimension

TANNAKIAN = "Tannakian"
SUPER_TANNAKIAN = "SuperTannakian"

# dimensions of the small categories the super-Tannakian step must land on,
# taken from known low-rank classifications rather than derived here
ADMISSIBLE_DIMS_TAG = "low-rank-classification"
ADMISSIBLE_DIMS = (
    QuadraticValue(Fraction(5, 2), Fraction(1, 2), 5),
    QuadraticValue(8, 4, 2),
)
EXCLUSION_TAG = "R(C_2^2,4)-no-braided"


@dataclass(frozen=True)
class TraceStep:
    constraint: str
    values: str
    passed: bool

    def __str__(self):
        return f"[{'pass' if self.passed else 'FAIL'}] {self.constraint}: {self.values}"


@dataclass(frozen=True)
class BranchVerdict:
    branch: str
    k: int
    H_order: int
    trace: tuple[TraceStep, ...]
    exclusion_tag: str | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def accepted(self) -> bool:
        return all(s.passed for s in self.trace) and not self.exclusion_tag

    @property
    def first_failure(self) -> TraceStep | None:
        return next((s for s in self.trace if not s.passed), None)

    def as_dict(self) -> dict:
        return {
            "branch": self.branch, "k": self.k, "H_order": self.H_order, "accepted": self.accepted,
            "exclusion_tag": self.exclusion_tag,
            "trace": [{"constraint": s.constraint, "values": s.values, "passed": s.passed} for s in self.trace],
        }


def categorifiability_filter(p: GnqProfile) -> bool:
    """``|H|`` must divide ``r`` when ``d`` is irrational."""
    if p.d.is_rational:
        raise RationalDimension(f"d = {p.d} is rational")
    return p.r % p.H_order == 0


def _check_args(k: int, H_order: int):
    if k < 1 or H_order < 1:
        raise ValueError("k and |H| must be positive")


def tannakian_branch_filter(k: int, H_order: int) -> BranchVerdict:
    _check_args(k, H_order)
    d = largest_root_quadratic(k * H_order, H_order)
    s = galois_conjugate(d)
    steps = [
        TraceStep("d sigma(d) = -|H|", f"d = {d}, sigma(d) = {s}, product = {d * s}", d * s == -H_order),
        TraceStep("d + sigma(d) = k|H|", f"{d + s} vs {k * H_order}", d + s == k * H_order),
    ]
    ratio = -s / d
    identity = ratio == 1 / (1 + k * d)
    steps.append(TraceStep("-sigma(d)/d = 1/(1 + kd)", f"{ratio}", identity))
    steps.append(TraceStep("-sigma(d)/d > 1/3", f"kd = {k * d}, need kd < 2", ratio > Fraction(1, 3)))
    steps.append(TraceStep("d > 1 and kd < 2 force k = 1", f"k = {k}", k == 1))
    steps.append(TraceStep("d < 2", f"d = {d} ~ {float(d):.6f}", d < 2))
    return BranchVerdict(TANNAKIAN, k, H_order, tuple(steps))


def _is_rational_square(q: Fraction) -> bool:
    def sq(n):
        r = int(n**0.5)
        while r * r > n:
            r -= 1
        while (r + 1) ** 2 <= n:
            r += 1
        return r * r == n
    return q >= 0 and sq(q.numerator) and sq(q.denominator)


def supertannakian_branch_filter(k: int, H_order: int) -> BranchVerdict:
    _check_args(k, H_order)
    d = largest_root_quadratic(k * H_order, H_order)
    steps = []
    # (i) p_X^2 = r_X / |H| must be a rational square for some r_X in {1, 2}
    r_choices = [rx for rx in (1, 2) if _is_rational_square(Fraction(rx, H_order))]
    steps.append(TraceStep("(i) r_X in {1,2} with r_X/|H| a rational square",
                           f"|H| = {H_order}, r_X candidates = {r_choices}", bool(r_choices)))
    # (ii) (p_X d)^2 = q_X d + r_X with q_X = k r_X
    ok = bool(r_choices) and all(
        Fraction(rx, H_order) * d * d == (k * rx) * d + rx for rx in r_choices)
    steps.append(TraceStep("(ii) (p_X d)^2 = q_X d + r_X with q_X = k r_X",
                           ", ".join(f"r_X={rx}: q_X={k * rx}" for rx in r_choices) or "no r_X", ok))
    # (iii) dim of the de-equivariantization, 2(2 + kd), is one of two known values
    kd_options = [v / 2 - 2 for v in ADMISSIBLE_DIMS]
    steps.append(TraceStep(f"(iii) 2(2+kd) in admissible set [{ADMISSIBLE_DIMS_TAG}]",
                           "admissible: " + ", ".join(str(v) for v in ADMISSIBLE_DIMS)
                           + f"; this profile: 2(2+kd) = {2 * (2 + k * d)}", True))
    # (iv) 2 + kd is an algebraic integer, so 2(2+kd)/2 must be one too
    survivors = [kd for v, kd in zip(ADMISSIBLE_DIMS, kd_options) if (v / 2).is_algebraic_integer()]
    steps.append(TraceStep("(iv) parity: 2(2+kd)/2 an algebraic integer",
                           "surviving kd: " + ", ".join(str(x) for x in survivors), bool(survivors)))
    # (v) kd = 2 + 2 sqrt(2) and k divides its norm
    target = survivors[0] if survivors else None
    steps.append(TraceStep("(v) kd = 2+2sqrt(2)", f"kd = {k * d}", target is not None and k * d == target))
    norm = absolute_norm(target) if target is not None else None
    steps.append(TraceStep("(v) k divides |norm(kd)|", f"k = {k}, |norm| = {norm}",
                           norm is not None and norm.denominator == 1 and norm.numerator % k == 0))
    # (vi) k = 1 forces |H| = 4, i.e. R(C_2^2, 4), which has no braided categorification
    tag = EXCLUSION_TAG if (k == 1 and all(s.passed for s in steps)) else None
    steps.append(TraceStep("(vi) k = 1 excluded by citation", f"k = {k}, |H| = {H_order}"
                           + (f" -> tagged {EXCLUSION_TAG}" if tag else ""), True))
    return BranchVerdict(SUPER_TANNAKIAN, k, H_order, tuple(steps), tag)
