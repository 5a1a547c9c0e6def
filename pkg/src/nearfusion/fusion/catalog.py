"""Built-in fusion rings, looked up by name or descriptor."""

from __future__ import annotations

import re

import numpy as np

from .constructors import construct_group_ring, construct_near_group, construct_rmn
from .ring import FusionRing


class UnknownName(KeyError):
    pass


def from_rules(labels: list[str], rules: dict[tuple[str, str], dict[str, int]], name: str,
               commutative: bool = True) -> FusionRing:
    """Build a ring from products of non-unit labels; missing unit rows are filled in."""
    r = len(labels)
    pos = {s: i for i, s in enumerate(labels)}
    N = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        N[0, i, i] = N[i, 0, i] = 1
    for (x, y), out in rules.items():
        for z, c in out.items():
            N[pos[x], pos[y], pos[z]] = c
            if commutative:
                N[pos[y], pos[x], pos[z]] = c
    return FusionRing(N, labels=labels, name=name)


def _fib() -> FusionRing:
    return from_rules(["1", "rho"], {("rho", "rho"): {"1": 1, "rho": 1}}, "fib")


def _gnq8() -> FusionRing:
    # even part of the level-6 su(2) rules: spins 0, 3 (delta) and 1, 2 (Y, Z)
    rules = {
        ("delta", "delta"): {"1": 1},
        ("delta", "Y"): {"Z": 1},
        ("delta", "Z"): {"Y": 1},
        ("Y", "Y"): {"1": 1, "Y": 1, "Z": 1},
        ("Z", "Z"): {"1": 1, "Y": 1, "Z": 1},
        ("Y", "Z"): {"delta": 1, "Y": 1, "Z": 1},
    }
    return from_rules(["1", "delta", "Y", "Z"], rules, "gnq8")


_NAMED = {
    "fib": _fib,
    "gnq8": _gnq8,
    "ising": lambda: construct_near_group([2], 0, name="ising"),
    "rep_q8": lambda: construct_near_group([2, 2], 0, name="rep_q8"),
    "rep_s3": lambda: construct_near_group([2], 1, name="rep_s3"),
    "ng_c2c2_4": lambda: construct_near_group([2, 2], 4, name="ng_c2c2_4"),
}

_GROUP_RE = re.compile(r"^Z(?:\[)?C(\d+)((?:xC\d+)*)(?:\])?$")
_RMN_RE = re.compile(r"^R\((\d+),(\d+)\)$")
_NEAR_RE = re.compile(r"^R\(\[([\d,\s]*)\],(\d+)\)$")


def catalog_names() -> list[str]:
    return sorted(_NAMED)


def catalog_get(name: str) -> FusionRing:
    """Named entry, or a descriptor: ``ZC4``, ``ZC2xC2``, ``R(2,2)``, ``R([2,2],4)``."""
    key = name.strip()
    if key in _NAMED:
        return _NAMED[key]()
    compact = key.replace(" ", "")
    m = _GROUP_RE.match(compact)
    if m:
        factors = [int(m.group(1))] + [int(t) for t in m.group(2).split("xC") if t]
        return construct_group_ring(factors, name=compact)
    if compact in ("Z1", "Z[1]", "trivial"):
        return construct_group_ring([], name="trivial")
    m = _RMN_RE.match(compact)
    if m:
        return construct_rmn(int(m.group(1)), int(m.group(2)))
    m = _NEAR_RE.match(compact)
    if m:
        factors = [int(t) for t in m.group(1).split(",") if t]
        return construct_near_group(factors, int(m.group(2)), name=compact)
    raise UnknownName(name)
