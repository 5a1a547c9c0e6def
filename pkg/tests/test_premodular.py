"""Premodular data: S-matrix via the balancing sum, centralizers, twist constraints."""

import itertools
import random
from fractions import Fraction

import pytest

from nearfusion.fusion import catalog_get, construct_near_group
from nearfusion.premetric import bilinear_form, make_premetric
from nearfusion.premodular import (
    NotACharacter,
    SphericalityViolation,
    datum_from_premetric,
    make_datum,
    s_matrix,
    symmetric_center,
    twist_constraint_on_H,
)
from nearfusion.scalars import CycloValue, embed_quadratic, QuadraticValue, RationalAngle, largest_root_quadratic

from test_premetric import random_premetric

PHI = largest_root_quadratic(1, 1)


def fib_datum():
    return make_datum(catalog_get("fib"), [1, PHI], [0, Fraction(2, 5)])


def test_fib_s_matrix():
    d = fib_datum()
    S = s_matrix(d)
    N = d.conductor
    expected = [[1, PHI], [PHI, -1]]
    for i, j in itertools.product(range(2), repeat=2):
        assert S[i][j] == embed_quadratic(QuadraticValue.coerce(expected[i][j]), N)
    assert S[1][1].to_quadratic(5) == -1
    assert symmetric_center(d) == [0]


def test_fib_conjugate_twist():
    # theta = exp(-4 pi i / 5) also gives a modular datum with the same S up to conjugation
    d = make_datum(catalog_get("fib"), [1, PHI], [0, Fraction(3, 5)])
    assert symmetric_center(d) == [0]
    assert s_matrix(d)[1][1].to_quadratic(5) == -1


def test_trivial_twists_are_symmetric():
    ring = catalog_get("rep_s3")
    d = make_datum(ring, [1, 1, 2], [0, 0, 0])
    assert symmetric_center(d) == [0, 1, 2]


def test_datum_validation():
    fib = catalog_get("fib")
    with pytest.raises(NotACharacter):
        make_datum(fib, [1, 2], [0, 0])
    with pytest.raises(SphericalityViolation):
        make_datum(fib, [1, PHI], [Fraction(1, 2), 0])
    with pytest.raises(ValueError):
        make_datum(fib, [1], [0])
    # dimension given as the Galois conjugate is still a character
    d = make_datum(fib, [1, 1 - PHI], [0, Fraction(1, 5)])
    assert symmetric_center(d) == [0]


def test_pointed_s_sign_convention():
    # q = x^2/8 on C4: s_{g,h} = exp(+2 pi i b(g, h)), b(1, 1) = 1/4
    pm = make_premetric([4], lambda g: Fraction(g[0] ** 2, 8))
    S = s_matrix(datum_from_premetric(pm))
    assert S[1][1] == CycloValue.zeta_power(1, 4)


@pytest.mark.parametrize("seed", range(12))
def test_pointed_symmetric_center_is_radical(seed):
    rng = random.Random(seed)
    factors = rng.choice([[2], [3], [4], [2, 2], [2, 4], [6], [2, 2, 2], [8]])
    pm = random_premetric(rng, factors)
    d = datum_from_premetric(pm)
    elems = pm.group.elements
    S = s_matrix(d)
    for i, j in itertools.product(range(len(elems)), repeat=2):
        assert S[i][j] == RationalAngle(pm.b(elems[i], elems[j])).to_cyclo(d.conductor)
    center = {elems[i] for i in symmetric_center(d)}
    assert center == set(bilinear_form(pm).radical)


def test_twist_constraint_rep_s3():
    ring = catalog_get("rep_s3")
    ok = make_datum(ring, [1, 1, 2], [0, 0, Fraction(1, 3)])
    assert twist_constraint_on_H(ok) == []
    bad = make_datum(ring, [1, 1, 2], [0, Fraction(1, 2), 0])
    v = twist_constraint_on_H(bad)
    assert len(v) == 1 and v[0].fails_to_centralize
    assert v[0].s_value == CycloValue.constant(-2, v[0].s_value.N)
    assert "theta" in v[0].describe(ring)


def test_twist_constraint_on_adjoint_ring():
    # R(C2, 1): rho rho = 1 + g + rho, so the ring is its own adjoint subring
    ring = construct_near_group([2], 1)
    d_rho = largest_root_quadratic(1, 2)
    d = make_datum(ring, [1, 1, d_rho], [0, Fraction(1, 2), 0])
    v = twist_constraint_on_H(d)
    assert v and v[0].ring_is_adjoint
