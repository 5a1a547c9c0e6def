"""Profiles, branch filters, the irrational classification and the enumerator."""

import itertools

import pytest

from nearfusion.classify import (
    EXCLUSION_TAG,
    GnqProfile,
    RationalDimension,
    RationalGlobalDimension,
    adjoint_dichotomy,
    categorifiability_filter,
    classify_irrational,
    classify_ring,
    conjecture_report,
    enumerate_gnq,
    enumerate_gnq_naive,
    gnq_profile,
    match_conjecture,
    naive_search,
    nilpotency_class,
    supertannakian_branch_filter,
    tannakian_branch_filter,
)
from nearfusion.fusion import (
    NotGeneralizedNearGroup,
    are_isomorphic,
    catalog_get,
    construct_group_ring,
    construct_near_group,
    construct_rmn,
    direct_product,
    fpdim_basis,
    verify_axioms,
)
from nearfusion.groups import InvalidSubgroup
from nearfusion.scalars import QuadraticValue, largest_root_quadratic

PHI = largest_root_quadratic(1, 1)
SILVER = QuadraticValue(1, 1, 2)


# profiles


def test_profile_fib_and_gnq8():
    p = gnq_profile(catalog_get("fib"))
    assert (p.G_order, p.H_order, p.r, p.k, p.d) == (1, 1, 1, 1, PHI)
    p = gnq_profile(catalog_get("gnq8"))
    assert (p.G_order, p.H_order, p.r, p.k, p.d) == (2, 1, 2, 2, SILVER)
    assert p.total_fpdim == QuadraticValue(8, 4, 2)


@pytest.mark.parametrize("G, ell", [([], 1), ([2], 0), ([3], 2), ([2, 2], 4)])
def test_profile_near_groups(G, ell):
    ring = construct_near_group(G, ell)
    p = gnq_profile(ring)
    order = construct_group_ring(G).rank
    assert p.H_order == order and p.r == ell
    assert p.total_fpdim == fpdim_basis(ring).total()
    assert p.d * p.d == p.r * p.d + p.H_order


def test_profile_requires_gnq():
    with pytest.raises(NotGeneralizedNearGroup):
        gnq_profile(construct_group_ring([4]))


def test_categorifiability_filter():
    assert categorifiability_filter(GnqProfile.from_parameters(1, 1, 1))
    assert not categorifiability_filter(GnqProfile.from_parameters(3, 3, 1))
    with pytest.raises(RationalDimension):
        categorifiability_filter(GnqProfile.from_parameters(1, 1, 0))


# branch filters


def test_branch_truth_tables():
    tan = {(k, h) for k, h in itertools.product(range(1, 9), repeat=2) if tannakian_branch_filter(k, h).accepted}
    sup = {(k, h) for k, h in itertools.product(range(1, 9), repeat=2)
           if supertannakian_branch_filter(k, h).accepted}
    assert tan == {(1, 1)}
    assert sup == {(2, 1)}


def test_exclusion_tag_only_at_1_4():
    tagged = set()
    for k, h in itertools.product(range(1, 9), repeat=2):
        for v in (tannakian_branch_filter(k, h), supertannakian_branch_filter(k, h)):
            if v.exclusion_tag:
                tagged.add((k, h))
                assert v.exclusion_tag == EXCLUSION_TAG
                assert v.first_failure is None
    assert tagged == {(1, 4)}
    assert tannakian_branch_filter(1, 4).first_failure is not None


def test_trace_is_readable():
    v = tannakian_branch_filter(3, 2)
    assert not v.accepted
    assert "FAIL" in str(v.first_failure)
    assert v.as_dict()["accepted"] is False


def test_branch_argument_checks():
    with pytest.raises(ValueError):
        tannakian_branch_filter(0, 1)


# classification driver


def test_classify_irrational():
    res = classify_irrational(8, 8, 16)
    got = sorted((s.k, s.H_order, s.profile.d, s.catalog_name) for s in res.survivors)
    assert got == [(1, 1, PHI, "fib"), (2, 1, SILVER, "gnq8")]
    assert all(r.stage in ("rational", "categorifiability", "branch") for r in res.rejections)


def test_classify_bounds():
    with pytest.raises(ValueError):
        classify_irrational(1, 8, 16)


def test_classify_ring():
    v = classify_ring(direct_product(catalog_get("fib"), construct_group_ring([2])))
    assert v.survivor_class == "fib"
    assert v.factorization.L.invariants() == [2]
    v = classify_ring(catalog_get("gnq8"))
    assert v.survivor_class == "gnq8"
    with pytest.raises(RationalGlobalDimension):
        classify_ring(catalog_get("ising"))
    v = classify_ring(construct_near_group([3], 1))
    assert v.survivor_class is None and not v.verdicts
    v = classify_ring(construct_near_group([2], 2))
    assert v.survivor_class is None
    assert not any(x.accepted for x in v.verdicts)


def test_nilpotency():
    assert nilpotency_class(catalog_get("fib")) is None
    assert nilpotency_class(catalog_get("ising")) == 2
    assert nilpotency_class(construct_group_ring([3])) == 1
    for m, n in itertools.product((1, 2, 3), repeat=2):
        assert nilpotency_class(construct_rmn(m, n)) is not None
        assert adjoint_dichotomy(construct_rmn(m, n))


def test_nilpotent_exactly_when_r_is_zero():
    for G, ell in itertools.product(([2], [3], [2, 2], [4]), range(3)):
        ring = construct_near_group(G, ell)
        assert (nilpotency_class(ring) is not None) == (ell == 0)


# enumeration


def test_enumerate_recovers_fib_and_ising():
    fib = enumerate_gnq([], [], 1)
    assert len(fib) == 1 and are_isomorphic(fib[0], catalog_get("fib"))
    ising = enumerate_gnq([2], [(1,)], (0, 2))
    assert len(ising) == 1 and are_isomorphic(ising[0], catalog_get("ising"))


def test_enumerate_finds_gnq8_and_near_group():
    found = enumerate_gnq([2], [], 2, mult_bound=2)
    assert any(are_isomorphic(r, catalog_get("gnq8")) for r in found)
    found = enumerate_gnq([2, 2], [(1, 0), (0, 1)], 4, mult_bound=4)
    assert any(are_isomorphic(r, construct_near_group([2, 2], 4)) for r in found)


def test_enumerated_rings_are_valid():
    for G, H, r in [([2], [(1,)], 0), ([2, 2], [(1, 0)], 0), ([4], [(2,)], 2), ([3], [], 1)]:
        for ring in enumerate_gnq(G, H, r, mult_bound=2):
            assert verify_axioms(ring).ok
            p = gnq_profile(ring)
            assert p.r == r


def test_enumerate_empty_and_errors():
    assert enumerate_gnq([], [], 0) == []
    with pytest.raises(InvalidSubgroup):
        enumerate_gnq([2], [(5, 5)], 0)


def test_naive_matches_pruned_small():
    for G, H in [([2], [(1,)]), ([2], []), ([], [])]:
        naive = naive_search(G, H, mult_bound=2)
        for r in range(0, 3):
            a = enumerate_gnq(G, H, r, mult_bound=2)
            b = enumerate_gnq_naive(G, H, r, mult_bound=2)
            assert len(a) == len(b)
            assert all(any(are_isomorphic(x, y) for y in b) for x in a)
            assert len(naive.get(r, [])) >= len(b)


# conjecture evidence


def test_match_conjecture():
    m = match_conjecture(direct_product(construct_rmn(2, 1), construct_group_ring([3])))
    assert (m.m, m.n, m.K) == (2, 1, (3,))
    assert match_conjecture(catalog_get("ising")).m == 1
    assert match_conjecture(catalog_get("fib")) is None


def test_conjecture_report_small():
    rep = conjecture_report(G_max=4, noninv_max=2)
    rows = rep["matched"] + rep["unmatched"]
    assert rows
    assert all(r.nilpotency is not None for r in rows)
    for r in rep["matched"]:
        assert r.match is not None
