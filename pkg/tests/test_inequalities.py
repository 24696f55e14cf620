import math

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from bsdiagram.diagram import phi_minus, phi_plus
from bsdiagram.geometry import RaviParams, Triangle, ravi_to_sides
from bsdiagram.inequalities import (
    NAMES,
    check_acute_refinement,
    check_fh,
    check_optimal_bounds,
    check_perimeter_forms,
    check_reverse_fh,
    check_weitzenbock,
    count_violations,
    empirical_sharp_constants,
    evaluate_sides,
    full_report,
)

from oracles import random_ravi_triangles

SQ3 = math.sqrt(3)
ravi_coord = st.one_of(st.just(0.0), st.floats(min_value=1e-4, max_value=10.0))


def test_weitzenbock():
    r = check_weitzenbock(Triangle(1, 1, 1))
    assert r.holds and r.near_equality
    r = check_weitzenbock(Triangle(3, 4, 5))
    assert (r.lhs, r.rhs) == pytest.approx((50, 24 * SQ3))
    assert r.holds and not r.near_equality
    r = check_weitzenbock(Triangle(1, 1, 0))
    assert (r.lhs, r.rhs, r.holds) == (2, 0, True)


@pytest.mark.parametrize("sides", [(1, 1, 1), (1, 1, 0), (2, 2, 0)])
def test_fh_equality_cases(sides):
    r = check_fh(Triangle(*sides))
    assert r.holds and r.near_equality


@pytest.mark.parametrize("sides", [(3, 4, 5), (1, 0.5, 0.5), (2, 3, 4)])
def test_fh_strict_elsewhere(sides):
    r = check_fh(Triangle(*sides))
    assert r.holds and not r.near_equality


def test_fh_345():
    r = check_fh(Triangle(3, 4, 5))
    assert r.slack == pytest.approx(50 - 6 - 24 * SQ3)


@pytest.mark.parametrize("sides", [(1, 1, 1), (1, 0.5, 0.5), (4, 2, 2)])
def test_reverse_fh_equality_cases(sides):
    r = check_reverse_fh(Triangle(*sides))
    assert r.holds and r.near_equality


def test_reverse_fh_345():
    r = check_reverse_fh(Triangle(3, 4, 5))
    assert r.holds and not r.near_equality
    assert r.rhs == pytest.approx(18 + 24 * SQ3)


def test_perimeter_forms():
    lo, up = check_perimeter_forms(Triangle(1, 1, 1))
    assert lo.near_equality and up.near_equality
    lo, up = check_perimeter_forms(Triangle(1, 1, 0))
    assert (lo.lhs, lo.rhs) == (4, 4) and lo.near_equality and not up.near_equality
    lo, up = check_perimeter_forms(Triangle(1, 0.5, 0.5))
    assert (up.lhs, up.rhs) == (4, 4) and up.near_equality and not lo.near_equality


def test_optimal_bounds_examples():
    up, lo = check_optimal_bounds(Triangle(1, 1, 1))
    assert up.near_equality and lo.near_equality
    assert up.lhs == pytest.approx(81)
    up, lo = check_optimal_bounds(Triangle(1, 0.5, 0.5))
    # 16 - 6 (1/2) 4 - 4 sqrt2 (1/2)^1.5 2 = 16 - 12 - 4 = 0
    assert lo.applicable and lo.rhs == pytest.approx(0, abs=1e-13) and lo.near_equality
    up, lo = check_optimal_bounds(Triangle(3, 4, 5))
    assert up.lhs == pytest.approx(15552)
    assert up.rhs == pytest.approx(20736 - 5184 + 4 * math.sqrt(2) * 6**1.5 * 12)
    assert up.holds and not up.near_equality


def test_optimal_lower_not_applicable():
    # Q = 2 > p^2 / 8 = 1/2
    up, lo = check_optimal_bounds(Triangle(1, 1, 0))
    assert up.applicable and up.near_equality
    assert not lo.applicable and lo.holds is None and not lo.violated


def test_acute_refinement():
    assert check_acute_refinement(Triangle(1, 1, 1)).near_equality
    r = check_acute_refinement(Triangle(5, 5, 6))
    assert r.holds and not r.near_equality
    assert r.rhs == pytest.approx((6 - math.sqrt(6)) + 48 * SQ3)
    assert not check_acute_refinement(Triangle(3, 4, 5)).applicable
    assert not check_acute_refinement(Triangle(1, 1, 0)).applicable


def test_full_report_examples():
    rep = full_report(Triangle(1, 1, 1))
    assert rep.all_hold
    assert set(rep.near_equalities) == set(NAMES)
    rep = full_report(Triangle(1, 1, 0))
    assert rep.all_hold
    assert {"finsler_hadwiger", "perimeter_lower"} <= set(rep.near_equalities)
    rep = full_report(Triangle(3, 4, 5))
    assert rep.all_hold
    assert all(not r.near_equality for r in rep if r.applicable)
    assert [r.name for r in rep] == list(NAMES)


def test_report_linear_forms():
    rep = full_report(Triangle(1, 0.5, 0.5))
    assert rep["linear_lower"].near_equality
    assert rep["linear_upper"].slack == pytest.approx(0.75)


@given(ravi_coord, ravi_coord, ravi_coord)
def test_fh_implies_weitzenbock_with_more_slack(x, y, z):
    if x + y + z == 0:
        return
    t = ravi_to_sides(RaviParams(x, y, z))
    fh, w = check_fh(t), check_weitzenbock(t)
    if fh.holds:
        assert w.holds
        assert w.slack >= fh.slack - 1e-12 * max(1.0, w.lhs)


@given(ravi_coord, ravi_coord, ravi_coord)
def test_perimeter_forms_equivalent(x, y, z):
    if x + y + z == 0:
        return
    t = ravi_to_sides(RaviParams(x, y, z))
    lo, up = check_perimeter_forms(t)
    assert lo.holds == check_fh(t).holds
    assert up.holds == check_reverse_fh(t).holds


@given(st.sampled_from([1e-3, 1.0, 1e3]), ravi_coord, ravi_coord, ravi_coord)
def test_verdicts_scale_invariant(k, x, y, z):
    if x + y + z == 0:
        return
    t = ravi_to_sides(RaviParams(x, y, z))
    flags = [(r.holds, r.near_equality) for r in full_report(t)]
    scaled = [(r.holds, r.near_equality) for r in full_report(t.scaled(k))]
    assert flags == scaled


def test_all_hold_on_random_population():
    a, b, c = random_ravi_triangles(10**5, seed=21)
    assert count_violations(a, b, c) == 0


def test_vector_and_scalar_paths_agree():
    a, b, c = random_ravi_triangles(50, seed=2)
    res = evaluate_sides(a, b, c)
    for i in range(50):
        rep = full_report(Triangle(a[i], b[i], c[i]))
        for r in rep:
            assert r.applicable == bool(res[r.name]["applicable"][i])
            if r.applicable:
                assert r.slack == res[r.name]["slack"][i]
                assert r.holds == bool(res[r.name]["holds"][i])


def test_optimal_dominates_linear():
    X = np.linspace(0, 0.5, 1000)
    assert np.all(phi_plus(X) <= 1 - 2 * X)
    X = np.linspace(0, 0.125, 1000)
    assert np.all(phi_minus(X) >= 1 - 8 * X)


def test_empirical_sharp_constants():
    assert empirical_sharp_constants(10_000) == pytest.approx((2, 8), abs=1e-6)
    assert empirical_sharp_constants(10) == pytest.approx((2, 8), abs=0.05)
    with pytest.raises(ValueError):
        empirical_sharp_constants(9)
