"""Exit criteria of the project, one test per criterion.

Each test records a PASS/FAIL line, printed in the terminal summary.
"""
import time

import numpy as np
import pytest

from bsdiagram.cli import main
from bsdiagram.diagram import (
    DiagramPoint,
    contains_points,
    cubic_h,
    diagram_coordinates,
    invert,
    map_point,
    phi_minus,
    phi_plus,
    slice,
)
from bsdiagram.figures import read_polylines
from bsdiagram.geometry import Triangle
from bsdiagram.inequalities import (
    NAMES,
    empirical_sharp_constants,
    evaluate_sides,
    full_report,
)
from bsdiagram.sampling import grid_points, sample_random

from oracles import brute_force_slice


def test_boundary_matches_brute_force(criterion):
    with criterion(1, "boundary curves match 10^6-point z-grid extremes within 1e-6"):
        start = time.perf_counter()
        worst = 0.0
        for X in np.linspace(0, 0.5, 50):
            y_lo, y_hi = brute_force_slice(X, n=10**6)
            worst = max(worst, abs(y_hi - phi_plus(X)))
            if X <= 0.125:
                worst = max(worst, abs(y_lo - phi_minus(X)))
            else:
                assert y_lo == pytest.approx(0.0, abs=1e-6)
        assert worst <= 1e-6
        assert time.perf_counter() - start < 10


def test_inequality_suite(criterion):
    with criterion(2, "10^5 random triangles, zero violations at rel. tol 1e-9"):
        start = time.perf_counter()
        s = sample_random(10**5, seed=2024)
        res = evaluate_sides(*s.sides.T, rel_tol=1e-9)
        for name in NAMES:
            r = res[name]
            assert r["applicable"].any(), name
            assert not (r["applicable"] & ~r["holds"]).any(), name
        assert time.perf_counter() - start < 5


def test_equality_taxonomy(criterion):
    with criterion(3, "equality cases map exactly and are flagged"):
        cases = {(1, 1, 1): (0.0, 1.0), (1, 1, 0): (0.5, 0.0), (1, 0.5, 0.5): (0.125, 0.0)}
        for sides, (X, Y) in cases.items():
            p = map_point(Triangle(*sides))
            assert abs(p.X - X) <= 1e-12 and abs(p.Y - Y) <= 1e-12

        eq = full_report(Triangle(1, 1, 1)).near_equalities
        assert "finsler_hadwiger" in eq and "reverse_finsler_hadwiger" in eq
        assert "weitzenbock" in eq
        eq = full_report(Triangle(1, 1, 0)).near_equalities
        assert "finsler_hadwiger" in eq and "perimeter_lower" in eq
        assert "reverse_finsler_hadwiger" not in eq
        eq = full_report(Triangle(1, 0.5, 0.5)).near_equalities
        assert "reverse_finsler_hadwiger" in eq and "perimeter_upper" in eq
        assert "finsler_hadwiger" not in eq


def test_sharp_constants(criterion):
    with criterion(4, "empirical sharp constants are 2 and 8 within 1e-6"):
        c_min, c_max = empirical_sharp_constants(10**4)
        assert abs(c_min - 2) <= 1e-6
        assert abs(c_max - 8) <= 1e-6


def test_round_trip_inversion(criterion):
    with criterion(5, "50x50 grid inverts and maps back within 1e-9"):
        start = time.perf_counter()
        pts = grid_points(50, 50)
        errs = []
        for X, Y in pts:
            q = map_point(invert(DiagramPoint(X, Y)))
            errs.append(max(abs(q.X - X), abs(q.Y - Y)))
        assert max(errs) <= 1e-9
        assert time.perf_counter() - start < 5


def test_optimal_dominates_linear(criterion):
    with criterion(6, "sharp bounds dominate the linear ones, touching only at endpoints"):
        X = np.linspace(0, 0.5, 1000)
        gap = (1 - 2 * X) - phi_plus(X)
        assert np.all(gap >= -1e-9)
        assert set(X[np.abs(gap) <= 1e-9]) == {0.0, 0.5}
        X = np.linspace(0, 0.125, 1000)
        gap = phi_minus(X) - (1 - 8 * X)
        assert np.all(gap >= -1e-9)
        assert set(X[np.abs(gap) <= 1e-9]) == {0.0, 0.125}


def test_zero_area_slice(criterion):
    with criterion(7, "flat triangles fill exactly X in [1/8, 1/2] at Y = 0"):
        rng = np.random.default_rng(77)
        b, c = rng.random((2, 100))
        X, Y = diagram_coordinates(b + c, b, c)
        assert np.all(Y == 0)
        assert np.all((X >= 0.125) & (X <= 0.5))
        assert map_point(Triangle(1, 0.5, 0.5)).X == 0.125
        assert map_point(Triangle(1, 1, 0)).X == 0.5


def test_figure_reproduction(tmp_path, capsys, criterion):
    with criterion(8, "plot ordering holds; 10^6 sample overlay has zero escapees"):
        svg = tmp_path / "diagram.svg"
        assert main(["plot", "-o", str(svg)]) == 0
        lines = read_polylines(svg.read_text())
        up, lo = lines["phi_plus"], lines["phi_minus"]
        assert len(up) > 512 and len(lo) > 512
        fd, fr = lines["fh_direct"], lines["fh_reverse"]
        assert np.all(up[:, 1] <= np.interp(up[:, 0], fd[:, 0], fd[:, 1]))
        assert np.all(lo[:, 1] >= np.interp(lo[:, 0], fr[:, 0], fr[:, 1]))

        samples, fig1 = tmp_path / "samples.csv", tmp_path / "fig1.svg"
        assert main(["sample", "--random", "-n", "1e6", "-o", str(samples)]) == 0
        assert main(["plot", "--samples", str(samples), "-o", str(fig1)]) == 0
        data = np.loadtxt(samples, delimiter=",", skiprows=1)
        assert len(data) == 10**6
        X, Y = diagram_coordinates(*data[:, :3].T)
        assert np.count_nonzero(~contains_points(X, Y, 1e-9)) == 0
        assert np.count_nonzero(~contains_points(data[:, 3], data[:, 4], 1e-9)) == 0
        assert 'bs:count="1000000"' in fig1.read_text()
        capsys.readouterr()


def test_monotonicity_of_h(criterion):
    with criterion(9, "h rises on [z-, z1], falls on [z1, z2], rises on [z2, z+]"):
        rng = np.random.default_rng(99)
        for X in rng.uniform(0, 0.5, 100):
            sb = slice(X)
            for lo, hi, rising in ((sb.z_lo, sb.z_crit_1, True),
                                   (sb.z_crit_1, sb.z_crit_2, False),
                                   (sb.z_crit_2, sb.z_hi, True)):
                d = np.diff(cubic_h(np.linspace(lo, hi, 2001), X))
                assert np.all(d >= -1e-15) if rising else np.all(d <= 1e-15)
            # so h is not increasing on [z1, z+] as a whole
            mid = 0.5 * (sb.z_crit_1 + sb.z_crit_2)
            assert cubic_h(mid, X) < cubic_h(sb.z_crit_1, X)
