"""Inequalities between perimeter, area and deficit of a triangle.

Every inequality is homogeneous in the side lengths. It is evaluated as a
``(lhs, rhs)`` pair with a sense (``">="`` or ``"<="``); the slack is
oriented so that ``slack >= 0`` always means the inequality holds.

Verdicts use a relative tolerance (default ``REL_TOL``): with ``scale = max(|lhs|, |rhs|, p**d)``
(``p`` the perimeter, ``d`` the homogeneity degree)

    holds          <=>  slack >= -rel_tol * scale
    near_equality  <=>  |slack| <= rel_tol * scale

Using ``p**d`` instead of a bare 1 as the floor makes the verdicts
independent of the units the sides are measured in.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import diagram
from .geometry import Triangle, heron_area, isoperimetric_deficit, ravi_arrays

REL_TOL = 1e-9
SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
ACUTE_CONSTANT = (6 - math.sqrt(6)) / 2


@dataclass(frozen=True)
class _Spec:
    name: str
    sense: str
    degree: int
    description: str


# Order matters: reports list records in this order.
INEQUALITIES = (
    _Spec("weitzenbock", ">=", 2, "a^2+b^2+c^2 >= 4 sqrt3 S"),
    _Spec("finsler_hadwiger", ">=", 2, "a^2+b^2+c^2 >= Q + 4 sqrt3 S"),
    _Spec("reverse_finsler_hadwiger", "<=", 2, "a^2+b^2+c^2 <= 3Q + 4 sqrt3 S"),
    _Spec("perimeter_lower", ">=", 2, "p^2 >= 2Q + 12 sqrt3 S"),
    _Spec("perimeter_upper", "<=", 2, "p^2 <= 8Q + 12 sqrt3 S"),
    _Spec("optimal_upper", "<=", 4, "432 S^2 <= p^4 - 6Q p^2 + 4 sqrt2 Q^1.5 p"),
    _Spec("optimal_lower", ">=", 4, "432 S^2 >= p^4 - 6Q p^2 - 4 sqrt2 Q^1.5 p  (Q <= p^2/8)"),
    _Spec("acute_reverse_finsler_hadwiger", "<=", 2,
          "a^2+b^2+c^2 <= (6-sqrt6)/2 Q + 4 sqrt3 S  (acute)"),
    _Spec("linear_upper", "<=", 0, "Y <= 1 - 2X"),
    _Spec("linear_lower", ">=", 0, "Y >= 1 - 8X"),
)
NAMES = tuple(s.name for s in INEQUALITIES)
_SPECS = {s.name: s for s in INEQUALITIES}


@dataclass(frozen=True)
class InequalityRecord:
    """One inequality evaluated on one triangle.

    For an inequality whose hypothesis fails (``applicable`` false) the
    numeric fields are NaN and the verdicts are None.
    """

    name: str
    lhs: float
    rhs: float
    slack: float
    holds: bool | None
    near_equality: bool | None
    applicable: bool = True

    @property
    def violated(self):
        return self.applicable and not self.holds


@dataclass(frozen=True)
class InequalityReport:
    triangle: Triangle
    records: tuple

    def __getitem__(self, name):
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def __iter__(self):
        return iter(self.records)

    @property
    def violations(self):
        return [r.name for r in self.records if r.violated]

    @property
    def near_equalities(self):
        return [r.name for r in self.records if r.applicable and r.near_equality]

    @property
    def all_hold(self):
        return not self.violations


def _sides_and_functionals(a, b, c):
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    p = a + b + c
    S = heron_area(a, b, c)
    Q = isoperimetric_deficit(a, b, c)
    return a, b, c, p, S, Q


def _acute_mask(a, b, c):
    x, y, z = ravi_arrays(a, b, c)
    nondegenerate = (x > 0) & (y > 0) & (z > 0)
    s = np.sort(np.stack(np.broadcast_arrays(a, b, c)), axis=0)
    return nondegenerate & (s[2] ** 2 < s[0] ** 2 + s[1] ** 2)


def evaluate_sides(a, b, c, rel_tol=REL_TOL):
    """Evaluate every inequality on arrays of side lengths.

    Returns a dict mapping inequality name to a dict of arrays with keys
    ``lhs, rhs, slack, holds, near_equality, applicable``. Entries where
    ``applicable`` is false carry NaN numbers and False verdicts.
    """
    if rel_tol < 0:
        raise ValueError("rel_tol must be nonnegative")
    a, b, c, p, S, Q = _sides_and_functionals(a, b, c)
    sq = a * a + b * b + c * c
    p2 = p * p
    X = Q / p2
    Y = 12 * SQRT3 * S / p2
    area_term = 4 * SQRT3 * S
    quartic = p2 * p2 - 6 * Q * p2
    corner = 4 * SQRT2 * Q**1.5 * p
    everywhere = np.ones(np.shape(p), dtype=bool)

    pairs = {
        "weitzenbock": (sq, area_term, everywhere),
        "finsler_hadwiger": (sq, Q + area_term, everywhere),
        "reverse_finsler_hadwiger": (sq, 3 * Q + area_term, everywhere),
        "perimeter_lower": (p2, 2 * Q + 3 * area_term, everywhere),
        "perimeter_upper": (p2, 8 * Q + 3 * area_term, everywhere),
        "optimal_upper": (432 * S * S, quartic + corner, everywhere),
        "optimal_lower": (432 * S * S, quartic - corner,
                          Q <= p2 / 8 * (1 + 1e-12)),
        "acute_reverse_finsler_hadwiger": (sq, ACUTE_CONSTANT * Q + area_term,
                                           _acute_mask(a, b, c)),
        "linear_upper": (Y, 1 - 2 * X, everywhere),
        "linear_lower": (Y, 1 - 8 * X, everywhere),
    }

    out = {}
    for name, (lhs, rhs, applicable) in pairs.items():
        spec = _SPECS[name]
        lhs, rhs, applicable = np.broadcast_arrays(lhs, rhs, applicable)
        slack = lhs - rhs if spec.sense == ">=" else rhs - lhs
        scale = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), p**spec.degree)
        nan = np.full(np.shape(lhs), np.nan)
        out[name] = {
            "lhs": np.where(applicable, lhs, nan),
            "rhs": np.where(applicable, rhs, nan),
            "slack": np.where(applicable, slack, nan),
            "holds": applicable & (slack >= -rel_tol * scale),
            "near_equality": applicable & (np.abs(slack) <= rel_tol * scale),
            "applicable": applicable,
        }
    return out


def count_violations(a, b, c, rel_tol=REL_TOL):
    """Number of (triangle, inequality) pairs that fail, over side arrays."""
    res = evaluate_sides(a, b, c, rel_tol)
    return int(sum(np.count_nonzero(r["applicable"] & ~r["holds"]) for r in res.values()))


def _records(t: Triangle, names):
    res = evaluate_sides(t.a, t.b, t.c)
    recs = []
    for name in names:
        r = res[name]
        if bool(r["applicable"]):
            recs.append(InequalityRecord(
                name, float(r["lhs"]), float(r["rhs"]), float(r["slack"]),
                bool(r["holds"]), bool(r["near_equality"])))
        else:
            recs.append(InequalityRecord(name, math.nan, math.nan, math.nan,
                                         None, None, applicable=False))
    return recs


def check_weitzenbock(t: Triangle) -> InequalityRecord:
    return _records(t, ["weitzenbock"])[0]


def check_fh(t: Triangle) -> InequalityRecord:
    return _records(t, ["finsler_hadwiger"])[0]


def check_reverse_fh(t: Triangle) -> InequalityRecord:
    return _records(t, ["reverse_finsler_hadwiger"])[0]


def check_perimeter_forms(t: Triangle):
    """``(p^2 >= 2Q + 12 sqrt3 S, p^2 <= 8Q + 12 sqrt3 S)``."""
    return tuple(_records(t, ["perimeter_lower", "perimeter_upper"]))


def check_optimal_bounds(t: Triangle):
    """The sharp quartic bounds on ``432 S^2`` as ``(upper, lower)``.

    The lower bound is only claimed when ``Q <= p^2 / 8``; otherwise its
    record is marked not applicable.
    """
    return tuple(_records(t, ["optimal_upper", "optimal_lower"]))


def check_acute_refinement(t: Triangle) -> InequalityRecord:
    return _records(t, ["acute_reverse_finsler_hadwiger"])[0]


def full_report(t: Triangle) -> InequalityReport:
    return InequalityReport(t, tuple(_records(t, NAMES)))


def empirical_sharp_constants(n_boundary=10_000, x_floor=1e-9):
    """Estimate the best constants in ``1 - c_min X >= Y >= 1 - c_max X``.

    ``c_min`` is the minimum of ``(1 - phi_plus(X)) / X`` along the upper
    boundary and ``c_max`` the maximum of ``(1 - Y) / X`` along the lower
    boundary (the curve ``phi_minus`` followed by the segment ``Y = 0``).
    Both are sampled with ``n_boundary`` points per piece, endpoints
    included. Points with ``X < x_floor`` are skipped.
    """
    if n_boundary < 10:
        raise ValueError("n_boundary must be at least 10")
    curves = diagram.boundary(n_boundary)
    xu, yu = curves["upper"]
    xl = np.concatenate([curves["lower"][0], curves["flat"][0]])
    yl = np.concatenate([curves["lower"][1], curves["flat"][1]])
    keep_u, keep_l = xu >= x_floor, xl >= x_floor
    c_min = np.min((1 - yu[keep_u]) / xu[keep_u])
    c_max = np.max((1 - yl[keep_l]) / xl[keep_l])
    return float(c_min), float(c_max)
