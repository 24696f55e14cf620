"""Triangles, the Ravi parametrization and elementary functionals.

A triangle is stored by its side lengths. Flat triangles (one side equal
to the sum of the other two, or a side of length zero) are valid values;
only the triangle reduced to a point is rejected.

The array-level helpers (`ravi_arrays`, `heron_area`, `isoperimetric_deficit`)
accept scalars or numpy arrays of side lengths and are what the
population-scale code paths use.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

#: Relative slack (times the perimeter) allowed on b + c - a >= 0.
SIDE_TOL = 1e-12
#: Ravi coordinates below this (times the perimeter) are rounding noise of
#: b + c - a and are treated as exact zeros.
SNAP_TOL = 8 * np.finfo(float).eps


def ravi_arrays(a, b, c, tol=SIDE_TOL):
    """Ravi coordinates ``x = (b+c-a)/2`` (and cyclic) of side arrays.

    Coordinates that are negative by at most ``tol * perimeter`` are
    clamped to zero, as are positive ones below ``SNAP_TOL * perimeter``.
    Anything more negative raises `DomainError`.
    """
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    if np.any(~np.isfinite(a) | ~np.isfinite(b) | ~np.isfinite(c)):
        raise DomainError("side lengths must be finite")
    if np.any((a < 0) | (b < 0) | (c < 0)):
        raise DomainError("side lengths must be nonnegative")
    p = a + b + c
    if np.any(p <= 0):
        raise DomainError("triangle is reduced to a point")
    x = (b + c - a) / 2
    y = (c + a - b) / 2
    z = (a + b - c) / 2
    floor = -tol * p
    if np.any((x < floor) | (y < floor) | (z < floor)):
        raise DomainError("side lengths violate the triangle inequality")
    snap = SNAP_TOL * p
    return tuple(np.where(v < snap, 0.0, v) for v in (x, y, z))


def heron_area(a, b, c):
    """Area from side lengths, evaluated as ``sqrt(xyz(x+y+z))``.

    The Ravi factors are the Heron factors ``s-a, s-b, s-c`` formed without
    subtracting from the semiperimeter, so flat triangles give exactly 0.
    """
    x, y, z = ravi_arrays(a, b, c)
    return np.sqrt(x * y * z * (x + y + z))


def isoperimetric_deficit(a, b, c):
    """``(a-b)^2 + (b-c)^2 + (c-a)^2``; zero iff the triangle is equilateral."""
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    return (a - b) ** 2 + (b - c) ** 2 + (c - a) ** 2


@dataclass(frozen=True)
class Triangle:
    """Side lengths of a (possibly flat) triangle."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
        ravi_arrays(self.a, self.b, self.c)

    @property
    def sides(self):
        return (self.a, self.b, self.c)

    def scaled(self, k):
        if not k > 0:
            raise DomainError(f"scale factor must be positive, got {k}")
        return Triangle(k * self.a, k * self.b, k * self.c)

    def sorted(self):
        """Same triangle with sides in descending order."""
        return Triangle(*sorted(self.sides, reverse=True))

    @property
    def perimeter(self):
        return perimeter(self)

    @property
    def area(self):
        return area(self)

    @property
    def deficit(self):
        return deficit(self)


@dataclass(frozen=True)
class RaviParams:
    """Nonnegative ``(x, y, z)`` with ``a = y+z, b = z+x, c = x+y``."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        vals = [float(v) for v in (self.x, self.y, self.z)]
        if not all(np.isfinite(vals)):
            raise DomainError("Ravi parameters must be finite")
        if min(vals) < 0:
            raise DomainError(f"Ravi parameters must be nonnegative, got {vals}")
        if sum(vals) <= 0:
            raise DomainError("Ravi parameters must not all vanish")
        for name, v in zip("xyz", vals):
            object.__setattr__(self, name, v)

    def __iter__(self):
        return iter((self.x, self.y, self.z))


def ravi_to_sides(p: RaviParams) -> Triangle:
    return Triangle(p.y + p.z, p.z + p.x, p.x + p.y)


def sides_to_ravi(t: Triangle) -> RaviParams:
    x, y, z = ravi_arrays(t.a, t.b, t.c)
    return RaviParams(float(x), float(y), float(z))


def perimeter(t: Triangle) -> float:
    return t.a + t.b + t.c


def area(t: Triangle) -> float:
    return float(heron_area(t.a, t.b, t.c))


def deficit(t: Triangle) -> float:
    return float(isoperimetric_deficit(t.a, t.b, t.c))


def is_degenerate(t: Triangle) -> bool:
    """True for flat triangles, i.e. when some Ravi coordinate vanishes."""
    return min(sides_to_ravi(t)) == 0.0


def is_acute(t: Triangle) -> bool:
    """Strict acuteness test; flat triangles raise `DomainError`."""
    if is_degenerate(t):
        raise DomainError("acuteness is undefined for a flat triangle")
    lo, mid, hi = sorted(t.sides)
    return hi * hi < lo * lo + mid * mid
