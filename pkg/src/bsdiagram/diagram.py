"""The (X, Y) diagram of triangles.

For a triangle with perimeter ``p``, area ``S`` and deficit ``Q``::

    X = Q / p**2            Y = 12 sqrt(3) S / p**2

Both ratios are scale invariant. The image of all triangles is the region

    phi_minus(X) <= Y <= phi_plus(X)    for 0 <= X <= 1/8
    0 <= Y <= phi_plus(X)               for 1/8 <= X <= 1/2

with ``phi_pm(X) = sqrt(1 - 6X +- 4 sqrt(2) X**1.5)``.

Fixing X and normalising the Ravi coordinates to ``x + y + z = 1`` turns the
slice problem into optimising the cubic ``h(z) = xyz`` over the values of
``z`` for which ``x, y >= 0`` exist; ``Y = 3 sqrt(3) sqrt(h(z))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, InconsistencyError, NotInDiagramError
from .geometry import RaviParams, Triangle, heron_area, isoperimetric_deficit, ravi_to_sides

X_FLAT = 1 / 8
X_MAX = 1 / 2
RADICAND_TOL = 1e-14
SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class DiagramPoint:
    """Scale-invariant coordinates of a triangle.

    No validation happens here: a point outside the diagram is a legitimate
    argument to `contains`.
    """

    X: float
    Y: float

    def __iter__(self):
        return iter((self.X, self.Y))


@dataclass(frozen=True)
class SliceBounds:
    """Everything known about the vertical slice of the diagram at ``X``.

    ``z_lo``/``z_hi`` are the roots of the discriminant of the quadratic
    giving ``x, y`` (``z_lo`` is negative for X > 1/8 and then not an
    admissible bound). ``z_crit_1 <= z_crit_2`` are the critical points
    of ``h``. ``z_intervals`` lists the admissible ``z`` ranges.
    """

    X: float
    y_min: float
    y_max: float
    z_intervals: tuple
    z_lo: float
    z_hi: float
    z_crit_1: float
    z_crit_2: float

    @property
    def is_point(self):
        return self.y_min == self.y_max


def _clamp_radicand(r):
    r = np.asarray(r, dtype=float)
    if np.any(r < -RADICAND_TOL):
        raise InconsistencyError(f"negative radicand {np.min(r):.3e}")
    return np.maximum(r, 0.0)


def _scalar_or_array(out, like):
    return float(out) if np.ndim(like) == 0 else out


def _check_x(X, upper, name):
    X_arr = np.asarray(X, dtype=float)
    if np.any(~np.isfinite(X_arr)) or np.any((X_arr < 0) | (X_arr > upper)):
        raise DomainError(f"{name} is defined on [0, {upper}], got {X}")
    return X_arr


def diagram_coordinates(a, b, c):
    """Vectorised ``(X, Y)`` of side-length arrays."""
    a, b, c = (np.asarray(v, dtype=float) for v in (a, b, c))
    S = heron_area(a, b, c)
    p2 = (a + b + c) ** 2
    return isoperimetric_deficit(a, b, c) / p2, 12 * SQRT3 * S / p2


def map_point(t: Triangle) -> DiagramPoint:
    X, Y = diagram_coordinates(t.a, t.b, t.c)
    return DiagramPoint(float(X), float(Y))


# With u = sqrt(2X) the radicands factor as 1 - 3u^2 -+ 2u^3 = (1 +- u)^2 (1 -+ 2u);
# the factored form keeps full relative accuracy where they vanish.


def phi_minus(X):
    """Lower boundary ``sqrt(1 - 6X - 4 sqrt(2) X**1.5)`` on ``[0, 1/8]``."""
    X_arr = _check_x(X, X_FLAT, "phi_minus")
    u = np.sqrt(2 * X_arr)
    return _scalar_or_array((1 + u) * np.sqrt(_clamp_radicand(1 - 2 * u)), X)


def phi_plus(X):
    """Upper boundary ``sqrt(1 - 6X + 4 sqrt(2) X**1.5)`` on ``[0, 1/2]``."""
    X_arr = _check_x(X, X_MAX, "phi_plus")
    u = np.sqrt(2 * X_arr)
    return _scalar_or_array((1 - u) * np.sqrt(1 + 2 * u), X)


def cubic_h(z, X):
    """``h(z) = z**3 - z**2 + (1-2X)/3 * z``, the product xyz at x+y+z = 1."""
    return ((z - 1) * z + (1 - 2 * X) / 3) * z


def cubic_h_prime(z, X):
    return 3 * z * z - 2 * z + (1 - 2 * X) / 3


def discriminant(z, X):
    """Discriminant of ``l**2 - (1-z) l + (1-2X)/3 - z(1-z) = 0``."""
    return -3 * z * z + 2 * z - 1 / 3 + 8 * X / 3


def slice(X) -> SliceBounds:  # noqa: A001 - the natural name for a vertical cut
    X = float(_check_x(X, X_MAX, "slice"))
    s = math.sqrt(2 * X)
    z_lo, z_hi = (1 - 2 * s) / 3, (1 + 2 * s) / 3
    z1, z2 = (1 - s) / 3, (1 + s) / 3
    if X <= X_FLAT:
        intervals = ((max(z_lo, 0.0), z_hi),)
        y_min = phi_minus(X)
    else:
        r = math.sqrt(float(_clamp_radicand((8 * X - 1) / 3)))
        r1, r2 = (1 - r) / 2, (1 + r) / 2
        intervals = ((0.0, r1), (min(r2, z_hi), z_hi))
        y_min = 0.0
    return SliceBounds(X, y_min, phi_plus(X), intervals, z_lo, z_hi, z1, z2)


def monotone_pieces(sb: SliceBounds):
    """Admissible ``z`` ranges on which ``h`` is monotone, in increasing z.

    Yields ``(lo, hi, increasing)``.
    """
    z1, z2 = sb.z_crit_1, sb.z_crit_2
    if len(sb.z_intervals) == 1:
        lo, hi = sb.z_intervals[0]
        cuts = [(lo, z1, True), (z1, z2, False), (z2, hi, True)]
    else:
        (lo, r1), (r2, hi) = sb.z_intervals
        cuts = [(lo, min(z1, r1), True), (min(z1, r1), r1, False), (r2, hi, True)]
    return [(a, max(a, b), inc) for a, b, inc in cuts]


def contains_points(X, Y, tol=1e-9):
    """Vectorised membership test with absolute tolerance ``tol``."""
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    in_x = (X >= -tol) & (X <= X_MAX + tol)
    Xc = np.clip(np.nan_to_num(X), 0.0, X_MAX)
    y_max = phi_plus(Xc)
    y_min = np.where(Xc <= X_FLAT, phi_minus(np.minimum(Xc, X_FLAT)), 0.0)
    return in_x & (Y >= y_min - tol) & (Y <= y_max + tol)


def contains(p: DiagramPoint, tol=1e-9) -> bool:
    if tol < 0:
        raise DomainError("tolerance must be nonnegative")
    return bool(contains_points(p.X, p.Y, tol))


def _bisect(f, lo, hi, target, increasing, xtol, ftol, maxiter):
    """Solve ``f(z) = target`` for a monotone ``f`` on ``[lo, hi]``.

    Stops once the bracket is narrower than ``xtol`` and the midpoint value
    is within ``ftol`` of the target, or when the bracket cannot shrink.
    """
    sign = 1.0 if increasing else -1.0
    if sign * (f(lo) - target) >= 0:
        return lo
    if sign * (f(hi) - target) <= 0:
        return hi
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if (hi - lo <= xtol and abs(f_mid - target) <= ftol) or mid in (lo, hi):
            return mid
        if sign * (f_mid - target) < 0:
            lo = mid
        else:
            hi = mid
    raise ConvergenceError(f"bisection did not converge in {maxiter} iterations")


def solve_slice(X, Y, xtol=1e-14, ytol=1e-13, maxiter=200):
    """Smallest admissible ``z`` at which the slice at ``X`` reaches ``Y``.

    Works on ``Y(z) = 3 sqrt(3) sqrt(h(z))`` rather than on ``h`` so the
    value tolerance is in diagram units even for tiny ``Y``.
    """
    sb = slice(X)
    Y = min(max(Y, sb.y_min), sb.y_max)

    def y_of(z):
        return 3 * SQRT3 * math.sqrt(max(cubic_h(z, sb.X), 0.0))

    for lo, hi, inc in monotone_pieces(sb):
        y_lo, y_hi = y_of(lo), y_of(hi)
        bottom, top = min(y_lo, y_hi), max(y_lo, y_hi)
        if bottom - 1e-12 <= Y <= top + 1e-12:
            target = min(max(Y, bottom), top)
            return _bisect(y_of, lo, hi, target, inc, xtol, ytol, maxiter)
    raise ConvergenceError(f"no admissible z reaches Y = {Y!r} at X = {X!r}")


def invert(p: DiagramPoint, tol=1e-9, xtol=1e-14, maxiter=200) -> Triangle:
    """Perimeter-one triangle whose image is ``p``, sides sorted descending.

    Raises `NotInDiagramError` when ``p`` is farther than ``tol`` from the
    diagram; points within ``tol`` are projected onto it first.

    X is reproduced to rounding. For ``0 < Y < 1e-5`` the witness has a Ravi
    coordinate near the rounding level of its sides and ``map_point`` of the
    result recovers Y only to about ``1e-14 / Y`` (never worse than ~2e-7).
    """
    if not contains(p, tol):
        raise NotInDiagramError(f"({p.X!r}, {p.Y!r}) is not in the diagram")
    X = min(max(p.X, 0.0), X_MAX)
    z = solve_slice(X, p.Y, xtol=xtol, maxiter=maxiter)
    root = math.sqrt(float(_clamp_radicand(discriminant(z, X))))
    x = ((1 - z) + root) / 2
    prod = float(_clamp_radicand((1 - 2 * X) / 3 - z * (1 - z)))
    y = prod / x if x > 0 else 0.0
    t = ravi_to_sides(RaviParams(x / 2, y / 2, z / 2))
    return t.sorted()


def boundary(n=513):
    """Sampled boundary curves of the diagram, endpoints included.

    Returns a dict with ``"upper"``, ``"lower"`` and ``"flat"`` entries,
    each an ``(X, Y)`` pair of arrays of length ``n``.
    """
    xu = np.linspace(0.0, X_MAX, n)
    xl = np.linspace(0.0, X_FLAT, n)
    xf = np.linspace(X_FLAT, X_MAX, n)
    return {
        "upper": (xu, phi_plus(xu)),
        "lower": (xl, phi_minus(xl)),
        "flat": (xf, np.zeros(n)),
    }
