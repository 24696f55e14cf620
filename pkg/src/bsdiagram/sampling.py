"""Triangle populations for drawing the diagram.

Two strategies:

``random``
    Ravi coordinates uniform on the unit simplex, i.e. three i.i.d.
    standard exponentials divided by their sum. The generator is numpy's
    PCG64 seeded with the given integer, so a (n, seed) pair always yields
    the same bits.
``grid``
    Points laid out on a regular grid of the diagram itself (equally spaced
    X, and equally spaced Y inside each vertical slice), each turned into a
    witness triangle by inverse construction. Covers the diagram evenly
    with few samples.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .diagram import DiagramPoint, X_MAX, diagram_coordinates, invert, slice as diagram_slice
from .errors import DomainError
from .geometry import Triangle

GRID_METHOD_NOTE = (
    "inverse-construction grid: equally spaced X, equally spaced Y per slice"
)


@dataclass
class SampleSet:
    """Triangles and their diagram points, stored column-wise.

    ``sides`` has shape (n, 3), ``points`` shape (n, 2) with columns X, Y.
    """

    sides: np.ndarray
    points: np.ndarray
    strategy: str
    seed: int | None = None
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.sides)

    def __getitem__(self, i):
        return Triangle(*self.sides[i]), DiagramPoint(*map(float, self.points[i]))

    @property
    def entries(self):
        return [self[i] for i in range(len(self))]

    @property
    def X(self):
        return self.points[:, 0]

    @property
    def Y(self):
        return self.points[:, 1]


def simplex_uniform(n, rng):
    """``n`` points uniform on the simplex ``x + y + z = 1, x, y, z >= 0``."""
    w = rng.standard_exponential((n, 3))
    return w / w.sum(axis=1, keepdims=True)


def sample_random(n, seed=0) -> SampleSet:
    if n < 1:
        raise DomainError(f"sample size must be positive, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    x, y, z = simplex_uniform(n, rng).T
    sides = np.column_stack([y + z, z + x, x + y])
    X, Y = diagram_coordinates(*sides.T)
    return SampleSet(sides, np.column_stack([X, Y]), "random", seed,
                     {"law": "Ravi coordinates uniform on the simplex", "rng": "PCG64"})


def grid_points(nx, ny):
    """The in-diagram (X, Y) grid used by `sample_grid`, in X-then-Y order."""
    if nx < 2 or ny < 1:
        raise DomainError(f"need nx >= 2 and ny >= 1, got nx={nx}, ny={ny}")
    pts = []
    for X in np.linspace(0.0, X_MAX, nx):
        sb = diagram_slice(X)
        ys = [sb.y_min] if sb.is_point else np.linspace(sb.y_min, sb.y_max, ny)
        pts.extend((float(X), float(Y)) for Y in ys)
    return pts


def sample_grid(nx, ny) -> SampleSet:
    pts = grid_points(nx, ny)
    sides = np.array([invert(DiagramPoint(X, Y)).sides for X, Y in pts])
    X, Y = diagram_coordinates(*sides.T)
    return SampleSet(sides, np.column_stack([X, Y]), "grid", None,
                     {"method": GRID_METHOD_NOTE, "nx": nx, "ny": ny,
                      "targets": np.array(pts)})
