"""From a point of the diagram back to a triangle.

`invert` picks a slice, solves h(z) = Y**2 / 27 by bisection on a monotone
piece, then recovers x and y from their sum and product.
"""
import numpy as np

import bsdiagram as bs

for X, Y in [(0.0, 1.0), (0.1, 0.6), (0.125, 0.0), (0.3, 0.2), (0.5, 0.0)]:
    t = bs.invert(bs.DiagramPoint(X, Y))
    back = bs.map_point(t)
    print(f"({X}, {Y}) -> sides {np.round(t.sides, 9)} -> ({back.X:.12f}, {back.Y:.12f})")

# %% Points outside the diagram are refused.
try:
    bs.invert(bs.DiagramPoint(0.3, 0.9))
except bs.NotInDiagramError as exc:
    print("refused:", exc)

# %% Round trip over a whole grid.
errs = []
for X, Y in bs.grid_points(40, 40):
    q = bs.map_point(bs.invert(bs.DiagramPoint(X, Y)))
    errs.append(max(abs(q.X - X), abs(q.Y - Y)))
print(f"{len(errs)} grid points, worst round-trip error {max(errs):.2e}")
