"""Sampling triangles and drawing their diagram points.

Run with

    python3 demos/01_sampling_the_diagram.py

Writes ``diagram_random.svg`` and ``diagram_grid.svg`` to the current directory.
"""
import numpy as np

import bsdiagram as bs
from bsdiagram.figures import diagram_svg

# %% A random population. Ravi coordinates are uniform on the simplex, so
# every triple is a valid triangle and nothing has to be rejected.
random_set = bs.sample_random(20_000, seed=7)
print(f"{len(random_set)} random triangles")
print("X range:", random_set.X.min(), random_set.X.max())
print("Y range:", random_set.Y.min(), random_set.Y.max())

# Every point lands inside the region cut out by the two boundary curves.
inside = bs.contains_points(random_set.X, random_set.Y, 1e-9)
print("all inside:", bool(inside.all()))

# %% Random triangles crowd the middle of the diagram. A grid in (X, Y),
# turned back into triangles, spreads them evenly instead.
grid_set = bs.sample_grid(25, 15)
print(f"{len(grid_set)} grid triangles, e.g. {grid_set[40][0]}")

# %% Figures: the sharp boundary, the two linear bounds and the samples.
with open("diagram_random.svg", "w") as fh:
    fh.write(diagram_svg(random_set.points))
with open("diagram_grid.svg", "w") as fh:
    fh.write(diagram_svg(grid_set.points))

# %% The equilateral triangle sits at the top corner (0, 1) and the
# two flat extremes at the ends of the segment Y = 0.
for sides in [(1, 1, 1), (1, 0.5, 0.5), (1, 1, 0)]:
    print(sides, "->", np.round(tuple(bs.map_point(bs.Triangle(*sides))), 12))
