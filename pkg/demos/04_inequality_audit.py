"""Checking the classical inequalities and their sharp replacements.

Each inequality is evaluated on a large random population, then on the
triangles where it is tight.
"""
import numpy as np

import bsdiagram as bs
from bsdiagram.inequalities import INEQUALITIES, evaluate_sides

s = bs.sample_random(200_000, seed=11)
res = evaluate_sides(*s.sides.T)
for spec in INEQUALITIES:
    r = res[spec.name]
    n_app = int(r["applicable"].sum())
    n_bad = int((r["applicable"] & ~r["holds"]).sum())
    tight = np.nanmin(np.abs(r["slack"][r["applicable"]]))
    print(f"{spec.name:32s} applies to {n_app:6d}, violated {n_bad}, smallest |slack| {tight:.1e}")

# %% Which inequalities become equalities, triangle by triangle.
for sides in [(1, 1, 1), (1, 1, 0), (1, 0.5, 0.5), (3, 4, 5)]:
    report = bs.full_report(bs.Triangle(*sides))
    print(sides, "tight:", report.near_equalities or "none")

# %% The best linear constants, read off the boundary of the diagram.
c_min, c_max = bs.empirical_sharp_constants(20_000)
print(f"1 - {c_min:.6f} X >= Y >= 1 - {c_max:.6f} X")
