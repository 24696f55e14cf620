"""Vertical slices of the diagram and the cubic that describes them.

Fixing X and normalising x + y + z = 1, the admissible triangles form a
one-parameter family indexed by z. Along it, Y**2 / 27 = h(z) with

    h(z) = z**3 - z**2 + (1 - 2X)/3 * z

so the extent of the slice is read off from the extremes of h.
"""
import numpy as np

import bsdiagram as bs
from bsdiagram.figures import slice_svg

for X in (0.02, 0.1, 0.125, 0.3, 0.5):
    sb = bs.slice(X)
    pieces = ", ".join(f"[{lo:.6f}, {hi:.6f}]" for lo, hi in sb.z_intervals)
    print(f"X = {X:<5}  z in {pieces}")
    print(f"          Y in [{sb.y_min:.9f}, {sb.y_max:.9f}]")

# %% The extremes of h over the admissible z are the boundary curves.
X = 0.1
sb = bs.slice(X)
z = np.linspace(sb.z_lo, sb.z_hi, 100_001)
y = 3 * np.sqrt(3) * np.sqrt(np.clip(bs.cubic_h(z, X), 0, None))
print("grid max vs phi_plus :", y.max(), bs.phi_plus(X))
print("grid min vs phi_minus:", y.min(), bs.phi_minus(X))

# %% h rises, falls, then rises again; the turning points are the roots
# of h'(z) = 3z**2 - 2z + (1 - 2X)/3.
print("critical points:", sb.z_crit_1, sb.z_crit_2)
print("h' there:", bs.cubic_h_prime(sb.z_crit_1, X), bs.cubic_h_prime(sb.z_crit_2, X))

for X in (0.1, 0.3):
    with open(f"slice_{X}.svg", "w") as fh:
        fh.write(slice_svg(X))
