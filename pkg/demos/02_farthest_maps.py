"""Farthest-distance functions and farthest-point maps on a segment.

Uses the planar segment from (1, a) to (a, 1) and shows how the farthest
set flips across the diagonal, the subdifferential vertices, directional
derivatives, and the monotonicity of the negative dual farthest map.
"""

import numpy as np

import bregcheb as bc

a = 4.0
F = bc.energy(2)
C = bc.make_segment(F, a, 41)

print(f"segment endpoints (1,{a:g}) and ({a:g},1), halved squared Euclidean")
for x in ([3.0, 1.0], [1.0, 3.0], [2.0, 2.0]):
    res = bc.farthest(F, C, x)
    print(f"  x = {x}: value = {res.value:.4f}, farthest points = "
          f"{np.asarray(res.argmax).tolist()}")

print("\nsubdifferential vertices of the farthest-distance function at (3,3):")
print(" ", bc.subdifferential(F, C, [3.0, 3.0]).tolist())
print("directional derivative at (3,3) along (1,-1):",
      bc.directional_derivative(F, C, [3.0, 3.0], [1.0, -1.0]))

print("\nmonotonicity witnesses (all nonnegative):")
rng = np.random.default_rng(1)
worst = np.inf
for _ in range(200):
    x, y = rng.uniform(-3.0, 6.0, size=(2, 2))
    worst = min(worst, bc.monotonicity_witness(F, C, x, y))
print(f"  smallest of 200 random pairs: {worst:.3e}")

print("\nthe farthest map is blind to the hull when D(x,.) is convex:")
grid = rng.uniform(0.0, 10.0, size=(400, 2))
D = bc.distance_matrix(F, grid, C.enumerate())
excess = (D[:, 1:-1].max(axis=1) - np.maximum(D[:, 0], D[:, -1])).max()
print(f"  energy: max interior-sample excess over endpoints = {excess:.3e}")

FI = bc.neglog(2)
CI = bc.make_segment(FI, 32.0, 41)
res = bc.farthest(FI, CI, [1.0, 1.0])
mid = np.asarray(res.argmax)[0]
print(f"  itakura-saito, a=32: farthest point from (1,1) is {mid.tolist()}"
      " (an interior point, not an endpoint)")
