"""Tour of the four generators and their Bregman distances.

Evaluates each divergence on a few points, shows the asymmetry, and checks
the three-point and four-point identities numerically.
"""

import numpy as np

import bregcheb as bc

x = np.array([2.0, 2.0])
y = np.array([1.0, 3.0])

print("distances D(x, y) and D(y, x) for x =", x, ", y =", y)
for F in (bc.energy(2), bc.quadratic([[2.0, 0.5], [0.5, 1.0]]),
          bc.negentropy(2), bc.neglog(2)):
    print(f"  {F.kind.value:11s}  D(x,y) = {bc.distance(F, x, y):.6f}"
          f"   D(y,x) = {bc.distance(F, y, x):.6f}")

print("\nextended-real convention: the second argument must be interior")
F = bc.neglog(2)
print("  neglog D((1,1), (0,1)) =", bc.distance(F, [1, 1], [0, 1]))
FN = bc.negentropy(2)
print("  negentropy D((0,1), (1,1)) =", bc.distance(FN, [0, 1], [1, 1]),
      " (first argument may touch the boundary)")

print("\nalgebraic identities (residuals should be at rounding level)")
rng = np.random.default_rng(0)
for F in (bc.energy(2), bc.negentropy(2), bc.neglog(2)):
    pts = rng.uniform(0.5, 4.0, size=(4, 2))
    r3 = bc.three_point_residual(F, pts[0], pts[1], pts[2])
    r4 = bc.four_point_residual(F, pts[0], pts[1], pts[2], pts[3])
    print(f"  {F.kind.value:11s}  three-point {r3:+.2e}   four-point {r4:+.2e}")

print("\nconvexity in the second argument fails for the Itakura-Saito case:")
F = bc.neglog(2)
lhs = bc.distance(F, [1, 1], [4, 4])
rhs = 0.5 * (bc.distance(F, [1, 1], [3, 3]) + bc.distance(F, [1, 1], [5, 5]))
print(f"  D(x, midpoint) = {lhs:.6f} > average of endpoints = {rhs:.6f}")
