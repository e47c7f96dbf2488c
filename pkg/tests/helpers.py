"""Shared construction helpers for the test suite."""

import numpy as np

import bregcheb as bc

SPD_MATRIX = np.array([[2.0, 0.5], [0.5, 1.0]])


def all_generators(dim=2):
    return [
        bc.energy(dim),
        bc.quadratic(SPD_MATRIX if dim == 2 else np.eye(dim) + 0.1),
        bc.negentropy(dim),
        bc.neglog(dim),
    ]


def orthant_domain(F):
    return F.kind in (bc.Kind.NEG_ENTROPY, bc.Kind.NEG_LOG)


def sample_interior(F, rng, n=1):
    """Random interior points, coordinates in (0.1, 10) for orthant
    domains and (-10, 10) otherwise."""
    if orthant_domain(F):
        pts = rng.uniform(0.1, 10.0, size=(n, F.dimension))
    else:
        pts = rng.uniform(-10.0, 10.0, size=(n, F.dimension))
    return pts


def random_finite_set(F, rng, n_points=4, spread=0.15):
    """A small compact set in U clustered around a random base point."""
    if orthant_domain(F):
        base = rng.uniform(0.8, 2.5, size=F.dimension)
    else:
        base = rng.uniform(-1.5, 1.5, size=F.dimension)
    pts = base + rng.uniform(-spread, spread, size=(n_points, F.dimension))
    if orthant_domain(F):
        pts = np.maximum(pts, 0.05)
    return bc.CompactSet.finite(pts)
