import math

import numpy as np
import pytest

import bregcheb as bc
from bregcheb.errors import DomainError

from helpers import all_generators, orthant_domain, random_finite_set, sample_interior


@pytest.fixture
def energy_segment4():
    F = bc.energy(2)
    return F, bc.make_segment(F, 4.0, 5)


def test_farthest_tie_at_origin(energy_segment4):
    F, C = energy_segment4
    res = bc.farthest(F, C, [0.0, 0.0])
    assert res.value == 8.5
    assert np.allclose(res.argmax, [[1.0, 4.0], [4.0, 1.0]])
    assert res.witness_indices == [0, 4]


def test_farthest_orientation(energy_segment4):
    F, C = energy_segment4
    res = bc.farthest(F, C, [1.0, 0.0])
    # x2 < x1 picks the endpoint above the diagonal
    assert np.allclose(res.argmax, [[1.0, 4.0]])
    res2 = bc.farthest(F, C, [0.0, 1.0])
    assert np.allclose(res2.argmax, [[4.0, 1.0]])


def test_farthest_singleton_set():
    for F in all_generators():
        c = np.array([1.5, 2.0])
        C = bc.CompactSet.finite([c])
        res = bc.farthest(F, C, c)
        assert res.value == 0.0
        assert np.allclose(res.argmax, [c])


def test_farthest_outside_domain_empty_argmax():
    F = bc.negentropy(2)
    C = bc.CompactSet.finite([[1.0, 1.0]])
    res = bc.farthest(F, C, [-1.0, 1.0])
    assert res.value == math.inf
    assert len(res.argmax) == 0
    assert res.to_json()["value"] == "inf"


def test_farthest_computed_on_negentropy_boundary():
    F = bc.negentropy(2)
    C = bc.make_segment(F, 4.0, 5)
    res = bc.farthest(F, C, [0.0, 1.0])
    assert np.isfinite(res.value) and len(res.argmax) >= 1


def test_directional_derivative_hand_value(energy_segment4):
    F, C = energy_segment4
    val = bc.directional_derivative(F, C, [3.0, 3.0], [1.0, -1.0])
    assert val == 3.0
    assert bc.directional_derivative(F, C, [3.0, 3.0], [0.0, 0.0]) == 0.0


def test_directional_derivative_boundary_clause():
    F = bc.negentropy(2)
    C = bc.make_segment(F, 4.0, 5)
    assert bc.directional_derivative(F, C, [0.0, 1.0], [1.0, 0.0]) == -math.inf
    with pytest.raises(NotImplementedError):
        bc.directional_derivative(F, C, [0.0, 1.0], [-1.0, 0.0])
    with pytest.raises(DomainError):
        bc.directional_derivative(F, C, [-1.0, 1.0], [1.0, 0.0])


@pytest.mark.parametrize("F", all_generators(), ids=lambda F: F.kind.value)
def test_directional_derivative_matches_quotient(F):
    a = 4.0
    C = bc.make_segment(F, a, 21)
    rng = np.random.default_rng(55)
    t = 1e-6
    for _ in range(60):
        x = rng.uniform(0.5, 6.0, size=2) if orthant_domain(F) else rng.uniform(-4, 6, size=2)
        h = rng.normal(size=2)
        want = bc.directional_derivative(F, C, x, h)
        quot = (bc.farthest_values(F, C, x + t * h)[0] - bc.farthest_values(F, C, x)[0]) / t
        assert abs(want - quot) <= 1e-4


def test_subdifferential_vertices(energy_segment4):
    F, C = energy_segment4
    verts = bc.subdifferential(F, C, [3.0, 3.0])
    assert sorted(map(tuple, verts.tolist())) == [(-1.0, 2.0), (2.0, -1.0)]
    # singleton farthest set gives a plain gradient
    c = np.array([0.25, 0.5])
    single = bc.CompactSet.finite([c])
    v = bc.subdifferential(F, single, [2.0, 2.0])
    assert np.allclose(v, [np.array([2.0, 2.0]) - c])


def test_subdifferential_contains_zero_at_center(energy_segment4):
    F, C = energy_segment4
    verts = bc.subdifferential(F, C, [2.5, 2.5])
    assert np.allclose(sorted(map(tuple, verts.tolist())), [(-1.5, 1.5), (1.5, -1.5)])
    from bregcheb.simplex import min_norm_in_hull

    point, _ = min_norm_in_hull(verts)
    assert np.linalg.norm(point) <= 1e-12


def test_subdifferential_requires_interior():
    F = bc.negentropy(2)
    C = bc.make_segment(F, 4.0, 5)
    with pytest.raises(DomainError):
        bc.subdifferential(F, C, [0.0, 1.0])


@pytest.mark.parametrize("F", all_generators(), ids=lambda F: F.kind.value)
def test_gradient_consistency_where_singleton(F):
    # where the farthest set is a singleton the subdifferential vector is a
    # true gradient and must match central differences of the value sweep
    C = bc.make_segment(F, 4.0, 21)
    rng = np.random.default_rng(77)
    checked = 0
    h = 1e-6
    while checked < 40:
        x = rng.uniform(0.5, 6.0, size=2) if orthant_domain(F) else rng.uniform(-4, 6, size=2)
        verts = bc.subdifferential(F, C, x)
        if len(verts) != 1:
            continue
        g = verts[0]
        for j in range(2):
            e = np.zeros(2)
            e[j] = h
            fd = (bc.farthest_values(F, C, x + e)[0] - bc.farthest_values(F, C, x - e)[0]) / (2 * h)
            assert abs(fd - g[j]) <= 1e-5 * max(1.0, abs(g[j]))
        checked += 1


def test_monotonicity_hand_value(energy_segment4):
    F, C = energy_segment4
    assert bc.monotonicity_witness(F, C, [3.0, 3.0], [3.0, 3.0]) == 0.0
    assert bc.monotonicity_witness(F, C, [3.0, 2.0], [2.0, 3.0]) == 6.0


@pytest.mark.parametrize("F", all_generators(), ids=lambda F: F.kind.value)
def test_monotonicity_sweep(F):
    C = bc.make_segment(F, 4.0, 21)
    rng = np.random.default_rng(99)
    for _ in range(250):
        if orthant_domain(F):
            x, y = rng.uniform(0.3, 7.0, size=(2, 2))
        else:
            x, y = rng.uniform(-5.0, 7.0, size=(2, 2))
        assert bc.monotonicity_witness(F, C, x, y) >= -1e-9


@pytest.mark.parametrize("F", all_generators(), ids=lambda F: F.kind.value)
def test_value_convex_along_segments(F):
    C = bc.make_segment(F, 4.0, 21)
    rng = np.random.default_rng(17)
    X0 = sample_interior(F, rng, 200)
    X1 = sample_interior(F, rng, 200)
    mid = 0.5 * (X0 + X1)
    v_mid = bc.farthest_values(F, C, mid)
    v_avg = 0.5 * (bc.farthest_values(F, C, X0) + bc.farthest_values(F, C, X1))
    assert np.all(v_mid <= v_avg + 1e-9)


@pytest.mark.parametrize("F", all_generators(), ids=lambda F: F.kind.value)
def test_coercive_along_rays(F):
    C = bc.make_segment(F, 4.0, 9)
    base = np.array([2.0, 3.0])
    direction = np.array([1.0, 0.5]) if orthant_domain(F) else np.array([-1.0, 2.0])
    scales = [1.0, 4.0, 16.0, 64.0, 256.0]
    vals = [bc.farthest_values(F, C, base + s * direction)[0] for s in scales]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] > 100.0


def test_hull_blindness_for_convex_kinds():
    # interior samples never beat the endpoints when D(x, .) is convex
    for generator, a in ((bc.Generator.EUCLIDEAN, 4.0), (bc.Generator.KL, 4.0)):
        cfg = bc.CaseConfig(a, generator)
        F, C = cfg.legendre(), cfg.segment(41)
        xs = np.linspace(0.0, 10.0, 40)
        grid = np.array([[x, y] for y in xs for x in xs])
        D = bc.distance_matrix(F, grid, C.enumerate())
        endpoint_max = np.maximum(D[:, 0], D[:, -1])
        interior_max = D[:, 1:-1].max(axis=1)
        assert np.all(interior_max <= endpoint_max + 1e-10)


def test_hull_blindness_fails_for_itakura_saito():
    cfg = bc.CaseConfig(32.0, bc.Generator.ITAKURA_SAITO)
    F, C = cfg.legendre(), cfg.segment(41)
    x = np.array([1.0, 1.0])
    D = bc.distance_matrix(F, x[None, :], C.enumerate())[0]
    assert D[1:-1].max() > max(D[0], D[-1]) + 1e-6


def test_random_finite_sets_monotone():
    rng = np.random.default_rng(123)
    for F in all_generators():
        for _ in range(5):
            C = random_finite_set(F, rng)
            for _ in range(20):
                x, y = sample_interior(F, rng, 2)
                assert bc.monotonicity_witness(F, C, x, y) >= -1e-9
