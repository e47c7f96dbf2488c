import numpy as np
import pytest

import bregcheb as bc
from bregcheb.errors import DomainError

from helpers import all_generators


def test_make_segment_samples():
    F = bc.energy(2)
    C = bc.make_segment(F, 4.0, 5)
    pts = C.enumerate()
    assert pts.shape == (5, 2)
    assert np.allclose(pts[2], [2.5, 2.5])
    assert np.allclose(pts[0], [1.0, 4.0]) and np.allclose(pts[-1], [4.0, 1.0])

    C3 = bc.make_segment(F, 2.0, 3)
    assert np.allclose(C3.enumerate(), [[1.0, 2.0], [1.5, 1.5], [2.0, 1.0]])


def test_make_segment_rejects_bad_input():
    F = bc.energy(2)
    with pytest.raises(ValueError):
        bc.make_segment(F, 1.0, 5)
    with pytest.raises(ValueError):
        bc.make_segment(F, 4.0, 4)
    with pytest.raises(ValueError):
        bc.make_segment(F, 4.0, 1)


def test_enumerate_order():
    p, q = [0.5, 1.0], [2.0, 0.25]
    C = bc.CompactSet.finite([p, q])
    assert np.allclose(C.enumerate(), [p, q])
    F = bc.energy(2)
    seg = bc.make_segment(F, 8.0, 3)
    assert np.allclose(seg.enumerate(), [[1.0, 8.0], [4.5, 4.5], [8.0, 1.0]])
    assert len(seg) == 3
    assert seg.dimension == 2


def test_validate():
    FN = bc.negentropy(2)
    bc.validate(bc.CompactSet.finite([[1.0, 1.0]]), FN)
    with pytest.raises(DomainError) as err:
        bc.validate(bc.CompactSet.finite([[1.0, 1.0], [0.0, 1.0]]), FN)
    assert "point 1" in str(err.value)
    bc.validate(bc.CompactSet.finite([[-3.0, 7.0]]), bc.energy(2))


def test_set_construction_invariants():
    with pytest.raises(ValueError):
        bc.CompactSet.finite(np.empty((0, 2)))
    with pytest.raises(ValueError):
        bc.CompactSet.finite([[np.nan, 1.0]])
    with pytest.raises(ValueError):
        bc.CompactSet.segment([1.0, 1.0], [1.0, 1.0], 5)
    with pytest.raises(ValueError):
        bc.CompactSet.segment([0.0, 0.0], [1.0, 1.0], 1)


def test_json_roundtrip():
    F = bc.energy(2)
    seg = bc.make_segment(F, 4.0, 5)
    back = bc.CompactSet.from_json(seg.to_json())
    assert np.allclose(back.enumerate(), seg.enumerate())
    fin = bc.CompactSet.finite([[1.0, 2.0], [3.0, 4.0]])
    back = bc.CompactSet.from_json(fin.to_json())
    assert np.allclose(back.enumerate(), fin.enumerate())
    assert back.kind is bc.compactset.SetKind.FINITE


@pytest.mark.parametrize("F", all_generators(), ids=lambda F: F.kind.value)
def test_refinement_monotonicity(F):
    rng = np.random.default_rng(13)
    a = 6.0
    C = bc.make_segment(F, a, 9)
    R = C.refined()
    assert len(R) == 17
    # refined sample grids contain the coarse ones, so the sup cannot drop
    if F.kind in (bc.Kind.NEG_ENTROPY, bc.Kind.NEG_LOG):
        X = rng.uniform(0.2, 8.0, size=(50, 2))
    else:
        X = rng.uniform(-5.0, 8.0, size=(50, 2))
    v_coarse = bc.farthest_values(F, C, X)
    v_fine = bc.farthest_values(F, R, X)
    assert np.all(v_fine >= v_coarse - 1e-15)


@pytest.mark.parametrize("generator", list(bc.Generator), ids=lambda g: g.value)
@pytest.mark.parametrize("a", [4.0, 32.0])
def test_refinement_gap_small_at_high_resolution(generator, a):
    cfg = bc.CaseConfig(a, generator)
    F = cfg.legendre()
    C1 = cfg.segment(2049)
    C2 = cfg.segment(4097)
    queries = np.array(
        [[0.5, 0.7], [3.0, 1.0], [5.0, 5.0], [1.0, 1.0], [0.2, 6.0], cfg.center()]
    )
    v1 = bc.farthest_values(F, C1, queries)
    v2 = bc.farthest_values(F, C2, queries)
    assert np.all(v2 >= v1 - 1e-15)
    assert np.max(v2 - v1) <= 1e-6
