"""Compact subsets of U: finite point lists and uniformly sampled segments."""

import enum
import json

import numpy as np

from .errors import DomainError


class SetKind(enum.Enum):
    FINITE = "finite"
    SEGMENT = "segment"


class CompactSet:
    """A finite point set, or a segment sampled at equally spaced parameters.

    A segment stores its two endpoints and a sample count; ``enumerate``
    materializes the samples with the endpoints always included.  Instances
    are immutable.
    """

    def __init__(self, kind, points, samples=None):
        kind = SetKind(kind)
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if points.size == 0:
            raise ValueError("a compact set needs at least one point")
        if not np.all(np.isfinite(points)):
            raise ValueError("points must be finite")
        if kind is SetKind.SEGMENT:
            if points.shape[0] != 2:
                raise ValueError("a segment is given by exactly two endpoints")
            if np.array_equal(points[0], points[1]):
                raise ValueError("segment endpoints must be distinct")
            samples = int(samples)
            if samples < 2:
                raise ValueError("a segment needs at least 2 samples")
        elif samples is not None:
            raise ValueError("samples is only valid for segments")
        points.setflags(write=False)
        self.kind = kind
        self.points = points
        self.samples = samples

    @classmethod
    def finite(cls, points):
        return cls(SetKind.FINITE, points)

    @classmethod
    def segment(cls, c0, c1, samples):
        return cls(SetKind.SEGMENT, [c0, c1], samples)

    def enumerate(self):
        """All represented points, in deterministic order.

        Finite sets keep insertion order; segments are listed by increasing
        parameter from the first endpoint to the second.
        """
        if self.kind is SetKind.FINITE:
            return self.points
        lam = np.linspace(0.0, 1.0, self.samples)[:, None]
        return (1.0 - lam) * self.points[0] + lam * self.points[1]

    def __len__(self):
        return self.samples if self.kind is SetKind.SEGMENT else self.points.shape[0]

    def __iter__(self):
        return iter(self.enumerate())

    @property
    def dimension(self):
        return self.points.shape[1]

    def refined(self):
        """The same segment with samples doubled to 2s-1 (a strict superset)."""
        if self.kind is not SetKind.SEGMENT:
            raise ValueError("only segments can be refined")
        return CompactSet.segment(self.points[0], self.points[1], 2 * self.samples - 1)

    def to_json(self):
        obj = {"kind": self.kind.value, "points": self.points.tolist()}
        if self.kind is SetKind.SEGMENT:
            obj["samples"] = self.samples
        return obj

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["kind"], obj["points"], obj.get("samples"))


def make_segment(F, a, samples):
    """The planar segment from (1, a) to (a, 1), sampled at ``samples`` points.

    Requires a > 1 and an odd sample count of at least 3 so the midpoint is
    always represented.  Validated against ``F`` at construction.
    """
    a = float(a)
    if not a > 1.0:
        raise ValueError("a must be > 1")
    samples = int(samples)
    if samples < 3 or samples % 2 == 0:
        raise ValueError("samples must be odd and >= 3")
    seg = CompactSet.segment([1.0, a], [a, 1.0], samples)
    validate(seg, F)
    return seg


def validate(C, F):
    """Check every represented point lies in U; raise DomainError otherwise."""
    pts = C.enumerate()
    if pts.shape[1] != F.dimension:
        raise DomainError(
            f"set has dimension {pts.shape[1]}, generator expects {F.dimension}"
        )
    ok = F.in_interior(pts)
    if not np.all(ok):
        idx = int(np.argmin(ok))
        raise DomainError(
            f"point {idx} = {pts[idx].tolist()} lies outside the interior of dom f"
        )
