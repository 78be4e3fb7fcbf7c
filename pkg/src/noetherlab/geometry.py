"""Points and tagged dyadic boxes, with the canonical box enumeration.

A box of level k with corner vector m is the open product
prod_i (m_i / 2^k, (m_i + 2) / 2^k); corners are constrained to
|m_i| <= 4^k so each level covers a bounded window that grows without
bound.  Every box additionally carries a natural-number tag, so for every
tag value the tagged boxes of that value still form a basis of arbitrarily
small boxes around every rational point.

The canonical enumeration interleaves tags in stages: stage s lists, in
(level ascending, corners lexicographic, tag ascending) order, the boxes
with max(level, tag) = s.  This is a bijection with the naturals; the
canonical order on boxes is the index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import ceil, floor
from typing import Iterator, Sequence

from .errors import InvalidPointError


@dataclass(frozen=True)
class Point:
    """A point with exact rational coordinates."""

    coords: tuple[Fraction, ...]

    def __repr__(self):
        return "Point(" + ", ".join(str(c) for c in self.coords) + ")"

    @property
    def dimension(self) -> int:
        return len(self.coords)


def pt(*coords) -> Point:
    """Build a Point from ints, strings or Fractions."""
    return Point(tuple(Fraction(c) for c in coords))


def squared_distance(x: Point, y: Point) -> Fraction:
    if len(x.coords) != len(y.coords):
        raise InvalidPointError(f"dimension mismatch: {len(x.coords)} vs {len(y.coords)}")
    return sum(((a - b) ** 2 for a, b in zip(x.coords, y.coords)), Fraction(0))


@dataclass(frozen=True)
class TaggedBox:
    """Open dyadic box ``prod_i (m_i/2^k, (m_i+2)/2^k)`` with a natural tag."""

    tag: int
    level: int
    corners: tuple[int, ...]

    def __post_init__(self):
        if self.tag < 0 or self.level < 0:
            raise ValueError("tag and level must be naturals")
        bound = 4 ** self.level
        for m in self.corners:
            if abs(m) > bound:
                raise ValueError(f"corner {m} exceeds bound {bound} at level {self.level}")

    @property
    def dimension(self) -> int:
        return len(self.corners)

    def intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        d = Fraction(1, 2 ** self.level)
        return tuple((m * d, (m + 2) * d) for m in self.corners)

    def __repr__(self):
        ivs = "x".join(f"({lo},{hi})" for lo, hi in self.intervals())
        return f"TaggedBox(tag={self.tag}, {ivs})"


def box_contains(box: TaggedBox, x: Point) -> bool:
    """Exact strict-inequality membership of a point in an open box."""
    if box.dimension != x.dimension:
        raise InvalidPointError(f"box dimension {box.dimension} vs point {x.dimension}")
    return all(lo < c < hi for (lo, hi), c in zip(box.intervals(), x.coords))


def box_within(inner: TaggedBox, outer: TaggedBox) -> bool:
    """Whether ``inner`` is a subset of ``outer`` (as open sets)."""
    if inner.dimension != outer.dimension:
        raise InvalidPointError("dimension mismatch between boxes")
    return all(
        olo <= ilo and ihi <= ohi
        for (ilo, ihi), (olo, ohi) in zip(inner.intervals(), outer.intervals())
    )


def boxes_disjoint(b0: TaggedBox, b1: TaggedBox) -> bool:
    """Open boxes are disjoint iff some coordinate's intervals do not overlap."""
    return any(
        hi0 <= lo1 or hi1 <= lo0
        for (lo0, hi0), (lo1, hi1) in zip(b0.intervals(), b1.intervals())
    )


# -- canonical enumeration ---------------------------------------------------

def _corner_range(level: int) -> int:
    # number of admissible corner values per coordinate at this level
    return 2 * 4 ** level + 1


def _corner_count(dim: int, level: int) -> int:
    return _corner_range(level) ** dim


def _corner_rank(corners: Sequence[int], level: int) -> int:
    base = _corner_range(level)
    shift = 4 ** level
    rank = 0
    for m in corners:
        rank = rank * base + (m + shift)
    return rank


def _corner_unrank(rank: int, dim: int, level: int) -> tuple[int, ...]:
    base = _corner_range(level)
    shift = 4 ** level
    digits = []
    for _ in range(dim):
        rank, digit = divmod(rank, base)
        digits.append(digit - shift)
    return tuple(reversed(digits))


def _stage_size(dim: int, stage: int) -> int:
    below = sum(_corner_count(dim, k) for k in range(stage))
    return below + _corner_count(dim, stage) * (stage + 1)


def box_index(box: TaggedBox) -> int:
    """Position of a box in the canonical enumeration of its dimension."""
    dim = box.dimension
    s = max(box.level, box.tag)
    idx = sum(_stage_size(dim, t) for t in range(s))
    if box.level < s:
        # part A of the stage: levels below s, tag forced to s
        idx += sum(_corner_count(dim, k) for k in range(box.level))
        idx += _corner_rank(box.corners, box.level)
    else:
        # part B: level s, tags 0..s per corner vector
        idx += sum(_corner_count(dim, k) for k in range(s))
        idx += _corner_rank(box.corners, s) * (s + 1) + box.tag
    return idx


def box_from_index(dim: int, index: int) -> TaggedBox:
    """Inverse of :func:`box_index`; bijective onto all boxes of a dimension."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    if index < 0:
        raise ValueError("index must be a natural")
    stage = 0
    while True:
        size = _stage_size(dim, stage)
        if index < size:
            break
        index -= size
        stage += 1
    for k in range(stage):
        ck = _corner_count(dim, k)
        if index < ck:
            return TaggedBox(tag=stage, level=k, corners=_corner_unrank(index, dim, k))
        index -= ck
    rank, tag = divmod(index, stage + 1)
    return TaggedBox(tag=tag, level=stage, corners=_corner_unrank(rank, dim, stage))


def _containing_corners(x: Point, level: int) -> list[tuple[int, ...]]:
    """Corner vectors of level-`level` boxes that strictly contain ``x``."""
    per_coord: list[list[int]] = []
    scale = 2 ** level
    bound = 4 ** level
    for c in x.coords:
        v = c * scale
        # m must satisfy m < v < m + 2, i.e. v - 2 < m < v
        lo = v - 2
        first = floor(lo) + 1
        last = ceil(v) - 1
        candidates = [m for m in range(first, last + 1) if lo < m < v and abs(m) <= bound]
        if not candidates:
            return []
        per_coord.append(candidates)
    combos: list[tuple[int, ...]] = [()]
    for cands in per_coord:
        combos = [c + (m,) for c in combos for m in cands]
    return combos


def iter_boxes_containing(
    x: Point,
    *,
    tag: int | None = None,
    within: TaggedBox | None = None,
    min_level: int = 0,
) -> Iterator[TaggedBox]:
    """Boxes containing ``x`` in canonical order, optionally filtered.

    The subsequence of the canonical enumeration consisting of boxes that
    strictly contain ``x``, restricted to a fixed tag, to subsets of
    ``within``, and to levels >= ``min_level`` when requested.  Never
    exhausts: arbitrarily small boxes around any rational point exist at
    every tag.
    """
    dim = x.dimension

    def admit(box: TaggedBox) -> bool:
        if within is not None and not box_within(box, within):
            return False
        return True

    for stage in count(0):
        # part A: levels k < stage, tag = stage
        if tag is None or tag == stage:
            for k in range(min_level, stage):
                for corners in _containing_corners(x, k):
                    box = TaggedBox(tag=stage, level=k, corners=corners)
                    if admit(box):
                        yield box
        # part B: level = stage, tags 0..stage
        if stage >= min_level:
            for corners in _containing_corners(x, stage):
                if tag is None:
                    for t in range(stage + 1):
                        box = TaggedBox(tag=t, level=stage, corners=corners)
                        if admit(box):
                            yield box
                elif tag <= stage:
                    box = TaggedBox(tag=tag, level=stage, corners=corners)
                    if admit(box):
                        yield box


def first_box_containing(x: Point, **kwargs) -> TaggedBox:
    """Canonically first box containing ``x`` under the given filters."""
    return next(iter_boxes_containing(x, **kwargs))
