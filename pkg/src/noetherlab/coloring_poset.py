"""The box-valued coloring poset: conditions, ordering, compatibility,
and the constructive common lower bound.

Conditions are finite suitable proper colorings by tagged boxes whose
domain is good relative to the universe.  Goodness is where the finite
artifact deliberately diverges from some of its own worked examples (see
validate_pcondition); the ordering and compatibility criteria themselves
never mention goodness and accept any suitable proper assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .coloring import check_proper, check_suitable, separating_box
from .errors import (
    AmalgamationError,
    IncompatibilityError,
    InvalidConditionError,
    PreconditionError,
)
from .geometry import Point, TaggedBox, box_contains, first_box_containing
from .graphs import SampleUniverse, adjacent
from .lattice import good_closure, is_good


@dataclass
class PCondition:
    """Finite partial coloring Point -> TaggedBox over a declared universe."""

    universe: SampleUniverse
    assignment: dict[Point, TaggedBox]

    def domain(self) -> frozenset[Point]:
        return frozenset(self.assignment)

    def __len__(self):
        return len(self.assignment)


def validate_pcondition(p: PCondition, *, require_good: bool = False) -> None:
    """Suitability and properness always; domain goodness only on request.

    The compatibility and ordering criteria are well-defined without
    goodness, and the worked examples rely on that; constructions whose
    correctness argument needs good domains (the lower bound) produce them
    via good_closure themselves.
    """
    for x in p.assignment:
        if x not in p.universe:
            raise InvalidConditionError(f"{x} not in the universe")
    problems = check_suitable(p.assignment) + check_proper(p.universe, p.assignment)
    if problems:
        raise InvalidConditionError("; ".join(problems))
    if require_good and not is_good(p.universe, p.assignment.keys()):
        raise InvalidConditionError("domain is not good relative to the universe")


def p_leq(q: PCondition, p: PCondition) -> bool:
    """q extends p and every new color avoids old-domain neighbors.

    True iff p's assignment is contained in q's and, for every
    x in dom(q) - dom(p), the box q(x) contains no point of dom(p)
    adjacent to x.
    """
    for x, box in p.assignment.items():
        if q.assignment.get(x) != box:
            return False
    dom_p = p.domain()
    instance = q.universe.instance
    for x, box in q.assignment.items():
        if x in dom_p:
            continue
        for y in dom_p:
            if adjacent(instance, x, y) and box_contains(box, y):
                return False
    return True


def p_incompatibility_witness(p0: PCondition, p1: PCondition):
    """None when compatible, else a tuple describing the first clash."""
    for x, box in p0.assignment.items():
        other = p1.assignment.get(x)
        if other is not None and other != box:
            return ("function-clash", x, box, other)
    instance = p0.universe.instance
    dom0, dom1 = p0.domain(), p1.domain()
    only0 = sorted(dom0 - dom1, key=p0.universe.index)
    only1 = sorted(dom1 - dom0, key=p0.universe.index)
    for x0 in only0:
        for x1 in only1:
            if not adjacent(instance, x0, x1):
                continue
            if box_contains(p0.assignment[x0], x1):
                return ("box-contains", x0, x1, p0.assignment[x0])
            if box_contains(p1.assignment[x1], x0):
                return ("box-contains", x1, x0, p1.assignment[x1])
    return None


def p_compatible(p0: PCondition, p1: PCondition) -> bool:
    """The finite compatibility criterion: union is a function, and for
    adjacent points split across the two domains neither color swallows
    the other's point."""
    return p_incompatibility_witness(p0, p1) is None


def is_separated(p: PCondition) -> bool:
    """No color of p contains a domain point adjacent to its own point.

    The compatibility criterion is equivalent to the existence of a common
    lower bound exactly on families of separated conditions; without
    separation, a color swallowing a shared domain point yields pairwise
    compatible families with no amalgamation (see p_lower_bound).
    """
    instance = p.universe.instance
    pts = list(p.assignment)
    for x in pts:
        box = p.assignment[x]
        for y in pts:
            if y != x and adjacent(instance, x, y) and box_contains(box, y):
                return False
    return True


def p_lower_bound(
    conditions: Iterable[PCondition],
    x: Optional[Point] = None,
    universe: Optional[SampleUniverse] = None,
) -> PCondition:
    """Common lower bound of pairwise-compatible conditions, containing x.

    Takes the good closure of the union of domains (plus x), then colors
    each new point by a separating box against all member domains, using
    pairwise-distinct fresh boxes; verifies p_leq against every member
    before returning.  Raises IncompatibilityError on an incompatible
    pair, and AmalgamationError for the non-separated corner where the
    pairwise criterion holds but no common lower bound exists.
    """
    conds = list(conditions)
    if universe is None:
        if not conds:
            raise PreconditionError("empty condition set needs an explicit universe")
        universe = conds[0].universe
    for i, c0 in enumerate(conds):
        for c1 in conds[i + 1 :]:
            witness = p_incompatibility_witness(c0, c1)
            if witness is not None:
                raise IncompatibilityError(
                    f"conditions {i} and {conds.index(c1)} are incompatible: {witness}",
                    witness=witness,
                )
    seed: set[Point] = set()
    for c in conds:
        seed |= c.domain()
    if x is not None:
        if x not in universe:
            raise PreconditionError(f"{x} not in the universe")
        seed.add(x)
    b = good_closure(universe, seed)
    merged: dict[Point, TaggedBox] = {}
    for c in conds:
        merged.update(c.assignment)
    old_domain = frozenset(merged)
    fresh: list[TaggedBox] = []
    for y in sorted(b - old_domain, key=universe.index):
        box = separating_box(universe, y, old_domain, exclude=fresh)
        fresh.append(box)
        merged[y] = box
    q = PCondition(universe, merged)
    validate_pcondition(q)
    for i, c in enumerate(conds):
        if not p_leq(q, c):
            # Pairwise compatibility does not suffice when some member's
            # color swallows a point shared with another member's domain;
            # the criterion is silent about shared points.  Separated
            # conditions never reach this branch.
            raise AmalgamationError(
                f"no common lower bound: the merged coloring is not below member {i}",
                witness=i,
            )
    return q
