"""Seeded random builders for property campaigns.

Distributions (documented in every campaign report header):
rational grid samples for geometric instances, clustered line samples with
planted unit edges, planar unit-distance samples from rational circle
points, random explicit graphs with an edge-probability parameter, and
random conditions at random locations.  All draws come from the supplied
random.Random, so identical seeds reproduce identical objects.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .coloring import separating_box
from .coloring_poset import PCondition, validate_pcondition
from .control_poset import Location, QCondition, canonical_location, validate_qcondition
from .errors import LocationError
from .geometry import Point, pt
from .graphs import SampleUniverse, adjacent, distance_graph, explicit_graph
from .hamming import make_diagonal_hamming
from .lattice import good_closure

GENERATOR_NOTES = {
    "line": "unit-distance R^1 on 0..n-1 (integer grid)",
    "clustered-line": "unit-distance R^1, two rational clusters one unit apart",
    "planar": "unit-distance R^2, grid bases plus rational circle offsets",
    "hamming": "diagonal Hamming truncation, breadth <= 3",
    "explicit": "G(n, p) explicit graph, seeded",
}


def line_universe(n: int) -> SampleUniverse:
    instance = distance_graph(1, [1])
    return SampleUniverse(instance, [pt(i) for i in range(n)])


def path_explicit_universe(n: int) -> SampleUniverse:
    """The explicit twin of the integer unit-distance line."""
    from .graphs import vertex_point

    instance = explicit_graph(n, [(i, i + 1) for i in range(n - 1)])
    return SampleUniverse(instance, [vertex_point(i) for i in range(n)])


def clustered_line_universe(cluster: int = 8, denominator: int = 16) -> SampleUniverse:
    """Two clusters of rationals one unit apart, all inside the box (0, 2).

    Points i/denominator and 1 + i/denominator for 1 <= i <= cluster; the
    only unit-distance pairs are the matched cluster positions, so the
    sample is triangle-free while a single level-0 box carries every point.
    """
    instance = distance_graph(1, [1])
    points = [pt(Fraction(i, denominator)) for i in range(1, cluster + 1)]
    points += [pt(1 + Fraction(i, denominator)) for i in range(1, cluster + 1)]
    return SampleUniverse(instance, points)


def rational_circle_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    """A rational point on the unit circle via the tangent parametrization."""
    t = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def planar_unit_universe(rng: random.Random, n_points: int) -> SampleUniverse:
    """Planar unit-distance sample: small grid bases plus circle offsets."""
    instance = distance_graph(2, [1])
    seen = set()
    points = []
    while len(points) < n_points:
        if points and rng.random() < 0.6:
            base = rng.choice(points)
            dx, dy = rational_circle_point(rng)
            cand = Point((base.coords[0] + dx, base.coords[1] + dy))
        else:
            cand = pt(rng.randint(-2, 2), rng.randint(-2, 2))
        if cand.coords not in seen:
            seen.add(cand.coords)
            points.append(cand)
    return SampleUniverse(instance, points)


def random_explicit_universe(
    rng: random.Random, n: int, edge_probability: float = 0.35
) -> SampleUniverse:
    from .graphs import vertex_point

    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    instance = explicit_graph(n, edges)
    return SampleUniverse(instance, [vertex_point(i) for i in range(n)])


def random_universe(rng: random.Random, max_points: int = 12) -> SampleUniverse:
    """The acceptance mix: line/planar unit distance, Hamming, explicit."""
    kind = rng.choice(["line", "planar", "hamming", "explicit"])
    if kind == "line":
        return line_universe(rng.randint(3, max_points))
    if kind == "planar":
        return planar_unit_universe(rng, rng.randint(4, min(10, max_points)))
    if kind == "hamming":
        return make_diagonal_hamming(rng.randint(2, 3))
    return random_explicit_universe(rng, rng.randint(3, min(10, max_points)), rng.uniform(0.2, 0.6))


def random_good_domain(rng: random.Random, universe: SampleUniverse, max_seed: int = 4) -> frozenset[Point]:
    seeds = rng.sample(universe.points, k=min(len(universe), rng.randint(1, max_seed)))
    return good_closure(universe, seeds)


def random_pcondition(
    rng: random.Random, universe: SampleUniverse, max_seed: int = 3
) -> PCondition:
    """A valid separated condition: good domain, random tags.

    Every color avoids all adjacent domain points (not just earlier ones),
    which is the class on which the pairwise compatibility criterion
    exactly characterizes amalgamation.
    """
    domain = sorted(random_good_domain(rng, universe, max_seed), key=universe.index)
    assignment = {}
    for x in domain:
        assignment[x] = separating_box(
            universe, x, [y for y in domain if y != x], tag=rng.randint(0, 2)
        )
    p = PCondition(universe, assignment)
    validate_pcondition(p, require_good=True)
    return p


def random_qcondition(
    rng: random.Random, universe: SampleUniverse, color_budget: int, max_size: int = 4
) -> QCondition:
    """A proper natural-valued partial coloring drawn by rejection."""
    for _ in range(200):
        pts = rng.sample(universe.points, k=min(len(universe), rng.randint(1, max_size)))
        assignment = {x: rng.randrange(color_budget) for x in pts}
        q = QCondition(universe, assignment)
        from .coloring import check_proper

        if not check_proper(universe, assignment):
            validate_qcondition(q)
            return q
    raise AssertionError("rejection sampling failed to find a proper condition")


def random_location_with_conditions(
    rng: random.Random,
    universe: SampleUniverse,
    n_cells: int,
    n_conditions: int,
    color_budget: int = 3,
) -> Optional[tuple[Location, list[QCondition]]]:
    """A location built around a seed condition, plus conditions at it.

    Returns None when the sampled cells admit no alternative selections.
    """
    if n_cells > len(universe):
        return None
    for _ in range(40):
        pts = rng.sample(universe.points, k=n_cells)
        colors = {x: rng.randrange(color_budget) for x in pts}
        seed = QCondition(universe, colors)
        from .coloring import check_proper

        if check_proper(universe, colors):
            continue
        try:
            loc = canonical_location(seed)
        except LocationError:
            continue
        conditions = []
        for _ in range(n_conditions):
            assignment = {}
            ok = True
            for idx, cell in enumerate(loc.cells):
                members = [p for p in universe.points if _in_cell(cell, p)]
                if not members:
                    ok = False
                    break
                assignment[rng.choice(members)] = loc.colors[idx]
            if not ok or len(assignment) != len(loc.cells):
                continue
            q = QCondition(universe, assignment)
            if not check_proper(universe, assignment):
                conditions.append(q)
        if len(conditions) >= 2:
            return loc, conditions
    return None


def _in_cell(cell, p: Point) -> bool:
    from .control_poset import cell_contains

    return cell_contains(cell, p)
