"""JSON round-trips for instances, universes, boxes, conditions, locations.

Rationals travel as "p/q" strings (plain integers allowed), points as
coordinate arrays, explicit graphs as a vertex count plus edge index
pairs.  Parse errors name the offending field.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .control_poset import Location, QCondition
from .coloring_poset import PCondition
from .errors import ParseError
from .geometry import Point, TaggedBox
from .graphs import (
    CURVE_DIFFERENCE,
    DISTANCE,
    EXPLICIT,
    HAMMING_DIAGONAL,
    HAMMING_UNIFORM,
    GraphInstance,
    SampleUniverse,
    TwoVarPoly,
    curve_difference_graph,
    distance_graph,
    explicit_graph,
    hamming_diagonal,
    hamming_uniform,
)


def rational_to_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_from_str(s: Any, field: str = "rational") -> Fraction:
    try:
        q = Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{field}: malformed rational {s!r} ({exc})") from None
    return q


def point_to_json(p: Point) -> list[str]:
    return [rational_to_str(c) for c in p.coords]


def point_from_json(data: Any, field: str = "point") -> Point:
    if not isinstance(data, list) or not data:
        raise ParseError(f"{field}: expected a nonempty coordinate array")
    return Point(tuple(rational_from_str(c, f"{field}[{i}]") for i, c in enumerate(data)))


def box_to_json(b: TaggedBox) -> dict:
    return {"tag": b.tag, "level": b.level, "corners": list(b.corners)}


def box_from_json(data: Any, field: str = "box") -> TaggedBox:
    try:
        return TaggedBox(
            tag=int(data["tag"]),
            level=int(data["level"]),
            corners=tuple(int(m) for m in data["corners"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{field}: malformed box ({exc})") from None


def instance_to_json(instance: GraphInstance) -> dict:
    out: dict[str, Any] = {"kind": instance.kind}
    if instance.kind == DISTANCE:
        out["dim"] = instance.dimension
        out["squared_distances"] = sorted(
            (rational_to_str(s) for s in instance.squared_distances),
            key=lambda s: Fraction(s),
        )
    elif instance.kind == CURVE_DIFFERENCE:
        out["dim"] = 2
        out["poly"] = [
            {"powers": [i, j], "coeff": rational_to_str(c)}
            for (i, j), c in instance.poly.terms
        ]
    elif instance.kind == HAMMING_UNIFORM:
        out["breadth"] = instance.dimension
        out["alphabet"] = instance.alphabet
    elif instance.kind == HAMMING_DIAGONAL:
        out["breadth"] = instance.dimension
    elif instance.kind == EXPLICIT:
        out["vertices"] = instance.n_vertices
        out["edges"] = sorted(sorted(e) for e in instance.edges)
    return out


def instance_from_json(data: Any) -> GraphInstance:
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError("instance: missing 'kind'")
    kind = data["kind"]
    try:
        if kind == DISTANCE:
            return distance_graph(
                int(data["dim"]),
                [
                    rational_from_str(s, f"squared_distances[{i}]")
                    for i, s in enumerate(data["squared_distances"])
                ],
            )
        if kind == CURVE_DIFFERENCE:
            terms = {
                (int(t["powers"][0]), int(t["powers"][1])): rational_from_str(
                    t["coeff"], "poly coeff"
                )
                for t in data["poly"]
            }
            return curve_difference_graph(TwoVarPoly.from_dict(terms))
        if kind == HAMMING_UNIFORM:
            return hamming_uniform(int(data["breadth"]), int(data["alphabet"]))
        if kind == HAMMING_DIAGONAL:
            return hamming_diagonal(int(data["breadth"]))
        if kind == EXPLICIT:
            return explicit_graph(int(data["vertices"]), [tuple(e) for e in data["edges"]])
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"instance ({kind}): {exc}") from None
    raise ParseError(f"instance: unknown kind {kind!r}")


def universe_to_json(universe: SampleUniverse) -> dict:
    return {
        "instance": instance_to_json(universe.instance),
        "points": [point_to_json(p) for p in universe.points],
    }


def universe_from_json(data: Any) -> SampleUniverse:
    if not isinstance(data, dict):
        raise ParseError("universe: expected an object")
    instance = instance_from_json(data.get("instance"))
    raw_points = data.get("points")
    if raw_points is None:
        if instance.kind == EXPLICIT:
            from .graphs import vertex_point

            points = [vertex_point(i) for i in range(instance.n_vertices)]
        else:
            raise ParseError("universe: 'points' required for this kind")
    else:
        points = [point_from_json(p, f"points[{i}]") for i, p in enumerate(raw_points)]
    try:
        return SampleUniverse(instance, points)
    except Exception as exc:
        raise ParseError(f"universe: {exc}") from None


def qcondition_to_json(q: QCondition) -> dict:
    items = sorted(
        ((q.universe.index(x), c) for x, c in q.assignment.items())
    )
    return {"assignment": {str(i): c for i, c in items}}


def qcondition_from_json(data: Any, universe: SampleUniverse) -> QCondition:
    try:
        assignment = {
            universe.points[int(i)]: int(c) for i, c in data["assignment"].items()
        }
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"q-condition: {exc}") from None
    return QCondition(universe, assignment)


def pcondition_to_json(p: PCondition) -> dict:
    items = sorted(
        ((p.universe.index(x), box_to_json(b)) for x, b in p.assignment.items())
    )
    return {"assignment": {str(i): b for i, b in items}}


def pcondition_from_json(data: Any, universe: SampleUniverse) -> PCondition:
    try:
        assignment = {
            universe.points[int(i)]: box_from_json(b, f"assignment[{i}]")
            for i, b in data["assignment"].items()
        }
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"p-condition: {exc}") from None
    return PCondition(universe, assignment)


def location_to_json(loc: Location, universe: SampleUniverse) -> dict:
    cells = []
    for cell in loc.cells:
        if isinstance(cell, TaggedBox):
            cells.append({"box": box_to_json(cell)})
        else:
            cells.append({"vertices": sorted(universe.index(p) for p in cell)})
    return {"cells": cells, "colors": list(loc.colors)}


def location_from_json(data: Any, universe: SampleUniverse) -> Location:
    try:
        cells = []
        for i, cell in enumerate(data["cells"]):
            if "box" in cell:
                cells.append(box_from_json(cell["box"], f"cells[{i}]"))
            else:
                cells.append(frozenset(universe.points[int(v)] for v in cell["vertices"]))
        return Location(tuple(cells), tuple(int(c) for c in data["colors"]))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"location: {exc}") from None


def dump_canonical(data: Any) -> str:
    """Deterministic JSON: sorted keys, no whitespace drift."""
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def load_path(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ParseError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def parse_instance_file(path: str) -> tuple[GraphInstance, SampleUniverse]:
    """Instance file -> (instance, universe); the CLI's main input format."""
    data = load_path(path)
    if isinstance(data, dict) and "instance" in data:
        universe = universe_from_json(data)
    else:
        universe = universe_from_json({"instance": data, "points": data.get("points")})
    return universe.instance, universe
