"""The PointSet JSON file format.

A file is one JSON document ``{"space": {"kind": ..., params}, "points": [...]}``.
Rationals serialize as ``"p/q"`` (or ``"p"`` when q == 1), tree vertices as
lists of child indices, lattice points as integer lists, poles as ``"N"``/``"S"``
and bipartite points as ``["L", i]`` / ``["R", i]``.  ``dumps`` output is
canonical, so ``dumps(loads(dumps(A))) == dumps(A)`` byte for byte.
"""
import json
from pathlib import Path

from .errors import InvalidInput, ParseError
from .metric import PointSet, space_from_dict


def to_dict(A: PointSet) -> dict:
    return {
        "space": A.space.describe(),
        "points": [A.space.point_to_json(p) for p in A.points],
    }


def from_dict(doc) -> PointSet:
    if not isinstance(doc, dict) or "space" not in doc or "points" not in doc:
        raise ParseError('a point-set document needs "space" and "points" keys')
    if not isinstance(doc["space"], dict):
        raise ParseError('"space" must be an object')
    if not isinstance(doc["points"], list):
        raise ParseError('"points" must be a list')
    space = space_from_dict(doc["space"])
    points = []
    for i, obj in enumerate(doc["points"]):
        try:
            points.append(space.point_from_json(obj))
        except InvalidInput as e:
            raise ParseError(f"points[{i}]: {e}") from None
    return PointSet(space, tuple(points))


def dumps(A: PointSet) -> str:
    return json.dumps(to_dict(A), separators=(",", ":"))


def loads(text) -> PointSet:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        offset = len(text[: e.pos].encode("utf-8"))
        raise ParseError(f"malformed JSON: {e.msg}", offset) from None
    return from_dict(doc)


def load(path) -> PointSet:
    return loads(Path(path).read_bytes())


def dump(A: PointSet, path) -> None:
    Path(path).write_text(dumps(A) + "\n")
