"""Metric spaces, exact distances and the 3-AP predicate.

Every distance is an exact rational (``fractions.Fraction`` or ``int``).
Circle-like positions are stored in turns so arc lengths stay rational; the
3-AP relation only compares distances, so the missing factor of 2*pi cancels.

Euclidean space is the one exception to "distance is a metric": its
``dist`` returns the SQUARED Euclidean distance, which is rational for
rational points.  The predicate accounts for this through ``ap_factor``
(4 instead of 2).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, ClassVar, Iterator, Sequence

from .errors import InvalidInput
from .spaces import arc_distance, graph_apsp

POLES = ("N", "S")
SIDES = ("L", "R")


def to_scalar(value, what: str = "value") -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction; floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInput(f"{what} must be exact (int, Fraction or 'p/q'), got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"{what} is not a rational number: {value!r}") from None
    raise InvalidInput(f"{what} must be a rational number, got {type(value).__name__}")


def _to_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInput(f"{what} must be an integer, got {value!r}")
    return value


def scalar_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Space:
    """Base class of the nine supported metric spaces.

    Subclasses define ``coerce`` (validate and canonicalize a point),
    ``dist`` (unchecked exact distance) and the JSON codec of their points.
    """

    kind: ClassVar[str]
    # d(a,c) == ap_factor * d(a,b) on a 3-AP; 4 for squared distances.
    ap_factor: ClassVar[int] = 2

    def coerce(self, p):
        raise NotImplementedError

    def dist(self, p, q):
        raise NotImplementedError

    def point_to_json(self, p) -> Any:
        raise NotImplementedError

    def point_from_json(self, obj):
        return self.coerce(obj)

    def params(self) -> dict:
        return {}

    def describe(self) -> dict:
        return {"kind": self.kind, **self.params()}


@dataclass(frozen=True)
class Line(Space):
    kind: ClassVar[str] = "line"

    def coerce(self, p):
        return to_scalar(p, "line coordinate")

    def dist(self, p, q):
        return abs(p - q)

    def point_to_json(self, p):
        return scalar_to_str(p)


@dataclass(frozen=True)
class Euclidean(Space):
    """Rational points of R^dim.  ``dist`` is the squared Euclidean distance."""

    dim: int
    kind: ClassVar[str] = "euclidean"
    ap_factor: ClassVar[int] = 4

    def __post_init__(self):
        if _to_int(self.dim, "euclidean dim") < 1:
            raise InvalidInput("euclidean dim must be >= 1")

    def coerce(self, p):
        if not isinstance(p, (list, tuple)) or len(p) != self.dim:
            raise InvalidInput(f"euclidean point must have {self.dim} coordinates, got {p!r}")
        return tuple(to_scalar(x, "euclidean coordinate") for x in p)

    def dist(self, p, q):
        return sum((x - y) ** 2 for x, y in zip(p, q))

    def point_to_json(self, p):
        return [scalar_to_str(x) for x in p]

    def params(self):
        return {"dim": self.dim}


@dataclass(frozen=True)
class Circle(Space):
    """The unit circle with arc-length metric, positions in turns."""

    kind: ClassVar[str] = "circle"

    def coerce(self, p):
        return to_scalar(p, "circle turn") % 1

    def dist(self, p, q):
        return arc_distance(p, q)

    def point_to_json(self, p):
        return scalar_to_str(p)


@dataclass(frozen=True)
class EquatorPoles(Space):
    """A great circle of the 2-sphere together with its two poles.

    Equator points are turns; the poles are ``"N"`` and ``"S"``.  Distances
    are in turns of a great circle: pole to equator 1/4, pole to pole 1/2.
    """

    kind: ClassVar[str] = "equator_poles"

    def coerce(self, p):
        if isinstance(p, str) and p in POLES:
            return p
        return to_scalar(p, "equator turn") % 1

    def dist(self, p, q):
        p_pole, q_pole = isinstance(p, str), isinstance(q, str)
        if p_pole and q_pole:
            return Fraction(0) if p == q else Fraction(1, 2)
        if p_pole or q_pole:
            return Fraction(1, 4)
        return arc_distance(p, q)

    def point_to_json(self, p):
        return p if isinstance(p, str) else scalar_to_str(p)


@dataclass(frozen=True)
class RegularTree(Space):
    """The r-regular tree; a vertex is its path of child indices from a fixed root.

    The root has ``degree`` children (0..r-1); every other vertex has r-1
    children (0..r-2).
    """

    degree: int
    kind: ClassVar[str] = "regular_tree"

    def __post_init__(self):
        if _to_int(self.degree, "tree degree") < 2:
            raise InvalidInput("tree degree must be >= 2")

    def coerce(self, p):
        if not isinstance(p, (list, tuple)):
            raise InvalidInput(f"tree vertex must be a list of child indices, got {p!r}")
        path = tuple(_to_int(i, "tree child index") for i in p)
        for depth, i in enumerate(path):
            limit = self.degree if depth == 0 else self.degree - 1
            if not 0 <= i < limit:
                raise InvalidInput(f"child index {i} at depth {depth} outside 0..{limit - 1}")
        return path

    def dist(self, p, q):
        common = 0
        for x, y in zip(p, q):
            if x != y:
                break
            common += 1
        return len(p) + len(q) - 2 * common

    def point_to_json(self, p):
        return list(p)

    def params(self):
        return {"degree": self.degree}


@dataclass(frozen=True)
class Lattice(Space):
    """Z^dim with the graph (L1) metric."""

    dim: int
    kind: ClassVar[str] = "lattice"

    def __post_init__(self):
        if _to_int(self.dim, "lattice dim") < 1:
            raise InvalidInput("lattice dim must be >= 1")

    def coerce(self, p):
        if not isinstance(p, (list, tuple)) or len(p) != self.dim:
            raise InvalidInput(f"lattice point must have {self.dim} integer coordinates, got {p!r}")
        return tuple(_to_int(x, "lattice coordinate") for x in p)

    def dist(self, p, q):
        return sum(abs(x - y) for x, y in zip(p, q))

    def point_to_json(self, p):
        return list(p)

    def params(self):
        return {"dim": self.dim}


@dataclass(frozen=True)
class FiniteGraph(Space):
    """A connected simple graph with its shortest-path metric."""

    vertex_count: int
    edges: tuple = ()
    kind: ClassVar[str] = "finite_graph"
    matrix: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        _to_int(self.vertex_count, "vertex count")
        edges = []
        for e in self.edges:
            if not isinstance(e, (list, tuple)) or len(e) != 2:
                raise InvalidInput(f"edge must be a pair of vertex ids, got {e!r}")
            u, v = (_to_int(x, "vertex id") for x in e)
            edges.append((min(u, v), max(u, v)))
        edges = tuple(sorted(set(edges)))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "matrix", graph_apsp(edges, self.vertex_count))

    def coerce(self, p):
        v = _to_int(p, "graph vertex")
        if not 0 <= v < self.vertex_count:
            raise InvalidInput(f"vertex {v} outside 0..{self.vertex_count - 1}")
        return v

    def dist(self, p, q):
        return self.matrix[p][q]

    def point_to_json(self, p):
        return p

    def params(self):
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class RadialPlane(Space):
    """The plane with the 'radial' metric: straight-line distance along lines
    through the origin, ``|z| + |w|`` otherwise.

    Points are polar pairs ``(radius, turn)``; the origin is ``(0, 0)``.
    Two points are on a common line through the origin when their turns are
    equal or opposite, or when either is the origin.
    """

    kind: ClassVar[str] = "radial_plane"

    def coerce(self, p):
        if not isinstance(p, (list, tuple)) or len(p) != 2:
            raise InvalidInput(f"radial point must be a (radius, turn) pair, got {p!r}")
        r = to_scalar(p[0], "radius")
        if r < 0:
            raise InvalidInput(f"radius must be >= 0, got {r}")
        t = to_scalar(p[1], "turn") % 1
        return (r, Fraction(0) if r == 0 else t)

    def dist(self, p, q):
        (r1, t1), (r2, t2) = p, q
        # opposite turns also lie on a line through 0, but there |z - w| = r1 + r2 anyway
        if r1 == 0 or r2 == 0 or t1 == t2:
            return abs(r1 - r2)
        return r1 + r2

    def point_to_json(self, p):
        return [scalar_to_str(p[0]), scalar_to_str(p[1])]


@dataclass(frozen=True)
class CompleteBipartite(Space):
    """Complete bipartite graph with infinite sides L and R: 1 across, 2 within a side."""

    kind: ClassVar[str] = "complete_bipartite"

    def coerce(self, p):
        if not isinstance(p, (list, tuple)) or len(p) != 2 or p[0] not in SIDES:
            raise InvalidInput(f"bipartite point must be ['L', i] or ['R', i], got {p!r}")
        i = _to_int(p[1], "bipartite index")
        if i < 0:
            raise InvalidInput("bipartite index must be >= 0")
        return (p[0], i)

    def dist(self, p, q):
        if p == q:
            return 0
        return 2 if p[0] == q[0] else 1

    def point_to_json(self, p):
        return [p[0], p[1]]


SPACE_KINDS: dict[str, type[Space]] = {
    cls.kind: cls
    for cls in (Line, Euclidean, Circle, EquatorPoles, RegularTree, Lattice,
                FiniteGraph, RadialPlane, CompleteBipartite)
}


def space_from_dict(desc: dict) -> Space:
    desc = dict(desc)
    kind = desc.pop("kind", None)
    if kind not in SPACE_KINDS:
        raise InvalidInput(f"unknown space kind {kind!r}; expected one of {sorted(SPACE_KINDS)}")
    try:
        if kind in ("euclidean", "lattice"):
            return SPACE_KINDS[kind](dim=desc["dim"])
        if kind == "regular_tree":
            return RegularTree(degree=desc["degree"])
        if kind == "finite_graph":
            return FiniteGraph(vertex_count=desc["vertices"], edges=tuple(desc.get("edges", ())))
    except KeyError as e:
        raise InvalidInput(f"space {kind!r} is missing parameter {e.args[0]!r}") from None
    return SPACE_KINDS[kind]()


def _check(space: Space, *points):
    try:
        return [space.coerce(p) for p in points]
    except InvalidInput as e:
        raise InvalidInput(f"point does not belong to a {space.kind} space: {e}") from None


def distance(space: Space, p, q) -> Fraction:
    """Exact distance between two points (squared distance for Euclidean space)."""
    p, q = _check(space, p, q)
    return Fraction(space.dist(p, q))


def ap3_relation(dab, dbc, dac, factor: int = 2) -> bool:
    return dab == dbc and factor * dab == dac


def is_ap3(space: Space, a, b, c) -> bool:
    """Whether (a, b, c) is a 3-term arithmetic progression: d(a,b) = d(b,c) = d(a,c)/2."""
    a, b, c = _check(space, a, b, c)
    return ap3_relation(space.dist(a, b), space.dist(b, c), space.dist(a, c), space.ap_factor)


@dataclass(frozen=True)
class PointSet:
    """An ordered, duplicate-free list of points of one space."""

    space: Space
    points: tuple

    def __post_init__(self):
        pts = tuple(_check(self.space, *self.points))
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise InvalidInput(f"duplicate point {p!r} at positions {seen[p]} and {i}")
            seen[p] = i
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator:
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def index(self, p) -> int:
        return self.points.index(p)

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(self.space, tuple(self.points[i] for i in indices))

    def distance_matrix(self) -> list[list]:
        d = self.space.dist
        pts = self.points
        return [[d(p, q) for q in pts] for p in pts]
