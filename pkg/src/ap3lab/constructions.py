"""Generators for the extremal point sets.

Circle families are built from the evenly spread n-set with turns k/n.  The
perturbed families (one or two points removed or added) are canonicalized to
offset 0, with index parameters selecting other representatives; their
membership conditions are checked at construction time.
"""
from fractions import Fraction
from itertools import product

from .errors import InvalidParameters
from .metric import (Circle, CompleteBipartite, EquatorPoles, Lattice, Line, PointSet,
                     RadialPlane, RegularTree)
from .spaces import arc_distance, arc_midpoint, equator_embed, rho, rotate


def line_ap(n: int) -> PointSet:
    """The n-term progression 0, 1, ..., n-1 on the line."""
    if n < 0:
        raise InvalidParameters("line_ap needs n >= 0")
    return PointSet(Line(), tuple(Fraction(k) for k in range(n)))


def _spread_turns(n: int, offset=0) -> list[Fraction]:
    return [(Fraction(offset) + Fraction(k, n)) % 1 for k in range(n)]


def evenly_spread(n: int, offset=0) -> PointSet:
    """n circle points with consecutive gaps of 1/n turn, starting at ``offset``."""
    if n < 2:
        raise InvalidParameters("evenly_spread needs n >= 2")
    return PointSet(Circle(), tuple(_spread_turns(n, offset)))


def _check_family_size(n: int):
    if n <= 0 or n % 4:
        raise InvalidParameters(f"the perturbed circle families need n positive and divisible by 4, got {n}")


def f_minus1(n: int, drop_index: int = 0) -> PointSet:
    """An evenly spread n-set with one point removed."""
    _check_family_size(n)
    if not 0 <= drop_index < n:
        raise InvalidParameters(f"drop_index must be in 0..{n - 1}")
    turns = _spread_turns(n)
    del turns[drop_index]
    return PointSet(Circle(), tuple(turns))


def f_minus2(n: int, i: int = 0, j: int = 2) -> PointSet:
    """An evenly spread n-set with two points a, b removed.

    Requires d(a, b) <= 1/4 turn and both arc midpoints of {a, b} in the set;
    for n = 4 no such pair exists.
    """
    _check_family_size(n)
    if not (0 <= i < n and 0 <= j < n) or i == j:
        raise InvalidParameters(f"i and j must be distinct indices in 0..{n - 1}")
    full = _spread_turns(n)
    a, b = full[i], full[j]
    if arc_distance(a, b) > Fraction(1, 4):
        raise InvalidParameters(f"removed points must be within 1/4 turn, got {arc_distance(a, b)}")
    members = set(full)
    if arc_midpoint(a, b) not in members or arc_midpoint(b, a) not in members:
        raise InvalidParameters("both arc midpoints of the removed pair must belong to the evenly spread set")
    return PointSet(Circle(), tuple(t for t in full if t not in (a, b)))


def _anchored(n: int, anchor_index: int) -> Fraction:
    """The point a with rho_n(a) equal to the anchor-th evenly spread point."""
    if not 0 <= anchor_index < n:
        raise InvalidParameters(f"anchor index must be in 0..{n - 1}")
    a = rotate(Fraction(anchor_index, n), Fraction(-1, 2 * n))
    assert rho(n)(a) == Fraction(anchor_index, n)
    return a


def f_plus1(n: int, anchor_index: int = 0) -> PointSet:
    """An evenly spread n-set plus the point half a gap clockwise of one member."""
    _check_family_size(n)
    return PointSet(Circle(), tuple(_spread_turns(n)) + (_anchored(n, anchor_index),))


def f_plus2(n: int, anchor_i: int = 0, anchor_j: int = 1) -> PointSet:
    """An evenly spread n-set plus two anchored points whose arc midpoints are members."""
    _check_family_size(n)
    if anchor_i == anchor_j:
        raise InvalidParameters("the two anchors must differ")
    a, b = _anchored(n, anchor_i), _anchored(n, anchor_j)
    members = set(_spread_turns(n))
    if arc_midpoint(a, b) not in members or arc_midpoint(b, a) not in members:
        raise InvalidParameters("both arc midpoints of the added pair must belong to the evenly spread set")
    return PointSet(Circle(), tuple(_spread_turns(n)) + (a, b))


def tree_ball(r: int, d0: int) -> PointSet:
    """All vertices of the r-regular tree within distance d0 of the root, root first, by depth."""
    if r < 2 or d0 < 0:
        raise InvalidParameters("tree_ball needs r >= 2 and d0 >= 0")
    layer = [()]
    vertices = [()]
    for depth in range(d0):
        width = r if depth == 0 else r - 1
        layer = [v + (k,) for v in layer for k in range(width)]
        vertices.extend(layer)
    return PointSet(RegularTree(r), tuple(vertices))


def lattice_ball(dim: int, d0: int) -> PointSet:
    """All points of Z^dim with L1 norm at most d0, in lexicographic order."""
    if dim < 1 or d0 < 0:
        raise InvalidParameters("lattice_ball needs dim >= 1 and d0 >= 0")
    box = range(-d0, d0 + 1)
    pts = tuple(p for p in product(box, repeat=dim) if sum(map(abs, p)) <= d0)
    return PointSet(Lattice(dim), pts)


def bipartite_split(n_left: int, n_right: int) -> PointSet:
    if n_left < 0 or n_right < 0:
        raise InvalidParameters("bipartite_split needs nonnegative side sizes")
    pts = [("L", i) for i in range(n_left)] + [("R", i) for i in range(n_right)]
    return PointSet(CompleteBipartite(), tuple(pts))


def radial_star(n: int) -> PointSet:
    """The origin plus n-1 unit-radius points at turns k/(n-1)."""
    if n < 1:
        raise InvalidParameters("radial_star needs n >= 1")
    pts = [(0, 0)] + [(1, Fraction(k, n - 1)) for k in range(n - 1)]
    return PointSet(RadialPlane(), tuple(pts))


def equator_circle_part(n: int) -> list[Fraction]:
    """Equator turns of the optimal n-point equator-and-poles set (poles excluded)."""
    if n < 3:
        raise InvalidParameters("equator_config needs n >= 3")
    if n % 4 == 1:
        return list(f_minus1(n - 1).points)
    if n % 4 == 3 and n != 3:
        return list(f_plus1(n - 3).points)
    # n mod 4 in {0, 2}, or n == 3
    m = n - 2
    return [Fraction(0)] if m == 1 else _spread_turns(m)


def equator_config(n: int) -> PointSet:
    """Both poles plus an embedded circle set chosen by n mod 4."""
    turns = [equator_embed(t) for t in equator_circle_part(n)]
    return PointSet(EquatorPoles(), ("N", "S", *turns))


# name -> (builder, parameter names in call order)
CONSTRUCTIONS = {
    "line-ap": (line_ap, ("n",)),
    "evenly-spread": (evenly_spread, ("n", "offset")),
    "f-minus1": (f_minus1, ("n", "i")),
    "f-minus2": (f_minus2, ("n", "i", "j")),
    "f-plus1": (f_plus1, ("n", "i")),
    "f-plus2": (f_plus2, ("n", "i", "j")),
    "tree-ball": (tree_ball, ("r", "d0")),
    "lattice-ball": (lattice_ball, ("dim", "d0")),
    "bipartite-split": (bipartite_split, ("left", "right")),
    "radial-star": (radial_star, ("n",)),
    "equator-config": (equator_config, ("n",)),
}


def build(name: str, **params) -> PointSet:
    """Build a construction by registry name; unspecified optional parameters keep their defaults."""
    if name not in CONSTRUCTIONS:
        raise InvalidParameters(f"unknown construction {name!r}; expected one of {sorted(CONSTRUCTIONS)}")
    fn, names = CONSTRUCTIONS[name]
    unknown = set(params) - set(names)
    if unknown:
        raise InvalidParameters(f"{name} does not take {sorted(unknown)}; it takes {list(names)}")
    args = []
    for key in names:
        if key not in params or params[key] is None:
            break
        args.append(params[key])
    missing = [k for k in names[len(args):] if params.get(k) is not None]
    if missing:
        raise InvalidParameters(f"{name}: {missing} given without the preceding parameters")
    return fn(*args)
