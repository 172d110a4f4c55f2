"""Random point sets for property tests and bound audits.

Points are drawn from small rational grids so that progressions actually
occur; a uniformly random rational set almost never contains one.
"""
import random
from fractions import Fraction
from itertools import product

from .constructions import tree_ball
from .metric import (Circle, CompleteBipartite, EquatorPoles, Euclidean, FiniteGraph, Lattice,
                     Line, PointSet, RadialPlane, RegularTree)

KINDS = ("line", "euclidean", "circle", "equator_poles", "regular_tree", "lattice",
         "finite_graph", "radial_plane", "complete_bipartite")

MAX_SIZE = 40


def random_connected_graph(rng: random.Random, vertices: int, extra: float = 0.15,
                           tree: bool = False) -> FiniteGraph:
    """Random spanning tree (each vertex hooks to an earlier one) plus random extra edges."""
    order = list(range(vertices))
    rng.shuffle(order)
    edges = {tuple(sorted((order[k], order[rng.randrange(k)]))) for k in range(1, vertices)}
    if not tree:
        for u in range(vertices):
            for v in range(u + 1, vertices):
                if rng.random() < extra:
                    edges.add((u, v))
    return FiniteGraph(vertices, tuple(sorted(edges)))


def _circle_turns(rng, size):
    m = rng.choice([m for m in (8, 12, 16, 24, 48) if m >= size])
    return [Fraction(k, m) for k in rng.sample(range(m), size)]


def random_pointset(kind: str, rng: random.Random, size: int) -> PointSet:
    """A random ``size``-point set of the given space kind (0 <= size <= 40)."""
    if not 0 <= size <= MAX_SIZE:
        raise ValueError(f"size must be in 0..{MAX_SIZE}")
    if kind == "line":
        pool = [Fraction(k, 2) for k in range(-20, 21)]
        return PointSet(Line(), tuple(rng.sample(pool, size)))
    if kind == "euclidean":
        dim = rng.choice((1, 2, 3)) if size <= 13 else rng.choice((2, 3))
        grid = [Fraction(k, 2) for k in range(-3, 4)] if dim > 1 else [Fraction(k, 2) for k in range(-20, 21)]
        pool = list(product(grid, repeat=dim))
        return PointSet(Euclidean(dim), tuple(rng.sample(pool, size)))
    if kind == "circle":
        return PointSet(Circle(), tuple(_circle_turns(rng, size)))
    if kind == "equator_poles":
        poles = rng.sample(["N", "S"], rng.randint(0, min(2, size)))
        turns = _circle_turns(rng, size - len(poles))
        return PointSet(EquatorPoles(), tuple(poles + turns))
    if kind == "regular_tree":
        r = rng.choice((3, 4))
        pool = list(tree_ball(r, 4 if r == 3 else 3).points)
        return PointSet(RegularTree(r), tuple(rng.sample(pool, size)))
    if kind == "lattice":
        dim = rng.choice((1, 2, 3)) if size <= 13 else rng.choice((2, 3))
        side = range(-6, 7) if dim == 1 else range(-3, 4) if dim == 2 else range(-2, 3)
        pool = list(product(side, repeat=dim))
        return PointSet(Lattice(dim), tuple(rng.sample(pool, size)))
    if kind == "finite_graph":
        g = random_connected_graph(rng, max(1, rng.randint(size, size + 6)))
        return PointSet(g, tuple(rng.sample(range(g.vertex_count), size)))
    if kind == "radial_plane":
        pool = [(Fraction(0), Fraction(0))] + [
            (Fraction(r, 2), Fraction(k, 8)) for r in (1, 2, 3, 4, 6) for k in range(8)]
        return PointSet(RadialPlane(), tuple(rng.sample(pool, size)))
    if kind == "complete_bipartite":
        pool = [(s, i) for s in "LR" for i in range(MAX_SIZE)]
        return PointSet(CompleteBipartite(), tuple(rng.sample(pool, size)))
    raise ValueError(f"unknown kind {kind!r}")


def sampler(kind: str, size: int | tuple[int, int]):
    """A ``rng -> PointSet`` callable drawing sets of a fixed size or a size range."""
    def draw(rng):
        n = size if isinstance(size, int) else rng.randint(*size)
        return random_pointset(kind, rng, n)
    return draw


def circle_sampler(size: int):
    """Circle sets that often sit inside an evenly spread grid, mixed with arbitrary grid subsets."""
    def draw(rng):
        mode = rng.random()
        if mode < 0.3:
            m = rng.choice([m for m in (size, 2 * size) if m >= 2])
            offset = Fraction(rng.randrange(48), 48)
            turns = [(offset + Fraction(k, m)) % 1 for k in rng.sample(range(m), size)]
            return PointSet(Circle(), tuple(turns))
        return random_pointset("circle", rng, size)
    return draw


def planar_sampler(size: int):
    """Rational planar sets; a third of them are collinear progressions, some slightly broken."""
    def draw(rng):
        if rng.random() < 1 / 3:
            base = (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            step = (Fraction(rng.randint(-3, 3), rng.randint(1, 3)), Fraction(rng.randint(1, 3), rng.randint(1, 3)))
            pts = [(base[0] + k * step[0], base[1] + k * step[1]) for k in range(size)]
            if rng.random() < 0.5:
                i = rng.randrange(size)
                pts[i] = (pts[i][0] + Fraction(1, 7), pts[i][1])
            return PointSet(Euclidean(2), tuple(pts))
        grid = [Fraction(k, 2) for k in range(-3, 4)]
        return PointSet(Euclidean(2), tuple(rng.sample(list(product(grid, repeat=2)), size)))
    return draw


def tree_graph_sampler(size: int):
    """All vertices of a random tree graph with ``size`` vertices."""
    def draw(rng):
        g = random_connected_graph(rng, size, tree=True)
        return PointSet(g, tuple(range(size)))
    return draw


def graph_sampler(size: int):
    """All vertices of a random connected graph with ``size`` vertices."""
    def draw(rng):
        g = random_connected_graph(rng, size, extra=rng.choice((0.1, 0.3, 0.6)))
        return PointSet(g, tuple(range(size)))
    return draw
