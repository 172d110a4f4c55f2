"""Finite-graph distances and circle geometry helpers.

Circle positions are measured in turns (fractions of a full revolution) and
are always reduced into [0, 1).
"""
from collections import deque
from fractions import Fraction

from .errors import InvalidInput, NotAMetric

HALF = Fraction(1, 2)


def graph_apsp(edges, vertex_count: int) -> tuple[tuple[int, ...], ...]:
    """All-pairs shortest path lengths of a connected simple graph, by BFS from every vertex.

    Returns an immutable ``vertex_count x vertex_count`` matrix.  Raises
    :class:`NotAMetric` if the graph is disconnected and :class:`InvalidInput`
    for self-loops or out-of-range vertex ids.
    """
    if vertex_count < 1:
        raise InvalidInput("a graph metric needs at least one vertex")
    adj = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise InvalidInput(f"edge ({u}, {v}) references a vertex outside 0..{vertex_count - 1}")
        if u == v:
            raise InvalidInput(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    adj = [sorted(s) for s in adj]

    rows = []
    for source in range(vertex_count):
        dist = [-1] * vertex_count
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        if min(dist) < 0:
            unreachable = dist.index(-1)
            raise NotAMetric(f"graph is disconnected: vertex {unreachable} is unreachable from {source}")
        rows.append(tuple(dist))
    return tuple(rows)


def reduce_turn(t) -> Fraction:
    return Fraction(t) % 1


def arc_distance(s, t) -> Fraction:
    """Shorter arc between two turns, in turns (so at most 1/2)."""
    gap = abs(Fraction(s) - Fraction(t)) % 1
    return min(gap, 1 - gap)


def ccw_length(a, b) -> Fraction:
    """Length of the counterclockwise arc from ``a`` to ``b``."""
    return (Fraction(b) - Fraction(a)) % 1


def in_open_arc(x, a, b) -> bool:
    """Whether ``x`` lies strictly inside the counterclockwise arc from ``a`` to ``b``."""
    offset = ccw_length(a, x)
    return 0 < offset < ccw_length(a, b)


def arc_midpoint(a, b) -> Fraction:
    """Midpoint of the open counterclockwise arc from ``a`` to ``b``."""
    a, b = reduce_turn(a), reduce_turn(b)
    if a == b:
        raise InvalidInput("arc midpoint needs two distinct points")
    return (a + ccw_length(a, b) / 2) % 1


def rotate(t, by) -> Fraction:
    return (Fraction(t) + Fraction(by)) % 1


def reflect(t, axis) -> Fraction:
    """Mirror ``t`` across the diameter through ``axis``."""
    return (2 * Fraction(axis) - Fraction(t)) % 1


def antipode(t) -> Fraction:
    return (Fraction(t) + HALF) % 1


def rho(n: int):
    """The rotation by half of the gap of an evenly spread n-set, as a turn -> turn map."""
    step = Fraction(1, 2 * n)
    return lambda t: rotate(t, step)


def equator_embed(t) -> Fraction:
    """Place a circle point on the equator of the equator-and-poles space.

    Equator points of that space are stored as their turn, so the embedding is
    the identity on reduced turns.
    """
    return reduce_turn(t)
