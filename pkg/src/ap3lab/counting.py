"""Counting ordered 3-APs in a point set.

Two independent counters are provided.  ``count_ap3`` is the naive triple
scan over exact distances and is kept as the reference oracle;
``count_ap3_grouped`` buckets the set by distance from each middle point and
is the one used for larger inputs.  Both count ordered triples including the
constant ones (b, b, b), and report per-point weights keyed by position in
the point set.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import Ap3Error, InvalidInput
from .metric import Circle, EquatorPoles, Euclidean, PointSet, ap3_relation
from .spaces import antipode, arc_midpoint, ccw_length, in_open_arc, reflect

GROUPED_THRESHOLD = 64


def worker_count(workers: int | None = None) -> int:
    """Number of worker threads: ``workers`` if given, capped by AP3LAB_THREADS."""
    cap = os.environ.get("AP3LAB_THREADS")
    n = workers if workers is not None else (int(cap) if cap else 1)
    if cap:
        n = min(n, int(cap))
    return max(1, n)


def _map_chunks(fn, n: int, workers: int | None):
    """Apply ``fn(range)`` over contiguous chunks of range(n); results in chunk order."""
    w = min(worker_count(workers), max(n, 1))
    if w == 1:
        return [fn(range(n))]
    bounds = [n * k // w for k in range(w + 1)]
    chunks = [range(bounds[k], bounds[k + 1]) for k in range(w)]
    with ThreadPoolExecutor(max_workers=w) as pool:
        return list(pool.map(fn, chunks))


@dataclass(frozen=True)
class Ap3Report:
    """Total number of ordered 3-APs and the weight of each middle point.

    Construction checks the structural invariants: total equals the sum of
    the weights and every weight is odd (constant triple plus mirrored pairs).
    """

    total: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.total != sum(self.weights):
            raise Ap3Error(f"total {self.total} differs from the weight sum {sum(self.weights)}")
        odd = [i for i, w in enumerate(self.weights) if w % 2 != 1]
        if odd:
            raise Ap3Error(f"weights at positions {odd} are not odd")

    @property
    def n(self) -> int:
        return len(self.weights)

    def to_dict(self) -> dict:
        return {"n": self.n, "total": self.total, "weights": list(self.weights)}


def count_ap3(A: PointSet, workers: int | None = None) -> Ap3Report:
    """Reference counter: test every ordered triple (a, b, c) of A."""
    D = A.distance_matrix()
    factor = A.space.ap_factor
    n = len(A)

    def scan(middles):
        out = []
        for b in middles:
            Db = D[b]
            w = 0
            for a in range(n):
                dab = Db[a]
                Da = D[a]
                for c in range(n):
                    if ap3_relation(dab, Db[c], Da[c], factor):
                        w += 1
            out.append(w)
        return out

    weights = tuple(w for part in _map_chunks(scan, n, workers) for w in part)
    return Ap3Report(sum(weights), weights)


def _scaled_matrix(A: PointSet) -> np.ndarray:
    """Distance matrix multiplied by the common denominator, as an integer array."""
    D = A.distance_matrix()
    lcm = 1
    for row in D:
        for x in row:
            if isinstance(x, Fraction):
                lcm = math.lcm(lcm, x.denominator)
    rows = [[int(x * lcm) for x in row] for row in D]
    biggest = max((max(r) for r in rows), default=0)
    dtype = np.int64 if 4 * biggest < 2**62 else object
    return np.array(rows, dtype=dtype).reshape(len(D), len(D))


def _euclidean_weights(A: PointSet) -> list[int]:
    where = {p: i for i, p in enumerate(A.points)}
    weights = [0] * len(A)
    pts = A.points
    for a in pts:
        for c in pts:
            mid = tuple((x + y) / 2 for x, y in zip(a, c))
            j = where.get(mid)
            if j is not None:
                weights[j] += 1
    return weights


def count_ap3_grouped(A: PointSet, workers: int | None = None) -> Ap3Report:
    """Fast counter with output identical to :func:`count_ap3`.

    For each middle point b the set is bucketed by exact distance delta from
    b, and within each bucket the ordered pairs (x, z) with d(x, z) = 2*delta
    are counted.  In Euclidean space (where 3-APs are exactly midpoint
    triples) it instead looks up the midpoint of every ordered pair.
    """
    n = len(A)
    if isinstance(A.space, Euclidean):
        weights = tuple(_euclidean_weights(A))
        return Ap3Report(sum(weights), weights)

    M = _scaled_matrix(A)
    factor = A.space.ap_factor

    def scan(middles):
        out = []
        for b in middles:
            row = M[b]
            order = np.argsort(row, kind="stable")
            values = row[order]
            cuts = np.flatnonzero(values[1:] != values[:-1]) + 1
            w = 0
            for group in np.split(order, cuts):
                delta = row[group[0]]
                sub = M[np.ix_(group, group)]
                w += int(np.count_nonzero(sub == factor * delta))
            out.append(w)
        return out

    weights = tuple(w for part in _map_chunks(scan, n, workers) for w in part)
    return Ap3Report(sum(weights), weights)


def count(A: PointSet, workers: int | None = None) -> Ap3Report:
    """Count with the naive oracle for small sets and the grouped counter above 64 points."""
    if len(A) > GROUPED_THRESHOLD:
        return count_ap3_grouped(A, workers)
    return count_ap3(A, workers)


@dataclass(frozen=True)
class CirclePairs:
    """Balanced-split pairs of a circle set, and the subset of symmetric ones.

    Pairs are index pairs ``(i, j)`` with ``i < j``.
    """

    pairs: frozenset
    pairs0: frozenset


def circle_pairs(A: PointSet) -> CirclePairs:
    """Pairs {a, b} of A whose two open arcs hold numbers of points differing by at most one.

    ``pairs0`` keeps those pairs that are antipodal, whose common reflection
    maps A to itself, and whose two arc midpoints both belong to A.
    """
    if not isinstance(A.space, Circle):
        raise InvalidInput(f"circle pairs need a circle point set, got {A.space.kind}")
    if len(A) < 2:
        raise InvalidInput("circle pairs need at least two points")
    pts = A.points
    members = set(pts)
    pairs, pairs0 = set(), set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            a, b = pts[i], pts[j]
            left = sum(1 for x in pts if in_open_arc(x, a, b))
            right = len(pts) - 2 - left
            if abs(left - right) > 1:
                continue
            pairs.add((i, j))
            if (ccw_length(a, b) == Fraction(1, 2)
                    and {reflect(x, a) for x in pts} == members
                    and arc_midpoint(a, b) in members
                    and arc_midpoint(b, a) in members):
                pairs0.add((i, j))
    return CirclePairs(frozenset(pairs), frozenset(pairs0))


def equator_decomposition(A: PointSet) -> int:
    """Count the 3-APs of an equator-and-poles set from its equator part alone.

    With A0 the equator turns and k the number of poles in A, the count is
    |AP(A0)| + k*|A0 & -A0| + k when at most one pole is present, and
    |AP(A0)| + 2*|A0 & -A0| + 2*|A0| + 2 when both poles are.
    """
    if not isinstance(A.space, EquatorPoles):
        raise InvalidInput(f"equator decomposition needs an equator_poles set, got {A.space.kind}")
    A0 = [p for p in A.points if not isinstance(p, str)]
    poles = len(A) - len(A0)
    circle_count = count(PointSet(Circle(), tuple(A0))).total
    turns = set(A0)
    symmetric = sum(1 for t in A0 if antipode(t) in turns)
    if poles == 2:
        return circle_count + 2 * symmetric + 2 * len(A0) + 2
    return circle_count + poles * symmetric + poles


def is_collinear(A: PointSet) -> bool:
    """Whether all points of a Euclidean set lie on one line (exact)."""
    if not isinstance(A.space, Euclidean):
        raise InvalidInput("collinearity is only defined here for euclidean sets")
    if len(A) <= 2:
        return True
    p0 = A.points[0]
    direction = None
    for p in A.points[1:]:
        v = tuple(x - y for x, y in zip(p, p0))
        if direction is None:
            direction = v
            continue
        # v parallel to direction iff every 2x2 minor vanishes
        k = len(v)
        for i in range(k):
            for j in range(i + 1, k):
                if direction[i] * v[j] != direction[j] * v[i]:
                    return False
    return True
