"""Closed-form maxima, lower-bound witnesses and upper bounds for 3-AP counts.

All values are exact integers or Fractions.  ``growth_exponent`` is the only
floating-point routine here.
"""
import enum
import math
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput


class Kind(str, enum.Enum):
    EXACT_MAXIMUM = "exact_maximum"
    LOWER_BOUND_WITNESS = "lower_bound_witness"
    UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class Prediction:
    value: int
    kind: Kind
    source: str

    def to_dict(self) -> dict:
        return {"value": self.value, "kind": self.kind.value, "source": self.source}


def _need(cond: bool, message: str):
    if not cond:
        raise InvalidInput(message)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def mu_line(n: int) -> Prediction:
    """Maximum over n-subsets of the line (and of any Euclidean space): ceil(n^2 / 2)."""
    _need(n >= 0, "n must be >= 0")
    return Prediction(-(-n * n // 2), Kind.EXACT_MAXIMUM, "line-max")


def mu_circle(n: int) -> Prediction:
    """Maximum over n-subsets of the circle, n^2/2 plus n, n/2, 2 or n/2 - 1 by n mod 4.

    n = 2 is special: two points carry only their two constant triples.
    """
    _need(n >= 0, "n must be >= 0")
    if n == 2:
        return Prediction(2, Kind.EXACT_MAXIMUM, "circle-max-n2")
    extra = {0: Fraction(n), 1: Fraction(n, 2), 2: Fraction(2), 3: Fraction(n, 2) - 1}[n % 4]
    return Prediction(_as_int(Fraction(n * n, 2) + extra, "mu_circle"), Kind.EXACT_MAXIMUM, "circle-max")


def mu_equator(n: int) -> Prediction:
    """Maximum over n-subsets of the equator-and-poles subspace of the sphere.

    Also a lower bound for the whole 2-sphere.
    """
    _need(n >= 2, "n must be >= 2")
    extra = {
        0: Fraction(2 * n - 4),
        1: Fraction(5 * n, 2) - 8,
        2: Fraction(3 * n - 6),
        3: Fraction(5 * n, 2) - 7,
    }[n % 4]
    return Prediction(_as_int(Fraction(n * n, 2) + extra, "mu_equator"), Kind.EXACT_MAXIMUM, "equator-max")


def sphere_cap(n: int) -> Prediction:
    """Trivial cap n^2 for the 2-sphere: a and b determine c."""
    _need(n >= 0, "n must be >= 0")
    return Prediction(n * n, Kind.UPPER_BOUND, "sphere-trivial-cap")


def unique_midpoint_cap(n: int) -> Prediction:
    """n^2 - 2n + 2, valid when every pair (a, c) has at most one middle point b."""
    _need(n >= 1, "n must be >= 1")
    return Prediction(n * n - 2 * n + 2, Kind.UPPER_BOUND, "unique-midpoint-cap")


def radial_max(n: int) -> Prediction:
    """The radial plane attains the unique-midpoint cap exactly (origin plus a unit circle)."""
    p = unique_midpoint_cap(n)
    return Prediction(p.value, Kind.EXACT_MAXIMUM, "radial-plane-max")


def circle_cap_general(n: int) -> Prediction:
    _need(n >= 0, "n must be >= 0")
    return Prediction(n * (n // 2) + n, Kind.UPPER_BOUND, "circle-cap")


def circle_cap_mod2(n: int) -> Prediction:
    """n^2/2 + 2, valid for circle sets with n mod 4 == 2."""
    _need(n % 4 == 2, "the sharper circle cap only applies when n mod 4 == 2")
    return Prediction(n * n // 2 + 2, Kind.UPPER_BOUND, "circle-cap-mod4-2")


def general_cap(n: int) -> Prediction:
    """Cap over all metric spaces: 2 * floor((n/2) * floor((n-1)/2) * ceil((n-1)/2)) + n."""
    _need(n >= 0, "n must be >= 0")
    if n == 0:
        return Prediction(0, Kind.UPPER_BOUND, "general-cap")
    inner = Fraction(n, 2) * ((n - 1) // 2) * (-(-(n - 1) // 2))
    return Prediction(2 * math.floor(inner) + n, Kind.UPPER_BOUND, "general-cap")


def general_cap_polynomial(n: int) -> Fraction:
    """Branchwise polynomial form of :func:`general_cap`: n^3/4 - n^2/2 + {n, 5n/4, 5n/4 - 1}."""
    if n % 2 == 0:
        tail = Fraction(n)
    elif n % 4 == 1:
        tail = Fraction(5 * n, 4)
    else:
        tail = Fraction(5 * n, 4) - 1
    return Fraction(n ** 3, 4) - Fraction(n * n, 2) + tail


def bipartite_exact(n_left: int, n_right: int) -> Prediction:
    """Count for a set with n_left and n_right points on the two sides of a complete bipartite graph."""
    _need(n_left >= 0 and n_right >= 0, "side sizes must be >= 0")
    n = n_left + n_right
    return Prediction((n - 2) * n_left * n_right + n, Kind.EXACT_MAXIMUM if abs(n_left - n_right) <= 1
                      else Kind.LOWER_BOUND_WITNESS, "bipartite-count")


def bipartite_max(n: int) -> Prediction:
    """(n - 2) * floor(n/2) * ceil(n/2) + n: the balanced split, which is optimal."""
    _need(n >= 0, "n must be >= 0")
    return bipartite_exact(n // 2, n - n // 2)


def tree_ball_size(r: int, d0: int) -> int:
    _need(r >= 2 and d0 >= 0, "need r >= 2 and d0 >= 0")
    if r == 2:
        return 2 * d0 + 1
    return _as_int(1 + Fraction(r, r - 2) * ((r - 1) ** d0 - 1), "tree ball size")


def tree_limsup_coefficient(r: int) -> Fraction:
    """Leading coefficient 1/2 + (r-2)^2 / (2 r^2) of the tree-ball count in |A|^2."""
    _need(r >= 2, "need r >= 2")
    return Fraction(1, 2) + Fraction((r - 2) ** 2, 2 * r * r)


def tree_ball_exact(r: int, d0: int) -> Prediction:
    """Exact count for a radius-d0 ball of the r-regular tree.

    The quadratic in |A| has rational coefficients; the result is checked to be
    an integer.  For r = 2 the ball is a path of 2*d0 + 1 points.
    """
    _need(r >= 2 and d0 >= 0, "need r >= 2 and d0 >= 0")
    if r == 2:
        p = mu_line(2 * d0 + 1)
        return Prediction(p.value, Kind.LOWER_BOUND_WITNESS, "tree-ball-count")
    size = tree_ball_size(r, d0)
    value = (tree_limsup_coefficient(r) * size * size
             + Fraction(2 * (r - 2), r * r) * size + Fraction(2, r * r))
    return Prediction(_as_int(value, "tree ball count"), Kind.LOWER_BOUND_WITNESS, "tree-ball-count")


def tree_weight(r: int, d1: int) -> int:
    """Weight of a ball vertex whose distance to the ball's boundary radius is d1."""
    _need(r >= 2 and d1 >= 0, "need r >= 2 and d1 >= 0")
    if r == 2:
        return 2 * d1 + 1
    num = (r - 1) ** (2 * d1 + 1) - 1
    assert num % (r - 2) == 0
    return num // (r - 2)


CIRCLE_FAMILIES = ("F", "F-1", "F-2", "F+1", "F+2")


def circle_family_count(family: str, n: int) -> int:
    """Count shared by every member of an evenly spread family or one of its perturbations."""
    if family == "F":
        _need(n >= 0, "n must be >= 0")
        return 2 * n * (n // 4) + n
    _need(n > 0 and n % 4 == 0, "perturbed families need n positive and divisible by 4")
    half = Fraction(1, 2)
    value = {
        "F-1": half * (n - 1) ** 2 + half * (n - 1) - 1,
        "F-2": half * (n - 2) ** 2 + 2,
        "F+1": half * (n + 1) ** 2 + half * (n + 1),
        "F+2": half * (n + 2) ** 2 + 2,
    }[family]
    return _as_int(value, family)


def growth_exponent(sizes, counts) -> float:
    """Least-squares slope of log(count) against log(size)."""
    sizes, counts = list(sizes), list(counts)
    _need(len(sizes) == len(counts) and len(sizes) >= 2, "need at least two (size, count) pairs")
    _need(all(b > a for a, b in zip(sizes, sizes[1:])), "sizes must be strictly increasing")
    _need(min(sizes) > 0 and min(counts) > 0, "sizes and counts must be positive")
    fit = statistics.linear_regression([math.log(s) for s in sizes], [math.log(c) for c in counts])
    return fit.slope


# registry for the CLI: space name -> n -> Prediction
PREDICTORS = {
    "line": mu_line,
    "euclidean": mu_line,
    "circle": mu_circle,
    "equator": mu_equator,
    "sphere-cap": sphere_cap,
    "unique-midpoint-cap": unique_midpoint_cap,
    "radial": radial_max,
    "circle-cap": circle_cap_general,
    "circle-cap-mod2": circle_cap_mod2,
    "general-cap": general_cap,
    "bipartite": bipartite_max,
}
