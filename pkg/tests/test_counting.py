import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ap3lab.constructions import evenly_spread, lattice_ball, line_ap, tree_ball
from ap3lab.counting import (circle_pairs, count, count_ap3, count_ap3_grouped, equator_decomposition,
                             is_collinear)
from ap3lab.errors import InvalidInput
from ap3lab.formulas import circle_cap_general, circle_cap_mod2, general_cap, unique_midpoint_cap
from ap3lab.metric import Circle, EquatorPoles, Euclidean, Line, PointSet, is_ap3
from ap3lab.samplers import KINDS, circle_sampler, random_pointset, tree_graph_sampler


def brute_force(A):
    """Independent oracle: the public predicate on every ordered triple."""
    return sum(1 for a, b, c in product(A.points, repeat=3) if is_ap3(A.space, a, b, c))


def test_three_term_progression():
    A = line_ap(3)
    assert brute_force(A) == 5
    assert count_ap3(A).total == 5


def test_evenly_spread_eight():
    assert count_ap3(evenly_spread(8)).total == 40
    assert count_ap3_grouped(evenly_spread(8)).total == 40


def test_single_point_and_empty():
    A = PointSet(Circle(), (F(1, 3),))
    assert count_ap3(A).total == 1 and count_ap3(A).weights == (1,)
    assert count_ap3_grouped(PointSet(Line(), ())).total == 0


def test_small_tree_ball():
    A = tree_ball(3, 1)
    assert brute_force(A) == 10
    assert count_ap3(A).total == 10
    assert count_ap3(A).weights == (7, 1, 1, 1)


def test_lattice_ball_grouped():
    A = lattice_ball(2, 1)
    assert brute_force(A) == 17
    assert count_ap3_grouped(A).total == 17


def test_grouped_agrees_on_random_circle_sets():
    rng = random.Random(8)
    for _ in range(50):
        A = random_pointset("circle", rng, 8)
        assert count_ap3_grouped(A) == count_ap3(A)


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10**6), size=st.integers(1, 14))
def test_grouped_matches_naive_and_parity(kind, seed, size):
    A = random_pointset(kind, random.Random(seed), size)
    naive = count_ap3(A)
    assert count_ap3_grouped(A) == naive
    assert (naive.total - len(A)) % 2 == 0
    assert all(w % 2 == 1 for w in naive.weights)


def test_naive_matches_brute_force_on_mixed_kinds():
    rng = random.Random(3)
    for kind in KINDS:
        A = random_pointset(kind, rng, 7)
        assert count_ap3(A).total == brute_force(A)


def test_worker_count_does_not_change_result():
    A = lattice_ball(2, 4)
    reports = {count_ap3_grouped(A, workers=w) for w in (1, 2, 8)}
    reports |= {count_ap3(A, workers=w) for w in (1, 3)}
    assert len(reports) == 1


def test_auto_dispatch_uses_grouped_above_threshold():
    A = lattice_ball(2, 6)  # 85 points
    assert count(A) == count_ap3_grouped(A)


# -- circle pairs -----------------------------------------------------------

def test_circle_pairs_f4():
    cp = circle_pairs(evenly_spread(4))
    assert cp.pairs == {(0, 2), (1, 3)}
    assert cp.pairs0 == cp.pairs


def test_circle_pairs_three_generic_points():
    cp = circle_pairs(PointSet(Circle(), (0, F(1, 7), F(3, 5))))
    assert len(cp.pairs) == 3
    assert not cp.pairs0


def test_circle_pairs_antipodal_pair():
    cp = circle_pairs(PointSet(Circle(), (0, F(1, 2))))
    assert cp.pairs == {(0, 1)}
    assert not cp.pairs0


def test_circle_pairs_rejects_bad_input():
    with pytest.raises(InvalidInput):
        circle_pairs(line_ap(3))
    with pytest.raises(InvalidInput):
        circle_pairs(PointSet(Circle(), (0,)))


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(2, 12))
def test_pair_weight_bound(seed, n):
    A = circle_sampler(n)(random.Random(seed))
    w = count_ap3(A).weights
    cp = circle_pairs(A)
    assert cp.pairs0 <= cp.pairs
    assert len(cp.pairs) == (n if n % 2 else n // 2)
    for i, j in cp.pairs:
        half_sum = (w[i] + w[j]) // 2
        assert half_sum <= n // 2 + 1
        if n % 2 == 0 and half_sum == n // 2 + 1:
            assert (i, j) in cp.pairs0
    for i, j in cp.pairs0:
        assert A[j] == (A[i] + F(1, 2)) % 1


def test_pair_weight_equality_reached_on_evenly_spread():
    A = evenly_spread(8)
    w = count_ap3(A).weights
    cp = circle_pairs(A)
    assert all((w[i] + w[j]) // 2 == 5 for i, j in cp.pairs)
    assert cp.pairs0 == cp.pairs


# -- caps -------------------------------------------------------------------

@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 14))
def test_circle_caps(seed, n):
    total = count(circle_sampler(n)(random.Random(seed))).total
    assert total <= circle_cap_general(n).value
    if n % 4 == 2:
        assert total <= circle_cap_mod2(n).value


@pytest.mark.parametrize("kind", ["line", "euclidean", "regular_tree", "radial_plane"])
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 16))
def test_unique_midpoint_cap(kind, seed, n):
    assert count(random_pointset(kind, random.Random(seed), n)).total <= unique_midpoint_cap(n).value


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 14))
def test_unique_midpoint_cap_on_tree_graphs(seed, n):
    assert count(tree_graph_sampler(n)(random.Random(seed))).total <= unique_midpoint_cap(n).value


@pytest.mark.parametrize("kind", KINDS)
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(0, 16))
def test_general_cap_everywhere(kind, seed, n):
    assert count(random_pointset(kind, random.Random(seed), n)).total <= general_cap(n).value


# -- equator decomposition and collinearity ---------------------------------

@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(0, 14))
def test_equator_decomposition_matches_direct_count(seed, n):
    A = random_pointset("equator_poles", random.Random(seed), n)
    assert equator_decomposition(A) == count_ap3(A).total


def test_equator_decomposition_with_one_pole():
    A = PointSet(EquatorPoles(), ("N", 0, F(1, 2), F(1, 4)))
    # circle part {0, 1/4, 1/2}: 5; one antipodal pair (2 turns) through N: 2; plus N itself
    assert equator_decomposition(A) == 5 + 2 + 1 == count_ap3(A).total


def test_collinearity():
    E = Euclidean(3)
    assert is_collinear(PointSet(E, ((0, 0, 0), (1, 2, 3), (2, 4, 6), (F(-1, 2), -1, F(-3, 2)))))
    assert not is_collinear(PointSet(E, ((0, 0, 0), (1, 2, 3), (2, 4, 7))))
    assert is_collinear(PointSet(E, ((1, 1, 1),)))
    with pytest.raises(InvalidInput):
        is_collinear(line_ap(2))
