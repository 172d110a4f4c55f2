from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ap3lab.errors import InvalidInput, NotAMetric
from ap3lab.metric import Circle, EquatorPoles, distance
from ap3lab.spaces import (antipode, arc_midpoint, equator_embed, graph_apsp, in_open_arc, reflect, rho,
                           rotate)

turns = st.fractions(min_value=0, max_value=1, max_denominator=30).map(lambda t: t % 1)


def test_path_graph():
    D = graph_apsp([(0, 1), (1, 2)], 3)
    assert D[0][2] == 2


def test_k22():
    D = graph_apsp([(0, 2), (0, 3), (1, 2), (1, 3)], 4)
    assert D[0][1] == 2 and D[2][3] == 2
    assert D[0][2] == D[1][3] == 1


def test_four_cycle():
    assert graph_apsp([(0, 1), (1, 2), (2, 3), (3, 0)], 4)[0][2] == 2


def test_disconnected_graph_is_not_a_metric():
    with pytest.raises(NotAMetric):
        graph_apsp([(0, 1), (2, 3)], 4)


def test_apsp_matrix_is_a_metric():
    D = graph_apsp([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)], 5)
    n = len(D)
    for i in range(n):
        assert D[i][i] == 0
        for j in range(n):
            assert D[i][j] == D[j][i]
            for k in range(n):
                assert D[i][k] <= D[i][j] + D[j][k]


@pytest.mark.parametrize("a, b, mid", [
    (0, F(1, 2), F(1, 4)),
    (F(1, 2), 0, F(3, 4)),
    (F(3, 4), F(1, 4), 0),
])
def test_arc_midpoint(a, b, mid):
    assert arc_midpoint(a, b) == mid


def test_arc_midpoint_needs_distinct_points():
    with pytest.raises(InvalidInput):
        arc_midpoint(F(1, 3), F(4, 3))


def test_rotations_and_reflections():
    assert rotate(0, F(1, 8)) == F(1, 8)
    assert rho(4)(0) == F(1, 8)
    assert reflect(F(1, 4), 0) == F(3, 4)
    assert antipode(F(1, 8)) == F(5, 8)


@pytest.mark.parametrize("t", [0, F(1, 4), F(1, 2)])
def test_equator_embed_identity(t):
    assert equator_embed(t) == t


@given(turns, turns)
def test_midpoint_inside_arc_and_equidistant(a, b):
    assume(a != b)
    m = arc_midpoint(a, b)
    assert in_open_arc(m, a, b)
    assert distance(Circle(), a, m) == distance(Circle(), m, b)


@given(turns, turns, turns)
def test_reflection_swaps_arcs(a, b, x):
    assume(a != b and x not in (a, b))
    # reflecting across the diameter through b maps the arc from a to b onto the arc from b to R_b(a)
    assert in_open_arc(x, a, b) == in_open_arc(reflect(x, b), b, reflect(a, b))


@given(turns, turns)
def test_arc_midpoints_always_antipodal(a, b):
    assume(a != b)
    assert antipode(arc_midpoint(a, b)) == arc_midpoint(b, a)


@given(turns, turns)
def test_midpoints_fixed_by_reflection_through_them(a, b):
    assume(a != b)
    m1, m2 = arc_midpoint(a, b), arc_midpoint(b, a)
    assert reflect(m1, m1) == m1
    assert reflect(m2, m1) == m2
    assert reflect(a, m1) == b


@given(turns, turns)
def test_equator_embedding_is_an_isometry(s, t):
    assert distance(EquatorPoles(), equator_embed(s), equator_embed(t)) == distance(Circle(), s, t)


@given(turns, turns)
def test_antipodal_pair_arcs_are_mirror_images(a, x):
    b = antipode(a)
    assume(x not in (a, b))
    assert in_open_arc(x, b, a) == in_open_arc(reflect(x, b), a, b)
