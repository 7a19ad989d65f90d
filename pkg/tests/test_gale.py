import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import random_spanning, sympy_nullspace, sympy_rank
from hyperpierce.gale import (DegenerateConfiguration, LinearHyperplane, PointConfig, SignPattern, balance,
                              center_and_lift, gale_transform, inverse_gale, same_dual_row_space)


def cfg(*pts):
    return PointConfig.from_points([p if isinstance(p, tuple) else (p,) for p in pts])


def dual_rows(dual):
    return [[p[i] for p in dual.points] for i in range(dual.dim)]


def test_collinear_triple_dual():
    assert gale_transform(cfg(0, 1, 2)).points == ((1,), (-2,), (1,))


def test_simplex_dual_is_zero_dimensional():
    dual = gale_transform(cfg((0, 0), (1, 0), (0, 1)))
    assert dual.dim == 0 and dual.points == ((), (), ())


def test_dual_of_non_spanning_points_is_rejected():
    with pytest.raises(DegenerateConfiguration):
        gale_transform(cfg((0, 0), (1, 1), (2, 2)))


def test_inverse_of_collinear_dual():
    primal = inverse_gale(PointConfig(1, [(1,), (-2,), (1,)]))
    assert primal.dim == 1
    (row,) = dual_rows(gale_transform(primal))
    assert row[0] != 0 and [x / row[0] for x in row] == [1, -2, 1]


def test_inverse_of_empty_dual_is_standard_simplex():
    primal = inverse_gale(PointConfig(0, [()] * 4))
    assert primal.points == ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_inverse_of_cross_dual():
    dual = PointConfig(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
    primal = inverse_gale(dual)
    assert primal.dim == 1 and primal.n == 4
    assert same_dual_row_space(gale_transform(primal), dual)


@pytest.mark.parametrize("pts", [[(1,), (1,)], [(1, 0), (-1, 0), (0, 0)]])
def test_inverse_rejects_bad_duals(pts):
    with pytest.raises(DegenerateConfiguration):
        inverse_gale(PointConfig(len(pts[0]), pts))


def test_center_and_lift_pair_on_line():
    b = center_and_lift(cfg(0, 1))
    assert b.config.points == ((0, 1), (1, 1), (-1, -2))
    assert b.padding == () and b.closing == 2 and b.config.synthetic == {2}


def test_center_and_lift_pads_a_single_point():
    b = center_and_lift(PointConfig(2, [(0, 0)]))
    pts = b.config.points
    assert pts[1:3] == ((F(1, 2), 0, 1), (0, F(1, 4), 1))
    assert b.padding == (1, 2) and b.closing == 3
    assert b.config.point_sum() == (0, 0, 0) and b.config.linearly_spans


def test_zero_sum_input_gets_no_closing_point():
    # lifted points all have height 1 and never sum to zero, so use balance directly
    b = balance([(1, 0), (0, 1), (-1, -1)], 2)
    assert b.closing is None and b.config.n == 3


@given(st.integers(0, 10 ** 6), st.integers(1, 4), st.data())
def test_gale_transform_sums_to_zero_and_spans(seed, d, data):
    n = data.draw(st.integers(d + 2, min(8, d + 5)))
    pts = random_spanning(random.Random(seed), n, d, den=3)
    dual = gale_transform(PointConfig(d, pts))
    assert dual.dim == n - d - 1
    assert dual.point_sum() == (0,) * dual.dim
    assert sympy_rank([list(p) for p in dual.points], dual.dim) == n - d - 1
    # rows are sympy's canonical nullspace of the lifted matrix
    lifted = [[p[i] for p in pts] for i in range(d)] + [[1] * n]
    assert [tuple(r) for r in dual_rows(dual)] == sympy_nullspace(lifted, n)


@given(st.integers(0, 10 ** 6), st.integers(1, 4), st.data())
def test_inverse_roundtrip_preserves_row_space(seed, d, data):
    n = data.draw(st.integers(d + 2, min(8, d + 5)))
    dual = gale_transform(PointConfig(d, random_spanning(random.Random(seed), n, d, den=3)))
    # scramble the dual by an invertible change of basis
    rng = random.Random(seed + 1)
    r = dual.dim
    while True:
        T = [[F(rng.randint(-3, 3)) for _ in range(r)] for _ in range(r)]
        if sympy_rank(T, r) == r:
            break
    mixed = PointConfig(r, [tuple(sum(T[i][k] * p[k] for k in range(r)) for i in range(r)) for p in dual.points])
    primal = inverse_gale(mixed)
    assert primal.affinely_spans
    assert same_dual_row_space(gale_transform(primal), mixed)


def test_linear_hyperplane_is_canonical():
    H = LinearHyperplane([F(-2, 3), F(4, 3)])
    assert H.normal == (1, -2)
    assert H.sign_pattern(PointConfig(2, [(1, 0), (0, 1), (2, 1)])) == SignPattern((1, -1, 0))
    assert str(SignPattern((1, -1, 0))) == "+-0"
    with pytest.raises(ValueError):
        LinearHyperplane([0, 0])
