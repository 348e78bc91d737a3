import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from latticenmf import (
    FeasibilityProblem,
    basic_function,
    distinct_values,
    hull_vertices,
    is_extreme_point,
    phase_one_feasible,
)

from data import MINLAT_6X6, MINLAT_6X6_VERTEX_ORDER
from oracles import hull_contains


def _check_solution(a_eq, b_eq, x, tol=1e-9):
    assert x.min() >= -tol
    assert np.abs(a_eq @ x - b_eq).max() <= tol * (1.0 + np.abs(b_eq).max())


class TestPhaseOne:
    def test_identity_plus_sum_row(self):
        a_eq = np.vstack([np.eye(3), np.ones(3)])
        b_eq = np.array([0.0, 1.0, 0.0, 1.0])
        result = phase_one_feasible(FeasibilityProblem(a_eq, b_eq))
        assert result.feasible
        assert np.allclose(result.x, [0.0, 1.0, 0.0])

    def test_worked_6x6_column_two_expansion(self):
        # Express the second column share over the four vertices with unit
        # total weight; (3/4, 0, 0, 1/4) is one valid answer but any
        # feasible point is acceptable.
        point = np.array([2, 3, 3], dtype=float) / 8.0
        a_eq = np.vstack([MINLAT_6X6_VERTEX_ORDER.T, np.ones(4)])
        b_eq = np.concatenate([point, [1.0]])
        result = phase_one_feasible(FeasibilityProblem(a_eq, b_eq))
        assert result.feasible
        _check_solution(a_eq, b_eq, result.x)
        hand = np.array([0.75, 0.0, 0.0, 0.25])
        _check_solution(a_eq, b_eq, hand)

    def test_infeasible_single_point(self):
        a_eq = np.vstack([np.array([[0.0], [1.0]]), np.ones((1, 1))])
        b_eq = np.array([1.0, 0.0, 1.0])
        result = phase_one_feasible(FeasibilityProblem(a_eq, b_eq))
        assert not result.feasible
        assert result.infeasibility > 0.1

    def test_negative_rhs_rows_are_handled(self):
        a_eq = np.array([[1.0, -1.0]])
        b_eq = np.array([-2.0])
        result = phase_one_feasible(FeasibilityProblem(a_eq, b_eq))
        assert result.feasible
        _check_solution(a_eq, b_eq, result.x)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            phase_one_feasible(FeasibilityProblem(np.eye(2), np.ones(3)))

    @settings(deadline=None, max_examples=60)
    @given(
        a=arrays(np.float64, (3, 6), elements=st.floats(-5, 5)),
        x0=arrays(np.float64, (6,), elements=st.floats(0, 3)),
    )
    def test_constructed_systems_are_found_feasible(self, a, x0):
        b = a @ x0
        result = phase_one_feasible(FeasibilityProblem(a, b))
        assert result.feasible
        _check_solution(a, b, result.x, tol=1e-8)

    def test_nonnegative_matrix_with_negative_rhs_is_infeasible(self):
        rng = np.random.default_rng(23)
        for _ in range(25):
            a = rng.uniform(0.0, 2.0, size=(3, 5))
            b = np.array([1.0, -0.5, 1.0])
            result = phase_one_feasible(FeasibilityProblem(a, b))
            assert not result.feasible

    def test_iteration_count_stays_small(self):
        rng = np.random.default_rng(29)
        for _ in range(50):
            a = rng.uniform(-2, 2, size=(4, 8))
            x0 = rng.uniform(0, 1, size=8)
            result = phase_one_feasible(FeasibilityProblem(a, a @ x0))
            assert result.iterations < 2000


class TestIsExtremePoint:
    def test_worked_6x6_vertex_and_interior(self):
        table = basic_function(MINLAT_6X6[:3])
        points = table.points
        others = np.delete(points, 0, axis=0)
        assert is_extreme_point(points[0], others)
        others = np.delete(points, 1, axis=0)
        assert not is_extreme_point(points[1], others)

    def test_midpoint_is_not_extreme(self):
        a = np.array([0.0, 1.0])
        b = np.array([1.0, 0.0])
        assert not is_extreme_point((a + b) / 2, np.vstack([a, b]))

    def test_no_other_points_means_extreme(self):
        assert is_extreme_point(np.array([0.3, 0.7]), np.empty((0, 2)))

    def test_agrees_with_brute_force_on_simplex_points(self):
        rng = np.random.default_rng(31)
        for _ in range(40):
            count = int(rng.integers(2, 9))
            pts = rng.dirichlet((1.0, 1.0, 1.0), size=count)
            for i in range(count):
                others = np.delete(pts, i, axis=0)
                assert is_extreme_point(pts[i], others) == (
                    not hull_contains(pts[i], others)
                )


def test_hull_route_matches_brute_force_vertices():
    rng_state = np.random.default_rng(37)
    for _ in range(20):
        x = rng_state.uniform(0.1, 3.0, size=(3, 7))
        rng = distinct_values(basic_function(x))
        vs = hull_vertices(rng)
        expected = [
            i
            for i in range(rng.mu)
            if not hull_contains(
                rng.unique_points[i], np.delete(rng.unique_points, i, axis=0)
            )
        ]
        got = [rng.representative_column.index(src) for src in vs.source_columns]
        assert sorted(got) == expected
