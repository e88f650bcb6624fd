import numpy as np
import pytest

from roughpaths import (
    EuclideanPath,
    GroupPath,
    ParameterError,
    TimeGrid,
    group_inverse,
    group_mul,
    identity_element,
    increment,
    level1_path,
    lift,
    qvar_norm,
    resample_uniform,
    segment_exp,
    signature,
    time_reversed,
)
from conftest import random_walk_path


# ---------------------------------------------------------------------------
# grids
# ---------------------------------------------------------------------------

def test_grid_must_start_at_zero():
    with pytest.raises(ParameterError):
        TimeGrid([0.5, 1.0])


def test_grid_strictly_increasing():
    with pytest.raises(ParameterError):
        TimeGrid([0.0, 0.5, 0.5])


def test_uniform_flag():
    assert TimeGrid.uniform(10).is_uniform
    assert not TimeGrid([0.0, 0.1, 1.0]).is_uniform


def test_index_of_requires_grid_point():
    grid = TimeGrid.uniform(4)
    assert grid.index_of(0.75) == 3
    with pytest.raises(ParameterError):
        grid.index_of(0.3)


def test_resolve_interval():
    grid = TimeGrid.uniform(4)
    assert grid.resolve_interval(None) == (0, 4)
    assert grid.resolve_interval((0.25, 0.75)) == (1, 3)
    with pytest.raises(ParameterError):
        grid.resolve_interval((0.75, 0.25))


# ---------------------------------------------------------------------------
# lifting and increments
# ---------------------------------------------------------------------------

def test_lift_single_segment():
    grid = TimeGrid([0.0, 1.0])
    path = EuclideanPath(grid, [[0.0, 0.0], [1.0, 0.0]])
    x = lift(path, 2)
    expected = segment_exp([1.0, 0.0], 2)
    for k in range(3):
        np.testing.assert_allclose(x.values[1].level(k), expected.level(k))


def test_lift_two_segments_chen_product():
    grid = TimeGrid([0.0, 0.5, 1.0])
    path = EuclideanPath(grid, [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]])
    end = signature(lift(path, 2))
    np.testing.assert_allclose(end.level(1), [1.0, 1.0])
    np.testing.assert_allclose(end.level(2), [[0.5, 1.0], [0.0, 0.5]])


def test_lift_constant_path_all_identity():
    grid = TimeGrid.uniform(5)
    path = EuclideanPath(grid, np.ones((6, 2)))
    x = lift(path, 3)
    for g in x.values:
        for k in range(1, 4):
            assert np.abs(g.level(k)).max() == 0.0


def test_lift_depth_cap():
    path = EuclideanPath(TimeGrid.uniform(2), np.zeros((3, 2)))
    with pytest.raises(ParameterError):
        lift(path, 5)


def test_increment_identity_and_telescoping(rng):
    path = random_walk_path(rng, 8, 2)
    x = lift(path, 2)
    e = increment(x, 3, 3)
    for k in range(1, 3):
        assert np.abs(e.level(k)).max() == 0.0
    full = increment(x, 0, 8)
    for k in range(3):
        np.testing.assert_allclose(full.level(k), signature(x).level(k), atol=1e-14)


def test_increment_order_error(rng):
    x = lift(random_walk_path(rng, 4, 1), 2)
    with pytest.raises(ParameterError):
        increment(x, 3, 1)


def test_chen_identity_random_triples(rng):
    path = random_walk_path(rng, 10, 2)
    x = lift(path, 3)
    for _ in range(10):
        i, j, k = sorted(rng.choice(11, size=3, replace=False))
        whole = increment(x, int(i), int(k))
        split = group_mul(increment(x, int(i), int(j)), increment(x, int(j), int(k)))
        for lev in range(1, 4):
            np.testing.assert_allclose(
                whole.level(lev), split.level(lev), rtol=1e-12, atol=1e-12
            )


def test_level1_of_increments_matches_raw_increments(rng):
    path = random_walk_path(rng, 6, 3)
    x = lift(path, 2)
    for i in range(6):
        np.testing.assert_allclose(
            increment(x, i, i + 1).level(1),
            path.values[i + 1] - path.values[i],
            rtol=1e-13, atol=1e-15,
        )
    np.testing.assert_allclose(level1_path(x).values, path.values - path.values[0],
                               atol=1e-14)


def test_reversal_gives_inverse_signature(rng):
    path = random_walk_path(rng, 7, 2)
    fwd = signature(lift(path, 3))
    bwd = signature(lift(time_reversed(path), 3))
    inv = group_inverse(fwd)
    for k in range(1, 4):
        np.testing.assert_allclose(bwd.level(k), inv.level(k), rtol=1e-11, atol=1e-13)


def test_group_path_starts_at_identity(rng):
    grid = TimeGrid.uniform(2)
    bad = (segment_exp([1.0], 2), identity_element(1, 2), identity_element(1, 2))
    with pytest.raises(ParameterError):
        GroupPath(grid, bad)


# ---------------------------------------------------------------------------
# resampling
# ---------------------------------------------------------------------------

def test_resample_same_grid_identical(rng):
    path = random_walk_path(rng, 16, 2)
    again = resample_uniform(path, 16)
    np.testing.assert_allclose(again.values, path.values, atol=1e-15)


def test_resample_linear_path_exact():
    path = EuclideanPath.from_function(TimeGrid.uniform(7), lambda t: 2.0 * t)
    fine = resample_uniform(path, 23)
    np.testing.assert_allclose(fine.values[:, 0], fine.grid.times * 2.0, atol=1e-14)


def test_resample_preserves_endpoints(rng):
    path = random_walk_path(rng, 9, 2, uniform=False)
    out = resample_uniform(path, 13)
    np.testing.assert_array_equal(out.values[0], path.values[0])
    np.testing.assert_array_equal(out.values[-1], path.values[-1])


def test_refinement_keeps_monotone_qvar():
    path = EuclideanPath.from_function(TimeGrid.uniform(8), lambda t: t**2)
    fine = resample_uniform(path, 64)
    for q in (1.0, 2.0, 3.5):
        assert qvar_norm(fine, q) == pytest.approx(qvar_norm(path, q), rel=1e-12)


def test_distance_matrix_euclidean(rng):
    path = random_walk_path(rng, 5, 2)
    d = path.distance_matrix
    i, j = 2, 4
    assert d[i, j] == pytest.approx(np.linalg.norm(path.values[j] - path.values[i]))
    assert np.allclose(d, d.T)


def test_group_distance_matrix_matches_pointwise(rng):
    from roughpaths import group_distance

    path = random_walk_path(rng, 6, 2)
    x = lift(path, 2)
    d = x.distance_matrix
    for i in range(7):
        for j in range(7):
            assert d[i, j] == pytest.approx(
                group_distance(x.values[i], x.values[j]), rel=1e-11, abs=1e-13
            )


def test_custom_metric_respected():
    grid = TimeGrid.uniform(2)
    path = EuclideanPath(grid, [[0.0], [1.0], [3.0]],
                         metric=lambda a, b: abs(float(b[0] - a[0])) ** 0.5)
    assert path.distance_matrix[0, 2] == pytest.approx(3.0 ** 0.5)
    assert not path.has_true_metric
