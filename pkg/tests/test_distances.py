import pytest

from roughpaths import (
    DimensionMismatchError,
    DistKind,
    EuclideanPath,
    GridMismatchError,
    LevelDistanceSpec,
    ParameterError,
    lift,
    mixed_norm,
    qvar_norm,
    refined_nikolskii_norm,
    rho_aggregate,
    rho_mixed_level,
    rho_nikolskii_hat_level,
    rho_qvar_level,
    rho_riesz_level,
    riesz_norm,
)
from roughpaths.oracle import (
    oracle_rho_mixed,
    oracle_rho_nikolskii_hat,
    oracle_rho_qvar,
    oracle_rho_riesz,
)
from conftest import random_walk_path


def make_pair(rng, intervals=8, dim=2, depth=2, eps=0.15):
    p1 = random_walk_path(rng, intervals, dim)
    bump = random_walk_path(rng, intervals, dim)
    p2 = EuclideanPath(p1.grid, p1.values + eps * bump.values)
    return lift(p1, depth), lift(p2, depth), p1, p2


# ---------------------------------------------------------------------------
# trivial zeros and errors
# ---------------------------------------------------------------------------

def test_zero_for_equal_paths(rng):
    x1, _, _, _ = make_pair(rng)
    assert rho_qvar_level(x1, x1, 2.2, 1) == 0.0
    assert rho_riesz_level(x1, x1, 0.45, 4.0, 2) == 0.0
    assert rho_mixed_level(x1, x1, 0.45, 4.0, 2) == 0.0
    assert rho_nikolskii_hat_level(x1, x1, 0.45, 4.0, 1) == 0.0
    assert rho_aggregate(x1, x1, DistKind.RIESZ, delta=0.45, p=4.0) == 0.0


def test_grid_mismatch_rejected(rng):
    x1, _, p1, _ = make_pair(rng, intervals=8)
    other = lift(random_walk_path(rng, 10, 2), 2)
    with pytest.raises(GridMismatchError):
        rho_qvar_level(x1, other, 2.0, 1)


def test_depth_mismatch_rejected(rng):
    p1 = random_walk_path(rng, 6, 2)
    with pytest.raises(DimensionMismatchError):
        rho_qvar_level(lift(p1, 1), lift(p1, 2), 2.0, 1)


def test_level_out_of_range(rng):
    x1, x2, _, _ = make_pair(rng, depth=2)
    with pytest.raises(ParameterError):
        rho_qvar_level(x1, x2, 2.0, 3)


def test_spec_validation():
    LevelDistanceSpec(DistKind.RIESZ, delta=0.45, p=4.0, level=2)
    with pytest.raises(ParameterError):
        LevelDistanceSpec(DistKind.RIESZ, delta=0.45, p=1.5, level=1)
    with pytest.raises(ParameterError):
        LevelDistanceSpec(DistKind.QVAR, p=0.5, level=1)


# ---------------------------------------------------------------------------
# level-1 reduction to path norms
# ---------------------------------------------------------------------------

def test_level1_reductions(rng):
    p1 = random_walk_path(rng, 8, 2)
    p2 = EuclideanPath(p1.grid, p1.values + 0.2 * random_walk_path(rng, 8, 2).values)
    x1, x2 = lift(p1, 1), lift(p2, 1)
    diff = EuclideanPath(p1.grid, p1.values - p2.values)
    assert rho_qvar_level(x1, x2, 2.0, 1) == pytest.approx(
        qvar_norm(diff, 2.0), rel=1e-12)
    assert rho_riesz_level(x1, x2, 0.45, 4.0, 1) == pytest.approx(
        riesz_norm(diff, 0.45, 4.0), rel=1e-12)
    assert rho_mixed_level(x1, x2, 0.45, 4.0, 1) == pytest.approx(
        mixed_norm(diff, 0.45, 4.0), rel=1e-12)
    assert rho_nikolskii_hat_level(x1, x2, 0.45, 4.0, 1) == pytest.approx(
        refined_nikolskii_norm(diff, 0.45, 4.0), rel=1e-12)
    assert rho_aggregate(x1, x2, DistKind.QVAR, p=2.0) == pytest.approx(
        qvar_norm(diff, 2.0), rel=1e-12)


# ---------------------------------------------------------------------------
# oracle equality and the grid identity
# ---------------------------------------------------------------------------

def test_dp_matches_enumeration(rng):
    for _ in range(8):
        x1, x2, _, _ = make_pair(rng, intervals=int(rng.integers(3, 8)))
        for k in (1, 2):
            q = 1 / 0.45
            assert rho_qvar_level(x1, x2, q, k) == pytest.approx(
                oracle_rho_qvar(x1, x2, q, k), rel=1e-9)
            assert rho_riesz_level(x1, x2, 0.45, 4.0, k) == pytest.approx(
                oracle_rho_riesz(x1, x2, 0.45, 4.0, k), rel=1e-9)
            assert rho_mixed_level(x1, x2, 0.45, 4.0, k) == pytest.approx(
                oracle_rho_mixed(x1, x2, 0.45, 4.0, k), rel=1e-9)
            assert rho_nikolskii_hat_level(x1, x2, 0.45, 4.0, k) == pytest.approx(
                oracle_rho_nikolskii_hat(x1, x2, 0.45, 4.0, k), rel=1e-9)


def test_riesz_equals_mixed_distance(rng):
    for _ in range(6):
        x1, x2, _, _ = make_pair(rng, intervals=12)
        for delta, p in ((0.4, 3.0), (0.45, 4.0), (0.6, 8.0)):
            for k in (1, 2):
                a = rho_riesz_level(x1, x2, delta, p, k)
                b = rho_mixed_level(x1, x2, delta, p, k)
                assert a == pytest.approx(b, rel=1e-9)
                assert a <= b * (1 + 1e-9)  # the constant-1 direction on its own


def test_symmetry_exact(rng):
    x1, x2, _, _ = make_pair(rng)
    for k in (1, 2):
        assert rho_riesz_level(x1, x2, 0.45, 4.0, k) == rho_riesz_level(
            x2, x1, 0.45, 4.0, k)


def test_identity_of_indiscernibles(rng):
    x1, x2, _, _ = make_pair(rng, eps=0.3)
    assert rho_aggregate(x1, x2, DistKind.QVAR, p=2.5) > 1e-3


# ---------------------------------------------------------------------------
# aggregation
# ---------------------------------------------------------------------------

def test_aggregate_is_max_over_levels(rng):
    x1, x2, _, _ = make_pair(rng, depth=2)
    levels = [rho_riesz_level(x1, x2, 0.45, 4.0, k) for k in (1, 2)]
    agg = rho_aggregate(x1, x2, DistKind.RIESZ, delta=0.45, p=4.0)
    assert agg == pytest.approx(max(levels), rel=1e-14)
    assert all(agg >= v * (1 - 1e-14) for v in levels)


def test_aggregate_depth1_is_level1(rng):
    p1 = random_walk_path(rng, 6, 2)
    p2 = EuclideanPath(p1.grid, 1.1 * p1.values)
    x1, x2 = lift(p1, 1), lift(p2, 1)
    assert rho_aggregate(x1, x2, DistKind.QVAR, p=2.0) == rho_qvar_level(
        x1, x2, 2.0, 1)


def test_nikolskii_hat_needs_uniform_grid(rng):
    from roughpaths import NonUniformGridError

    p1 = random_walk_path(rng, 8, 2, uniform=False)
    p2 = EuclideanPath(p1.grid, 1.1 * p1.values)
    x1, x2 = lift(p1, 2), lift(p2, 2)
    with pytest.raises(NonUniformGridError):
        rho_nikolskii_hat_level(x1, x2, 0.45, 4.0, 1)


def test_mixed_nested_cap(rng):
    x1, x2, _, _ = make_pair(rng, intervals=24)
    with pytest.raises(ParameterError):
        rho_mixed_level(x1, x2, 0.45, 4.0, 1, max_nested=8)
