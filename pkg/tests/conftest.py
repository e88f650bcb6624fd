import numpy as np
import pytest

from roughpaths import (
    EuclideanPath,
    TimeGrid,
    TruncatedTensor,
    group_mul,
    identity_element,
    segment_exp,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_tensor(rng, dim, depth):
    levels = [np.array(rng.standard_normal())] + [
        rng.standard_normal((dim,) * k) for k in range(1, depth + 1)
    ]
    return TruncatedTensor(dim, depth, tuple(levels))


def random_group_element(rng, dim, depth, segments=3):
    g = identity_element(dim, depth)
    for _ in range(segments):
        g = group_mul(g, segment_exp(rng.standard_normal(dim), depth))
    return g


def random_walk_path(rng, intervals, dim, scale=1.0, uniform=True):
    if uniform:
        grid = TimeGrid.uniform(intervals)
    else:
        t = np.concatenate([[0.0], np.sort(rng.uniform(0.01, 1.0, intervals - 1)), [1.0]])
        grid = TimeGrid(np.unique(t))
    steps = rng.standard_normal((len(grid) - 1, dim)) * scale / np.sqrt(len(grid) - 1)
    vals = np.vstack([np.zeros((1, dim)), np.cumsum(steps, axis=0)])
    return EuclideanPath(grid, vals)
