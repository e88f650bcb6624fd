"""Path seminorms on the Hoelder / variation / Besov-Nikolskii scale.

Seven families, all over a grid subinterval [s, t] and a metric d on the
path's state space (Euclidean for vector paths, the homogeneous surrogate
for group paths):

* Hoelder          sup_{u<v} d(f_u, f_v) / (v-u)^delta
* q-variation      ( sup_P sum d(f_u, f_v)^q )^(1/q)
* Riesz variation  ( sup_P sum d(f_u, f_v)^p / (v-u)^(delta*p-1) )^(1/p)
* mixed            as Riesz, with the block's (1/delta)-variation in place
                   of the endpoint distance
* Nikolskii        sup_h h^(-delta) ( int d(f_u, f_{u+h})^p du )^(1/p)
* refined Nikolskii( sup_P sum ||f||_{Nikolskii;[u,v]}^p )^(1/p)
* fractional       ( iint d(f_u, f_v)^p / |v-u|^(1+delta*p) du dv )^(1/p)
  Sobolev

Partition suprema run over grid points only and are computed by an exact
O(M^2) dynamic program; the nested kinds (mixed, refined Nikolskii)
precompute an O(M^2)-cell table of inner values at O(M) each, i.e. O(M^3)
total, and are therefore capped at ``max_nested`` grid intervals (default
512) unless the caller raises the cap explicitly.  Nikolskii shifts h run
over integer multiples of the uniform mesh with a left Riemann sum for the
inner integral; the fractional Sobolev double integral uses the tensor-grid
quadrature with the diagonal band |u-v| < mesh excluded.

Riesz variation with p = infinity is the Hoelder seminorm by definition.
Infinite integrability is passed as the sentinel ``P_INF``, never as a
float.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .exceptions import NonUniformGridError, ParameterError
from .paths import EuclideanPath, GroupPath


class PInf(enum.Enum):
    """Distinguished marker for infinite integrability."""

    INF = "inf"


P_INF = PInf.INF


class NormKind(enum.Enum):
    HOELDER = "hoelder"
    QVAR = "qvar"
    RIESZ = "rieszv"
    MIXED = "mixedv"
    NIKOLSKII = "nikolskii"
    REFINED_NIKOLSKII = "refinednikolskii"
    FRAC_SOBOLEV = "fracsobolev"


@dataclass(frozen=True)
class NormSpec:
    """Norm selector: family, regularity delta, integrability p, interval.

    QVar reads the variation exponent q from ``p`` and ignores delta;
    Hoelder ignores p.  Riesz/mixed require p >= 1/delta.
    """

    kind: NormKind
    delta: float = 1.0
    p: float | PInf = P_INF
    interval: tuple[float, float] | None = None

    def __post_init__(self):
        k, d, p = self.kind, self.delta, self.p
        if k is NormKind.HOELDER:
            _check_delta(d)
        elif k is NormKind.QVAR:
            if p is P_INF or p < 1.0:
                raise ParameterError("q-variation needs a finite exponent q >= 1")
        elif k in (NormKind.RIESZ, NormKind.MIXED):
            _check_delta(d)
            _check_riesz_p(d, p)
        elif k in (NormKind.NIKOLSKII, NormKind.REFINED_NIKOLSKII):
            _check_delta(d)
            if p is not P_INF and p < 1.0:
                raise ParameterError("Nikolskii norms need p >= 1")
        elif k is NormKind.FRAC_SOBOLEV:
            if not 0.0 < d < 1.0:
                raise ParameterError("fractional Sobolev needs delta in (0, 1)")
            if p is P_INF or p < 1.0:
                raise ParameterError("fractional Sobolev needs finite p >= 1")


def _check_delta(delta):
    if not 0.0 < delta <= 1.0:
        raise ParameterError(f"delta must lie in (0, 1], got {delta}")


def _check_riesz_p(delta, p):
    if p is P_INF:
        return
    if p * delta < 1.0 - 1e-12:
        raise ParameterError(
            f"Riesz-type norms need p >= 1/delta (got p={p}, 1/delta={1/delta:.6g})"
        )


# ---------------------------------------------------------------------------
# shared machinery
# ---------------------------------------------------------------------------

def _path_data(path):
    if not isinstance(path, (EuclideanPath, GroupPath)):
        raise ParameterError(f"unsupported path type {type(path).__name__}")
    return path.grid.times, path.distance_matrix


def dp_partition_sup(weight: np.ndarray, lo: int, hi: int) -> float:
    """Exact sup over grid partitions of [lo, hi] of the summed block weights.

    ``weight[i, j]`` is the (nonnegative) weight of block [t_i, t_j]; the
    recursion best[j] = max_i ( best[i] + weight[i, j] ) visits every
    partition into consecutive blocks.
    """
    if hi <= lo:
        return 0.0
    best = np.empty(hi - lo + 1)
    best[0] = 0.0
    for j in range(lo + 1, hi + 1):
        best[j - lo] = np.max(best[: j - lo] + weight[lo:j, j])
    return float(best[-1])


def dp_power_table(weight: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """Partition suprema for every subinterval: B[i, j] = dp_partition_sup(weight, i, j)."""
    b = np.zeros_like(weight)
    for i in range(lo, hi):
        row = b[i]
        for j in range(i + 1, hi + 1):
            row[j] = np.max(row[i:j] + weight[i:j, j])
    return b


def _onevar_power_table(dist: np.ndarray, lo: int, hi: int) -> np.ndarray:
    # For q = 1 and a true metric the finest partition is optimal (triangle
    # inequality), so the table collapses to prefix sums of consecutive steps.
    steps = np.concatenate([[0.0], np.cumsum(np.diagonal(dist, 1)[lo:hi])])
    b = np.zeros_like(dist)
    b[lo : hi + 1, lo : hi + 1] = np.maximum(steps[None, :] - steps[:, None], 0.0)
    return b


def _dt_upper(times: np.ndarray) -> np.ndarray:
    dt = times[None, :] - times[:, None]
    return np.where(dt > 0, dt, np.inf)  # inf keeps unused cells harmless


def _riesz_weight(dist, times, delta, p):
    w = np.zeros_like(dist)
    iu = np.triu_indices(len(times), k=1)
    dt = (times[iu[1]] - times[iu[0]]) ** (1.0 - delta * p)
    w[iu] = dist[iu] ** p * dt
    return w


def qvar_power_table(path, q, lo, hi) -> np.ndarray:
    """Table of q-variation powers ||f||_{q-var;[i,j]}^q over [lo, hi]."""
    times, dist = _path_data(path)
    if q == 1.0 and path.has_true_metric:
        return _onevar_power_table(dist, lo, hi)
    return dp_power_table(dist**q, lo, hi)


def _check_nested(lo, hi, max_nested):
    if hi - lo > max_nested:
        raise ParameterError(
            f"nested norm over {hi - lo} grid intervals exceeds max_nested="
            f"{max_nested}; the inner-table build is O(M^3), pass a larger "
            "max_nested explicitly to accept the cost"
        )


def _require_uniform(path):
    if not path.grid.is_uniform:
        raise NonUniformGridError(
            "this norm is defined on uniform grids; resample_uniform the path first"
        )


# ---------------------------------------------------------------------------
# the seven families
# ---------------------------------------------------------------------------

def holder_norm(path, delta: float, interval=None) -> float:
    """Hoelder seminorm sup_{u<v} d(f_u, f_v) / (v-u)^delta over grid pairs."""
    _check_delta(delta)
    times, dist = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    if hi == lo:
        return 0.0
    window = dist[lo : hi + 1, lo : hi + 1] / _dt_upper(times[lo : hi + 1]) ** delta
    return float(np.max(window))


def qvar_norm(path, q: float, interval=None) -> float:
    """q-variation ( sup_P sum d(f_u, f_v)^q )^(1/q), exact over grid partitions."""
    if q < 1.0:
        raise ParameterError(f"q-variation needs q >= 1, got {q}")
    times, dist = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    if q == 1.0 and path.has_true_metric:
        return float(np.sum(np.diagonal(dist, 1)[lo:hi]))
    return dp_partition_sup(dist**q, lo, hi) ** (1.0 / q)


def riesz_norm(path, delta: float, p, interval=None) -> float:
    """Riesz variation ( sup_P sum d^p / (v-u)^(delta*p-1) )^(1/p); p = P_INF is Hoelder."""
    _check_delta(delta)
    _check_riesz_p(delta, p)
    if p is P_INF:
        return holder_norm(path, delta, interval)
    times, dist = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    return dp_partition_sup(_riesz_weight(dist, times, delta, p), lo, hi) ** (1.0 / p)


def mixed_norm(path, delta: float, p, interval=None, max_nested: int = 512) -> float:
    """Mixed Hoelder-variation norm: Riesz weights built from block (1/delta)-variations."""
    _check_delta(delta)
    _check_riesz_p(delta, p)
    times, _ = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    if hi == lo:
        return 0.0
    _check_nested(lo, hi, max_nested)
    q = 1.0 / delta
    inner = qvar_power_table(path, q, lo, hi)  # powers ||.||^q
    if p is P_INF:
        window = inner[lo : hi + 1, lo : hi + 1] ** delta  # = ||.||_{q-var}
        return float(np.max(window / _dt_upper(times[lo : hi + 1]) ** delta))
    iu = np.triu_indices(len(times), k=1)
    w = np.zeros_like(inner)
    w[iu] = inner[iu] ** (delta * p) * (times[iu[1]] - times[iu[0]]) ** (1.0 - delta * p)
    return dp_partition_sup(w, lo, hi) ** (1.0 / p)


def _nikolskii_power(dist, times, delta, p, lo, hi) -> float:
    """(N^{delta,p}-seminorm of the restriction to [lo, hi])^p, uniform mesh."""
    span = hi - lo
    if span == 0:
        return 0.0
    dt = (times[hi] - times[lo]) / span
    best = 0.0
    for m in range(1, span + 1):
        # left Riemann sum over r = lo .. hi-m-1 (exclusive right endpoint)
        s = float(np.sum(np.diagonal(dist, m)[lo : hi - m] ** p))
        best = max(best, (m * dt) ** (-delta * p) * dt * s)
    return best


def nikolskii_norm(path, delta: float, p, interval=None) -> float:
    """Nikolskii seminorm sup_h h^(-delta) ( int_s^{t-h} d(f_u, f_{u+h})^p du )^(1/p).

    Shifts h are integer multiples of the uniform mesh; the integral is a
    left Riemann sum over grid points in [s, t-h).  For p = P_INF the inner
    integral becomes a maximum.
    """
    _check_delta(delta)
    if p is not P_INF and p < 1.0:
        raise ParameterError(f"Nikolskii norms need p >= 1, got {p}")
    _require_uniform(path)
    times, dist = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    span = hi - lo
    if span == 0:
        return 0.0
    dt = (times[hi] - times[lo]) / span
    if p is P_INF:
        best = 0.0
        for m in range(1, span + 1):
            seg = np.diagonal(dist, m)[lo : hi - m + 1]
            best = max(best, (m * dt) ** (-delta) * float(np.max(seg)))
        return best
    return _nikolskii_power(dist, times, delta, p, lo, hi) ** (1.0 / p)


def shift_sup_table(dist: np.ndarray, times: np.ndarray, lo: int, hi: int,
                    power: float, hexp: float) -> np.ndarray:
    """Nikolskii-type inner table on a uniform mesh.

    T[i, j] = max over shifts h = m*mesh (1 <= m <= j-i) of
              h^hexp * mesh * sum_{r=i..j-m-1} dist[r, r+m]^power,
    the sum being the left Riemann quadrature of the shifted increment
    integral over [t_i, t_j - h).
    """
    span = hi - lo
    t = np.zeros_like(dist)
    if span == 0:
        return t
    dt = (times[hi] - times[lo]) / span
    for m in range(1, span + 1):
        g = np.diagonal(dist, m) ** power
        s = np.concatenate([[0.0], np.cumsum(g)])
        c = (m * dt) ** hexp * dt
        js = np.arange(lo + m, hi + 1)
        is_ = np.arange(lo, hi - m + 1)
        block = s[js - m][None, :] - s[is_][:, None]
        view = t[lo : hi - m + 1, lo + m : hi + 1]
        np.maximum(view, c * block, out=view)
    return t


def nikolskii_power_table(path, delta, p, lo, hi) -> np.ndarray:
    """Inner-norm powers T[i, j] = ||f||_{Nikolskii;[i,j]}^p for all blocks in [lo, hi]."""
    times, dist = _path_data(path)
    return shift_sup_table(dist, times, lo, hi, p, -delta * p)


def refined_nikolskii_norm(path, delta: float, p, interval=None, max_nested: int = 512) -> float:
    """Refined Nikolskii norm ( sup_P sum ||f||_{Nikolskii;[u,v]}^p )^(1/p).

    For p = P_INF this is the plain Nikolskii sup itself (the inner norm is
    monotone under interval inclusion, so the full interval dominates).
    """
    _check_delta(delta)
    _require_uniform(path)
    if p is P_INF:
        return nikolskii_norm(path, delta, p, interval)
    if p < 1.0:
        raise ParameterError(f"Nikolskii norms need p >= 1, got {p}")
    lo, hi = path.grid.resolve_interval(interval)
    if hi == lo:
        return 0.0
    _check_nested(lo, hi, max_nested)
    t = nikolskii_power_table(path, delta, p, lo, hi)
    return dp_partition_sup(t, lo, hi) ** (1.0 / p)


def frac_sobolev_norm(path, delta: float, p: float, interval=None) -> float:
    """Fractional Sobolev (Sobolev-Slobodeckij) seminorm by tensor-grid quadrature.

    ( sum_{i != j} d(f_i, f_j)^p / |t_j - t_i|^(1 + delta*p) * mesh^2 )^(1/p),
    cells closer than one mesh to the diagonal excluded.
    """
    if not 0.0 < delta < 1.0:
        raise ParameterError(f"fractional Sobolev needs delta in (0, 1), got {delta}")
    if p is P_INF or p < 1.0:
        raise ParameterError("fractional Sobolev needs finite p >= 1")
    _require_uniform(path)
    times, dist = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    if hi == lo:
        return 0.0
    dt = (times[hi] - times[lo]) / (hi - lo)
    iu = np.triu_indices(hi - lo + 1, k=1)
    d = dist[lo : hi + 1, lo : hi + 1][iu]
    gap = times[lo : hi + 1][iu[1]] - times[lo : hi + 1][iu[0]]
    total = 2.0 * float(np.sum(d**p / gap ** (1.0 + delta * p))) * dt * dt
    return total ** (1.0 / p)


# ---------------------------------------------------------------------------
# interval tables and the dispatcher
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IntervalNormTable:
    """Norm of the path restricted to [t_i, t_j] for every grid pair i <= j."""

    kind: NormKind
    delta: float | None
    p: float | PInf | None
    values: np.ndarray


def interval_norm_table(path, kind: NormKind, delta=None, p=None, interval=None,
                        max_nested: int = 512) -> IntervalNormTable:
    """Build the full subinterval table for a pair-sup or partition-sup norm."""
    times, dist = _path_data(path)
    lo, hi = path.grid.resolve_interval(interval)
    _check_nested(lo, hi, max_nested)
    if kind is NormKind.HOELDER:
        ratio = np.zeros_like(dist)
        iu = np.triu_indices(len(times), k=1)
        ratio[iu] = dist[iu] / (times[iu[1]] - times[iu[0]]) ** delta
        vals = np.zeros_like(dist)
        for i in range(hi - 1, lo - 1, -1):
            for j in range(i + 1, hi + 1):
                vals[i, j] = max(ratio[i, j], vals[i + 1, j] if i + 1 < j else 0.0,
                                 vals[i, j - 1] if j - 1 > i else 0.0)
        return IntervalNormTable(kind, delta, None, vals)
    if kind is NormKind.QVAR:
        q = p
        b = qvar_power_table(path, q, lo, hi)
        return IntervalNormTable(kind, None, q, b ** (1.0 / q))
    if kind is NormKind.RIESZ:
        _check_riesz_p(delta, p)
        b = dp_power_table(_riesz_weight(dist, times, delta, p), lo, hi)
        return IntervalNormTable(kind, delta, p, b ** (1.0 / p))
    if kind is NormKind.MIXED:
        _check_riesz_p(delta, p)
        inner = qvar_power_table(path, 1.0 / delta, lo, hi)
        iu = np.triu_indices(len(times), k=1)
        w = np.zeros_like(inner)
        w[iu] = inner[iu] ** (delta * p) * (times[iu[1]] - times[iu[0]]) ** (1.0 - delta * p)
        b = dp_power_table(w, lo, hi)
        return IntervalNormTable(kind, delta, p, b ** (1.0 / p))
    if kind is NormKind.NIKOLSKII:
        _require_uniform(path)
        t = nikolskii_power_table(path, delta, p, lo, hi)
        return IntervalNormTable(kind, delta, p, t ** (1.0 / p))
    raise ParameterError(f"no interval table for kind {kind}")


def compute_norm(path, spec: NormSpec, max_nested: int = 512) -> float:
    """Evaluate the norm selected by ``spec`` on ``path``."""
    k = spec.kind
    if k is NormKind.HOELDER:
        return holder_norm(path, spec.delta, spec.interval)
    if k is NormKind.QVAR:
        return qvar_norm(path, spec.p, spec.interval)
    if k is NormKind.RIESZ:
        return riesz_norm(path, spec.delta, spec.p, spec.interval)
    if k is NormKind.MIXED:
        return mixed_norm(path, spec.delta, spec.p, spec.interval, max_nested)
    if k is NormKind.NIKOLSKII:
        return nikolskii_norm(path, spec.delta, spec.p, spec.interval)
    if k is NormKind.REFINED_NIKOLSKII:
        return refined_nikolskii_norm(path, spec.delta, spec.p, spec.interval, max_nested)
    if k is NormKind.FRAC_SOBOLEV:
        return frac_sobolev_norm(path, spec.delta, spec.p, spec.interval)
    raise ParameterError(f"unknown norm kind {k}")
