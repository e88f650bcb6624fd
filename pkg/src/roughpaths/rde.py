"""Controlled/rough differential equation solvers.

Two schemes for dY = V(Y) dX with V = (V_1, ..., V_n):

* ``solve_bv``     left-point Riemann-Stieltjes Euler for vector-valued
                   drivers of finite 1-variation, with optional substepping
                   along the linear interpolant (order 1 on smooth drivers).
* ``solve_rough``  step-N Euler for group-valued drivers: each step adds

                   sum_{k<=N} sum_{words (i_1..i_k)}
                        (V_{i_1} ... V_{i_k} Id)(Y_j) * pi_k(X_{t_j,t_{j+1}})^{(i_1..i_k)}

                   where V_i acts as the first-order operator
                   sum_a V_i^a(y) d/dy_a.  Depth is capped at 3, which needs
                   vector field derivatives up to order 2 only.

Vector fields come in linear / affine / quadratic-polynomial families with
analytic first and second derivatives.  Solutions that leave the field's
validity box (a Euclidean ball around the initial condition) raise
``BlowUpError`` carrying the exit time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .exceptions import BlowUpError, DimensionMismatchError, ParameterError
from .paths import EuclideanPath, GroupPath, TimeGrid
from .tensor_core import group_inverse, group_mul


class FieldFamily(enum.Enum):
    LINEAR = "linear"
    AFFINE = "affine"
    POLYNOMIAL = "polynomial"


class Scheme(enum.Enum):
    EULER_BV = "eulerbv"
    ROUGH_EULER = "rougheulerstepn"


@dataclass(frozen=True, eq=False)
class VectorField:
    """Collection of n maps V_i: R^m -> R^m with analytic derivatives.

    V_i(y) = const[i] + A[i] @ y + Q[i] : (y x y), with Q[i] symmetric in its
    last two axes and zero unless the family is polynomial.  ``gamma`` and
    ``box_radius`` declare the Lipschitz smoothness class and the radius of
    the validity ball (around the initial condition handed to the solver).
    """

    family: FieldFamily
    m: int
    n: int
    const: np.ndarray   # (n, m)
    lin: np.ndarray     # (n, m, m)
    quad: np.ndarray    # (n, m, m, m), symmetric in axes (2, 3)
    gamma: float = 2.5
    box_radius: float = 10.0

    def __post_init__(self):
        for name, arr, shape in (
            ("const", self.const, (self.n, self.m)),
            ("lin", self.lin, (self.n, self.m, self.m)),
            ("quad", self.quad, (self.n, self.m, self.m, self.m)),
        ):
            a = np.array(arr, dtype=float, copy=True)
            if a.shape != shape:
                raise ParameterError(f"{name} must have shape {shape}, got {a.shape}")
            if not np.all(np.isfinite(a)):
                raise ParameterError(f"{name} contains non-finite entries")
            a.flags.writeable = False
            object.__setattr__(self, name, a)
        q = self.quad
        if not np.allclose(q, np.swapaxes(q, 2, 3)):
            raise ParameterError("quadratic blocks must be symmetric in the last two axes")
        if self.family is FieldFamily.LINEAR and (self.const.any() or self.quad.any()):
            raise ParameterError("linear fields carry matrices only")
        if self.family is FieldFamily.AFFINE and self.quad.any():
            raise ParameterError("affine fields carry no quadratic part")

    # -- constructors -------------------------------------------------------

    @classmethod
    def linear(cls, matrices, gamma=2.5, box_radius=10.0) -> "VectorField":
        a = np.asarray(matrices, dtype=float)
        n, m = a.shape[0], a.shape[1]
        return cls(FieldFamily.LINEAR, m, n, np.zeros((n, m)), a,
                   np.zeros((n, m, m, m)), gamma, box_radius)

    @classmethod
    def affine(cls, matrices, offsets, gamma=2.5, box_radius=10.0) -> "VectorField":
        a = np.asarray(matrices, dtype=float)
        c = np.asarray(offsets, dtype=float)
        n, m = a.shape[0], a.shape[1]
        return cls(FieldFamily.AFFINE, m, n, c, a, np.zeros((n, m, m, m)),
                   gamma, box_radius)

    @classmethod
    def polynomial(cls, constants, matrices, quadratics, gamma=2.5,
                   box_radius=10.0) -> "VectorField":
        c = np.asarray(constants, dtype=float)
        a = np.asarray(matrices, dtype=float)
        q = np.asarray(quadratics, dtype=float)
        q = 0.5 * (q + np.swapaxes(q, 2, 3))
        n, m = a.shape[0], a.shape[1]
        return cls(FieldFamily.POLYNOMIAL, m, n, c, a, q, gamma, box_radius)

    # -- evaluation ---------------------------------------------------------

    def value(self, y: np.ndarray) -> np.ndarray:
        """V(y) as an (m, n) matrix; column i is V_i(y)."""
        y = np.asarray(y, dtype=float)
        out = self.const + np.einsum("iab,b->ia", self.lin, y)
        if self.quad.any():
            out = out + np.einsum("iabc,b,c->ia", self.quad, y, y)
        return out.T

    def jac(self, y: np.ndarray) -> np.ndarray:
        """J[i, a, b] = d V_i^a / d y_b."""
        y = np.asarray(y, dtype=float)
        j = self.lin.copy()
        if self.quad.any():
            j = j + 2.0 * np.einsum("iabc,c->iab", self.quad, y)
        return j

    def hess(self, y: np.ndarray) -> np.ndarray:
        """H[i, a, b, c] = d^2 V_i^a / d y_b d y_c (constant for these families)."""
        return 2.0 * self.quad

    def scaled(self, factor: float) -> "VectorField":
        return VectorField(self.family, self.m, self.n, factor * self.const,
                           factor * self.lin, factor * self.quad, self.gamma,
                           self.box_radius)

    def derivative_defect(self, points, h: float = 1e-5) -> float:
        """Max relative error of the analytic Jacobian/Hessian vs central differences."""
        worst = 0.0
        for y in points:
            y = np.asarray(y, dtype=float)
            jac_fd = np.empty((self.n, self.m, self.m))
            hess_fd = np.empty((self.n, self.m, self.m, self.m))
            for b in range(self.m):
                e = np.zeros(self.m)
                e[b] = h
                jac_fd[:, :, b] = (self.value(y + e) - self.value(y - e)).T / (2 * h)
                hess_fd[:, :, b, :] = (self.jac(y + e) - self.jac(y - e)) / (2 * h)
            for exact, fd in ((self.jac(y), jac_fd), (self.hess(y), hess_fd)):
                scale = max(np.abs(exact).max(), np.abs(fd).max(), 1.0)
                worst = max(worst, float(np.abs(exact - fd).max() / scale))
        return worst

    def lip_norm(self, center, radius=None, samples: int = 256, seed: int = 0) -> float:
        """Sampled bound for the Lip-gamma norm on the validity ball.

        Maximum over sampled ball points of |V|, |DV| and |D^2 V| (operator
        norms replaced by Frobenius norms); the top-derivative Hoelder
        constant vanishes for these polynomial families.
        """
        center = np.asarray(center, dtype=float)
        radius = self.box_radius if radius is None else radius
        rng = np.random.default_rng(seed)
        pts = center + radius * rng.uniform(-1.0, 1.0, size=(samples, self.m))
        best = 0.0
        for y in pts:
            best = max(
                best,
                float(np.linalg.norm(self.value(y))),
                float(np.linalg.norm(self.jac(y).ravel())),
                float(np.linalg.norm(self.hess(y).ravel())),
            )
        return best

    # -- JSON spec ----------------------------------------------------------

    def to_spec(self) -> dict:
        spec = {
            "family": self.family.value,
            "m": self.m,
            "n": self.n,
            "coefficients": {"matrices": self.lin.tolist()},
            "box_radius": self.box_radius,
            "lip_gamma": self.gamma,
        }
        if self.family is not FieldFamily.LINEAR:
            spec["coefficients"]["offsets"] = self.const.tolist()
        if self.family is FieldFamily.POLYNOMIAL:
            spec["coefficients"]["quadratics"] = self.quad.tolist()
        return spec

    @classmethod
    def from_spec(cls, spec: dict) -> "VectorField":
        family = FieldFamily(spec["family"].lower())
        coeffs = spec["coefficients"]
        gamma = float(spec.get("lip_gamma", 2.5))
        radius = float(spec.get("box_radius", 10.0))
        if family is FieldFamily.LINEAR:
            return cls.linear(coeffs["matrices"], gamma, radius)
        if family is FieldFamily.AFFINE:
            return cls.affine(coeffs["matrices"], coeffs["offsets"], gamma, radius)
        n, m = int(spec["n"]), int(spec["m"])
        return cls.polynomial(
            coeffs.get("offsets", np.zeros((n, m))),
            coeffs["matrices"],
            coeffs.get("quadratics", np.zeros((n, m, m, m))),
            gamma, radius,
        )


@dataclass(frozen=True)
class RdeConfig:
    """Scheme selection: truncation depth, substeps per grid interval, scheme tag."""

    depth: int = 1
    substeps: int = 1
    scheme: Scheme = Scheme.EULER_BV

    def __post_init__(self):
        if self.depth not in (1, 2, 3):
            raise ParameterError(f"depth must be 1, 2 or 3, got {self.depth}")
        if self.substeps < 1:
            raise ParameterError("substeps must be >= 1")
        if self.scheme is Scheme.EULER_BV and self.depth != 1:
            raise ParameterError("the BV Euler scheme runs at depth 1")
        if self.scheme is Scheme.ROUGH_EULER and self.substeps != 1:
            raise ParameterError(
                "rough Euler does not substep (group increments have no "
                "canonical fractional splitting here); refine the driver grid instead"
            )


def _check_box(y, y0, radius, t):
    if np.linalg.norm(y - y0) > radius:
        raise BlowUpError(t)


def solve_bv(y0, v: VectorField, x: EuclideanPath, config: RdeConfig = RdeConfig()) -> EuclideanPath:
    """Left-point Euler for dY = V(Y) dX along a bounded-variation driver.

    With s substeps per grid interval the driver increment is split into s
    equal parts (exact for the linear interpolant); the returned path lives
    on the substepped grid.
    """
    if x.dim != v.n:
        raise DimensionMismatchError(f"driver dim {x.dim} != field driver dim {v.n}")
    y0 = np.asarray(y0, dtype=float).reshape(-1)
    if y0.size != v.m:
        raise DimensionMismatchError(f"y0 has dim {y0.size}, field state dim {v.m}")
    s = config.substeps
    times = [0.0]
    ys = [y0]
    y = y0
    tgrid = x.grid.times
    for j, dx in enumerate(x.increments()):
        t0, t1 = tgrid[j], tgrid[j + 1]
        for r in range(s):
            y = y + v.value(y) @ (dx / s)
            t = t0 + (t1 - t0) * (r + 1) / s
            _check_box(y, y0, v.box_radius, t)
            times.append(t)
            ys.append(y)
    return EuclideanPath(TimeGrid(np.array(times)), np.stack(ys))


def _euler_step_increment(v: VectorField, y: np.ndarray, g) -> np.ndarray:
    """Step-N Euler increment sum over words of (V_word Id)(y) pi_k(g)^word."""
    vmat = v.value(y)                       # (m, n)
    out = vmat @ g.level(1)
    if g.depth >= 2:
        jac = v.jac(y)                      # (i, a, b)
        out = out + np.einsum("jab,bi,ij->a", jac, vmat, g.level(2))
    if g.depth >= 3:
        hes = v.hess(y)                     # (k, a, b, c)
        g3 = g.level(3)
        out = out + np.einsum("kabc,bi,cj,ijk->a", hes, vmat, vmat, g3)
        out = out + np.einsum("kab,jbc,ci,ijk->a", jac, jac, vmat, g3)
    return out


def solve_rough(y0, v: VectorField, x: GroupPath, config: RdeConfig) -> EuclideanPath:
    """Step-N Euler for dY = V(Y) dX along a group-valued driver."""
    if config.scheme is not Scheme.ROUGH_EULER:
        raise ParameterError("solve_rough needs the rough Euler scheme")
    if x.depth != config.depth:
        raise DimensionMismatchError(
            f"driver depth {x.depth} != configured depth {config.depth}"
        )
    if x.dim != v.n:
        raise DimensionMismatchError(f"driver dim {x.dim} != field driver dim {v.n}")
    y0 = np.asarray(y0, dtype=float).reshape(-1)
    if y0.size != v.m:
        raise DimensionMismatchError(f"y0 has dim {y0.size}, field state dim {v.m}")
    ys = [y0]
    y = y0
    for j in range(x.grid.intervals):
        g = group_mul(group_inverse(x.values[j]), x.values[j + 1])
        y = y + _euler_step_increment(v, y, g)
        _check_box(y, y0, v.box_radius, float(x.grid.times[j + 1]))
        ys.append(y)
    return EuclideanPath(x.grid, np.stack(ys))


def ito_lyons(y0, v: VectorField, x, config: RdeConfig | None = None) -> EuclideanPath:
    """Solution map (y0, V, X) -> Y, dispatching on the driver type."""
    if isinstance(x, EuclideanPath):
        config = config or RdeConfig()
        if config.scheme is not Scheme.EULER_BV:
            raise ParameterError("Euclidean drivers use the BV Euler scheme")
        return solve_bv(y0, v, x, config)
    if isinstance(x, GroupPath):
        config = config or RdeConfig(depth=x.depth, scheme=Scheme.ROUGH_EULER)
        return solve_rough(y0, v, x, config)
    raise ParameterError(f"unsupported driver type {type(x).__name__}")
