"""Truncated tensor algebra and the step-N free nilpotent group.

An element of the depth-N truncated tensor algebra over R^n is a tuple of
dense coefficient blocks, one block per tensor level k = 0..N; block k holds
the n^k coefficients in lexicographic (C-order) multi-index order.  Group
elements are the subtype with level-0 entry equal to 1 and model truncated
signatures of bounded-variation paths.

The homogeneous norm used throughout is the symmetric max-over-levels
surrogate

    |g|  =  max_k  max( |pi_k(g)|, |pi_k(g^{-1})| )^(1/k)

with the Euclidean norm on each level.  It is exactly 1-homogeneous under
dilation and equivalent to the Carnot-Caratheodory norm up to ball-box
constants; ``oracle.cc_norm_bruteforce`` gives an independent depth-2 CC
value for calibrating that equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionMismatchError, ParameterError

#: Hard construction-time cap on the truncation depth.  The dense multiply
#: costs O(n^(2N)) and nothing in the library needs more than level 4.
MAX_DEPTH = 4


def _frozen_level(block, dim: int, k: int) -> np.ndarray:
    arr = np.array(block, dtype=float, copy=True)
    if arr.size != dim**k:
        raise ParameterError(f"level {k} needs {dim**k} entries, got {arr.size}")
    arr = arr.reshape((dim,) * k)
    if not np.all(np.isfinite(arr)):
        raise ParameterError(f"level {k} contains non-finite entries")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class TruncatedTensor:
    """Element of the level-N truncated tensor algebra T^N(R^n).

    ``levels[k]`` is a read-only array of shape ``(dim,) * k`` (a 0-d array
    at level 0).  Instances are immutable and safe to share across threads.
    """

    dim: int
    depth: int
    levels: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ParameterError(f"dim must be >= 1, got {self.dim}")
        if not 1 <= self.depth <= MAX_DEPTH:
            raise ParameterError(f"depth must be in 1..{MAX_DEPTH}, got {self.depth}")
        if len(self.levels) != self.depth + 1:
            raise ParameterError(
                f"expected {self.depth + 1} level blocks, got {len(self.levels)}"
            )
        frozen = tuple(
            _frozen_level(block, self.dim, k) for k, block in enumerate(self.levels)
        )
        object.__setattr__(self, "levels", frozen)

    def level(self, k: int) -> np.ndarray:
        """Projection pi_k onto tensor level k."""
        return self.levels[k]

    @property
    def scalar(self) -> float:
        return float(self.levels[0])

    def __repr__(self):
        return f"TruncatedTensor(dim={self.dim}, depth={self.depth})"


@dataclass(frozen=True, eq=False)
class GroupElement:
    """Element of the step-N free nilpotent group: level-0 entry exactly 1."""

    tensor: TruncatedTensor

    def __post_init__(self):
        if self.tensor.scalar != 1.0:
            raise ParameterError(
                f"group elements need level-0 entry exactly 1, got {self.tensor.scalar!r}"
            )

    @property
    def dim(self) -> int:
        return self.tensor.dim

    @property
    def depth(self) -> int:
        return self.tensor.depth

    def level(self, k: int) -> np.ndarray:
        return self.tensor.levels[k]

    def __repr__(self):
        return f"GroupElement(dim={self.dim}, depth={self.depth})"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def zero_tensor(dim: int, depth: int) -> TruncatedTensor:
    return TruncatedTensor(dim, depth, tuple(np.zeros((dim,) * k) for k in range(depth + 1)))


def unit_tensor(dim: int, depth: int) -> TruncatedTensor:
    levels = [np.ones(())] + [np.zeros((dim,) * k) for k in range(1, depth + 1)]
    return TruncatedTensor(dim, depth, tuple(levels))


def identity_element(dim: int, depth: int) -> GroupElement:
    return GroupElement(unit_tensor(dim, depth))


def segment_exp(delta, depth: int) -> GroupElement:
    """Signature of one linear segment with increment ``delta``: pi_k = delta^(x)k / k!."""
    delta = np.asarray(delta, dtype=float).reshape(-1)
    if depth < 1:
        raise ParameterError("segment_exp needs depth >= 1")
    levels = [np.ones(())]
    for k in range(1, depth + 1):
        levels.append(np.multiply.outer(levels[-1], delta) / k)
    return GroupElement(TruncatedTensor(delta.size, depth, tuple(levels)))


# ---------------------------------------------------------------------------
# algebra operations
# ---------------------------------------------------------------------------

def _check_compatible(a, b):
    if a.dim != b.dim or a.depth != b.depth:
        raise DimensionMismatchError(
            f"incompatible operands: dim/depth ({a.dim},{a.depth}) vs ({b.dim},{b.depth})"
        )


def tensor_mul(a: TruncatedTensor, b: TruncatedTensor) -> TruncatedTensor:
    """Truncated tensor product: pi_k(a x b) = sum_{i+j=k} pi_i(a) x pi_j(b)."""
    _check_compatible(a, b)
    dim, depth = a.dim, a.depth
    out = []
    for k in range(depth + 1):
        acc = np.zeros((dim,) * k)
        for i in range(k + 1):
            acc = acc + np.multiply.outer(a.levels[i], b.levels[k - i])
        out.append(acc)
    return TruncatedTensor(dim, depth, tuple(out))


def _tensor_add(a: TruncatedTensor, b: TruncatedTensor) -> TruncatedTensor:
    _check_compatible(a, b)
    return TruncatedTensor(
        a.dim, a.depth, tuple(x + y for x, y in zip(a.levels, b.levels))
    )


def group_mul(g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement(tensor_mul(g.tensor, h.tensor))


def group_inverse(g: GroupElement) -> GroupElement:
    """Group inverse via the finite Neumann series.

    With u = 1 - g (no level-0 part, hence nilpotent in the truncated
    algebra), g^{-1} = sum_{k=0..N} u^(x)k exactly.
    """
    dim, depth = g.dim, g.depth
    u_levels = [np.zeros(())] + [-g.level(k) for k in range(1, depth + 1)]
    u = TruncatedTensor(dim, depth, tuple(u_levels))
    acc = unit_tensor(dim, depth)
    power = unit_tensor(dim, depth)
    for _ in range(depth):
        power = tensor_mul(power, u)
        acc = _tensor_add(acc, power)
    return GroupElement(
        TruncatedTensor(dim, depth, (np.ones(()),) + acc.levels[1:])
    )


def dilate(g: GroupElement, lam: float) -> GroupElement:
    """Dilation: pi_k -> lam^k * pi_k."""
    levels = [np.ones(())] + [
        lam**k * g.level(k) for k in range(1, g.depth + 1)
    ]
    return GroupElement(TruncatedTensor(g.dim, g.depth, tuple(levels)))


# ---------------------------------------------------------------------------
# homogeneous norm and distance
# ---------------------------------------------------------------------------

def level_norms(g: GroupElement) -> np.ndarray:
    """Euclidean norms |pi_k(g)| for k = 1..N."""
    return np.array(
        [np.linalg.norm(g.level(k).ravel()) for k in range(1, g.depth + 1)]
    )


def homogeneous_norm(g: GroupElement) -> float:
    """Symmetric homogeneous norm max_k max(|pi_k(g)|, |pi_k(g^-1)|)^(1/k)."""
    fwd = level_norms(g)
    bwd = level_norms(group_inverse(g))
    ks = np.arange(1, g.depth + 1)
    return float(np.max(np.maximum(fwd, bwd) ** (1.0 / ks)))


def group_distance(g: GroupElement, h: GroupElement) -> float:
    """Left-invariant homogeneous distance |g^{-1} x h|."""
    _check_compatible(g, h)
    return homogeneous_norm(group_mul(group_inverse(g), h))


def grouplike_defect(g: GroupElement) -> float:
    """Relative defect of the depth-2 group-like identity sym(pi_2) = pi_1 x pi_1 / 2.

    Returns 0 for depth-1 elements.  Useful as a cheap sanity check that an
    element is a plausible signature; products of segment exponentials
    satisfy it to machine precision.
    """
    if g.depth < 2:
        return 0.0
    l1, l2 = g.level(1), g.level(2)
    sym = 0.5 * (l2 + l2.T)
    target = 0.5 * np.multiply.outer(l1, l1)
    scale = np.linalg.norm(l2) + np.linalg.norm(target) + 1e-300
    return float(np.linalg.norm(sym - target) / scale)
