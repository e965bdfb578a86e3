"""The majorization engine: ordering, comparison, doubly stochastic
certification, and T-transform chains linking majorized pairs.

Indices are 0-based throughout, including the JSON wire format.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import List, Tuple

import numpy as np

from .states import ProbabilityProfile
from .tolerances import DEFAULT_TOL, ToleranceConfig


class ComparisonResult(str, enum.Enum):
    """Outcome of comparing two profiles under the majorization order."""

    CONVERTS_TO = "ConvertsTo"
    CONVERTS_FROM = "ConvertsFrom"
    EQUIVALENT = "Equivalent"
    INCOMPARABLE = "Incomparable"


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection on {0..d-1}, stored as the image tuple.

    For the permutation returned by :func:`sort_desc`, ``image[k]`` is the
    original position of the k-th sorted entry: ``permute(x) == sorted``
    and ``unpermute(sorted) == x``.
    """

    image: Tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(int(i) for i in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"image: not a bijection on 0..{len(image) - 1}")

    def __len__(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))

    def permute(self, v: np.ndarray) -> np.ndarray:
        """Gather: ``result[k] = v[image[k]]``."""
        return np.asarray(v)[list(self.image)]

    def unpermute(self, v: np.ndarray) -> np.ndarray:
        """Scatter: ``result[image[k]] = v[k]`` (inverse of ``permute``)."""
        out = np.empty_like(np.asarray(v))
        out[list(self.image)] = np.asarray(v)
        return out

    def matrix(self) -> np.ndarray:
        """Permutation matrix P with ``P @ v == permute(v)``.

        Row k of P is the ``image[k]``-th row of the identity.
        """
        return np.eye(len(self.image))[list(self.image)]


@dataclasses.dataclass(frozen=True)
class TTransform:
    """One elementary doubly stochastic step on coordinates ``i < j``.

    Acts as the identity except on the pair (i, j), where it applies the
    2x2 mixing block [[t, 1-t], [1-t, t]].
    """

    i: int
    j: int
    t: float

    def __post_init__(self) -> None:
        if not (0 <= self.i < self.j):
            raise ValueError(f"indices: need 0 <= i < j, got i={self.i}, j={self.j}")
        if not (0.0 <= self.t <= 1.0):
            raise ValueError(f"t: need 0 <= t <= 1, got {self.t}")

    def matrix(self, d: int) -> np.ndarray:
        """The transform embedded in the d-dimensional identity."""
        if self.j >= d:
            raise ValueError(f"indices: j={self.j} out of range for dimension {d}")
        m = np.eye(d)
        m[self.i, self.i] = m[self.j, self.j] = self.t
        m[self.i, self.j] = m[self.j, self.i] = 1.0 - self.t
        return m


def sort_desc(x: ProbabilityProfile) -> Tuple[ProbabilityProfile, Permutation]:
    """Sort a profile in nonincreasing order.

    The sort is stable: among tied entries the original order is kept, so
    the returned permutation is reproducible.
    """
    order = np.argsort(-x.entries, kind="stable")
    return ProbabilityProfile(x.entries[order]), Permutation(tuple(order))


def majorizes(x: ProbabilityProfile, y: ProbabilityProfile, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff x is majorized by y (every descending partial sum of x is
    dominated by the corresponding one of y, with equal totals)."""
    if x.dim != y.dim:
        raise ValueError(f"dim: profiles have lengths {x.dim} and {y.dim}")
    cx = np.cumsum(x.sorted_desc())
    cy = np.cumsum(y.sorted_desc())
    if abs(float(cx[-1] - cy[-1])) > tol.norm_tol:
        return False
    return bool(np.all(cx[:-1] <= cy[:-1] + tol.major_tol))


def compare(x: ProbabilityProfile, y: ProbabilityProfile, tol: ToleranceConfig = DEFAULT_TOL) -> ComparisonResult:
    """Classify the pair under the majorization order.

    ``CONVERTS_TO`` means the x-state reaches the y-state (x majorized by
    y); ``EQUIVALENT`` means the sorted profiles agree entrywise.
    """
    if x.dim != y.dim:
        raise ValueError(f"dim: profiles have lengths {x.dim} and {y.dim}")
    if float(np.abs(x.sorted_desc() - y.sorted_desc()).max()) <= tol.major_tol:
        return ComparisonResult.EQUIVALENT
    if majorizes(x, y, tol):
        return ComparisonResult.CONVERTS_TO
    if majorizes(y, x, tol):
        return ComparisonResult.CONVERTS_FROM
    return ComparisonResult.INCOMPARABLE


def is_doubly_stochastic(a: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the matrix is nonnegative with unit row and column sums."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix: expected a square matrix, got shape {a.shape}")
    if float(a.min()) < -tol.nonneg_tol:
        return False
    rows = np.abs(a.sum(axis=1) - 1.0).max()
    cols = np.abs(a.sum(axis=0) - 1.0).max()
    return bool(max(rows, cols) <= tol.norm_tol)


def _apply_t_raw(transform: TTransform, v: np.ndarray) -> np.ndarray:
    out = v.copy()
    vi, vj = v[transform.i], v[transform.j]
    t = transform.t
    out[transform.i] = t * vi + (1.0 - t) * vj
    out[transform.j] = (1.0 - t) * vi + t * vj
    return out


def apply_t(transform: TTransform, v: ProbabilityProfile, tol: ToleranceConfig = DEFAULT_TOL) -> ProbabilityProfile:
    """Apply one T-transform to a profile."""
    if transform.j >= v.dim:
        raise ValueError(f"indices: j={transform.j} out of range for length {v.dim}")
    return ProbabilityProfile(_apply_t_raw(transform, v.entries), tol)


def t_chain(x: ProbabilityProfile, y: ProbabilityProfile, tol: ToleranceConfig = DEFAULT_TOL) -> List[TTransform]:
    """T-transforms carrying y down to x, for x majorized by y.

    Both profiles must already be sorted in nonincreasing order.  Returns
    at most ``d - 1`` transforms whose left-to-right application maps y to
    x: folding :func:`apply_t` over the result reproduces x.

    Each step picks the largest index j where the working vector still
    exceeds x and the smallest index k > j where it falls short (entries
    within ``major_tol`` count as equal), then moves the feasible amount
    ``min(v[j] - x[j], x[k] - v[k])`` between the two coordinates.  That
    pins one coordinate per step, keeps the working vector sorted, and
    ensures the mixing weight lies in [0, 1].
    """
    if x.dim != y.dim:
        raise ValueError(f"dim: profiles have lengths {x.dim} and {y.dim}")
    for name, p in (("x", x), ("y", y)):
        if np.any(np.diff(p.entries) > tol.major_tol):
            raise ValueError(f"{name}: profile is not sorted in nonincreasing order")
    if not majorizes(x, y, tol):
        raise ValueError("x: not majorized by y")

    target = x.entries.astype(float)
    v = y.entries.astype(float).copy()
    d = x.dim
    indices = np.arange(d)
    chain: List[TTransform] = []
    for _ in range(d):
        over = np.nonzero(v > target + tol.major_tol)[0]
        if over.size == 0:
            break
        j = int(over[-1])
        under = np.nonzero((indices > j) & (v < target - tol.major_tol))[0]
        if under.size == 0:
            raise RuntimeError("t_chain: no receiving coordinate; inconsistent input sums")
        k = int(under[0])
        delta = min(v[j] - target[j], target[k] - v[k])
        t = float(min(max(1.0 - delta / (v[j] - v[k]), 0.0), 1.0))
        step = TTransform(j, k, t)
        chain.append(step)
        v = _apply_t_raw(step, v)
    else:
        raise RuntimeError("t_chain: did not converge within d - 1 steps")
    return chain
