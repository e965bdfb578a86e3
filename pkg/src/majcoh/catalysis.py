"""Coherent-catalyst checks and grid search.

A catalyst profile c turns a forbidden transition x -> y into an allowed
one when the flattened product profile x (x) c is majorized by y (x) c.
Catalysis depends only on the sorted catalyst, so the search enumerates
nonincreasing grid vectors only.
"""

from __future__ import annotations

import dataclasses
from typing import Iterator, Optional, Tuple

import numpy as np

from .majorization import majorizes
from .states import ProbabilityProfile
from .tolerances import DEFAULT_TOL, ToleranceConfig


@dataclasses.dataclass(frozen=True)
class CatalysisQuery:
    """A catalyst search problem.

    ``grid_step`` must divide 1 evenly; candidates are nonincreasing
    probability vectors of length ``catalyst_dim`` on that lattice.
    """

    source: ProbabilityProfile
    target: ProbabilityProfile
    catalyst_dim: int
    grid_step: float

    def __post_init__(self) -> None:
        if self.source.dim != self.target.dim:
            raise ValueError(
                f"dim: source has length {self.source.dim}, target {self.target.dim}"
            )
        if self.catalyst_dim < 1:
            raise ValueError(f"catalyst_dim: must be positive, got {self.catalyst_dim}")
        if not (0.0 < self.grid_step < 1.0):
            raise ValueError(f"grid_step: must lie in (0, 1), got {self.grid_step}")
        units = round(1.0 / self.grid_step)
        if units < 1 or abs(units * self.grid_step - 1.0) > 1e-9:
            raise ValueError(f"grid_step: {self.grid_step} does not divide 1 evenly")

    @property
    def grid_units(self) -> int:
        return round(1.0 / self.grid_step)


def _product_profile(x: ProbabilityProfile, c: ProbabilityProfile) -> ProbabilityProfile:
    return ProbabilityProfile(np.outer(x.entries, c.entries).ravel())


def catalyzes(x: ProbabilityProfile, y: ProbabilityProfile, c: ProbabilityProfile,
              tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the composite x (x) c is majorized by y (x) c."""
    if x.dim != y.dim:
        raise ValueError(f"dim: profiles have lengths {x.dim} and {y.dim}")
    return majorizes(_product_profile(x, c), _product_profile(y, c), tol)


def _sorted_grid_vectors(total: int, parts: int, cap: int) -> Iterator[Tuple[int, ...]]:
    # Nonincreasing integer vectors summing to `total`, lexicographically
    # ascending, so the most uniform candidates come first.
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    first_min = -(-total // parts)
    for first in range(first_min, min(cap, total) + 1):
        for rest in _sorted_grid_vectors(total - first, parts - 1, first):
            yield (first,) + rest


def search_catalyst(q: CatalysisQuery, tol: ToleranceConfig = DEFAULT_TOL) -> Optional[ProbabilityProfile]:
    """Exhaustive grid search for a catalyst.

    Scans sorted probability vectors of length ``catalyst_dim`` on the
    ``grid_step`` lattice in lexicographically ascending order and returns
    the first one that catalyzes the transition, or None.  A None result
    certifies nonexistence only when :func:`catalysis_necessary` fails;
    otherwise a finer grid or larger dimension may still succeed.
    """
    if not catalysis_necessary(q.source, q.target, tol):
        return None
    units = q.grid_units
    for cells in _sorted_grid_vectors(units, q.catalyst_dim, units):
        c = ProbabilityProfile(np.asarray(cells, dtype=float) / units, tol)
        if catalyzes(q.source, q.target, c, tol):
            return c
    return None


def catalysis_necessary(x: ProbabilityProfile, y: ProbabilityProfile,
                        tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """Endpoint condition every catalyzed transition must satisfy.

    Requires the largest entry of x not to exceed that of y and the
    smallest entry of x not to fall below that of y (both after sorting).
    A False return proves no catalyst of any dimension exists: the extreme
    partial sums of the product profiles are pinned by these entries.
    """
    if x.dim != y.dim:
        raise ValueError(f"dim: profiles have lengths {x.dim} and {y.dim}")
    xs = x.sorted_desc()
    ys = y.sorted_desc()
    return bool(xs[0] <= ys[0] + tol.major_tol and xs[-1] >= ys[-1] - tol.major_tol)


def interconvertible_catalytic(x: ProbabilityProfile, y: ProbabilityProfile,
                               tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff the two profiles agree up to permutation.

    Two-way catalytic convertibility holds exactly in this case.
    """
    if x.dim != y.dim:
        raise ValueError(f"dim: profiles have lengths {x.dim} and {y.dim}")
    return bool(float(np.abs(x.sorted_desc() - y.sorted_desc()).max()) <= tol.major_tol)
