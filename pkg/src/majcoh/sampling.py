"""Random generators for states, profiles, and incoherent channels.

These back the property-test suites: majorized pairs come from pushing
random target profiles through random doubly stochastic matrices, and
random incoherent channels are built column by column, projecting each
column's Kraus-weight vector onto the completeness constraints set by the
columns drawn before it.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .channels import Channel
from .states import DensityMatrix, ProbabilityProfile, PureState
from .tolerances import DEFAULT_TOL, ToleranceConfig


def random_state(dim: int, rng: np.random.Generator) -> PureState:
    """Haar-style random pure state from a normalized complex Gaussian."""
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return PureState(z / np.linalg.norm(z))


def random_profile(dim: int, rng: np.random.Generator) -> ProbabilityProfile:
    """Uniform draw from the probability simplex."""
    return ProbabilityProfile(rng.dirichlet(np.ones(dim)))


def random_density_matrix(dim: int, rng: np.random.Generator) -> DensityMatrix:
    """Random full-rank mixed state from a Ginibre matrix."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return DensityMatrix(rho / np.trace(rho))


def random_doubly_stochastic(dim: int, rng: np.random.Generator, terms: int = 6) -> np.ndarray:
    """Convex combination of random permutation matrices."""
    weights = rng.dirichlet(np.ones(terms))
    a = np.zeros((dim, dim))
    for w in weights:
        a += w * np.eye(dim)[rng.permutation(dim)]
    return a


def random_majorized_pair(dim: int, rng: np.random.Generator) -> Tuple[ProbabilityProfile, ProbabilityProfile]:
    """A pair (x, y) with x majorized by y.

    y is a random profile and x is a random doubly stochastic matrix
    applied to it.
    """
    y = random_profile(dim, rng)
    x = ProbabilityProfile(random_doubly_stochastic(dim, rng) @ y.entries)
    return x, y


def random_monomial_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Random permutation times diagonal phases; incoherent both ways."""
    phases = np.exp(2j * np.pi * rng.random(dim))
    return np.eye(dim, dtype=complex)[rng.permutation(dim)] @ np.diag(phases)


def random_incoherent_channel(dim: int, rng: np.random.Generator, n_kraus: int | None = None,
                              tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """Random complete channel whose Kraus operators each carry at most
    one nonzero entry per column.

    Every column j picks a random target row in each Kraus operator;
    completeness couples two columns only through Kraus operators where
    their target rows collide, so the weight vector of column j is a
    random unit vector orthogonal to the masked weight vectors of all
    earlier columns.  ``n_kraus`` defaults to ``dim + 2`` so that the
    orthogonality constraints always leave room.
    """
    n = n_kraus if n_kraus is not None else dim + 2
    if n <= dim:
        raise ValueError(f"n_kraus: need more than dim={dim} operators, got {n}")
    for _ in range(100):
        rows = rng.integers(0, dim, size=(dim, n))
        weights = np.zeros((dim, n), dtype=complex)
        feasible = True
        for j in range(dim):
            constraints = []
            for jp in range(j):
                mask = rows[j] == rows[jp]
                if mask.any():
                    constraints.append(mask * weights[jp])
            g = rng.normal(size=n) + 1j * rng.normal(size=n)
            if constraints:
                q, _ = np.linalg.qr(np.stack(constraints, axis=1))
                g = g - q @ (q.conj().T @ g)
            norm = float(np.linalg.norm(g))
            if norm < 1e-8:
                feasible = False
                break
            weights[j] = g / norm
        if feasible:
            break
    else:
        raise RuntimeError("random_incoherent_channel: no feasible draw found")

    kraus = []
    for m in range(n):
        op = np.zeros((dim, dim), dtype=complex)
        for j in range(dim):
            op[rows[j, m], j] += weights[j, m]
        if np.abs(op).max() > tol.nonneg_tol:
            kraus.append(op)
    return Channel(kraus, tol)
