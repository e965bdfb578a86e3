"""Absorption into a prescribed incoherent state: an explicit incoherent
channel mapping every input state to the same diagonal target.

The channel first dephases, then scrambles the diagonal with a cyclic
family of monomial Kraus operators whose weights are the target
eigenvalues; the cyclic averaging makes the output independent of the
input diagonal.
"""

from __future__ import annotations

import dataclasses
from typing import List

import numpy as np

from .channels import Channel
from .states import DensityMatrix, ProbabilityProfile
from .tolerances import DEFAULT_TOL, ToleranceConfig


@dataclasses.dataclass(frozen=True)
class IncoherentTarget:
    """Diagonal target state, carried as its eigenvalue profile."""

    mu: ProbabilityProfile

    @classmethod
    def from_density_matrix(cls, rho: DensityMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> "IncoherentTarget":
        """Extract the profile of a diagonal density matrix.

        Rejects matrices with off-diagonal weight above ``herm_tol``.
        """
        off = rho.matrix - np.diag(np.diag(rho.matrix))
        worst = float(np.abs(off).max())
        if worst > tol.herm_tol:
            raise ValueError(f"matrix: not diagonal, max off-diagonal modulus {worst:.3e}")
        return cls(ProbabilityProfile(rho.diagonal(), tol))

    @property
    def dim(self) -> int:
        return self.mu.dim


def cyclic_kraus(mu: ProbabilityProfile) -> List[np.ndarray]:
    """The d cyclic monomial operators built from the target profile.

    Operator i (0-based) has entry ``sqrt(mu[(s + i) % d])`` at row s,
    column ``(s + i) % d``; together they satisfy ``sum_i A_i A_i^H = I``.
    """
    d = mu.dim
    ops = []
    for i in range(d):
        a = np.zeros((d, d), dtype=complex)
        for s in range(d):
            c = (s + i) % d
            a[s, c] = np.sqrt(mu.entries[c])
        ops.append(a)
    return ops


def dephasing_channel(d: int) -> Channel:
    """The channel with Kraus operators |i><i|; keeps only the diagonal."""
    eye = np.eye(d, dtype=complex)
    return Channel([np.outer(eye[i], eye[i]) for i in range(d)])


def cyclic_mixing_channel(mu: ProbabilityProfile, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """The channel with Kraus operators ``A_i^H``.

    On diagonal inputs it acts as the circulant mixture of the input
    diagonal with weights ``mu``; completeness follows from
    ``sum_i A_i A_i^H = I``.
    """
    return Channel([a.conj().T for a in cyclic_kraus(mu)], tol)


def absorb_channel(target: IncoherentTarget, d: int, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """Incoherent channel sending every d-dimensional state to diag(mu).

    The Kraus set is all products ``A_i^H |j><j|`` of the dephasing and
    cyclic-mixing stages.
    """
    if target.dim != d:
        raise ValueError(f"dim: target has length {target.dim}, expected {d}")
    ops = []
    for a in cyclic_kraus(target.mu):
        ah = a.conj().T
        for j in range(d):
            op = np.zeros((d, d), dtype=complex)
            op[:, j] = ah[:, j]
            ops.append(op)
    return Channel(ops, tol)
