"""Quantum channels as finite Kraus-operator lists, and the channel algebra.

A Kraus operator is a plain complex ``dim_out x dim_in`` ndarray; the
structural constraints (nonempty list, consistent shapes, completeness
``sum K^H K = I``) live on :class:`Channel`.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np

from .states import DensityMatrix, _frozen
from .tolerances import DEFAULT_TOL, ToleranceConfig

KrausOperator = np.ndarray


def _as_kraus_list(kraus: Union["Channel", Iterable[np.ndarray]]) -> Sequence[np.ndarray]:
    if isinstance(kraus, Channel):
        return kraus.kraus
    return [np.asarray(k, dtype=complex) for k in kraus]


def completeness_residual(kraus: Union["Channel", Iterable[np.ndarray]]) -> float:
    """Max-abs deviation of ``sum K^H K`` from the identity."""
    ops = _as_kraus_list(kraus)
    dim_in = ops[0].shape[1]
    total = sum(k.conj().T @ k for k in ops)
    return float(np.abs(total - np.eye(dim_in)).max())


class Channel:
    """Trace-preserving quantum operation given by its Kraus operators."""

    __slots__ = ("kraus", "dim_in", "dim_out")

    def __init__(self, kraus: Iterable[np.ndarray], tol: ToleranceConfig = DEFAULT_TOL):
        ops = [np.array(k, dtype=complex) for k in kraus]
        if not ops:
            raise ValueError("kraus: need at least one Kraus operator")
        shape = ops[0].shape
        if len(shape) != 2:
            raise ValueError(f"kraus: operators must be matrices, got shape {shape}")
        if any(k.shape != shape for k in ops):
            raise ValueError("kraus: operators have inconsistent shapes")
        residual = completeness_residual(ops)
        if residual > tol.complete_tol:
            raise ValueError(f"kraus: completeness residual {residual:.3e} exceeds tolerance")
        self.kraus = tuple(_frozen(k) for k in ops)
        self.dim_out, self.dim_in = (int(shape[0]), int(shape[1]))

    def __len__(self) -> int:
        return len(self.kraus)

    def __repr__(self) -> str:
        return f"Channel({len(self.kraus)} Kraus, {self.dim_in} -> {self.dim_out})"


def identity_channel(dim: int) -> Channel:
    """The channel with the single Kraus operator I."""
    return Channel([np.eye(dim, dtype=complex)])


def unitary_channel(u: np.ndarray, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """The channel with the single Kraus operator ``u`` (must be unitary)."""
    return Channel([u], tol)


def apply(ch: Channel, rho: DensityMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> DensityMatrix:
    """Apply the channel: ``sum_n K_n rho K_n^H``."""
    if ch.dim_in != rho.dim:
        raise ValueError(f"dim: channel expects dim {ch.dim_in}, state has dim {rho.dim}")
    out = sum(k @ rho.matrix @ k.conj().T for k in ch.kraus)
    return DensityMatrix(out, tol)


def apply_to_pure(ch: Channel, s, tol: ToleranceConfig = DEFAULT_TOL) -> DensityMatrix:
    """Apply the channel to the projector of a pure state."""
    return apply(ch, DensityMatrix.from_pure(s, tol), tol)


def is_incoherent(ch: Union[Channel, Iterable[np.ndarray]], tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    """True iff every column of every Kraus operator has at most one
    entry of modulus above ``nonneg_tol``.

    Such channels map diagonal density matrices to diagonal ones, Kraus
    operator by Kraus operator.
    """
    for k in _as_kraus_list(ch):
        if ((np.abs(k) > tol.nonneg_tol).sum(axis=0) > 1).any():
            return False
    return True


def dephase(rho: DensityMatrix, tol: ToleranceConfig = DEFAULT_TOL) -> DensityMatrix:
    """Zero all off-diagonal entries, keeping the diagonal exactly."""
    return DensityMatrix(np.diag(np.diag(rho.matrix)), tol)


def compose(first: Channel, second: Channel, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """The channel acting as ``second`` after ``first``.

    The Kraus set is all products ``L_m K_n``; operators with every entry
    below ``nonneg_tol`` are pruned (they cannot occur in a complete
    channel unless their weight is exactly zero).
    """
    if second.dim_in != first.dim_out:
        raise ValueError(
            f"dim: cannot chain {first.dim_out}-dim output into {second.dim_in}-dim input"
        )
    products = [l @ k for l in second.kraus for k in first.kraus]
    kept = [p for p in products if np.abs(p).max() > tol.nonneg_tol]
    return Channel(kept or products, tol)
