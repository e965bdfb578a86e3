"""Pure states, probability profiles, and density matrices.

All values are validated at construction and immutable afterwards, so they
are safe to share across threads.  Construction rejects invalid input
instead of repairing it; the only silent adjustment is clamping profile
entries within ``nonneg_tol`` of zero up to zero.
"""

from __future__ import annotations

import numpy as np

from .tolerances import DEFAULT_TOL, ToleranceConfig


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class PureState:
    """Unit-norm complex amplitude vector in the fixed incoherent basis."""

    __slots__ = ("amplitudes", "dim")

    def __init__(self, amplitudes, tol: ToleranceConfig = DEFAULT_TOL):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        if amps.size < 1:
            raise ValueError("amplitudes: need at least one amplitude")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > tol.norm_tol:
            raise ValueError(f"amplitudes: not normalized, |norm - 1| = {abs(norm - 1.0):.3e}")
        self.amplitudes = _frozen(amps)
        self.dim = int(amps.size)

    @classmethod
    def basis(cls, dim: int, index: int) -> "PureState":
        """The incoherent basis state with a single unit amplitude."""
        amps = np.zeros(dim, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @classmethod
    def uniform(cls, dim: int) -> "PureState":
        """The maximally coherent state with equal amplitudes 1/sqrt(dim)."""
        return cls(np.full(dim, 1.0 / np.sqrt(dim), dtype=complex))

    @classmethod
    def from_profile(cls, p: "ProbabilityProfile", tol: ToleranceConfig = DEFAULT_TOL) -> "PureState":
        """The real nonnegative state whose squared amplitudes equal ``p``."""
        return cls(np.sqrt(p.entries).astype(complex), tol)

    def __repr__(self) -> str:
        return f"PureState(dim={self.dim}, amplitudes={self.amplitudes.tolist()})"


class ProbabilityProfile:
    """Nonnegative real vector summing to one; the majorization carrier."""

    __slots__ = ("entries", "dim")

    def __init__(self, entries, tol: ToleranceConfig = DEFAULT_TOL):
        p = np.array(entries, dtype=float).reshape(-1)
        if p.size < 1:
            raise ValueError("entries: need at least one entry")
        if float(p.min()) < -tol.nonneg_tol:
            raise ValueError(f"entries: negative entry {float(p.min()):.3e}")
        np.clip(p, 0.0, None, out=p)
        total = float(p.sum())
        if abs(total - 1.0) > tol.norm_tol:
            raise ValueError(f"entries: sum to {total!r}, not 1")
        self.entries = _frozen(p)
        self.dim = int(p.size)

    def sorted_desc(self) -> np.ndarray:
        """Entries rearranged in nonincreasing order (plain array)."""
        return np.sort(self.entries)[::-1]

    def __repr__(self) -> str:
        return f"ProbabilityProfile({self.entries.tolist()})"


class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite complex matrix."""

    __slots__ = ("matrix", "dim")

    def __init__(self, matrix, tol: ToleranceConfig = DEFAULT_TOL):
        m = np.array(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise ValueError(f"matrix: expected a square matrix, got shape {m.shape}")
        herm = float(np.abs(m - m.conj().T).max())
        if herm > tol.herm_tol:
            raise ValueError(f"matrix: not Hermitian, max |m - m^H| = {herm:.3e}")
        trace = complex(np.trace(m))
        if abs(trace - 1.0) > tol.norm_tol:
            raise ValueError(f"matrix: trace is {trace!r}, not 1")
        lo = float(np.linalg.eigvalsh(m).min())
        if lo < -tol.psd_tol:
            raise ValueError(f"matrix: negative eigenvalue {lo:.3e}")
        self.matrix = _frozen(m)
        self.dim = int(m.shape[0])

    @classmethod
    def from_pure(cls, s: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> "DensityMatrix":
        """The rank-one projector |s><s|."""
        return cls(np.outer(s.amplitudes, s.amplitudes.conj()), tol)

    def diagonal(self) -> np.ndarray:
        """Real diagonal of the matrix."""
        return np.real(np.diag(self.matrix))

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


def profile(s: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> ProbabilityProfile:
    """Squared-modulus profile of a pure state."""
    return ProbabilityProfile(np.abs(s.amplitudes) ** 2, tol)


def tensor(a: PureState, b: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> PureState:
    """Tensor product, row-major with the first factor slow-varying.

    The amplitude at composite index ``i * b.dim + j`` is ``a_i * b_j``, so
    the profile of the product is the flattened outer product of the two
    profiles.
    """
    return PureState(np.kron(a.amplitudes, b.amplitudes), tol)


def fidelity_to_pure(rho: DensityMatrix, s: PureState) -> float:
    """Overlap <s| rho |s> of a density matrix with a pure state."""
    if rho.dim != s.dim:
        raise ValueError(f"dim: density matrix has dim {rho.dim}, state has dim {s.dim}")
    return float(np.real(s.amplitudes.conj() @ rho.matrix @ s.amplitudes))


def purity(rho: DensityMatrix) -> float:
    """tr(rho^2); equals 1 exactly for pure states."""
    return float(np.real(np.trace(rho.matrix @ rho.matrix)))
