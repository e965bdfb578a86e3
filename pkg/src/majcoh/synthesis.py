"""Explicit construction of incoherent channels carrying one pure state to
another whenever the source profile is majorized by the target profile.

The pipeline: rotate both states to sorted nonnegative form with monomial
unitaries, strip the common zero tail, walk a T-transform chain between
the sorted profiles emitting a two-Kraus channel per step, pad each step
back to full dimension, compose, and undo the rotations.
"""

from __future__ import annotations

import dataclasses
from typing import List, Tuple

import numpy as np

from .channels import Channel, compose, identity_channel
from .majorization import TTransform, _apply_t_raw, majorizes, t_chain
from .states import ProbabilityProfile, PureState, profile
from .tolerances import DEFAULT_TOL, ToleranceConfig


class NotMajorizedError(ValueError):
    """Raised when the requested transformation is forbidden by majorization."""


@dataclasses.dataclass(frozen=True)
class SynthesisPlan:
    """A synthesized transformation, kept in factored form.

    ``pre_unitary`` is applied first, then ``steps`` in list order, then
    ``post_unitary``.  Composing all parts yields a complete incoherent
    channel; :meth:`to_channel` does exactly that.
    """

    pre_unitary: np.ndarray
    steps: Tuple[Channel, ...]
    post_unitary: np.ndarray
    chain: Tuple[TTransform, ...]

    def to_channel(self, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
        dim = self.pre_unitary.shape[0]
        total = identity_channel(dim)
        for step in self.steps:
            total = compose(total, step, tol)
        kraus = [self.post_unitary @ k @ self.pre_unitary for k in total.kraus]
        return Channel(kraus, tol)


def _real_nonneg_amplitudes(s: PureState, name: str, tol: ToleranceConfig) -> np.ndarray:
    amps = s.amplitudes
    if float(np.abs(amps.imag).max()) > tol.nonneg_tol:
        raise ValueError(f"{name}: amplitudes must be real")
    real = amps.real.astype(float)
    if float(real.min()) < -tol.nonneg_tol:
        raise ValueError(f"{name}: amplitudes must be nonnegative")
    return np.clip(real, 0.0, None)


def _real_sorted_amplitudes(s: PureState, name: str, tol: ToleranceConfig) -> np.ndarray:
    real = _real_nonneg_amplitudes(s, name, tol)
    if np.any(np.diff(real) > tol.major_tol):
        raise ValueError(f"{name}: amplitudes must be sorted in nonincreasing order")
    return real


def normalize_state(s: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> Tuple[np.ndarray, PureState]:
    """Monomial unitary turning ``s`` into sorted nonnegative form.

    Returns ``(u, sorted_state)`` where ``u`` is a permutation times a
    diagonal phase matrix (one nonzero per row and column, so incoherent
    in both directions) and ``u @ s.amplitudes`` equals the real,
    nonnegative, nonincreasing amplitudes of ``sorted_state``.
    """
    moduli = np.abs(s.amplitudes)
    phases = np.angle(s.amplitudes)
    order = np.argsort(-moduli, kind="stable")
    u = np.eye(s.dim, dtype=complex)[order] @ np.diag(np.exp(-1j * phases))
    return u, PureState(moduli[order].astype(complex), tol)


def synth_dim2(psi: PureState, phi: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """Two-dimensional base construction.

    Both states must be sorted nonnegative with the psi profile majorized
    by the phi profile.  Solves ``psi_1^2 = a phi_1^2 + (1-a) phi_2^2``
    and returns the two-Kraus channel built from the amplitude ratios; the
    branch with zero weight is dropped.
    """
    if psi.dim != 2 or phi.dim != 2:
        raise ValueError(f"dim: expected dimension 2, got {psi.dim} and {phi.dim}")
    p = _real_sorted_amplitudes(psi, "psi", tol)
    f = _real_sorted_amplitudes(phi, "phi", tol)
    if not majorizes(profile(psi, tol), profile(phi, tol), tol):
        raise NotMajorizedError("psi: profile not majorized by phi profile")
    if p[1] ** 2 <= tol.nonneg_tol:
        # Majorization forces phi = psi = first basis state.
        return identity_channel(2)
    spread = f[0] ** 2 - f[1] ** 2
    if spread <= tol.nonneg_tol:
        # Uniform target is majorization-minimal, so psi = phi already.
        a = 1.0
    else:
        a = min(max((p[0] ** 2 - f[1] ** 2) / spread, 0.0), 1.0)
    k1 = np.sqrt(a) * np.diag([f[0] / p[0], f[1] / p[1]]).astype(complex)
    k2 = np.sqrt(1.0 - a) * np.array([[0.0, f[0] / p[1]], [f[1] / p[0], 0.0]], dtype=complex)
    kraus = [k for k in (k1, k2) if np.abs(k).max() > tol.nonneg_tol]
    return Channel(kraus, tol)


def synth_t_step(psi: PureState, phi: PureState, transform: TTransform,
                 tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """Two-Kraus channel undoing one T-transform on the profiles.

    Requires real nonnegative states with every psi amplitude strictly
    positive and ``profile(psi) = apply_t(transform, profile(phi))``.  The
    first Kraus operator is ``sqrt(t) diag(phi_k / psi_k)``; the second is
    the same diagonal with the (i, j) ratios crossed, times the (i, j)
    transposition.
    """
    if psi.dim != phi.dim:
        raise ValueError(f"dim: states have dims {psi.dim} and {phi.dim}")
    if transform.j >= psi.dim:
        raise ValueError(f"indices: j={transform.j} out of range for dim {psi.dim}")
    p = _real_nonneg_amplitudes(psi, "psi", tol)
    f = _real_nonneg_amplitudes(phi, "phi", tol)
    if float((p ** 2).min()) <= tol.nonneg_tol:
        raise ValueError("psi: zero amplitude; strip the zero tail first")
    expected = _apply_t_raw(transform, f ** 2)
    mismatch = float(np.abs(p ** 2 - expected).max())
    if mismatch > tol.complete_tol:
        raise ValueError(f"psi: profile differs from transformed phi profile by {mismatch:.3e}")

    i, j, t = transform.i, transform.j, transform.t
    ratios = f / p
    k1 = np.sqrt(t) * np.diag(ratios).astype(complex)
    crossed = np.diag(ratios).astype(complex)
    crossed[i, i] = crossed[j, j] = 0.0
    crossed[i, j] = f[i] / p[j]
    crossed[j, i] = f[j] / p[i]
    k2 = np.sqrt(1.0 - t) * crossed
    kraus = [k for k in (k1, k2) if np.abs(k).max() > tol.nonneg_tol]
    return Channel(kraus, tol)


def embed_zero_tail(inner: Channel, d: int, n: int | None = None,
                    tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """Pad a k-dimensional channel to dimension d with ``(1/sqrt(N)) I``
    blocks, N being the number of Kraus operators.

    The padded channel agrees with ``inner`` on states supported on the
    first k coordinates and stays complete and incoherent.
    """
    k = inner.dim_in
    if inner.dim_out != k:
        raise ValueError(f"dim: inner channel must be square, got {inner.dim_in} -> {inner.dim_out}")
    if k >= d:
        raise ValueError(f"dim: inner dimension {k} must be below target dimension {d}")
    if n is None:
        n = len(inner.kraus)
    elif n != len(inner.kraus):
        raise ValueError(f"n: channel has {len(inner.kraus)} Kraus operators, not {n}")
    ops = []
    for kr in inner.kraus:
        out = np.zeros((d, d), dtype=complex)
        out[:k, :k] = kr
        out[k:, k:] = np.eye(d - k) / np.sqrt(n)
        ops.append(out)
    return Channel(ops, tol)


def _truncated_state(entries: np.ndarray, k: int, tol: ToleranceConfig) -> PureState:
    amps = np.sqrt(np.clip(entries[:k], 0.0, None))
    return PureState((amps / np.linalg.norm(amps)).astype(complex), tol)


def plan_synthesis(psi: PureState, phi: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> SynthesisPlan:
    """Factored synthesis of an incoherent channel mapping psi to phi.

    Raises :class:`NotMajorizedError` when the psi profile is not
    majorized by the phi profile.
    """
    if psi.dim != phi.dim:
        raise ValueError(f"dim: states have dims {psi.dim} and {phi.dim}")
    d = psi.dim
    u, psi_sorted = normalize_state(psi, tol)
    v, phi_sorted = normalize_state(phi, tol)
    x = profile(psi_sorted, tol)
    y = profile(phi_sorted, tol)
    if not majorizes(x, y, tol):
        raise NotMajorizedError("psi: profile not majorized by phi profile")

    # Common zero tail: where the sorted psi profile vanishes, majorization
    # forces the phi profile to vanish as well.
    k = int(np.sum(x.entries > tol.nonneg_tol))
    x_act = ProbabilityProfile(x.entries[:k] / x.entries[:k].sum(), tol)
    y_act = ProbabilityProfile(y.entries[:k] / y.entries[:k].sum(), tol)

    chain = t_chain(x_act, y_act, tol)
    profiles = [y_act.entries.astype(float)]
    for step in chain:
        profiles.append(_apply_t_raw(step, profiles[-1]))

    # Channels run backwards along the chain: the step built from
    # transform l maps the state of profiles[l] to the state of
    # profiles[l-1].  Zeros inherited from the target profile always form
    # a tail of the working vector, so each step acts on a leading block
    # and is padded back to full dimension.
    steps: List[Channel] = []
    for l in range(len(chain), 0, -1):
        p_step = profiles[l]
        f_step = profiles[l - 1]
        active = int(np.sum(p_step > tol.nonneg_tol))
        if active < d:
            inner = synth_t_step(
                _truncated_state(p_step, active, tol),
                _truncated_state(f_step, active, tol),
                chain[l - 1],
                tol,
            )
            steps.append(embed_zero_tail(inner, d, tol=tol))
        else:
            steps.append(
                synth_t_step(
                    PureState.from_profile(ProbabilityProfile(p_step, tol), tol),
                    PureState.from_profile(ProbabilityProfile(f_step, tol), tol),
                    chain[l - 1],
                    tol,
                )
            )
    return SynthesisPlan(u, tuple(steps), v.conj().T, tuple(chain))


def synthesize(psi: PureState, phi: PureState, tol: ToleranceConfig = DEFAULT_TOL) -> Channel:
    """Incoherent channel with ``apply(ch, |psi><psi|) = |phi><phi|``.

    Exists exactly when the psi profile is majorized by the phi profile;
    otherwise :class:`NotMajorizedError` is raised.
    """
    return plan_synthesis(psi, phi, tol).to_channel(tol)
