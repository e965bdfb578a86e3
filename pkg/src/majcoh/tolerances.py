"""Named numerical tolerances shared by every comparison in the package.

All constructions here are exact in exact arithmetic; the tolerances only
absorb floating-point error, so the defaults are tight.
"""

from __future__ import annotations

import dataclasses


@dataclasses.dataclass(frozen=True)
class ToleranceConfig:
    """Tolerances used by validation and comparison routines.

    Attributes
    ----------
    norm_tol : allowed deviation of norms / sums from 1.
    herm_tol : allowed deviation from Hermitian symmetry.
    psd_tol : allowed negativity of eigenvalues.
    complete_tol : allowed residual of the Kraus completeness sum.
    major_tol : slack in majorization partial-sum comparisons.
    purity_tol : allowed deviation of purity / fidelity from 1.
    nonneg_tol : threshold below which a magnitude counts as zero.
    """

    norm_tol: float = 1e-10
    herm_tol: float = 1e-10
    psd_tol: float = 1e-9
    complete_tol: float = 1e-9
    major_tol: float = 1e-10
    purity_tol: float = 1e-10
    nonneg_tol: float = 1e-12

    def __post_init__(self) -> None:
        for field in dataclasses.fields(self):
            value = getattr(self, field.name)
            if not (isinstance(value, (int, float)) and value > 0):
                raise ValueError(f"{field.name} must be strictly positive, got {value!r}")

    def replace(self, **overrides: float) -> "ToleranceConfig":
        """Return a copy with the given fields overridden."""
        return dataclasses.replace(self, **overrides)


DEFAULT_TOL = ToleranceConfig()
