"""majcoh: pure-state coherence transformations under incoherent
operations, decided and constructed via majorization."""

from .absorption import (
    IncoherentTarget,
    absorb_channel,
    cyclic_kraus,
    cyclic_mixing_channel,
    dephasing_channel,
)
from .catalysis import (
    CatalysisQuery,
    catalysis_necessary,
    catalyzes,
    interconvertible_catalytic,
    search_catalyst,
)
from .channels import (
    Channel,
    KrausOperator,
    apply,
    apply_to_pure,
    completeness_residual,
    compose,
    dephase,
    identity_channel,
    is_incoherent,
    unitary_channel,
)
from .majorization import (
    ComparisonResult,
    Permutation,
    TTransform,
    apply_t,
    compare,
    is_doubly_stochastic,
    majorizes,
    sort_desc,
    t_chain,
)
from .measures import (
    MonotoneViolationReport,
    Observable,
    c_l,
    check_monotone_violation,
    skew_information,
    sqrtm_psd,
)
from .states import (
    DensityMatrix,
    ProbabilityProfile,
    PureState,
    fidelity_to_pure,
    profile,
    purity,
    tensor,
)
from .synthesis import (
    NotMajorizedError,
    SynthesisPlan,
    embed_zero_tail,
    normalize_state,
    plan_synthesis,
    synth_dim2,
    synth_t_step,
    synthesize,
)
from .tolerances import DEFAULT_TOL, ToleranceConfig

__version__ = "0.1.0"

__all__ = [
    "CatalysisQuery",
    "Channel",
    "ComparisonResult",
    "DEFAULT_TOL",
    "DensityMatrix",
    "IncoherentTarget",
    "KrausOperator",
    "MonotoneViolationReport",
    "NotMajorizedError",
    "Observable",
    "Permutation",
    "ProbabilityProfile",
    "PureState",
    "SynthesisPlan",
    "TTransform",
    "ToleranceConfig",
    "absorb_channel",
    "apply",
    "apply_t",
    "apply_to_pure",
    "c_l",
    "catalysis_necessary",
    "catalyzes",
    "check_monotone_violation",
    "compare",
    "completeness_residual",
    "compose",
    "cyclic_kraus",
    "cyclic_mixing_channel",
    "dephase",
    "dephasing_channel",
    "embed_zero_tail",
    "fidelity_to_pure",
    "identity_channel",
    "interconvertible_catalytic",
    "is_doubly_stochastic",
    "is_incoherent",
    "majorizes",
    "normalize_state",
    "plan_synthesis",
    "profile",
    "purity",
    "search_catalyst",
    "sort_desc",
    "sqrtm_psd",
    "synth_dim2",
    "synth_t_step",
    "synthesize",
    "t_chain",
    "tensor",
    "unitary_channel",
]
