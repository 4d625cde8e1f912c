"""Exact convergents of multidimensional continued fractions and tiling counts."""
from .core import (
    ConvergentTriple,
    PartialQuotients,
    RationalPair,
    classical_convergents,
    convergents_by_matrix,
    convergents_by_tail_recurrence,
    evaluate_classical_cf,
    evaluate_finite,
    evaluate_nested,
    numerator_by_head_recurrence,
    triple_by_suffix_system,
)
from .errors import (
    InstanceTooLarge,
    InvalidMixedConditions,
    MCFError,
    MixedModeRequired,
    NumericInstability,
    ZeroDenominator,
)
from .identities import (
    IdentityReport,
    check_e_remark,
    check_factorial_identity,
    estimate_limit,
    factorial_mcf,
)
from .jacobi import (
    ExpansionResult,
    ExpansionState,
    PerronState,
    jacobi_expand,
    jacobi_expand_float,
    perron_convergents,
    perron_expand,
)
from .tiling import (
    HeightConditions,
    Placement,
    Tiling,
    count_B,
    count_C,
    count_circular,
    count_degree_m,
    count_fast,
    count_mixed,
    enumerate_circular,
    enumerate_degree_m,
    enumerate_mixed,
    enumerate_plain,
    enumerate_prefixed,
)

__version__ = "0.1.0"
