"""Zero-divisor cup-length bounds for the higher topological complexity
of real projective spaces, with brute-force oracles to keep the closed
formulas honest."""

from .binexp import (
    EMPTY_MULTISET,
    TwoPowerMultiset,
    lg,
    nu,
    odd_binom,
    p_mask,
    s_prime_set,
    s_set,
    z_i,
    z_mask,
)
from .bounds import BoundReport, deficit, g_closed, h_recursive, m_recursive, z_recursive, zcl
from .oracle import (
    DEFAULT_LIMITS,
    OracleLimits,
    OracleRangeError,
    hti_oracle,
    m_oracle,
    min_excess,
    phi,
    zcl_knapsack_oracle,
    zcl_poly_oracle,
)
from .stability import (
    SharpnessThreshold,
    StabilityReport,
    kprop_check,
    lprop_bound,
    s_formula,
    s_scan,
    sharp_threshold,
    z3_characterization,
    zcl_three_pow,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DEFAULT_LIMITS",
    "EMPTY_MULTISET",
    "OracleLimits",
    "OracleRangeError",
    "SharpnessThreshold",
    "StabilityReport",
    "TwoPowerMultiset",
    "deficit",
    "g_closed",
    "h_recursive",
    "hti_oracle",
    "kprop_check",
    "lg",
    "lprop_bound",
    "m_oracle",
    "m_recursive",
    "min_excess",
    "nu",
    "odd_binom",
    "p_mask",
    "phi",
    "s_formula",
    "s_prime_set",
    "s_scan",
    "s_set",
    "sharp_threshold",
    "z3_characterization",
    "z_i",
    "z_mask",
    "z_recursive",
    "zcl",
    "zcl_knapsack_oracle",
    "zcl_poly_oracle",
    "zcl_three_pow",
]
