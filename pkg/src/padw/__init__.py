"""The p-adic Lambert W function over Q_p with exact, precision-tracked arithmetic."""

from .core import (
    DEFAULT_PRECISION,
    INFINITY,
    PadicNumber,
    add,
    check_prime,
    digit_sum,
    digits_of,
    div,
    format_padic,
    from_fraction,
    from_rational,
    mul,
    neg,
    ord_factorial,
    ord_int,
    ord_rational,
    parse_padic,
    parse_rational,
    valuation,
)
from .errors import (
    AmbiguousZero,
    DivergentInput,
    DivergentRadius,
    DivisionByZero,
    InvalidWitness,
    NoConvergence,
    PadicError,
    ParseError,
    PrecisionExhausted,
    PrimeError,
)
from .series import (
    EXP,
    LAMBERT_W,
    LOG,
    CoefficientRule,
    ConvergenceThreshold,
    boundary_divergence_scan,
    eval_series,
    exp_p,
    lambert_w_newton,
    lambert_w_series,
    log_p,
    truncation_index,
    verify_defining_identity,
    w_coefficient,
    w_term_lower_bound,
    w_term_valuation,
)
from .analysis import (
    cr_bracket,
    cr_difference_valuation,
    cr_observations,
    cr_witness_report,
    critical_radius_scan,
    digit_sum_p_nu_identity,
    growth_modulus,
    p_nu,
    rescaled_coefficient_valuation,
)

__version__ = "0.1.0"
