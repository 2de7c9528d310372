"""Exact computation and cross-verification of the Runyon polynomial family.

The family g_0, g_1, g_2, ... lives in Q(x, alpha, beta) and is pinned down
by g_0 = 1 together with

    (x - alpha) (alpha - beta)^(n-1) g_n(x)
        = alpha (x - beta)^n g_{n-1}(alpha)
          - x (alpha - beta)^n g_{n-1}(x).

Everything here is exact: coefficients are ``fractions.Fraction``, symbols
are handled by a small multivariate polynomial kernel, and power series are
truncated but never rounded.  The same objects are built by several
independent routes (the recurrence, two coefficient formulas, a closed
generating function, Lagrange inversion) so each construction can be checked
against the others; the ``verify`` module packages those checks as suites
and the ``runyon`` command line exposes them.
"""

from .exactalg import (
    BasisOverflow,
    DenominatorVanishes,
    DivisionNotExact,
    ExactAlgError,
    MultiPoly,
    PointAssignment,
    RatFunc,
    eval_at_point,
    exact_div,
    from_w_basis,
    to_w_basis,
)
from .series import (
    DEFAULT_NUMERIC_ORDER,
    DEFAULT_SYMBOLIC_ORDER,
    BadRootHint,
    CoefficientRing,
    NonzeroInnerConstant,
    NotInvertibleConstantTerm,
    PoleAtOrigin,
    SeriesError,
    SeriesFraction,
    TruncSeries,
    ValuationMismatch,
    VariableMismatch,
    horner_eval,
    lagrange_coeff,
    poly_ring,
    ratfunc_ring,
    rational_ring,
    series_compose,
    series_inverse,
    series_pow,
    series_revert,
    series_sqrt,
    solve_functional,
)
from .polys import (
    ALPHA,
    BETA,
    W,
    X,
    GPoly,
    G_closed,
    G_from_recurrence,
    IndexOutOfRange,
    T_forward,
    c_direct,
    c_translated,
    c_translated_lowered,
    carlitz_A,
    catalan_number,
    choose,
    g_alpha_closed,
    g_alpha_value,
    g_lagrange,
    g_recurrence,
    g_recurrence_eval,
    kernel_root,
    morrison_g,
    morrison_g_ratfunc,
    narayana_gf,
    narayana_number,
    phi,
    phi_fraction,
    riordan_A,
    t_of_T_closed,
    y_closed,
)
from .verify import (
    SUITE_NAMES,
    CaseRecord,
    VerificationReport,
    VerifyConfig,
    c_compare,
    inner_sum_check,
    run_all,
    run_suite,
    sample_points,
    verify_kernel,
    verify_y,
)

__version__ = "1.0.0"

__all__ = [
    "ALPHA",
    "BETA",
    "BadRootHint",
    "BasisOverflow",
    "CaseRecord",
    "CoefficientRing",
    "DEFAULT_NUMERIC_ORDER",
    "DEFAULT_SYMBOLIC_ORDER",
    "DenominatorVanishes",
    "DivisionNotExact",
    "ExactAlgError",
    "GPoly",
    "G_closed",
    "G_from_recurrence",
    "IndexOutOfRange",
    "MultiPoly",
    "NonzeroInnerConstant",
    "NotInvertibleConstantTerm",
    "PointAssignment",
    "PoleAtOrigin",
    "RatFunc",
    "SUITE_NAMES",
    "SeriesError",
    "SeriesFraction",
    "T_forward",
    "TruncSeries",
    "ValuationMismatch",
    "VariableMismatch",
    "VerificationReport",
    "VerifyConfig",
    "W",
    "X",
    "c_compare",
    "c_direct",
    "c_translated",
    "c_translated_lowered",
    "carlitz_A",
    "catalan_number",
    "choose",
    "eval_at_point",
    "exact_div",
    "from_w_basis",
    "g_alpha_closed",
    "g_alpha_value",
    "g_lagrange",
    "g_recurrence",
    "g_recurrence_eval",
    "horner_eval",
    "inner_sum_check",
    "kernel_root",
    "lagrange_coeff",
    "morrison_g",
    "morrison_g_ratfunc",
    "narayana_gf",
    "narayana_number",
    "phi",
    "phi_fraction",
    "poly_ring",
    "ratfunc_ring",
    "rational_ring",
    "riordan_A",
    "run_all",
    "run_suite",
    "sample_points",
    "series_compose",
    "series_inverse",
    "series_pow",
    "series_revert",
    "series_sqrt",
    "solve_functional",
    "t_of_T_closed",
    "to_w_basis",
    "verify_kernel",
    "verify_y",
    "y_closed",
]
