"""Workbench for generalized self-shrinking sequence families over GF(2^L)."""

__version__ = "0.1.0"

from .analysis import (
    RunDistribution,
    SequenceReport,
    balance,
    format_reports,
    least_period,
    linear_complexity,
    minimal_lfsr_length,
    periodic_correlation,
    run_distribution,
    sequence_report,
    subsequence_balance,
)
from .errors import (
    BadPeriodLength,
    DegreeOutOfRange,
    FieldMismatch,
    GsslabError,
    LengthMismatch,
    NoPartner,
    NotIrreducible,
    NotPrimitive,
    OddLength,
    PolynomialParseError,
    ShiftOutOfRange,
    SingularSystem,
    ZeroInverse,
    ZeroLog,
)
from .gf2x import (
    DEFAULT_MAX_DEGREE,
    Field,
    FieldElement,
    is_irreducible,
    parse_polynomial,
    poly_hex,
    poly_terms,
    primitive_polynomials,
    validate_primitive,
)
from .gss import (
    GssFamily,
    GssIndex,
    GssSequence,
    complement_partner,
    gss_family,
    gss_generate,
    self_shrink_direct,
    self_shrinking_index,
    shift_of_G,
)
from .sequences import (
    MSequence,
    format_bits,
    generate_msequence,
    parse_bits,
    sliding_sequence,
    solve_trace_coefficient,
    trace,
)
from .theorems import (
    SpecialExponents,
    VerdictReport,
    VerifyContext,
    VERIFIER_ORDER,
    VERIFIERS,
    find_special_exponents,
    format_verdicts,
    verify_all,
    verify_alternating_members,
    verify_excluded_periods,
    verify_group_and_balance,
    verify_lc_bounds,
    verify_parity_balance,
    verify_period_classification,
    verify_run_structure,
    verify_self_shrinking,
    verify_sliding_complement,
    verify_sliding_complement_all,
)
