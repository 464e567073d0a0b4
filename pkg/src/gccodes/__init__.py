"""Codes correcting deletions confined to one or several windows.

The systematic part of a codeword is protected by MDS parities over
GF(2^ell); the decoder guesses which adjacent block pair absorbed the
damage and uses the parities to cross-check each guess. With several
windows the parity bits are repetition coded instead of relying on a
marker buffer.
"""

from .analysis import (
    BoundReport,
    MiscorrectionError,
    OracleReport,
    ScopeTooLargeError,
    bound_multi,
    bound_single,
    exhaustive_oracle,
    max_case_count,
    rate_single,
)
from .channel import (
    DeletionPattern,
    InvalidPatternError,
    Window,
    delete_localized,
    pattern_from_text,
    pattern_to_text,
    sample_pattern,
)
from .gf2e import (
    FieldContext,
    NonPrimitivePolynomialError,
    UnsupportedExponentError,
    bits_to_symbols,
    symbols_to_bits,
)
from .mds import (
    FieldTooSmallError,
    Generator,
    SingularSystemError,
    cauchy_generator,
    encode_parities,
    erasure_decode,
    make_generator,
    vandermonde_generator,
    verify_parities,
)
from .multi_window import (
    DEFAULT_MAX_Z,
    MultiParams,
    decode_multi,
    encode_multi,
    enumerate_cases,
    multi_params,
    repetition_decode,
    repetition_encode,
)
from .sim import SimConfig, TrialReport, TrialRow, report_to_csv, run_trials
from .single_window import (
    FAILURE,
    INVALID_INPUT,
    SUCCESS,
    CodeParams,
    DecodeResult,
    GuessEval,
    InvalidConfigError,
    RegionReport,
    TooLongError,
    TooManyDeletionsError,
    decode,
    detect_affected_region,
    encode,
    evaluate_guess,
    gc_params,
    is_subsequence,
    try_guess,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "MiscorrectionError", "OracleReport", "ScopeTooLargeError",
    "bound_multi", "bound_single", "exhaustive_oracle", "max_case_count",
    "rate_single",
    "DeletionPattern", "InvalidPatternError", "Window", "delete_localized",
    "pattern_from_text", "pattern_to_text", "sample_pattern",
    "FieldContext", "NonPrimitivePolynomialError", "UnsupportedExponentError",
    "bits_to_symbols", "symbols_to_bits",
    "FieldTooSmallError", "Generator", "SingularSystemError",
    "cauchy_generator", "encode_parities", "erasure_decode",
    "make_generator", "vandermonde_generator", "verify_parities",
    "DEFAULT_MAX_Z", "MultiParams", "decode_multi", "encode_multi",
    "enumerate_cases", "multi_params", "repetition_decode", "repetition_encode",
    "SimConfig", "TrialReport", "TrialRow", "report_to_csv", "run_trials",
    "FAILURE", "INVALID_INPUT", "SUCCESS", "CodeParams", "DecodeResult",
    "GuessEval", "InvalidConfigError", "RegionReport", "TooLongError",
    "TooManyDeletionsError", "decode", "detect_affected_region", "encode",
    "evaluate_guess", "gc_params", "is_subsequence", "try_guess",
]
