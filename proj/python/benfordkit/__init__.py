"""Benford digit-law conformity analytics (bindings to the C++ core)."""

from ._core import (
    ConfigError,
    ConformityReport,
    DecimalValue,
    DegenerateInputError,
    DigitTally,
    DomainError,
    ExtractionError,
    IngestionError,
    LawRecord,
    NonNumeric,
    TestResult,
    Zero,
    __version__,
    analyze,
    analyze_panel,
    bins,
    chi_square_critical,
    classify,
    expected,
    expected_probability,
    first_digit,
    first_two,
    inject_rounding,
    parse_decimal,
    parse_report_json,
    run_test,
    sample_benford,
    second_digit,
    significand,
    summary_stats,
    tally,
    tally_from_counts,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
