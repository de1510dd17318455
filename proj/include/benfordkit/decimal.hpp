// decimal.hpp - exact signed decimals and significant-digit extraction.
//
// Digits are read from the normalized decimal text, never through a binary
// log10, so a reported figure such as 0.1 or 2035 always yields the digits
// a person reading the statement would see.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "benfordkit/digit_laws.hpp"

namespace benfordkit {

/// Nonzero decimal: value = sign * d1.d2d3... * 10^exponent.
///
/// `digits` holds the significant digits with no leading or trailing zeros,
/// so 500, 5e2 and 0.0005e6 share the representation {+1, "5", 2}.
class DecimalValue {
 public:
  /// Throws DomainError if `digits` is empty, starts with 0, or sign is not +-1.
  DecimalValue(int sign, std::string digits, std::int64_t exponent);

  int sign() const noexcept { return sign_; }
  const std::string& digits() const noexcept { return digits_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool negative() const noexcept { return sign_ < 0; }

  DecimalValue negated() const { return {-sign_, digits_, exponent_}; }
  DecimalValue scaled_by_power_of_ten(std::int64_t shift) const { return {sign_, digits_, exponent_ + shift}; }

  /// Nearest double (may lose precision for long digit strings).
  double to_double() const;

  friend bool operator==(const DecimalValue&, const DecimalValue&) = default;

 private:
  int sign_;
  std::string digits_;
  std::int64_t exponent_;
};

struct Zero {
  friend bool operator==(Zero, Zero) { return true; }
};
struct NonNumeric {
  friend bool operator==(NonNumeric, NonNumeric) { return true; }
};

using ParseResult = std::variant<DecimalValue, Zero, NonNumeric>;

/// Total parser: plain ("-0.00345", "2035", ".5") and scientific ("1.2345e8")
/// notation. Surrounding whitespace is ignored. Blank or malformed text is
/// NonNumeric; any spelling of zero is Zero.
ParseResult parse_decimal(std::string_view text);

/// Canonical text of a value. parse_decimal(render_decimal(v)) == v.
/// Plain notation for moderate exponents, scientific otherwise.
std::string render_decimal(const DecimalValue& value);

/// Converts a computed double by rendering it at `significant_digits`
/// significant digits first. Returns Zero for 0 and NonNumeric for NaN/inf.
ParseResult decimal_from_double(double value, int significant_digits = 15);

int first_digit(const DecimalValue& value) noexcept;
/// Second significant digit; 0 when the value has a single significant digit.
int second_digit(const DecimalValue& value) noexcept;
int first_two(const DecimalValue& value) noexcept;
/// sign * d1.d2d3..., magnitude in [1, 10).
double significand(const DecimalValue& value);

/// Digit bin of `value` under `kind`.
int extract_bin(const DecimalValue& value, LawKind kind) noexcept;

// The ParseResult overloads throw ExtractionError for Zero and NonNumeric.
int first_digit(const ParseResult& value);
int second_digit(const ParseResult& value);
int first_two(const ParseResult& value);
double significand(const ParseResult& value);

/// Observed bin counts of one law over one series.
class DigitTally {
 public:
  explicit DigitTally(LawKind kind);

  LawKind kind() const noexcept { return kind_; }
  BinRange bins() const noexcept { return bin_range(kind_); }

  void add(const DecimalValue& value) noexcept;
  void add(const ParseResult& value) noexcept;
  /// Adds `n` observations straight into `bin`; throws DomainError outside the domain.
  void add_count(int bin, std::uint64_t n = 1);
  void add_excluded_zero(std::uint64_t n = 1) noexcept { excluded_zero_ += n; }
  void add_excluded_nonnumeric(std::uint64_t n = 1) noexcept { excluded_nonnumeric_ += n; }

  /// Merges another tally of the same kind; associative and commutative.
  void merge(const DigitTally& other);

  std::uint64_t count(int bin) const;
  /// Counts in ascending bin order.
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t n_included() const noexcept { return included_; }
  std::uint64_t n_excluded_zero() const noexcept { return excluded_zero_; }
  std::uint64_t n_excluded_nonnumeric() const noexcept { return excluded_nonnumeric_; }
  std::uint64_t n_total() const noexcept { return included_ + excluded_zero_ + excluded_nonnumeric_; }

  /// count / n_included per bin; throws DegenerateInputError when nothing was included.
  std::vector<double> frequencies() const;

  /// Builds a tally straight from per-bin counts (ascending bin order).
  static DigitTally from_counts(LawKind kind, std::span<const std::uint64_t> counts);

  friend bool operator==(const DigitTally&, const DigitTally&) = default;

 private:
  LawKind kind_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t included_ = 0;
  std::uint64_t excluded_zero_ = 0;
  std::uint64_t excluded_nonnumeric_ = 0;
};

DigitTally tally(std::span<const ParseResult> values, LawKind kind);
DigitTally tally(std::span<const DecimalValue> values, LawKind kind);

}  // namespace benfordkit
