// conformity.hpp - chi-squared and mean-absolute-deviation conformity tests.
//
// MAD comes in two forms. The "paper-sum" form is sum_k |f_o - f_e| over the
// K bins; the "mean" form divides that by K. Published digit-law tables often
// print the sum while quoting conformity thresholds that were calibrated for
// the mean, so both are carried everywhere and never silently swapped.
#pragma once

#include <string_view>

#include "benfordkit/decimal.hpp"
#include "benfordkit/digit_laws.hpp"

namespace benfordkit {

inline constexpr double kDefaultAlpha = 0.05;

enum class ConformityClass { Close = 0, Acceptable = 1, Marginal = 2, Nonconforming = 3 };

std::string_view conformity_name(ConformityClass c) noexcept;
ConformityClass parse_conformity(std::string_view name);

/// Upper bounds (inclusive) of the Close, Acceptable and Marginal classes.
struct MadThresholds {
  double close;
  double acceptable;
  double marginal;
};

/// BL1 0.006/0.012/0.015, BL2 0.008/0.010/0.012, BL12 0.0012/0.0018/0.0022.
MadThresholds mad_thresholds(LawKind kind) noexcept;

struct ChiSquare {
  double statistic;
  int df;
};

/// Pearson statistic sum (O - E)^2 / E with E = n * p, df = bins - 1.
/// Throws DomainError on a kind mismatch and DegenerateInputError on an empty tally.
ChiSquare chi_square(const DigitTally& tally, const ExpectedDistribution& expected);

/// Upper-tail quantile x with Pr[chi2(df) > x] = alpha, found by bisection
/// on the incomplete gamma function to an absolute tolerance of 1e-6.
double chi_square_critical(int df, double alpha);

/// Sum form: sum over bins of |f_o - f_e|.
double mad_paper(const DigitTally& tally, const ExpectedDistribution& expected);
/// Mean form: mad_paper / K.
double mad_mean(const DigitTally& tally, const ExpectedDistribution& expected);

/// Maps a MAD value onto the law's thresholds; a value on a boundary belongs to the lower class.
ConformityClass classify(double mad_value, LawKind kind);

struct TestResult {
  LawKind kind = LawKind::FirstDigit;
  double alpha = kDefaultAlpha;
  double chi2 = 0.0;
  int df = 0;
  double chi2_critical = 0.0;
  double p_value = 1.0;
  bool chi2_reject = false;
  double mad_paper = 0.0;
  double mad_mean = 0.0;
  /// Class of the mean-form MAD (the conventional reading of the thresholds).
  ConformityClass conformity = ConformityClass::Close;
  /// Class obtained when the sum-form MAD is read against the same thresholds.
  ConformityClass conformity_sum = ConformityClass::Close;

  /// True when the two MAD readings land in different classes.
  bool mad_forms_disagree() const noexcept { return conformity != conformity_sum; }

  friend bool operator==(const TestResult&, const TestResult&) = default;
};

TestResult run_test(const DigitTally& tally, const ExpectedDistribution& expected, double alpha = kDefaultAlpha);

}  // namespace benfordkit
