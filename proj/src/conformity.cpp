#include "benfordkit/conformity.hpp"

#include <cmath>
#include <string>

#include "benfordkit/errors.hpp"
#include "benfordkit/gamma.hpp"

namespace benfordkit {
namespace {

void check_compatible(const DigitTally& tally, const ExpectedDistribution& expected) {
  if (tally.kind() != expected.kind()) {
    throw DomainError("tally law " + std::string(law_name(tally.kind())) + " does not match expected law " +
                      std::string(law_name(expected.kind())));
  }
  if (tally.n_included() == 0) throw DegenerateInputError("no included values to test");
}

constexpr double kCriticalTolerance = 1e-6;

}  // namespace

std::string_view conformity_name(ConformityClass c) noexcept {
  switch (c) {
    case ConformityClass::Close: return "close";
    case ConformityClass::Acceptable: return "acceptable";
    case ConformityClass::Marginal: return "marginal";
    case ConformityClass::Nonconforming: return "nonconforming";
  }
  return "?";
}

ConformityClass parse_conformity(std::string_view name) {
  for (auto c : {ConformityClass::Close, ConformityClass::Acceptable, ConformityClass::Marginal,
                 ConformityClass::Nonconforming}) {
    if (conformity_name(c) == name) return c;
  }
  throw ConfigError("unknown conformity class '" + std::string(name) + "'");
}

MadThresholds mad_thresholds(LawKind kind) noexcept {
  switch (kind) {
    case LawKind::FirstDigit: return {0.006, 0.012, 0.015};
    case LawKind::SecondDigit: return {0.008, 0.010, 0.012};
    case LawKind::FirstTwoDigits: return {0.0012, 0.0018, 0.0022};
  }
  return {0.0, 0.0, 0.0};
}

ChiSquare chi_square(const DigitTally& tally, const ExpectedDistribution& expected) {
  check_compatible(tally, expected);
  const double n = static_cast<double>(tally.n_included());
  const auto& counts = tally.counts();
  const auto& probs = expected.probabilities();
  double stat = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double e = n * probs[i];
    const double diff = static_cast<double>(counts[i]) - e;
    stat += diff * diff / e;
  }
  return {stat, static_cast<int>(counts.size()) - 1};
}

double chi_square_critical(int df, double alpha) {
  if (df < 1) throw DomainError("degrees of freedom must be >= 1, got " + std::to_string(df));
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie strictly between 0 and 1");

  // survival is decreasing in x: find hi with survival(hi) < alpha.
  double lo = 0.0;
  double hi = static_cast<double>(df) + 10.0;
  while (chi_square_survival(hi, df) > alpha) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > kCriticalTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (chi_square_survival(mid, df) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double mad_paper(const DigitTally& tally, const ExpectedDistribution& expected) {
  check_compatible(tally, expected);
  const auto observed = tally.frequencies();
  const auto& probs = expected.probabilities();
  double sum = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) sum += std::fabs(observed[i] - probs[i]);
  return sum;
}

double mad_mean(const DigitTally& tally, const ExpectedDistribution& expected) {
  return mad_paper(tally, expected) / static_cast<double>(expected.size());
}

ConformityClass classify(double mad_value, LawKind kind) {
  if (!(mad_value >= 0.0)) throw DomainError("MAD must be non-negative");
  const auto t = mad_thresholds(kind);
  if (mad_value <= t.close) return ConformityClass::Close;
  if (mad_value <= t.acceptable) return ConformityClass::Acceptable;
  if (mad_value <= t.marginal) return ConformityClass::Marginal;
  return ConformityClass::Nonconforming;
}

TestResult run_test(const DigitTally& tally, const ExpectedDistribution& expected, double alpha) {
  const auto chi = chi_square(tally, expected);
  TestResult r;
  r.kind = tally.kind();
  r.alpha = alpha;
  r.chi2 = chi.statistic;
  r.df = chi.df;
  r.chi2_critical = chi_square_critical(chi.df, alpha);
  r.p_value = chi_square_survival(chi.statistic, chi.df);
  r.chi2_reject = r.chi2 > r.chi2_critical;
  r.mad_paper = mad_paper(tally, expected);
  r.mad_mean = r.mad_paper / static_cast<double>(expected.size());
  r.conformity = classify(r.mad_mean, r.kind);
  r.conformity_sum = classify(r.mad_paper, r.kind);
  return r;
}

}  // namespace benfordkit
