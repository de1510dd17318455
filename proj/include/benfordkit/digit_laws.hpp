// digit_laws.hpp - closed-form Benford probabilities for the first digit,
// the second digit and the first-two-digit pair.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace benfordkit {

enum class LawKind { FirstDigit, SecondDigit, FirstTwoDigits };

/// Inclusive bin domain of a law: FirstDigit 1..9, SecondDigit 0..9, FirstTwoDigits 10..99.
struct BinRange {
  int first;
  int last;
  int size() const noexcept { return last - first + 1; }
  bool contains(int bin) const noexcept { return bin >= first && bin <= last; }
};

BinRange bin_range(LawKind kind) noexcept;
inline int bin_count(LawKind kind) noexcept { return bin_range(kind).size(); }

/// Short name used on the command line and in reports: "bl1", "bl2", "bl12".
std::string_view law_name(LawKind kind) noexcept;
/// Inverse of law_name (case-insensitive). Throws ConfigError for anything else.
LawKind parse_law(std::string_view name);
/// Parses a comma separated list such as "bl1,bl2". Order kept, duplicates dropped.
std::vector<LawKind> parse_law_list(std::string_view names);

double expected_first_digit(int digit);
double expected_second_digit(int digit);
double expected_first_two(int bin);

/// Expected probability of a bin under the law of the given kind.
double expected_probability(LawKind kind, int bin);

class ExpectedDistribution {
 public:
  explicit ExpectedDistribution(LawKind kind);

  LawKind kind() const noexcept { return kind_; }
  BinRange bins() const noexcept { return bin_range(kind_); }
  std::size_t size() const noexcept { return probs_.size(); }

  /// Probability of `bin`; throws DomainError outside the bin domain.
  double at(int bin) const;
  /// Probabilities in ascending bin order.
  const std::vector<double>& probabilities() const noexcept { return probs_; }

 private:
  LawKind kind_;
  std::vector<double> probs_;
};

inline ExpectedDistribution expected_distribution(LawKind kind) { return ExpectedDistribution(kind); }

}  // namespace benfordkit
