#include "benfordkit/digit_laws.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "benfordkit/errors.hpp"

namespace benfordkit {

BinRange bin_range(LawKind kind) noexcept {
  switch (kind) {
    case LawKind::FirstDigit: return {1, 9};
    case LawKind::SecondDigit: return {0, 9};
    case LawKind::FirstTwoDigits: return {10, 99};
  }
  return {0, -1};
}

std::string_view law_name(LawKind kind) noexcept {
  switch (kind) {
    case LawKind::FirstDigit: return "bl1";
    case LawKind::SecondDigit: return "bl2";
    case LawKind::FirstTwoDigits: return "bl12";
  }
  return "?";
}

LawKind parse_law(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "bl1") return LawKind::FirstDigit;
  if (lower == "bl2") return LawKind::SecondDigit;
  if (lower == "bl12") return LawKind::FirstTwoDigits;
  throw ConfigError("unknown law '" + std::string(name) + "' (expected bl1, bl2 or bl12)");
}

std::vector<LawKind> parse_law_list(std::string_view names) {
  std::vector<LawKind> out;
  std::size_t pos = 0;
  while (pos <= names.size()) {
    auto comma = names.find(',', pos);
    if (comma == std::string_view::npos) comma = names.size();
    auto item = names.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty()) {
      auto kind = parse_law(item);
      if (std::find(out.begin(), out.end(), kind) == out.end()) out.push_back(kind);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw ConfigError("law list is empty");
  return out;
}

double expected_first_digit(int digit) {
  if (digit < 1 || digit > 9) throw DomainError("first digit must be in 1..9, got " + std::to_string(digit));
  return std::log10(1.0 + 1.0 / digit);
}

double expected_second_digit(int digit) {
  if (digit < 0 || digit > 9) throw DomainError("second digit must be in 0..9, got " + std::to_string(digit));
  double sum = 0.0;
  for (int k = 1; k <= 9; ++k) sum += std::log10(1.0 + 1.0 / (10 * k + digit));
  return sum;
}

double expected_first_two(int bin) {
  if (bin < 10 || bin > 99) throw DomainError("first-two-digit bin must be in 10..99, got " + std::to_string(bin));
  return std::log10(1.0 + 1.0 / bin);
}

double expected_probability(LawKind kind, int bin) {
  switch (kind) {
    case LawKind::FirstDigit: return expected_first_digit(bin);
    case LawKind::SecondDigit: return expected_second_digit(bin);
    case LawKind::FirstTwoDigits: return expected_first_two(bin);
  }
  throw DomainError("unknown law kind");
}

ExpectedDistribution::ExpectedDistribution(LawKind kind) : kind_(kind) {
  const auto range = bin_range(kind);
  probs_.reserve(static_cast<std::size_t>(range.size()));
  for (int b = range.first; b <= range.last; ++b) probs_.push_back(expected_probability(kind, b));
}

double ExpectedDistribution::at(int bin) const {
  const auto range = bins();
  if (!range.contains(bin)) throw DomainError("bin " + std::to_string(bin) + " outside law domain");
  return probs_[static_cast<std::size_t>(bin - range.first)];
}

}  // namespace benfordkit
