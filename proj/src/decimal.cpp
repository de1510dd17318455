#include "benfordkit/decimal.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "benfordkit/errors.hpp"

namespace benfordkit {
namespace {

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Exponents beyond this are rejected as non-numeric rather than risking overflow.
constexpr std::size_t kMaxExponentDigits = 15;

std::string scientific_text(const DecimalValue& v) {
  std::string out;
  if (v.negative()) out += '-';
  out += v.digits().front();
  if (v.digits().size() > 1) {
    out += '.';
    out.append(v.digits(), 1, std::string::npos);
  }
  out += 'e';
  out += std::to_string(v.exponent());
  return out;
}

double parse_double(std::string_view text) {
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec == std::errc::result_out_of_range) {
    return text.find("e-") != std::string_view::npos ? 0.0 : (text.front() == '-' ? -HUGE_VAL : HUGE_VAL);
  }
  (void)ptr;
  return out;
}

const DecimalValue& require_value(const ParseResult& value) {
  if (const auto* v = std::get_if<DecimalValue>(&value)) return *v;
  if (std::holds_alternative<Zero>(value)) throw ExtractionError("zero has no significant digits");
  throw ExtractionError("non-numeric value has no significant digits");
}

}  // namespace

DecimalValue::DecimalValue(int sign, std::string digits, std::int64_t exponent)
    : sign_(sign), digits_(std::move(digits)), exponent_(exponent) {
  if (sign_ != 1 && sign_ != -1) throw DomainError("decimal sign must be +1 or -1");
  if (digits_.empty() || digits_.front() == '0') throw DomainError("decimal digits must start with 1..9");
  for (char c : digits_) {
    if (!is_digit(c)) throw DomainError("decimal digits must be 0..9");
  }
  while (digits_.size() > 1 && digits_.back() == '0') digits_.pop_back();
}

double DecimalValue::to_double() const { return parse_double(scientific_text(*this)); }

ParseResult parse_decimal(std::string_view text) {
  text = trim(text);
  if (text.empty()) return NonNumeric{};

  std::size_t i = 0;
  int sign = 1;
  if (text[i] == '+' || text[i] == '-') {
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }

  std::string mantissa;
  std::int64_t integer_len = -1;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (is_digit(c)) {
      mantissa += c;
    } else if (c == '.' && integer_len < 0) {
      integer_len = static_cast<std::int64_t>(mantissa.size());
    } else {
      break;
    }
  }
  if (mantissa.empty()) return NonNumeric{};
  if (integer_len < 0) integer_len = static_cast<std::int64_t>(mantissa.size());

  std::int64_t exp10 = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return NonNumeric{};
    ++i;
    int exp_sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    const auto exp_text = text.substr(i);
    if (exp_text.empty() || exp_text.size() > kMaxExponentDigits) return NonNumeric{};
    for (char c : exp_text) {
      if (!is_digit(c)) return NonNumeric{};
    }
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exp10);
    exp10 *= exp_sign;
  }

  const auto first_nonzero = mantissa.find_first_not_of('0');
  if (first_nonzero == std::string::npos) return Zero{};
  const auto last_nonzero = mantissa.find_last_not_of('0');
  auto digits = mantissa.substr(first_nonzero, last_nonzero - first_nonzero + 1);
  const auto exponent = integer_len - 1 - static_cast<std::int64_t>(first_nonzero) + exp10;
  return DecimalValue(sign, std::move(digits), exponent);
}

std::string render_decimal(const DecimalValue& value) {
  const auto exp = value.exponent();
  const auto& digits = value.digits();
  if (exp < -7 || exp > 20) return scientific_text(value);

  std::string out;
  if (value.negative()) out += '-';
  if (exp >= 0) {
    const auto int_len = static_cast<std::size_t>(exp + 1);
    if (digits.size() > int_len) {
      out.append(digits, 0, int_len);
      out += '.';
      out.append(digits, int_len, std::string::npos);
    } else {
      out += digits;
      out.append(int_len - digits.size(), '0');
    }
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-exp - 1), '0');
    out += digits;
  }
  return out;
}

ParseResult decimal_from_double(double value, int significant_digits) {
  if (!std::isfinite(value)) return NonNumeric{};
  if (value == 0.0) return Zero{};
  if (significant_digits < 1 || significant_digits > 17) throw DomainError("significant digits must be in 1..17");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant_digits - 1, value);
  return parse_decimal(buf);
}

int first_digit(const DecimalValue& value) noexcept { return value.digits()[0] - '0'; }

int second_digit(const DecimalValue& value) noexcept {
  return value.digits().size() > 1 ? value.digits()[1] - '0' : 0;
}

int first_two(const DecimalValue& value) noexcept { return 10 * first_digit(value) + second_digit(value); }

double significand(const DecimalValue& value) {
  return value.sign() * parse_double(scientific_text(DecimalValue(1, value.digits(), 0)));
}

int extract_bin(const DecimalValue& value, LawKind kind) noexcept {
  switch (kind) {
    case LawKind::FirstDigit: return first_digit(value);
    case LawKind::SecondDigit: return second_digit(value);
    case LawKind::FirstTwoDigits: return first_two(value);
  }
  return -1;
}

int first_digit(const ParseResult& value) { return first_digit(require_value(value)); }
int second_digit(const ParseResult& value) { return second_digit(require_value(value)); }
int first_two(const ParseResult& value) { return first_two(require_value(value)); }
double significand(const ParseResult& value) { return significand(require_value(value)); }

DigitTally::DigitTally(LawKind kind) : kind_(kind), counts_(static_cast<std::size_t>(bin_count(kind)), 0) {}

void DigitTally::add(const DecimalValue& value) noexcept {
  ++counts_[static_cast<std::size_t>(extract_bin(value, kind_) - bins().first)];
  ++included_;
}

void DigitTally::add(const ParseResult& value) noexcept {
  std::visit(
      [this](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DecimalValue>) {
          add(v);
        } else if constexpr (std::is_same_v<T, Zero>) {
          ++excluded_zero_;
        } else {
          ++excluded_nonnumeric_;
        }
      },
      value);
}

void DigitTally::add_count(int bin, std::uint64_t n) {
  if (!bins().contains(bin)) throw DomainError("bin " + std::to_string(bin) + " outside law domain");
  counts_[static_cast<std::size_t>(bin - bins().first)] += n;
  included_ += n;
}

void DigitTally::merge(const DigitTally& other) {
  if (other.kind_ != kind_) throw DomainError("cannot merge tallies of different laws");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  included_ += other.included_;
  excluded_zero_ += other.excluded_zero_;
  excluded_nonnumeric_ += other.excluded_nonnumeric_;
}

std::uint64_t DigitTally::count(int bin) const {
  if (!bins().contains(bin)) throw DomainError("bin " + std::to_string(bin) + " outside law domain");
  return counts_[static_cast<std::size_t>(bin - bins().first)];
}

std::vector<double> DigitTally::frequencies() const {
  if (included_ == 0) throw DegenerateInputError("tally has no included values");
  std::vector<double> out;
  out.reserve(counts_.size());
  for (auto c : counts_) out.push_back(static_cast<double>(c) / static_cast<double>(included_));
  return out;
}

DigitTally DigitTally::from_counts(LawKind kind, std::span<const std::uint64_t> counts) {
  DigitTally out(kind);
  if (counts.size() != out.counts_.size()) {
    throw DomainError("expected " + std::to_string(out.counts_.size()) + " counts for " +
                      std::string(law_name(kind)) + ", got " + std::to_string(counts.size()));
  }
  for (std::size_t i = 0; i < counts.size(); ++i) out.add_count(out.bins().first + static_cast<int>(i), counts[i]);
  return out;
}

DigitTally tally(std::span<const ParseResult> values, LawKind kind) {
  DigitTally out(kind);
  for (const auto& v : values) out.add(v);
  return out;
}

DigitTally tally(std::span<const DecimalValue> values, LawKind kind) {
  DigitTally out(kind);
  for (const auto& v : values) out.add(v);
  return out;
}

}  // namespace benfordkit
