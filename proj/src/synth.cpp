#include "benfordkit/synth.hpp"

#include <cmath>
#include <limits>

#include "benfordkit/errors.hpp"

namespace benfordkit {

double PortableRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::int64_t PortableRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % range);
}

void SynthConfig::validate() const {
  if (exponent_min > exponent_max) throw DomainError("exponent range is empty");
  if (!(negative_fraction >= 0.0 && negative_fraction <= 1.0)) {
    throw DomainError("negative fraction must lie in [0, 1]");
  }
  if (!(inject_rounding >= 0.0 && inject_rounding <= 1.0)) {
    throw DomainError("rounding strength must lie in [0, 1]");
  }
}

std::vector<DecimalValue> sample_benford(const SynthConfig& config) {
  config.validate();
  PortableRng rng(config.seed);
  std::vector<DecimalValue> out;
  out.reserve(config.n);
  while (out.size() < config.n) {
    const double u = rng.uniform01();
    const auto exponent = rng.uniform_int(config.exponent_min, config.exponent_max);
    const bool negative = rng.uniform01() < config.negative_fraction;
    const auto parsed = decimal_from_double(std::pow(10.0, u), 15);
    const auto& s = std::get<DecimalValue>(parsed);
    // 10^u can round up to exactly 10 at 15 digits; keep the significand in [1, 10).
    const DecimalValue sig = s.exponent() == 0 ? s : DecimalValue(1, "999999999999999", 0);
    out.emplace_back(negative ? -1 : 1, sig.digits(), exponent);
  }
  return out;
}

std::vector<DecimalValue> inject_rounding(std::span<const DecimalValue> values, double strength, std::uint64_t seed) {
  if (!(strength >= 0.0 && strength <= 1.0)) throw DomainError("rounding strength must lie in [0, 1]");
  PortableRng rng(seed);
  std::vector<DecimalValue> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (second_digit(v) != 9 || !(rng.uniform01() < strength)) {
      out.push_back(v);
      continue;
    }
    const int d = first_digit(v);
    if (d < 9) {
      out.emplace_back(v.sign(), std::string(1, static_cast<char>('0' + d + 1)), v.exponent());
    } else {
      out.emplace_back(v.sign(), "1", v.exponent() + 1);
    }
  }
  return out;
}

std::uint64_t injection_seed(std::uint64_t sample_seed) noexcept { return sample_seed ^ 0x9E3779B97F4A7C15ULL; }

std::vector<DecimalValue> generate(const SynthConfig& config) {
  auto sample = sample_benford(config);
  if (config.inject_rounding > 0.0) return inject_rounding(sample, config.inject_rounding, injection_seed(config.seed));
  return sample;
}

}  // namespace benfordkit
