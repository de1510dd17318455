// synth.hpp - Benford-conforming synthetic samples and second-digit
// "rounding-up" manipulation for power studies.
//
// Randomness comes from std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Uniform reals and bounded integers are derived from the raw
// 64-bit words here (not through <random> distributions, whose algorithms are
// implementation defined), so a seed yields the same sample on every platform.
#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "benfordkit/decimal.hpp"

namespace benfordkit {

inline constexpr std::string_view kGeneratorName = "mt19937_64";

class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer on [lo, hi], unbiased (rejection sampling).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct SynthConfig {
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  /// Inclusive power-of-ten range of the generated magnitudes.
  int exponent_min = 0;
  int exponent_max = 6;
  double negative_fraction = 0.0;
  double inject_rounding = 0.0;

  /// Throws DomainError if the exponent range is empty or a probability lies outside [0, 1].
  void validate() const;
};

/// Significand 10^U with U ~ U[0,1), exponent uniform on the configured range,
/// negative with probability negative_fraction. Per value the draws are U,
/// exponent, sign, in that order. Significands are kept to 15 significant digits.
std::vector<DecimalValue> sample_benford(const SynthConfig& config);

/// Rounds d.9xxx up to (d+1) (9.9xxx wraps to 1 with the exponent raised by one)
/// with probability `strength`, one uniform draw per candidate value. Values
/// whose second digit is not 9 pass through untouched.
std::vector<DecimalValue> inject_rounding(std::span<const DecimalValue> values, double strength, std::uint64_t seed);

/// Seed used for the injection stream when it is derived from a sample seed.
std::uint64_t injection_seed(std::uint64_t sample_seed) noexcept;

/// sample_benford followed by inject_rounding when config.inject_rounding > 0.
std::vector<DecimalValue> generate(const SynthConfig& config);

}  // namespace benfordkit
