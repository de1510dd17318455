#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <random>

#include "benfordkit/conformity.hpp"
#include "benfordkit/errors.hpp"
#include "benfordkit/gamma.hpp"
#include "paper_fixtures.hpp"

using namespace benfordkit;

namespace {

DigitTally fixture_tally(const std::string& label, LawKind kind) {
  return DigitTally::from_counts(kind, fixtures::series(label, kind).counts);
}

DigitTally tally_from(LawKind kind, const std::vector<std::uint64_t>& counts) {
  return DigitTally::from_counts(kind, counts);
}

}  // namespace

TEST_SUITE("conformity") {
  TEST_CASE("incomplete gamma agrees with Boost.Math") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> a_dist(0.1, 80.0), x_dist(0.0, 200.0);
    for (int i = 0; i < 2000; ++i) {
      const double a = a_dist(rng), x = x_dist(rng);
      CHECK(regularized_gamma_p(a, x) == doctest::Approx(boost::math::gamma_p(a, x)).epsilon(1e-10));
      const double q = boost::math::gamma_q(a, x);
      if (q > 1e-250) CHECK(regularized_gamma_q(a, x) == doctest::Approx(q).epsilon(1e-9));
    }
    CHECK_THROWS_AS(regularized_gamma_p(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(regularized_gamma_q(1.0, -1.0), DomainError);
  }

  TEST_CASE("critical values from the published tables") {
    CHECK(std::fabs(chi_square_critical(8, 0.05) - 15.507) < 1e-3);
    CHECK(std::fabs(chi_square_critical(9, 0.05) - 16.919) < 1e-3);
    // The printed 113.145 belongs to 90 degrees of freedom.
    CHECK(std::fabs(chi_square_critical(89, 0.05) - 112.022) < 1e-3);
    CHECK(std::fabs(chi_square_critical(90, 0.05) - 113.145) < 1e-3);
  }

  TEST_CASE("critical values agree with an independent quantile") {
    for (int df : {1, 2, 3, 5, 8, 9, 20, 50, 89, 200, 1000}) {
      for (double alpha : {0.001, 0.01, 0.05, 0.1, 0.5, 0.9}) {
        const boost::math::chi_squared dist(df);
        const double oracle = boost::math::quantile(boost::math::complement(dist, alpha));
        CHECK(std::fabs(chi_square_critical(df, alpha) - oracle) < 2e-6);
      }
    }
    CHECK_THROWS_AS(chi_square_critical(0, 0.05), DomainError);
    CHECK_THROWS_AS(chi_square_critical(8, 0.0), DomainError);
    CHECK_THROWS_AS(chi_square_critical(8, 1.0), DomainError);
  }

  TEST_CASE("chi-square on published counts") {
    const auto bl1 = expected_distribution(LawKind::FirstDigit);
    const auto pi = chi_square(fixture_tally("PI", LawKind::FirstDigit), bl1);
    CHECK(pi.df == 8);
    CHECK(std::fabs(pi.statistic - 16.5706) < 0.01);
    CHECK(std::fabs(chi_square(fixture_tally("TA", LawKind::FirstDigit), bl1).statistic - 27.757) < 0.01);
    CHECK(chi_square(fixture_tally("PI", LawKind::SecondDigit), expected_distribution(LawKind::SecondDigit)).df == 9);
    CHECK(chi_square(DigitTally::from_counts(LawKind::FirstTwoDigits, std::vector<std::uint64_t>(90, 1)),
                     expected_distribution(LawKind::FirstTwoDigits))
              .df == 89);
  }

  TEST_CASE("MAD on published counts") {
    const auto bl1 = expected_distribution(LawKind::FirstDigit);
    const auto bl2 = expected_distribution(LawKind::SecondDigit);
    CHECK(std::fabs(mad_paper(fixture_tally("PI", LawKind::FirstDigit), bl1) - 0.04103) < 5e-4);
    CHECK(std::fabs(mad_paper(fixture_tally("PI(-)", LawKind::FirstDigit), bl1) - 0.07764) < 5e-4);
    CHECK(std::fabs(mad_paper(fixture_tally("PI", LawKind::SecondDigit), bl2) - 0.02741) < 5e-4);
    // Mean form: the printed sum divided by the nine BL1 bins.
    CHECK(std::fabs(mad_mean(fixture_tally("PI", LawKind::FirstDigit), bl1) - 0.04103 / 9) < 5e-4 / 9);
    CHECK(std::fabs(mad_mean(fixture_tally("TA", LawKind::FirstDigit), bl1) - 0.04258 / 9) < 5e-4 / 9);
  }

  TEST_CASE("mismatched or empty input") {
    const auto bl1 = expected_distribution(LawKind::FirstDigit);
    const DigitTally empty(LawKind::FirstDigit);
    CHECK_THROWS_AS(chi_square(empty, bl1), DegenerateInputError);
    CHECK_THROWS_AS(mad_paper(empty, bl1), DegenerateInputError);
    CHECK_THROWS_AS(run_test(empty, bl1), DegenerateInputError);
    CHECK_THROWS_AS(chi_square(fixture_tally("PI", LawKind::SecondDigit), bl1), DomainError);
    CHECK_THROWS_AS(mad_mean(fixture_tally("PI", LawKind::SecondDigit), bl1), DomainError);
  }

  TEST_CASE("classification thresholds") {
    CHECK(classify(0.005, LawKind::FirstDigit) == ConformityClass::Close);
    CHECK(classify(0.006, LawKind::FirstDigit) == ConformityClass::Close);
    CHECK(classify(0.0061, LawKind::FirstDigit) == ConformityClass::Acceptable);
    CHECK(classify(0.013, LawKind::FirstDigit) == ConformityClass::Marginal);
    CHECK(classify(0.020, LawKind::FirstDigit) == ConformityClass::Nonconforming);
    CHECK(classify(0.008, LawKind::SecondDigit) == ConformityClass::Close);
    CHECK(classify(0.0095, LawKind::SecondDigit) == ConformityClass::Acceptable);
    CHECK(classify(0.0012, LawKind::FirstTwoDigits) == ConformityClass::Close);
    CHECK(classify(0.0023, LawKind::FirstTwoDigits) == ConformityClass::Nonconforming);
    CHECK_THROWS_AS(classify(-0.001, LawKind::FirstDigit), DomainError);
  }

  TEST_CASE("classification is monotone") {
    for (auto kind : {LawKind::FirstDigit, LawKind::SecondDigit, LawKind::FirstTwoDigits}) {
      auto prev = ConformityClass::Close;
      for (int i = 0; i <= 4000; ++i) {
        const auto c = classify(i * 1e-5, kind);
        CHECK(static_cast<int>(c) >= static_cast<int>(prev));
        prev = c;
      }
      CHECK(prev == ConformityClass::Nonconforming);
    }
  }

  TEST_CASE("run_test on published fixtures") {
    const auto pi = run_test(fixture_tally("PI", LawKind::FirstDigit), expected_distribution(LawKind::FirstDigit));
    CHECK(std::fabs(pi.chi2 - 16.5706) < 0.01);
    CHECK(pi.chi2_reject);
    CHECK(std::fabs(pi.mad_paper - 0.04103) < 5e-4);
    CHECK(pi.alpha == 0.05);
    CHECK(pi.conformity == ConformityClass::Close);  // mean form 0.00456
    CHECK(pi.conformity_sum == ConformityClass::Nonconforming);
    CHECK(pi.mad_forms_disagree());
    CHECK(pi.p_value < 0.05);

    const auto pi_sd = run_test(fixture_tally("PI", LawKind::SecondDigit), expected_distribution(LawKind::SecondDigit));
    CHECK_FALSE(pi_sd.chi2_reject);
  }

  TEST_CASE("perfectly Benford counts give zero statistics") {
    // n * p is never an integer, so round it at n = 1e12 where the residue is negligible.
    const auto bl1 = expected_distribution(LawKind::FirstDigit);
    std::vector<std::uint64_t> counts;
    const std::uint64_t n = 1'000'000'000'000ULL;
    for (double p : bl1.probabilities()) counts.push_back(static_cast<std::uint64_t>(std::llround(p * n)));
    const auto r = run_test(tally_from(LawKind::FirstDigit, counts), bl1);
    CHECK(r.chi2 < 1e-6);
    CHECK(r.mad_paper < 1e-11);
    CHECK(r.conformity == ConformityClass::Close);
    CHECK_FALSE(r.chi2_reject);
  }

  TEST_CASE("statistic properties on random tallies") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> kind_pick(0, 2), count(0, 500), mult(1, 20);
    for (int i = 0; i < 1500; ++i) {
      const auto kind = static_cast<LawKind>(kind_pick(rng));
      std::vector<std::uint64_t> counts(static_cast<std::size_t>(bin_count(kind)));
      for (auto& c : counts) c = static_cast<std::uint64_t>(count(rng));
      counts[0] += 1;
      const auto m = static_cast<std::uint64_t>(mult(rng));
      std::vector<std::uint64_t> scaled(counts);
      for (auto& c : scaled) c *= m;
      const auto expected = expected_distribution(kind);
      const auto t = tally_from(kind, counts);
      const auto ts = tally_from(kind, scaled);
      const auto r = run_test(t, expected);
      CHECK(r.chi2 >= 0.0);
      CHECK(chi_square(ts, expected).statistic == doctest::Approx(m * r.chi2).epsilon(1e-9));
      CHECK(mad_paper(ts, expected) == doctest::Approx(r.mad_paper).epsilon(1e-12));
      CHECK(mad_mean(ts, expected) == doctest::Approx(r.mad_mean).epsilon(1e-12));
      CHECK(r.mad_paper <= 2.0);
      CHECK(std::fabs(r.mad_paper - bin_count(kind) * r.mad_mean) < 1e-12);
      CHECK(r.chi2_reject == (r.chi2 > r.chi2_critical));
    }
  }
}
