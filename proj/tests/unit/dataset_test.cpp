#include <doctest.h>

#include <boost/math/statistics/univariate_statistics.hpp>
#include <cmath>
#include <random>
#include <sstream>

#include "benfordkit/dataset.hpp"
#include "benfordkit/errors.hpp"
#include "paper_fixtures.hpp"

using namespace benfordkit;

namespace {

Panel load(const std::string& text, IngestConfig config = {}) {
  std::istringstream in(text);
  return load_panel(in, config);
}

template <class F>
IngestionError ingestion_error(F&& f) {
  try {
    f();
  } catch (const IngestionError& e) {
    return e;
  }
  FAIL("expected IngestionError");
  return IngestionError(0, 0, "");
}

}  // namespace

TEST_SUITE("dataset") {
  TEST_CASE("long form with a blank cell") {
    const auto panel = load("company,year,variable,value\nACME,2020,PI,125.3\nACME,2020,TA,\n");
    REQUIRE(panel.series.size() == 2);
    const auto& pi = panel.at("PI");
    const auto& ta = panel.at("TA");
    CHECK(pi.present_count() == 1);
    CHECK(ta.entries.size() == 1);
    CHECK(ta.missing_count() == 1);
    CHECK(panel.rows_read == 2);
    CHECK(panel.missing_cells == 1);
    CHECK(pi.entries.at(PanelKey{"ACME", 2020}) == "125.3");
    CHECK(panel.find("XX") == nullptr);
    CHECK_THROWS_AS(panel.at("XX"), ConfigError);
  }

  TEST_CASE("wide form, quoting, CRLF and thousands separators") {
    IngestConfig config;
    config.layout = PanelLayout::Wide;
    config.delimiter = ';';
    config.thousands_separator = ',';
    const auto panel = load("Company;Year;PI;TA\r\n\"Big, plc\";2019;\"1,250,000\";3e9\r\nSmall;2019;;-7\r\n\r\n",
                            config);
    REQUIRE(panel.series.size() == 2);
    const auto& pi = panel.at("PI");
    CHECK(pi.entries.at(PanelKey{"Big, plc", 2019}) == "1250000");
    CHECK_FALSE(pi.entries.at(PanelKey{"Small", 2019}).has_value());
    CHECK(panel.at("TA").present_count() == 2);
    CHECK(panel.rows_read == 2);
  }

  TEST_CASE("ingestion errors carry locations") {
    CHECK_THROWS_AS(load(""), IngestionError);
    CHECK_THROWS_AS(load("\n\n"), IngestionError);
    CHECK_THROWS_AS(load("firm,year,variable,value\nA,2020,PI,1\n"), IngestionError);
    CHECK_THROWS_AS(load("company,year,value\nA,2020,1\n"), IngestionError);

    const auto dup = ingestion_error([] { load("company,year,variable,value\nA,2020,PI,1\nA,2020,PI,2\n"); });
    CHECK(dup.row() == 3);

    const auto bad = ingestion_error([] { load("company,year,variable,value\nA,2020,PI,1\nB,2020,PI,12x\n"); });
    CHECK(bad.row() == 3);
    CHECK(bad.column() == 4);

    const auto year = ingestion_error([] { load("company,year,variable,value\nA,20x0,PI,1\n"); });
    CHECK(year.column() == 2);

    const auto width = ingestion_error([] { load("company,year,variable,value\nA,2020,PI\n"); });
    CHECK(width.row() == 2);

    IngestConfig window;
    window.min_year = 2009;
    window.max_year = 2022;
    CHECK_THROWS_AS(load("company,year,variable,value\nA,2023,PI,1\n", window), IngestionError);
    CHECK_NOTHROW(load("company,year,variable,value\nA,2022,PI,1\n", window));

    IngestConfig wide;
    wide.layout = PanelLayout::Wide;
    CHECK_THROWS_AS(load("company,year\nA,2020\n", wide), IngestionError);
    CHECK_THROWS_AS(load("company,year,PI,PI\nA,2020,1,2\n", wide), IngestionError);
  }

  TEST_CASE("split by sign") {
    const std::vector<ParseResult> values{parse_decimal("-1"), parse_decimal("0"), parse_decimal("2")};
    const auto split = split_by_sign(values);
    REQUIRE(split.negatives.size() == 1);
    REQUIRE(split.positives.size() == 1);
    CHECK(split.negatives[0] == std::get<DecimalValue>(parse_decimal("-1")));
    CHECK(split.positives[0] == std::get<DecimalValue>(parse_decimal("2")));
    CHECK(split.zero_count == 1);

    const auto panel = load("company,year,variable,value\nA,1,PI,-3\nA,2,PI,0\nA,3,PI,4\nA,4,PI,\n");
    const auto halves = split_by_sign(panel.at("PI"));
    CHECK(halves.negatives.variable == "PI(-)");
    CHECK(halves.positives.variable == "PI(+)");
    CHECK(halves.negatives.present_count() == 1);
    CHECK(halves.positives.present_count() == 1);
    CHECK(halves.zero_count == 1);
  }

  TEST_CASE("partition property") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pick(0, 4), len(0, 40);
    for (int i = 0; i < 1000; ++i) {
      std::vector<ParseResult> values;
      const int n = len(rng);
      for (int k = 0; k < n; ++k) {
        switch (pick(rng)) {
          case 0: values.emplace_back(Zero{}); break;
          case 1: values.emplace_back(DecimalValue(-1, "17", k)); break;
          default: values.emplace_back(DecimalValue(1, "3", -k)); break;
        }
      }
      const auto s = split_by_sign(values);
      CHECK(s.negatives.size() + s.positives.size() + s.zero_count == values.size());
    }
  }

  TEST_CASE("ratio derivation") {
    const auto panel = load(
        "company,year,variable,value\n"
        "A,1,PI,10\nA,1,TA,4\n"
        "A,2,PI,-3\nA,2,TA,\n"
        "A,3,PI,-6\nA,3,TA,3\n"
        "A,4,PI,5\nA,4,TA,0\n"
        "A,5,TA,8\n"
        "A,6,PI,0\nA,6,TA,8\n");
    const auto ratio = derive_ratio(panel.at("PI"), panel.at("TA"));
    CHECK(ratio.series.variable == "PI/TA");
    CHECK(ratio.series.entries.size() == 3);
    CHECK(ratio.series.entries.at(PanelKey{"A", 1}) == "2.5");
    CHECK(ratio.series.entries.at(PanelKey{"A", 3}) == "-2");
    CHECK(std::holds_alternative<Zero>(parse_decimal(*ratio.series.entries.at(PanelKey{"A", 6}))));
    CHECK_FALSE(ratio.series.entries.contains(PanelKey{"A", 2}));
    CHECK_FALSE(ratio.series.entries.contains(PanelKey{"A", 4}));
    CHECK(ratio.zero_denominators == 1);
    CHECK(ratio.missing_pairs == 2);
    CHECK(derive_ratio(panel.at("PI"), panel.at("TA"), "R").series.variable == "R");
  }

  TEST_CASE("ratio support and sign algebra") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> pick(0, 5), mant(1, 99999), exp(-5, 8);
    for (int round = 0; round < 50; ++round) {
      PanelSeries num{"N", {}}, den{"D", {}};
      for (int k = 0; k < 40; ++k) {
        auto cell = [&]() -> std::optional<std::string> {
          switch (pick(rng)) {
            case 0: return std::nullopt;
            case 1: return "0";
            case 2: return "-" + std::to_string(mant(rng)) + "e" + std::to_string(exp(rng));
            default: return std::to_string(mant(rng)) + "e" + std::to_string(exp(rng));
          }
        };
        if (pick(rng) != 0) num.entries.emplace(PanelKey{"C", k}, cell());
        if (pick(rng) != 0) den.entries.emplace(PanelKey{"C", k}, cell());
      }
      const auto r = derive_ratio(num, den);
      CHECK(r.series.entries.size() <= std::min(num.present_count(), den.present_count()));
      for (const auto& [key, text] : r.series.entries) {
        const auto rv = parse_decimal(*text);
        const auto nv = parse_decimal(*num.entries.at(key));
        const auto dvv = parse_decimal(*den.entries.at(key));
        REQUIRE(std::holds_alternative<DecimalValue>(dvv));
        if (std::holds_alternative<Zero>(nv)) {
          CHECK(std::holds_alternative<Zero>(rv));
        } else {
          CHECK(std::get<DecimalValue>(rv).sign() ==
                std::get<DecimalValue>(nv).sign() * std::get<DecimalValue>(dvv).sign());
        }
      }
    }
  }

  TEST_CASE("summary statistics") {
    const std::vector<double> xs{1, 2, 3};
    const auto s = summary_stats(std::span<const double>(xs));
    CHECK(s.n == 3);
    CHECK(s.mean == doctest::Approx(2.0));
    CHECK(s.min == 1.0);
    CHECK(s.max == 3.0);
    CHECK(s.stdev == doctest::Approx(1.0));
    CHECK(*s.skewness == doctest::Approx(0.0));
    CHECK(*s.excess_kurtosis == doctest::Approx(-1.5));
    CHECK(*s.cv == doctest::Approx(0.5));

    const std::vector<double> one{4.0};
    CHECK_THROWS_AS(summary_stats(std::span<const double>(one)), DegenerateInputError);
    const std::vector<double> flat{2.0, 2.0};
    const auto f = summary_stats(std::span<const double>(flat));
    CHECK_FALSE(f.skewness.has_value());
    CHECK(f.stdev == 0.0);
    const std::vector<double> centered{-1.0, 1.0};
    CHECK_FALSE(summary_stats(std::span<const double>(centered)).cv.has_value());
  }

  TEST_CASE("moments agree with Boost.Math statistics") {
    std::mt19937_64 rng(8);
    std::lognormal_distribution<double> dist(3.0, 1.5);
    for (int round = 0; round < 20; ++round) {
      std::vector<double> xs(200 + 37 * round);
      for (auto& x : xs) x = dist(rng) * (round % 3 == 0 ? -1.0 : 1.0);
      const auto s = summary_stats(std::span<const double>(xs));
      CHECK(s.mean == doctest::Approx(boost::math::statistics::mean(xs)).epsilon(1e-12));
      CHECK(s.stdev * s.stdev == doctest::Approx(boost::math::statistics::sample_variance(xs)).epsilon(1e-10));
      CHECK(*s.skewness == doctest::Approx(boost::math::statistics::skewness(xs)).epsilon(1e-9));
      CHECK(*s.excess_kurtosis == doctest::Approx(boost::math::statistics::excess_kurtosis(xs)).epsilon(1e-9));
    }
  }

  TEST_CASE("significand mode") {
    std::vector<ParseResult> values;
    for (auto text : {"-19722854000", "53579321000", "15580", "-0.004", "0", "7"}) values.push_back(parse_decimal(text));
    const auto s = summary_stats(values, StatsMode::Significand);
    CHECK(s.n == 5);
    CHECK(std::fabs(s.min) >= 1.0);
    CHECK(std::fabs(s.min) < 10.0);
    CHECK(std::fabs(s.max) >= 1.0);
    CHECK(std::fabs(s.max) < 10.0);
    CHECK(s.min == doctest::Approx(-4.0));
    CHECK(s.max == doctest::Approx(7.0));

    const auto raw = summary_stats(values, StatsMode::Raw);
    CHECK(raw.n == 6);
    CHECK(raw.min == -19722854000.0);
  }

  TEST_CASE("regenerated study panel reproduces the published counts") {
    const fixtures::PanelSizes sizes;
    const auto panel = load(fixtures::build_paper_panel_csv());
    const auto& pi = panel.at("PI");
    const auto& ta = panel.at("TA");
    CHECK(pi.present_count() == sizes.pi);
    CHECK(ta.present_count() == sizes.ta);
    const auto halves = split_by_sign(pi);
    CHECK(halves.negatives.present_count() == sizes.pi_neg);
    CHECK(halves.positives.present_count() == sizes.pi_pos);
    const auto ratio = derive_ratio(pi, ta);
    CHECK(ratio.series.present_count() == sizes.ratio);
    const auto ratio_split = split_by_sign(ratio.series);
    CHECK(ratio_split.negatives.present_count() == sizes.ratio_neg);
    CHECK(ratio_split.positives.present_count() == sizes.ratio_pos);

    auto counts_of = [](const PanelSeries& s, LawKind kind) {
      const auto values = s.values();
      const auto t = tally(std::span<const ParseResult>(values), kind);
      return std::vector<std::uint64_t>(t.counts().begin(), t.counts().end());
    };
    for (auto kind : {LawKind::FirstDigit, LawKind::SecondDigit}) {
      CHECK(counts_of(pi, kind) == fixtures::series("PI", kind).counts);
      CHECK(counts_of(halves.negatives, kind) == fixtures::series("PI(-)", kind).counts);
      CHECK(counts_of(halves.positives, kind) == fixtures::series("PI(+)", kind).counts);
      CHECK(counts_of(ta, kind) == fixtures::series("TA", kind).counts);
      CHECK(counts_of(ratio.series, kind) == fixtures::series("PI/TA", kind).counts);
    }
    CHECK(fixtures::build_paper_panel_csv() == fixtures::build_paper_panel_csv());
  }
}
