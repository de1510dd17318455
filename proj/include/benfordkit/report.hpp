// report.hpp - analysis pipeline from series or panels to conformity tables,
// plus serialization (json, csv, markdown) and plot-ready frequency data.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "benfordkit/conformity.hpp"
#include "benfordkit/dataset.hpp"
#include "benfordkit/decimal.hpp"
#include "benfordkit/digit_laws.hpp"

namespace benfordkit {

/// One (slice, law) result.
struct LawRecord {
  std::string label;
  DigitTally tally;
  std::vector<double> observed;
  std::vector<double> expected;
  TestResult test;

  LawKind kind() const noexcept { return tally.kind(); }
  friend bool operator==(const LawRecord&, const LawRecord&) = default;
};

inline constexpr std::string_view kMadConvention =
    "mad_paper is the sum over bins of |f_o - f_e|; mad_mean is mad_paper / K. "
    "conformity classifies mad_mean, conformity_sum classifies mad_paper, against the same thresholds.";

struct ReportMetadata {
  std::string mad_convention{kMadConvention};
  /// Random generator and seed for synthetic data, empty for real data.
  std::string generator;
  std::string tool_version;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct ConformityReport {
  std::string dataset;
  double alpha = kDefaultAlpha;
  ReportMetadata metadata;
  std::vector<LawRecord> records;

  friend bool operator==(const ConformityReport&, const ConformityReport&) = default;
};

std::string tool_version();

/// Tests one series against each requested law. Throws DegenerateInputError
/// when no value survives the zero / non-numeric exclusions.
std::vector<LawRecord> analyze(const std::string& label, std::span<const ParseResult> values,
                               std::span<const LawKind> laws, double alpha = kDefaultAlpha);
std::vector<LawRecord> analyze(const std::string& label, std::span<const DecimalValue> values,
                               std::span<const LawKind> laws, double alpha = kDefaultAlpha);

struct PanelSpec {
  struct Variable {
    std::string name;
    bool split = false;
  };
  struct Ratio {
    std::string numerator;
    std::string denominator;
    bool split = false;
  };
  std::vector<Variable> variables;
  std::vector<Ratio> ratios;
};

/// Parses "PI:split,TA" and "PI/TA,PI/TA:split". Throws ConfigError on malformed items.
PanelSpec parse_panel_spec(std::string_view variables, std::string_view ratios = {});

/// Slices in spec order: each variable (then its "(-)" and "(+)" halves when split),
/// then each ratio (then "num(-)/den" and "num(+)/den" when split); laws in the given
/// order within each slice. Unknown variables raise ConfigError.
ConformityReport analyze_panel(const Panel& panel, const PanelSpec& spec, std::span<const LawKind> laws,
                               double alpha = kDefaultAlpha, std::string dataset = "panel");

enum class ReportFormat { Json, Csv, Markdown };

/// "json", "csv", "md"/"markdown". Throws ConfigError otherwise.
ReportFormat parse_report_format(std::string_view name);

/// json is lossless; csv and markdown print frequencies and MAD values to 5
/// decimals and chi-squared figures to 4, slices in report order, bins ascending.
std::string render(const ConformityReport& report, ReportFormat format);

/// Inverse of render(report, ReportFormat::Json).
ConformityReport parse_report_json(std::string_view text);

struct PlotSeries {
  /// File-name safe identifier, e.g. "PI_neg_bl1" or "PI_over_TA_bl12".
  std::string name;
  /// "bin,observed,expected" header plus one row per bin.
  std::string text;
};

std::vector<PlotSeries> plot_data(const ConformityReport& report);

/// Expected-distribution table: text ("bin prob" rows to 5 decimals), csv, json or md.
std::string render_expected(LawKind kind, std::string_view format);

/// One-row table of summary statistics in text, csv, json or md.
std::string render_summary(const std::string& label, const SummaryStats& stats, std::string_view format);

}  // namespace benfordkit
