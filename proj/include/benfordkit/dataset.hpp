// dataset.hpp - panel-format ingestion and shaping: missing cells, sign
// splitting, paired ratios and summary statistics.
#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "benfordkit/decimal.hpp"

namespace benfordkit {

/// (company, fiscal year). Years are opaque labels; no calendar arithmetic is done on them.
struct PanelKey {
  std::string company;
  int year = 0;

  friend auto operator<=>(const PanelKey&, const PanelKey&) = default;
  friend bool operator==(const PanelKey&, const PanelKey&) = default;
};

/// One variable over the panel. A missing cell is a key mapped to nullopt.
struct PanelSeries {
  std::string variable;
  std::map<PanelKey, std::optional<std::string>> entries;

  std::size_t present_count() const;
  std::size_t missing_count() const { return entries.size() - present_count(); }
  /// Parsed present values in key order.
  std::vector<ParseResult> values() const;
};

enum class PanelLayout { Long, Wide };

struct IngestConfig {
  char delimiter = ',';
  PanelLayout layout = PanelLayout::Long;
  /// Remove this character from value cells before parsing (e.g. ',' with a ';' delimiter).
  std::optional<char> thousands_separator;
  /// Inclusive fiscal-year window; rows outside it are an ingestion error.
  std::optional<int> min_year;
  std::optional<int> max_year;
};

struct Panel {
  /// Series in order of first appearance in the file.
  std::vector<PanelSeries> series;
  std::size_t rows_read = 0;
  std::size_t missing_cells = 0;

  const PanelSeries* find(const std::string& variable) const;
  /// Throws ConfigError when the variable does not exist.
  const PanelSeries& at(const std::string& variable) const;
};

/// Reads a delimited table with a header row.
///  long form: company, year, variable, value
///  wide form: company, year, <one column per variable>
/// Column names are matched case-insensitively. Any malformed row rejects the
/// whole file with an IngestionError that names the row and column.
Panel load_panel(std::istream& in, const IngestConfig& config = {});

struct SignSplit {
  std::vector<DecimalValue> negatives;
  std::vector<DecimalValue> positives;
  std::size_t zero_count = 0;
  std::size_t nonnumeric_count = 0;
};

SignSplit split_by_sign(std::span<const ParseResult> values);

struct SeriesSplit {
  PanelSeries negatives;
  PanelSeries positives;
  std::size_t zero_count = 0;
};

/// Series-level split; the halves are named "<var>(-)" and "<var>(+)" and keep only present cells.
SeriesSplit split_by_sign(const PanelSeries& series);

struct RatioSeries {
  PanelSeries series;
  std::size_t missing_pairs = 0;
  std::size_t zero_denominators = 0;
};

/// numerator / denominator on the keys where both are present and the denominator
/// is nonzero, rendered at 15 significant digits. Name defaults to "num/den".
RatioSeries derive_ratio(const PanelSeries& numerator, const PanelSeries& denominator,
                         std::optional<std::string> name = std::nullopt);

enum class StatsMode { Raw, Significand };

struct SummaryStats {
  std::size_t n = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator).
  double stdev = 0.0;
  /// m3 / m2^(3/2) with central moments m_k = mean((x - mean)^k); empty when m2 == 0.
  std::optional<double> skewness;
  /// m4 / m2^2 - 3; empty when m2 == 0.
  std::optional<double> excess_kurtosis;
  /// stdev / mean; empty when mean == 0.
  std::optional<double> cv;
};

/// Zero and non-numeric values are skipped in significand mode (they have no significand)
/// and non-numeric values are skipped in raw mode. Throws DegenerateInputError when
/// fewer than two values remain.
SummaryStats summary_stats(std::span<const ParseResult> values, StatsMode mode);
SummaryStats summary_stats(std::span<const double> values);

}  // namespace benfordkit
