#include "benfordkit/dataset.hpp"

#include <algorithm>
#include <boost/tokenizer.hpp>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>

#include "benfordkit/errors.hpp"

namespace benfordkit {
namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_record(const std::string& line, char delimiter, std::size_t row) {
  using Separator = boost::escaped_list_separator<char>;
  // Backslash escapes are not part of CSV; use a control character that cannot occur in text data.
  Separator sep('\x01', delimiter, '"');
  std::vector<std::string> out;
  try {
    boost::tokenizer<Separator> tok(line, sep);
    for (const auto& field : tok) out.push_back(trim(field));
  } catch (const boost::escaped_list_error& e) {
    throw IngestionError(row, 0, std::string("malformed record: ") + e.what());
  }
  return out;
}

bool blank_line(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

int parse_year(const std::string& text, std::size_t row, std::size_t column, const IngestConfig& config) {
  int year = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw IngestionError(row, column, "fiscal year '" + text + "' is not an integer");
  }
  if ((config.min_year && year < *config.min_year) || (config.max_year && year > *config.max_year)) {
    throw IngestionError(row, column, "fiscal year " + text + " outside the configured range");
  }
  return year;
}

std::optional<std::string> parse_cell(std::string cell, std::size_t row, std::size_t column,
                                      const IngestConfig& config) {
  if (config.thousands_separator) std::erase(cell, *config.thousands_separator);
  cell = trim(std::move(cell));
  if (cell.empty()) return std::nullopt;
  if (std::holds_alternative<NonNumeric>(parse_decimal(cell))) {
    throw IngestionError(row, column, "value '" + cell + "' is not a number");
  }
  return cell;
}

class PanelBuilder {
 public:
  PanelSeries& series(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return panel_.series[it->second];
    index_.emplace(name, panel_.series.size());
    panel_.series.push_back(PanelSeries{name, {}});
    return panel_.series.back();
  }

  void put(const std::string& variable, PanelKey key, std::optional<std::string> value, std::size_t row,
           std::size_t column) {
    if (variable.empty()) throw IngestionError(row, column, "empty variable name");
    if (!value) ++panel_.missing_cells;
    auto [it, inserted] = series(variable).entries.emplace(std::move(key), std::move(value));
    if (!inserted) {
      throw IngestionError(row, column,
                           "duplicate entry for (" + it->first.company + ", " + std::to_string(it->first.year) +
                               ", " + variable + ")");
    }
  }

  Panel finish(std::size_t rows) && {
    panel_.rows_read = rows;
    return std::move(panel_);
  }

 private:
  Panel panel_;
  std::map<std::string, std::size_t> index_;
};

std::size_t column_of(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (lower(header[i]) == name) return i;
  }
  return header.size();
}

}  // namespace

std::size_t PanelSeries::present_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& kv) { return kv.second.has_value(); }));
}

std::vector<ParseResult> PanelSeries::values() const {
  std::vector<ParseResult> out;
  out.reserve(entries.size());
  for (const auto& [key, value] : entries) {
    if (value) out.push_back(parse_decimal(*value));
  }
  return out;
}

const PanelSeries* Panel::find(const std::string& variable) const {
  for (const auto& s : series) {
    if (s.variable == variable) return &s;
  }
  return nullptr;
}

const PanelSeries& Panel::at(const std::string& variable) const {
  if (const auto* s = find(variable)) return *s;
  throw ConfigError("unknown variable '" + variable + "'");
}

Panel load_panel(std::istream& in, const IngestConfig& config) {
  std::string line;
  std::size_t row = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (row == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (!blank_line(line)) {
      header = split_record(line, config.delimiter, row);
      break;
    }
  }
  if (header.empty()) throw IngestionError(0, 0, "input is empty (no header row)");

  const auto company_col = column_of(header, "company");
  const auto year_col = column_of(header, "year");
  if (company_col == header.size()) throw IngestionError(row, 0, "header has no 'company' column");
  if (year_col == header.size()) throw IngestionError(row, 0, "header has no 'year' column");

  std::size_t variable_col = header.size();
  std::size_t value_col = header.size();
  std::vector<std::size_t> wide_cols;
  if (config.layout == PanelLayout::Long) {
    variable_col = column_of(header, "variable");
    value_col = column_of(header, "value");
    if (variable_col == header.size() || value_col == header.size()) {
      throw IngestionError(row, 0, "long-form header needs 'variable' and 'value' columns");
    }
  } else {
    std::set<std::string> seen;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i == company_col || i == year_col) continue;
      if (header[i].empty()) throw IngestionError(row, i + 1, "empty variable name in header");
      if (!seen.insert(header[i]).second) throw IngestionError(row, i + 1, "duplicate column '" + header[i] + "'");
      wide_cols.push_back(i);
    }
    if (wide_cols.empty()) throw IngestionError(row, 0, "wide-form header has no variable columns");
  }

  PanelBuilder builder;
  if (config.layout == PanelLayout::Wide) {
    for (auto c : wide_cols) builder.series(header[c]);
  }
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_line(line)) continue;
    ++data_rows;
    auto fields = split_record(line, config.delimiter, row);
    if (fields.size() != header.size()) {
      throw IngestionError(row, 0,
                           "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));
    }
    const auto& company = fields[company_col];
    if (company.empty()) throw IngestionError(row, company_col + 1, "empty company identifier");
    const int year = parse_year(fields[year_col], row, year_col + 1, config);

    if (config.layout == PanelLayout::Long) {
      builder.put(fields[variable_col], PanelKey{company, year},
                  parse_cell(fields[value_col], row, value_col + 1, config), row, variable_col + 1);
    } else {
      for (auto c : wide_cols) {
        builder.put(header[c], PanelKey{company, year}, parse_cell(fields[c], row, c + 1, config), row, c + 1);
      }
    }
  }
  return std::move(builder).finish(data_rows);
}

SignSplit split_by_sign(std::span<const ParseResult> values) {
  SignSplit out;
  for (const auto& v : values) {
    if (const auto* d = std::get_if<DecimalValue>(&v)) {
      (d->negative() ? out.negatives : out.positives).push_back(*d);
    } else if (std::holds_alternative<Zero>(v)) {
      ++out.zero_count;
    } else {
      ++out.nonnumeric_count;
    }
  }
  return out;
}

SeriesSplit split_by_sign(const PanelSeries& series) {
  SeriesSplit out{PanelSeries{series.variable + "(-)", {}}, PanelSeries{series.variable + "(+)", {}}, 0};
  for (const auto& [key, cell] : series.entries) {
    if (!cell) continue;
    const auto parsed = parse_decimal(*cell);
    if (const auto* d = std::get_if<DecimalValue>(&parsed)) {
      (d->negative() ? out.negatives : out.positives).entries.emplace(key, cell);
    } else if (std::holds_alternative<Zero>(parsed)) {
      ++out.zero_count;
    }
  }
  return out;
}

RatioSeries derive_ratio(const PanelSeries& numerator, const PanelSeries& denominator,
                         std::optional<std::string> name) {
  RatioSeries out;
  out.series.variable = name ? *name : numerator.variable + "/" + denominator.variable;
  for (const auto& [key, num_cell] : numerator.entries) {
    auto den_it = denominator.entries.find(key);
    if (!num_cell || den_it == denominator.entries.end() || !den_it->second) {
      ++out.missing_pairs;
      continue;
    }
    const auto num = parse_decimal(*num_cell);
    const auto den = parse_decimal(*den_it->second);
    const auto* den_value = std::get_if<DecimalValue>(&den);
    if (!den_value) {
      ++out.zero_denominators;
      continue;
    }
    std::string text = "0";
    if (const auto* num_value = std::get_if<DecimalValue>(&num)) {
      const auto ratio = decimal_from_double(num_value->to_double() / den_value->to_double());
      if (const auto* r = std::get_if<DecimalValue>(&ratio)) text = render_decimal(*r);
    }
    out.series.entries.emplace(key, std::move(text));
  }
  // Keys only the denominator has are missing pairs too.
  for (const auto& [key, den_cell] : denominator.entries) {
    if (!numerator.entries.contains(key)) ++out.missing_pairs;
  }
  return out;
}

SummaryStats summary_stats(std::span<const double> values) {
  const auto n = values.size();
  if (n < 2) throw DegenerateInputError("summary statistics need at least two values");
  SummaryStats s;
  s.n = n;
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  s.min = *mn;
  s.max = *mx;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double d = v - s.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  s.stdev = std::sqrt(m2 / static_cast<double>(n - 1));
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);
  m4 /= static_cast<double>(n);
  if (m2 > 0.0) {
    s.skewness = m3 / std::pow(m2, 1.5);
    s.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  if (s.mean != 0.0) s.cv = s.stdev / s.mean;
  return s;
}

SummaryStats summary_stats(std::span<const ParseResult> values, StatsMode mode) {
  std::vector<double> xs;
  xs.reserve(values.size());
  for (const auto& v : values) {
    if (const auto* d = std::get_if<DecimalValue>(&v)) {
      xs.push_back(mode == StatsMode::Raw ? d->to_double() : significand(*d));
    } else if (std::holds_alternative<Zero>(v) && mode == StatsMode::Raw) {
      xs.push_back(0.0);
    }
  }
  return summary_stats(std::span<const double>(xs));
}

}  // namespace benfordkit
