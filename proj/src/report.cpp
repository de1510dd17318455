#include "benfordkit/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "benfordkit/errors.hpp"

namespace benfordkit {
namespace {

using nlohmann::json;

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

constexpr int kFrequencyDecimals = 5;
constexpr int kStatisticDecimals = 4;

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string law_title(LawKind kind) {
  switch (kind) {
    case LawKind::FirstDigit: return "BL1 (first digit)";
    case LawKind::SecondDigit: return "BL2 (second digit)";
    case LawKind::FirstTwoDigits: return "BL12 (first two digits)";
  }
  return "";
}

std::string upper_law(LawKind kind) {
  std::string s(law_name(kind));
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string trim_copy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = trim_copy(text.substr(pos, comma - pos));
    if (!item.empty()) out.push_back(std::move(item));
    pos = comma + 1;
  }
  return out;
}

// "NAME" or "NAME:split"
std::pair<std::string, bool> split_flag(const std::string& item) {
  const auto colon = item.rfind(':');
  if (colon == std::string::npos) return {item, false};
  const auto flag = trim_copy(std::string_view(item).substr(colon + 1));
  if (flag != "split") throw ConfigError("unknown modifier ':" + flag + "' in '" + item + "'");
  return {trim_copy(std::string_view(item).substr(0, colon)), true};
}

void add_slice(ConformityReport& report, const PanelSeries& series, std::span<const LawKind> laws) {
  auto records = analyze(series.variable, series.values(), laws, report.alpha);
  std::move(records.begin(), records.end(), std::back_inserter(report.records));
}

json record_to_json(const LawRecord& r) {
  const auto range = r.tally.bins();
  std::vector<int> bins;
  for (int b = range.first; b <= range.last; ++b) bins.push_back(b);
  return json{{"label", r.label},
              {"law", law_name(r.kind())},
              {"n", r.tally.n_included()},
              {"excluded", {{"zero", r.tally.n_excluded_zero()}, {"nonnumeric", r.tally.n_excluded_nonnumeric()}}},
              {"bins", bins},
              {"counts", r.tally.counts()},
              {"observed", r.observed},
              {"expected", r.expected},
              {"chi2", r.test.chi2},
              {"df", r.test.df},
              {"chi2_critical", r.test.chi2_critical},
              {"chi2_reject", r.test.chi2_reject},
              {"p_value", r.test.p_value},
              {"mad_paper", r.test.mad_paper},
              {"mad_mean", r.test.mad_mean},
              {"conformity", conformity_name(r.test.conformity)},
              {"conformity_sum", conformity_name(r.test.conformity_sum)},
              {"mad_forms_disagree", r.test.mad_forms_disagree()},
              {"alpha", r.test.alpha}};
}

LawRecord record_from_json(const json& j) {
  const auto kind = parse_law(j.at("law").get<std::string>());
  const auto counts = j.at("counts").get<std::vector<std::uint64_t>>();
  auto tally = DigitTally::from_counts(kind, counts);
  tally.add_excluded_zero(j.at("excluded").at("zero").get<std::uint64_t>());
  tally.add_excluded_nonnumeric(j.at("excluded").at("nonnumeric").get<std::uint64_t>());
  if (tally.n_included() != j.at("n").get<std::uint64_t>()) throw ConfigError("report record n does not match counts");
  TestResult t;
  t.kind = kind;
  t.alpha = j.at("alpha").get<double>();
  t.chi2 = j.at("chi2").get<double>();
  t.df = j.at("df").get<int>();
  t.chi2_critical = j.at("chi2_critical").get<double>();
  t.chi2_reject = j.at("chi2_reject").get<bool>();
  t.p_value = j.at("p_value").get<double>();
  t.mad_paper = j.at("mad_paper").get<double>();
  t.mad_mean = j.at("mad_mean").get<double>();
  t.conformity = parse_conformity(j.at("conformity").get<std::string>());
  t.conformity_sum = parse_conformity(j.at("conformity_sum").get<std::string>());
  return LawRecord{j.at("label").get<std::string>(), std::move(tally), j.at("observed").get<std::vector<double>>(),
                   j.at("expected").get<std::vector<double>>(), t};
}

std::string render_json(const ConformityReport& report) {
  json slices = json::array();
  for (const auto& r : report.records) slices.push_back(record_to_json(r));
  json j{{"dataset", report.dataset},
         {"alpha", report.alpha},
         {"metadata",
          {{"mad_convention", report.metadata.mad_convention},
           {"generator", report.metadata.generator},
           {"tool_version", report.metadata.tool_version}}},
         {"slices", std::move(slices)}};
  return j.dump(2) + "\n";
}

std::string render_csv(const ConformityReport& report) {
  std::ostringstream out;
  out << "dataset,slice,law,row,bin,count,observed,expected,chi2,df,chi2_critical,chi2_reject,p_value,"
         "mad_paper,mad_mean,conformity,conformity_sum\n";
  const auto dataset = csv_field(report.dataset);
  for (const auto& r : report.records) {
    const auto prefix = dataset + "," + csv_field(r.label) + "," + std::string(law_name(r.kind()));
    const auto range = r.tally.bins();
    for (int b = range.first; b <= range.last; ++b) {
      const auto i = static_cast<std::size_t>(b - range.first);
      out << prefix << ",bin," << b << ',' << r.tally.counts()[i] << ',' << fixed(r.observed[i], kFrequencyDecimals)
          << ',' << fixed(r.expected[i], kFrequencyDecimals) << ",,,,,,,,,\n";
    }
    const auto& t = r.test;
    out << prefix << ",stats,," << r.tally.n_included() << ",,," << fixed(t.chi2, kStatisticDecimals) << ','
        << t.df << ',' << fixed(t.chi2_critical, kStatisticDecimals) << ',' << (t.chi2_reject ? "true" : "false")
        << ',' << fixed(t.p_value, kStatisticDecimals) << ',' << fixed(t.mad_paper, kFrequencyDecimals) << ','
        << fixed(t.mad_mean, kFrequencyDecimals) << ',' << conformity_name(t.conformity) << ','
        << conformity_name(t.conformity_sum) << '\n';
  }
  return out.str();
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string render_markdown(const ConformityReport& report) {
  std::ostringstream out;
  out << "# Digit-law conformity: " << report.dataset << "\n";
  std::vector<LawKind> laws;
  for (const auto& r : report.records) {
    if (std::find(laws.begin(), laws.end(), r.kind()) == laws.end()) laws.push_back(r.kind());
  }
  for (auto kind : laws) {
    std::vector<const LawRecord*> recs;
    for (const auto& r : report.records) {
      if (r.kind() == kind) recs.push_back(&r);
    }
    const auto law = upper_law(kind);
    out << "\n## " << law_title(kind) << "\n\n";

    std::vector<std::string> header{"bin"};
    for (auto* r : recs) header.push_back("count " + r->label);
    for (auto* r : recs) header.push_back("f_o " + r->label);
    header.push_back(law);
    out << md_row(header);
    out << md_row(std::vector<std::string>(header.size(), "---"));

    const auto range = bin_range(kind);
    const auto& expected = recs.front()->expected;
    for (int b = range.first; b <= range.last; ++b) {
      const auto i = static_cast<std::size_t>(b - range.first);
      std::vector<std::string> row{std::to_string(b)};
      for (auto* r : recs) row.push_back(std::to_string(r->tally.counts()[i]));
      for (auto* r : recs) row.push_back(fixed(r->observed[i], kFrequencyDecimals));
      row.push_back(fixed(expected[i], kFrequencyDecimals));
      out << md_row(row);
    }

    auto stat_row = [&](const std::string& name, auto cell) {
      std::vector<std::string> row{name};
      for (auto* r : recs) row.push_back(cell(*r));
      row.resize(header.size());
      out << md_row(row);
    };
    stat_row("N", [](const LawRecord& r) { return std::to_string(r.tally.n_included()); });
    stat_row("χ²", [](const LawRecord& r) { return fixed(r.test.chi2, kStatisticDecimals); });
    stat_row("χ²_c", [](const LawRecord& r) { return fixed(r.test.chi2_critical, kStatisticDecimals); });
    stat_row("reject", [](const LawRecord& r) { return std::string(r.test.chi2_reject ? "yes" : "no"); });
    stat_row("MAD (paper-sum)", [](const LawRecord& r) { return fixed(r.test.mad_paper, kFrequencyDecimals); });
    stat_row("MAD (mean)", [](const LawRecord& r) { return fixed(r.test.mad_mean, kFrequencyDecimals); });
    stat_row("class (mean)", [](const LawRecord& r) { return std::string(conformity_name(r.test.conformity)); });
    stat_row("class (paper-sum)",
             [](const LawRecord& r) { return std::string(conformity_name(r.test.conformity_sum)); });

    const auto t = mad_thresholds(kind);
    out << "\nχ²_c at α = " << report.alpha << " for D = " << bin_count(kind) - 1
        << "; close conformity if MAD ≤ " << t.close << ", acceptable ≤ " << t.acceptable << ", marginal ≤ "
        << t.marginal << ".\n";
  }
  out << "\nMAD convention: " << report.metadata.mad_convention << "\n";
  if (!report.metadata.generator.empty()) out << "Generator: " << report.metadata.generator << "\n";
  return out.str();
}

std::string plot_name(const std::string& label, LawKind kind) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const auto rest = std::string_view(label).substr(i);
    if (rest.starts_with("(-)")) {
      out += "_neg";
      i += 2;
    } else if (rest.starts_with("(+)")) {
      out += "_pos";
      i += 2;
    } else if (label[i] == '/') {
      out += "_over_";
    } else if (std::isalnum(static_cast<unsigned char>(label[i])) || label[i] == '-' || label[i] == '.') {
      out += label[i];
    } else {
      out += '_';
    }
  }
  return out + "_" + std::string(law_name(kind));
}

}  // namespace

std::string tool_version() { return std::string("benfordkit ") + BENFORDKIT_VERSION; }

std::vector<LawRecord> analyze(const std::string& label, std::span<const ParseResult> values,
                               std::span<const LawKind> laws, double alpha) {
  std::vector<LawRecord> out;
  for (auto kind : laws) {
    auto t = tally(values, kind);
    if (t.n_included() == 0) throw DegenerateInputError("slice '" + label + "' has no nonzero numeric values");
    const ExpectedDistribution expected(kind);
    auto test = run_test(t, expected, alpha);
    auto observed = t.frequencies();
    out.push_back(LawRecord{label, std::move(t), std::move(observed), expected.probabilities(), test});
  }
  return out;
}

std::vector<LawRecord> analyze(const std::string& label, std::span<const DecimalValue> values,
                               std::span<const LawKind> laws, double alpha) {
  std::vector<ParseResult> parsed(values.begin(), values.end());
  return analyze(label, parsed, laws, alpha);
}

PanelSpec parse_panel_spec(std::string_view variables, std::string_view ratios) {
  PanelSpec spec;
  for (const auto& item : split_list(variables)) {
    auto [name, split] = split_flag(item);
    if (name.empty()) throw ConfigError("empty variable name in '" + item + "'");
    spec.variables.push_back({name, split});
  }
  for (const auto& item : split_list(ratios)) {
    auto [body, split] = split_flag(item);
    const auto slash = body.find('/');
    if (slash == std::string::npos) throw ConfigError("ratio '" + item + "' must look like NUM/DEN");
    auto num = trim_copy(std::string_view(body).substr(0, slash));
    auto den = trim_copy(std::string_view(body).substr(slash + 1));
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) {
      throw ConfigError("ratio '" + item + "' must look like NUM/DEN");
    }
    spec.ratios.push_back({num, den, split});
  }
  if (spec.variables.empty() && spec.ratios.empty()) throw ConfigError("no variables or ratios to analyze");
  return spec;
}

ConformityReport analyze_panel(const Panel& panel, const PanelSpec& spec, std::span<const LawKind> laws,
                               double alpha, std::string dataset) {
  if (laws.empty()) throw ConfigError("law set is empty");
  // Resolve every name before doing any work so config errors win over data errors.
  for (const auto& v : spec.variables) panel.at(v.name);
  for (const auto& r : spec.ratios) {
    panel.at(r.numerator);
    panel.at(r.denominator);
  }

  ConformityReport report;
  report.dataset = std::move(dataset);
  report.alpha = alpha;
  report.metadata.tool_version = tool_version();

  for (const auto& v : spec.variables) {
    const auto& series = panel.at(v.name);
    add_slice(report, series, laws);
    if (v.split) {
      const auto halves = split_by_sign(series);
      add_slice(report, halves.negatives, laws);
      add_slice(report, halves.positives, laws);
    }
  }
  for (const auto& r : spec.ratios) {
    const auto& num = panel.at(r.numerator);
    const auto& den = panel.at(r.denominator);
    add_slice(report, derive_ratio(num, den).series, laws);
    if (r.split) {
      const auto halves = split_by_sign(num);
      add_slice(report, derive_ratio(halves.negatives, den).series, laws);
      add_slice(report, derive_ratio(halves.positives, den).series, laws);
    }
  }
  return report;
}

ReportFormat parse_report_format(std::string_view requested) {
  const auto name = lowercase(requested);
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "md" || name == "markdown") return ReportFormat::Markdown;
  throw ConfigError("unknown format '" + std::string(name) + "' (expected json, csv or md)");
}

std::string render(const ConformityReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Markdown: return render_markdown(report);
  }
  return {};
}

ConformityReport parse_report_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid report json: ") + e.what());
  }
  try {
    ConformityReport report;
    report.dataset = j.at("dataset").get<std::string>();
    report.alpha = j.at("alpha").get<double>();
    const auto& meta = j.at("metadata");
    report.metadata.mad_convention = meta.at("mad_convention").get<std::string>();
    report.metadata.generator = meta.at("generator").get<std::string>();
    report.metadata.tool_version = meta.at("tool_version").get<std::string>();
    for (const auto& s : j.at("slices")) report.records.push_back(record_from_json(s));
    return report;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report json does not match the schema: ") + e.what());
  }
}

std::vector<PlotSeries> plot_data(const ConformityReport& report) {
  std::vector<PlotSeries> out;
  for (const auto& r : report.records) {
    std::ostringstream text;
    text << "bin,observed,expected\n";
    const auto range = r.tally.bins();
    for (int b = range.first; b <= range.last; ++b) {
      const auto i = static_cast<std::size_t>(b - range.first);
      text << b << ',' << fixed(r.observed[i], 8) << ',' << fixed(r.expected[i], 8) << '\n';
    }
    out.push_back({plot_name(r.label, r.kind()), text.str()});
  }
  return out;
}

std::string render_expected(LawKind kind, std::string_view requested) {
  const auto format = lowercase(requested);
  const ExpectedDistribution dist(kind);
  const auto range = dist.bins();
  std::ostringstream out;
  if (format == "text") {
    for (int b = range.first; b <= range.last; ++b) out << b << ' ' << fixed(dist.at(b), kFrequencyDecimals) << '\n';
  } else if (format == "csv") {
    out << "bin,probability\n";
    for (int b = range.first; b <= range.last; ++b) out << b << ',' << fixed(dist.at(b), 12) << '\n';
  } else if (format == "md" || format == "markdown") {
    out << "| bin | " << upper_law(kind) << " |\n| --- | --- |\n";
    for (int b = range.first; b <= range.last; ++b) {
      out << "| " << b << " | " << fixed(dist.at(b), kStatisticDecimals) << " |\n";
    }
  } else if (format == "json") {
    json probs = json::array();
    for (int b = range.first; b <= range.last; ++b) probs.push_back({{"bin", b}, {"probability", dist.at(b)}});
    out << json{{"law", law_name(kind)}, {"bins", std::move(probs)}}.dump(2) << '\n';
  } else {
    throw ConfigError("unknown format '" + std::string(format) + "' (expected text, csv, json or md)");
  }
  return out.str();
}

std::string render_summary(const std::string& label, const SummaryStats& s, std::string_view requested) {
  const auto format = lowercase(requested);
  auto opt = [](const std::optional<double>& v, int decimals) { return v ? fixed(*v, decimals) : std::string("NA"); };
  const std::vector<std::string> names{"N", "min", "max", "mean", "stdev", "skew", "kurt", "cv"};
  const std::vector<std::string> values{std::to_string(s.n), fixed(s.min, 5),  fixed(s.max, 5),
                                        fixed(s.mean, 5),    fixed(s.stdev, 5), opt(s.skewness, 5),
                                        opt(s.excess_kurtosis, 5), opt(s.cv, 5)};
  std::ostringstream out;
  if (format == "json") {
    json j{{"label", label}, {"n", s.n}, {"min", s.min}, {"max", s.max}, {"mean", s.mean}, {"stdev", s.stdev}};
    j["skewness"] = s.skewness ? json(*s.skewness) : json(nullptr);
    j["excess_kurtosis"] = s.excess_kurtosis ? json(*s.excess_kurtosis) : json(nullptr);
    j["cv"] = s.cv ? json(*s.cv) : json(nullptr);
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "variable";
    for (const auto& n : names) out << ',' << n;
    out << '\n' << csv_field(label);
    for (const auto& v : values) out << ',' << v;
    out << '\n';
  } else if (format == "md" || format == "markdown" || format == "text") {
    std::vector<std::string> header{"variable"};
    header.insert(header.end(), names.begin(), names.end());
    std::vector<std::string> row{label};
    row.insert(row.end(), values.begin(), values.end());
    out << md_row(header) << md_row(std::vector<std::string>(header.size(), "---")) << md_row(row);
  } else {
    throw ConfigError("unknown format '" + std::string(format) + "' (expected text, csv, json or md)");
  }
  return out.str();
}

}  // namespace benfordkit
