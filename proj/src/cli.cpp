#include "benfordkit/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "benfordkit/dataset.hpp"
#include "benfordkit/errors.hpp"
#include "benfordkit/report.hpp"
#include "benfordkit/synth.hpp"

namespace benfordkit {
namespace {

struct InputOptions {
  std::string path;
  std::string layout = "long";
  std::string delimiter = ",";
  std::string thousands;
  std::optional<int> min_year;
  std::optional<int> max_year;
};

struct AnalyzeOptions {
  InputOptions input;
  std::string variables;
  std::vector<std::string> ratios;
  std::string laws = "bl1,bl2,bl12";
  double alpha = kDefaultAlpha;
  std::string format = "md";
  std::string output;
  std::string plot_dir;
  std::string dataset;
};

struct SynthOptions {
  SynthConfig config;
  std::string variable = "X";
  bool self_test = false;
  std::string laws = "bl1,bl2,bl12";
  double alpha = kDefaultAlpha;
  std::string format = "md";
  std::string output;
  std::string sample_output;
};

struct StatsOptions {
  InputOptions input;
  std::string variable;
  std::string sign = "all";
  std::string mode = "raw";
  std::string format = "md";
  std::string output;
};

void add_input_options(CLI::App& cmd, InputOptions& o) {
  cmd.add_option("-i,--input", o.path, "Delimited panel file")->required();
  cmd.add_option("--layout", o.layout, "Table layout: long (company,year,variable,value) or wide")
      ->check(CLI::IsMember({"long", "wide"}));
  cmd.add_option("-d,--delimiter", o.delimiter, "Field delimiter (single character)");
  cmd.add_option("--thousands-separator", o.thousands, "Character stripped from value cells before parsing");
  cmd.add_option("--min-year", o.min_year, "Reject rows before this fiscal year");
  cmd.add_option("--max-year", o.max_year, "Reject rows after this fiscal year");
}

IngestConfig ingest_config(const InputOptions& o) {
  if (o.delimiter.size() != 1) throw ConfigError("delimiter must be a single character");
  if (o.thousands.size() > 1) throw ConfigError("thousands separator must be a single character");
  IngestConfig c;
  c.delimiter = o.delimiter[0];
  c.layout = o.layout == "wide" ? PanelLayout::Wide : PanelLayout::Long;
  if (!o.thousands.empty()) c.thousands_separator = o.thousands[0];
  c.min_year = o.min_year;
  c.max_year = o.max_year;
  return c;
}

// Missing or unreadable input files are data errors.
Panel read_panel(const InputOptions& o) {
  const auto config = ingest_config(o);
  std::ifstream in(o.path, std::ios::binary);
  if (!in) throw IngestionError(0, 0, "cannot open input file '" + o.path + "'");
  return load_panel(in, config);
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie strictly between 0 and 1");
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot write output file '" + path + "'");
  file << text;
}

std::string sample_csv(const std::vector<DecimalValue>& values, const std::string& variable) {
  std::ostringstream out;
  out << "company,year,variable,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << "S" << (i / 14 + 1) << ',' << 2009 + static_cast<int>(i % 14) << ',' << variable << ','
        << render_decimal(values[i]) << '\n';
  }
  return out.str();
}

int cmd_expected(const std::string& law, const std::string& format, std::ostream& out) {
  out << render_expected(parse_law(law), format);
  return kExitOk;
}

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out) {
  const auto laws = parse_law_list(o.laws);
  check_alpha(o.alpha);
  const auto format = parse_report_format(o.format);
  std::string ratios;
  for (const auto& r : o.ratios) ratios += r + ",";
  std::optional<PanelSpec> spec;
  if (!o.variables.empty() || !ratios.empty()) spec = parse_panel_spec(o.variables, ratios);

  const auto panel = read_panel(o.input);
  if (!spec) {
    spec.emplace();
    for (const auto& s : panel.series) spec->variables.push_back({s.variable, false});
  }
  const auto dataset = o.dataset.empty() ? std::filesystem::path(o.input.path).filename().string() : o.dataset;
  const auto report = analyze_panel(panel, *spec, laws, o.alpha, dataset);
  write_output(o.output, render(report, format), out);

  if (!o.plot_dir.empty()) {
    std::filesystem::create_directories(o.plot_dir);
    for (const auto& p : plot_data(report)) {
      std::ofstream file(std::filesystem::path(o.plot_dir) / (p.name + ".csv"), std::ios::binary);
      if (!file) throw ConfigError("cannot write plot data into '" + o.plot_dir + "'");
      file << p.text;
    }
  }
  return kExitOk;
}

int cmd_synth(const SynthOptions& o, std::ostream& out) {
  o.config.validate();
  const auto laws = parse_law_list(o.laws);
  check_alpha(o.alpha);
  const auto format = parse_report_format(o.format);
  if (o.variable.empty() || o.variable.find_first_of(",\"\n") != std::string::npos) {
    throw ConfigError("variable name must be non-empty and free of commas and quotes");
  }

  const auto csv = sample_csv(generate(o.config), o.variable);
  if (!o.self_test) {
    write_output(o.output, csv, out);
    return kExitOk;
  }
  if (!o.sample_output.empty()) write_output(o.sample_output, csv, out);

  std::istringstream in(csv);
  const auto panel = load_panel(in);
  PanelSpec spec;
  spec.variables.push_back({o.variable, o.config.negative_fraction > 0.0 && o.config.negative_fraction < 1.0});
  auto report = analyze_panel(panel, spec, laws, o.alpha, "synthetic");
  std::ostringstream generator;
  generator << kGeneratorName << " seed=" << o.config.seed << " n=" << o.config.n << " exponents=["
            << o.config.exponent_min << "," << o.config.exponent_max << "]";
  if (o.config.inject_rounding > 0.0) {
    generator << " inject_rounding=" << o.config.inject_rounding << " injection_seed=" << injection_seed(o.config.seed);
  }
  report.metadata.generator = generator.str();
  write_output(o.output, render(report, format), out);
  return kExitOk;
}

int cmd_stats(const StatsOptions& o, std::ostream& out) {
  const auto mode = o.mode == "significand" ? StatsMode::Significand : StatsMode::Raw;
  const auto panel = read_panel(o.input);

  PanelSeries series;
  if (const auto slash = o.variable.find('/'); slash != std::string::npos) {
    const auto& num = panel.at(o.variable.substr(0, slash));
    const auto& den = panel.at(o.variable.substr(slash + 1));
    series = derive_ratio(num, den).series;
  } else {
    series = panel.at(o.variable);
  }
  std::string label = o.variable;
  if (o.sign != "all") {
    auto halves = split_by_sign(series);
    series = o.sign == "neg" ? std::move(halves.negatives) : std::move(halves.positives);
    label += o.sign == "neg" ? "(-)" : "(+)";
  }
  if (mode == StatsMode::Significand) label += " [significand]";
  const auto values = series.values();
  write_output(o.output, render_summary(label, summary_stats(values, mode), o.format), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"benfordkit - digit-law conformity analytics for numeric and panel data", "benfordkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(BENFORDKIT_VERSION));

  std::string law;
  std::string expected_format = "text";
  auto* expected = app.add_subcommand("expected", "Print an expected Benford distribution");
  expected->add_option("-l,--law", law, "bl1, bl2 or bl12")->required();
  expected->add_option("-f,--format", expected_format, "text, csv, json or md");

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Test panel variables, sign splits and ratios");
  add_input_options(*analyze_cmd, analyze_opts.input);
  analyze_cmd->add_option("-v,--variables", analyze_opts.variables,
                          "Comma separated variables, NAME or NAME:split (default: every variable)");
  analyze_cmd->add_option("-r,--ratio", analyze_opts.ratios, "Ratio NUM/DEN or NUM/DEN:split (repeatable)")
      ->delimiter(',');
  analyze_cmd->add_option("-L,--laws", analyze_opts.laws, "Comma separated laws (bl1,bl2,bl12)");
  analyze_cmd->add_option("-a,--alpha", analyze_opts.alpha, "Significance level of the chi-squared test");
  analyze_cmd->add_option("-f,--format", analyze_opts.format, "md, json or csv");
  analyze_cmd->add_option("-o,--output", analyze_opts.output, "Output file (default: standard output)");
  analyze_cmd->add_option("--plot-dir", analyze_opts.plot_dir, "Directory for per-record bin,observed,expected files");
  analyze_cmd->add_option("--dataset", analyze_opts.dataset, "Dataset label (default: input file name)");

  SynthOptions synth_opts;
  auto* synth = app.add_subcommand("synth", "Generate a Benford sample, optionally manipulated and self-tested");
  synth->add_option("-n,--n", synth_opts.config.n, "Sample size");
  synth->add_option("-s,--seed", synth_opts.config.seed, "Random seed");
  synth->add_option("--exp-min", synth_opts.config.exponent_min, "Smallest power of ten");
  synth->add_option("--exp-max", synth_opts.config.exponent_max, "Largest power of ten");
  synth->add_option("--negative-fraction", synth_opts.config.negative_fraction, "Probability of a negative value");
  synth->add_option("--inject-rounding", synth_opts.config.inject_rounding,
                    "Probability of rounding d.9x up to d+1");
  synth->add_option("--variable", synth_opts.variable, "Variable name written to the sample");
  synth->add_flag("--self-test", synth_opts.self_test, "Analyze the sample and print the report");
  synth->add_option("-L,--laws", synth_opts.laws, "Laws for --self-test");
  synth->add_option("-a,--alpha", synth_opts.alpha, "Significance level for --self-test");
  synth->add_option("-f,--format", synth_opts.format, "Report format for --self-test");
  synth->add_option("-o,--output", synth_opts.output, "Output file (default: standard output)");
  synth->add_option("--sample-output", synth_opts.sample_output, "With --self-test, also write the sample here");

  StatsOptions stats_opts;
  auto* stats = app.add_subcommand("stats", "Summary statistics of one variable");
  add_input_options(*stats, stats_opts.input);
  stats->add_option("-v,--variable", stats_opts.variable, "Variable name or NUM/DEN ratio")->required();
  stats->add_option("--sign", stats_opts.sign, "all, neg or pos")->check(CLI::IsMember({"all", "neg", "pos"}));
  stats->add_option("-m,--mode", stats_opts.mode, "raw or significand")
      ->check(CLI::IsMember({"raw", "significand"}));
  stats->add_option("-f,--format", stats_opts.format, "md, csv or json");
  stats->add_option("-o,--output", stats_opts.output, "Output file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);  // --help, --version
      return kExitOk;
    }
    err << "benfordkit: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (expected->parsed()) return cmd_expected(law, expected_format, out);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_opts, out);
    if (synth->parsed()) return cmd_synth(synth_opts, out);
    if (stats->parsed()) return cmd_stats(stats_opts, out);
  } catch (const ConfigError& e) {
    err << "benfordkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "benfordkit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IngestionError& e) {
    err << "benfordkit: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const DegenerateInputError& e) {
    err << "benfordkit: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const ExtractionError& e) {
    err << "benfordkit: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "benfordkit: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace benfordkit
