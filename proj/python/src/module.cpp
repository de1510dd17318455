#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "benfordkit/conformity.hpp"
#include "benfordkit/dataset.hpp"
#include "benfordkit/decimal.hpp"
#include "benfordkit/digit_laws.hpp"
#include "benfordkit/errors.hpp"
#include "benfordkit/report.hpp"
#include "benfordkit/synth.hpp"

namespace py = pybind11;
using namespace benfordkit;

namespace {

std::vector<ParseResult> parse_all(const std::vector<std::string>& values) {
  std::vector<ParseResult> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(parse_decimal(v));
  return out;
}

std::vector<LawKind> parse_laws(const std::vector<std::string>& names) {
  std::vector<LawKind> out;
  for (const auto& n : names) out.push_back(parse_law(n));
  return out;
}

DecimalValue nonzero(const std::string& text) {
  const auto parsed = parse_decimal(text);
  if (const auto* d = std::get_if<DecimalValue>(&parsed)) return *d;
  throw ExtractionError("'" + text + "' has no significant digits");
}

std::vector<std::string> render_all(const std::vector<DecimalValue>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(render_decimal(v));
  return out;
}

py::dict stats_dict(const SummaryStats& s) {
  py::dict d;
  d["n"] = s.n;
  d["min"] = s.min;
  d["max"] = s.max;
  d["mean"] = s.mean;
  d["stdev"] = s.stdev;
  d["skewness"] = s.skewness;
  d["excess_kurtosis"] = s.excess_kurtosis;
  d["cv"] = s.cv;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Benford digit-law conformity analytics.";
  m.attr("__version__") = BENFORDKIT_VERSION;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IngestionError>(m, "IngestionError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<ExtractionError>(m, "ExtractionError", PyExc_ValueError);

  m.def("bins", [](const std::string& law) {
    const auto r = bin_range(parse_law(law));
    std::vector<int> out;
    for (int b = r.first; b <= r.last; ++b) out.push_back(b);
    return out;
  }, py::arg("law"));
  m.def("expected", [](const std::string& law) { return expected_distribution(parse_law(law)).probabilities(); },
        py::arg("law"), "Expected probabilities in ascending bin order.");
  m.def("expected_probability", [](const std::string& law, int bin) { return expected_probability(parse_law(law), bin); },
        py::arg("law"), py::arg("bin"));

  py::class_<DecimalValue>(m, "DecimalValue")
      .def(py::init<int, std::string, std::int64_t>(), py::arg("sign"), py::arg("digits"), py::arg("exponent"))
      .def_property_readonly("sign", &DecimalValue::sign)
      .def_property_readonly("digits", &DecimalValue::digits)
      .def_property_readonly("exponent", &DecimalValue::exponent)
      .def("__float__", &DecimalValue::to_double)
      .def("__str__", [](const DecimalValue& v) { return render_decimal(v); })
      .def("__repr__", [](const DecimalValue& v) { return "DecimalValue('" + render_decimal(v) + "')"; })
      .def(py::self == py::self);
  py::class_<Zero>(m, "Zero").def("__repr__", [](const Zero&) { return std::string("Zero()"); });
  py::class_<NonNumeric>(m, "NonNumeric").def("__repr__", [](const NonNumeric&) { return std::string("NonNumeric()"); });

  m.def("parse_decimal", [](const std::string& text) { return parse_decimal(text); }, py::arg("text"),
        "DecimalValue, Zero or NonNumeric.");
  m.def("first_digit", [](const std::string& v) { return first_digit(nonzero(v)); }, py::arg("value"));
  m.def("second_digit", [](const std::string& v) { return second_digit(nonzero(v)); }, py::arg("value"));
  m.def("first_two", [](const std::string& v) { return first_two(nonzero(v)); }, py::arg("value"));
  m.def("significand", [](const std::string& v) { return significand(nonzero(v)); }, py::arg("value"));

  py::class_<DigitTally>(m, "DigitTally")
      .def_property_readonly("law", [](const DigitTally& t) { return std::string(law_name(t.kind())); })
      .def_property_readonly("counts", &DigitTally::counts)
      .def_property_readonly("n_included", &DigitTally::n_included)
      .def_property_readonly("n_excluded_zero", &DigitTally::n_excluded_zero)
      .def_property_readonly("n_excluded_nonnumeric", &DigitTally::n_excluded_nonnumeric)
      .def("count", &DigitTally::count, py::arg("bin"))
      .def("frequencies", &DigitTally::frequencies);
  m.def("tally", [](const std::vector<std::string>& values, const std::string& law) {
    const auto parsed = parse_all(values);
    return tally(std::span<const ParseResult>(parsed), parse_law(law));
  }, py::arg("values"), py::arg("law"));
  m.def("tally_from_counts", [](const std::string& law, const std::vector<std::uint64_t>& counts) {
    return DigitTally::from_counts(parse_law(law), counts);
  }, py::arg("law"), py::arg("counts"));

  py::class_<TestResult>(m, "TestResult")
      .def_property_readonly("law", [](const TestResult& r) { return std::string(law_name(r.kind)); })
      .def_readonly("alpha", &TestResult::alpha)
      .def_readonly("chi2", &TestResult::chi2)
      .def_readonly("df", &TestResult::df)
      .def_readonly("chi2_critical", &TestResult::chi2_critical)
      .def_readonly("p_value", &TestResult::p_value)
      .def_readonly("chi2_reject", &TestResult::chi2_reject)
      .def_readonly("mad_paper", &TestResult::mad_paper)
      .def_readonly("mad_mean", &TestResult::mad_mean)
      .def_property_readonly("conformity", [](const TestResult& r) { return std::string(conformity_name(r.conformity)); })
      .def_property_readonly("conformity_sum",
                             [](const TestResult& r) { return std::string(conformity_name(r.conformity_sum)); });
  m.def("run_test", [](const DigitTally& t, double alpha) {
    return run_test(t, expected_distribution(t.kind()), alpha);
  }, py::arg("tally"), py::arg("alpha") = kDefaultAlpha);
  m.def("chi_square_critical", &chi_square_critical, py::arg("df"), py::arg("alpha") = kDefaultAlpha);
  m.def("classify", [](double mad, const std::string& law) { return std::string(conformity_name(classify(mad, parse_law(law)))); },
        py::arg("mad_mean"), py::arg("law"));

  py::class_<LawRecord>(m, "LawRecord")
      .def_readonly("label", &LawRecord::label)
      .def_readonly("tally", &LawRecord::tally)
      .def_readonly("observed", &LawRecord::observed)
      .def_readonly("expected", &LawRecord::expected)
      .def_readonly("test", &LawRecord::test);
  py::class_<ConformityReport>(m, "ConformityReport")
      .def_readonly("dataset", &ConformityReport::dataset)
      .def_readonly("alpha", &ConformityReport::alpha)
      .def_readonly("records", &ConformityReport::records)
      .def("render", [](const ConformityReport& r, const std::string& format) { return render(r, parse_report_format(format)); },
           py::arg("format") = "json");
  m.def("parse_report_json", [](const std::string& text) { return parse_report_json(text); }, py::arg("text"));

  m.def("analyze", [](const std::vector<std::string>& values, const std::vector<std::string>& laws, double alpha,
                      const std::string& label) {
    const auto parsed = parse_all(values);
    const auto kinds = parse_laws(laws);
    ConformityReport report;
    report.dataset = label;
    report.alpha = alpha;
    report.metadata.tool_version = tool_version();
    report.records = analyze(label, std::span<const ParseResult>(parsed), kinds, alpha);
    return report;
  }, py::arg("values"), py::arg("laws") = std::vector<std::string>{"bl1", "bl2", "bl12"},
     py::arg("alpha") = kDefaultAlpha, py::arg("label") = "series");

  m.def("analyze_panel", [](const std::string& csv_text, const std::string& variables, const std::string& ratios,
                            const std::vector<std::string>& laws, double alpha, const std::string& layout,
                            const std::string& delimiter, const std::string& dataset) {
    IngestConfig config;
    if (layout == "wide") {
      config.layout = PanelLayout::Wide;
    } else if (layout != "long") {
      throw ConfigError("layout must be long or wide");
    }
    if (delimiter.size() != 1) throw ConfigError("delimiter must be a single character");
    config.delimiter = delimiter[0];
    std::istringstream in(csv_text);
    const auto panel = load_panel(in, config);
    PanelSpec spec;
    if (variables.empty() && ratios.empty()) {
      for (const auto& s : panel.series) spec.variables.push_back({s.variable, false});
    } else {
      spec = parse_panel_spec(variables, ratios);
    }
    return analyze_panel(panel, spec, parse_laws(laws), alpha, dataset);
  }, py::arg("csv_text"), py::arg("variables") = "", py::arg("ratios") = "",
     py::arg("laws") = std::vector<std::string>{"bl1", "bl2", "bl12"}, py::arg("alpha") = kDefaultAlpha,
     py::arg("layout") = "long", py::arg("delimiter") = ",", py::arg("dataset") = "panel",
     "Analyze a company/year panel given as delimited text.");

  m.def("sample_benford", [](std::size_t n, std::uint64_t seed, int exponent_min, int exponent_max,
                             double negative_fraction, double inject_rounding) {
    SynthConfig config;
    config.n = n;
    config.seed = seed;
    config.exponent_min = exponent_min;
    config.exponent_max = exponent_max;
    config.negative_fraction = negative_fraction;
    config.inject_rounding = inject_rounding;
    return render_all(generate(config));
  }, py::arg("n"), py::arg("seed") = 1, py::arg("exponent_min") = 0, py::arg("exponent_max") = 6,
     py::arg("negative_fraction") = 0.0, py::arg("inject_rounding") = 0.0);
  m.def("inject_rounding", [](const std::vector<std::string>& values, double strength, std::uint64_t seed) {
    std::vector<DecimalValue> in;
    for (const auto& v : values) in.push_back(nonzero(v));
    return render_all(inject_rounding(in, strength, seed));
  }, py::arg("values"), py::arg("strength"), py::arg("seed"));

  m.def("summary_stats", [](const std::vector<std::string>& values, const std::string& mode) {
    if (mode != "raw" && mode != "significand") throw ConfigError("mode must be raw or significand");
    const auto parsed = parse_all(values);
    return stats_dict(summary_stats(parsed, mode == "raw" ? StatsMode::Raw : StatsMode::Significand));
  }, py::arg("values"), py::arg("mode") = "raw");
}
