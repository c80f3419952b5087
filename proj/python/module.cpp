#include "hydra/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hydra;

namespace {

const PartialFieldSpec& field(const std::string& name) { return builtin_spec(name); }

Element evaluate(const PartialFieldSpec& spec, const std::string& text) {
  return spec.evaluate(*parse_expr(text), spec.variable_elements());
}

std::vector<int> coords(const GFTuple& t) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.width(); ++i) out.push_back(t[i]);
  return out;
}

py::tuple run_command(const std::string& command, const std::string& field_name, bool json, unsigned workers,
                      std::optional<std::uint64_t> prime_start) {
  auto c = parse_command(command);
  if (!c) throw py::value_error("unknown command '" + command + "'");
  RunConfig config;
  config.command = *c;
  config.field = field_name;
  config.format = json ? Format::Json : Format::Text;
  config.workers = workers;
  config.prime_start = prime_start;
  std::ostringstream out;
  std::ostringstream status;
  int code;
  {
    py::gil_scoped_release release;
    try {
      code = run(config, out, status);
    } catch (const UsageError& e) {
      py::gil_scoped_acquire acquire;
      throw py::value_error(e.what());
    }
  }
  return py::make_tuple(code, out.str());
}

}  // namespace

PYBIND11_MODULE(_hydrak, m) {
  m.doc() = "Verification of the Hydra-k partial fields H2 to H5";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ExprError", PyExc_ValueError);

  m.def("field_names", &builtin_field_names);
  m.def("spec_text", &builtin_spec_text, py::arg("field"));
  m.def("spec_fingerprint", [](const std::string& f) { return field(f).fingerprint_hex(); }, py::arg("field"));

  m.def(
      "fundamentals",
      [](const std::string& f) {
        const auto& spec = field(f);
        py::gil_scoped_release release;
        auto table = build_fundamental_table(spec);
        py::gil_scoped_acquire acquire;
        py::list out;
        for (const auto& e : table.entries()) out.append(py::make_tuple(spec.format(e.value), coords(e.image)));
        return out;
      },
      py::arg("field"), "Fundamental elements as (value, gf5 image) pairs in table order.");

  m.def(
      "is_fundamental",
      [](const std::string& f, const std::string& expr) {
        const auto& spec = field(f);
        auto table = build_fundamental_table(spec);
        return find_fundamental(spec, table, evaluate(spec, expr)).has_value();
      },
      py::arg("field"), py::arg("expr"));

  m.def(
      "gf5_image",
      [](const std::string& f, const std::string& expr) -> std::optional<std::vector<int>> {
        const auto& spec = field(f);
        auto factored = spec.factor(evaluate(spec, expr));
        if (!factored) return std::nullopt;
        return coords(spec.hom_gf5(*factored));
      },
      py::arg("field"), py::arg("expr"), "Image under the GF(5) homomorphism, or None for a non-unit.");

  m.def(
      "report_json",
      [](const std::string& f, std::vector<std::string> stages, unsigned workers) {
        ReportOptions options;
        options.workers = workers;
        options.stages = std::move(stages);
        const auto& spec = field(f);
        FieldReport r;
        {
          py::gil_scoped_release release;
          r = field_report(spec, options);
        }
        return to_json(r).dump();
      },
      py::arg("field"), py::arg("stages") = std::vector<std::string>{}, py::arg("workers") = 1);

  m.def("report_stage_names", &report_stage_names);
  m.def("genesis_json", [] { return to_json(genesis_summary()).dump(); });

  m.def(
      "domain",
      [](std::size_t width) {
        std::vector<std::vector<int>> out;
        for (const auto& t : build_domain(width).members) out.push_back(coords(t));
        return out;
      },
      py::arg("width"));
  m.def(
      "u25_tuple_count", [](std::size_t width) { return gf5_u25_tuples(width).size(); }, py::arg("width"));

  m.def("run", &run_command, py::arg("command"), py::arg("field") = "all", py::arg("json") = true,
        py::arg("workers") = 1, py::arg("prime_start") = std::nullopt,
        "Runs a CLI command in-process; returns (exit_code, output).");
}
