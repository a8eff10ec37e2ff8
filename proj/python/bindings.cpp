#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "invmetrics/demos.hpp"
#include "invmetrics/domain.hpp"
#include "invmetrics/hartogs.hpp"
#include "invmetrics/spec_json.hpp"
#include "invmetrics/verify.hpp"

namespace py = pybind11;
using namespace invmetrics;

namespace {

ComplexVector to_vector(const std::vector<std::complex<double>>& v) { return ComplexVector(v); }

py::dict value_dict(const MetricValue& v) {
  py::dict d;
  d["lower"] = v.lower;
  d["upper"] = v.upper;
  d["status"] = to_string(v.status);
  if (!v.citation.empty()) d["citation"] = v.citation;
  if (v.error > 0) d["certified_error"] = v.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant functions and pseudometrics on model domains";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  m.def(
      "evaluate",
      [](const std::string& spec_json, const std::string& metric, std::optional<int> order,
         const std::vector<std::complex<double>>& base, const std::vector<std::complex<double>>& point) {
        const DomainSpec d = spec::parse_domain(spec::Json::parse(spec_json));
        const bool function_context = spec::parse_metric_kind(metric, order, true).is_function();
        const MetricKind kind = spec::parse_metric_kind(metric, order, function_context);
        return value_dict(evaluate(d, kind, to_vector(base), to_vector(point)));
      },
      py::arg("spec"), py::arg("metric"), py::arg("order") = py::none(), py::arg("base"), py::arg("point"),
      "Evaluate an invariant on the domain described by a JSON spec string.");

  m.def(
      "contains",
      [](const std::string& spec_json, const std::vector<std::complex<double>>& z) {
        return domain_contains(spec::parse_domain(spec::Json::parse(spec_json)), to_vector(z));
      },
      py::arg("spec"), py::arg("z"));

  m.def(
      "phi",
      [](const std::string& series, const std::vector<std::complex<double>>& point, std::optional<int> k) {
        hartogs::PhiValue v;
        if (series == "exam1")
          v = hartogs::phi_eval(hartogs::Exam1Series{}, to_vector(point));
        else if (series == "exam3")
          v = hartogs::phi_eval(hartogs::Exam3Series{k, 0}, to_vector(point));
        else
          throw Error(ErrorKind::InvalidInput, "series must be exam1 or exam3");
        return py::make_tuple(v.value, v.certified_error);
      },
      py::arg("series"), py::arg("point"), py::arg("k") = py::none(),
      "Certified value of the defining series; returns (value, certified_error).");

  m.def("demo_names", &demos::demo_names);
  m.def(
      "demo",
      [](const std::string& name) {
        const demos::Table t = demos::run_demo(name);
        py::dict d;
        d["columns"] = t.columns;
        d["rows"] = t.rows;
        d["holds"] = t.holds;
        d["summary"] = t.summary;
        return d;
      },
      py::arg("name"));

  m.def("suite_names", &verify::suite_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t samples) {
        verify::SuiteConfig c;
        c.name = suite;
        c.seed = seed;
        c.samples = samples;
        return verify::report_json(c, verify::run_suite(c)).dump();
      },
      py::arg("suite") = "all", py::arg("seed") = 0, py::arg("samples") = 200,
      "Run property suites; returns the JSON report as a string.");
}
