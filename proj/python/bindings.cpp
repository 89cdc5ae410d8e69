#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsep/audit.hpp"
#include "qsep/concurrence.hpp"
#include "qsep/entropy.hpp"
#include "qsep/error.hpp"
#include "qsep/io.hpp"
#include "qsep/states.hpp"
#include "qsep/structure.hpp"

namespace py = pybind11;
using namespace qsep;

namespace {

ExampleId example_from_name(const std::string& name) {
  for (ExampleId id : kAllExamples)
    if (to_string(id) == name) return id;
  throw Error("example", 0.0, "unknown example '" + name + "' (expected E1..E6)");
}

py::dict report_dict(const ClassificationReport& r) {
  py::dict d;
  d["concurrence"] = r.concurrence;
  d["entropy_diff_a"] = r.entropy_diff_a;
  d["entropy_diff_b"] = r.entropy_diff_b;
  d["mutual"] = r.mutual;
  d["deficit"] = r.deficit;
  d["ppt_min_eig"] = r.ppt_min_eig;
  d["conditional_prob_defined"] = r.conditional_prob_defined;
  d["commutes_with_marginals"] = r.commutes_with_marginals;
  d["degenerate_frame"] = r.degenerate_frame;
  d["verdicts"] = r.verdicts;
  return d;
}

}  // namespace

PYBIND11_MODULE(qsep, m) {
  m.doc() = "Two-qubit separability diagnostics";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::enum_<Subsystem>(m, "Subsystem").value("A", Subsystem::A).value("B", Subsystem::B);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const ComplexMatrix& matrix, std::pair<int, int> dims) {
             return DensityMatrix(matrix, Dims{dims.first, dims.second});
           }),
           py::arg("matrix"), py::arg("dims") = std::pair<int, int>{2, 2})
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dims", [](const DensityMatrix& r) { return std::pair{r.dims().a, r.dims().b}; })
      .def("__repr__", [](const DensityMatrix& r) {
        return "DensityMatrix(dims=(" + std::to_string(r.dims().a) + ", " + std::to_string(r.dims().b) + "))";
      });

  m.def("werner", &werner, py::arg("p"));
  m.def("example_state", [](const std::string& name) { return example_state(example_from_name(name)); },
        py::arg("name"));
  m.def("isospectral_pair", &isospectral_pair);
  m.def("parse_state", [](const std::string& spec) { return io::parse_state_spec(spec); }, py::arg("spec"),
        "Registry name (E1..E6, iso:E, iso:S), werner:<p>, pure:<amplitudes> or JSON file path");
  m.def("pure_state",
        [](Complex a11, Complex a10, Complex a01, Complex a00) {
          return pure_density(PureStateAmplitudes{a11, a10, a01, a00});
        },
        py::arg("a11"), py::arg("a10"), py::arg("a01"), py::arg("a00"));
  m.def("random_mixed", &random_mixed, py::arg("seed"), py::arg("rank") = 4);

  m.def("hermitian_eig",
        [](const ComplexMatrix& a) {
          const EigenSystem e = hermitian_eig(a);
          return std::pair{e.values, e.vectors};
        },
        py::arg("matrix"));
  m.def("partial_trace", py::overload_cast<const DensityMatrix&, Subsystem>(&partial_trace), py::arg("rho"),
        py::arg("keep"));
  m.def("partial_transpose", py::overload_cast<const DensityMatrix&, Subsystem>(&partial_transpose),
        py::arg("rho"), py::arg("side") = Subsystem::B);

  m.def("von_neumann", [](const DensityMatrix& r) { return von_neumann(r); }, py::arg("rho"));
  m.def("tsallis", [](const DensityMatrix& r, double q) { return tsallis(r, q); }, py::arg("rho"), py::arg("q"));
  m.def("entropy_difference",
        [](const DensityMatrix& r, Subsystem s, double q) { return entropy_difference(r, s, q); }, py::arg("rho"),
        py::arg("side"), py::arg("q") = 1.0);
  m.def("conditional_tsallis",
        [](const DensityMatrix& r, Subsystem s, double q) { return conditional_tsallis(r, s, q); },
        py::arg("rho"), py::arg("side"), py::arg("q") = 1.0);
  m.def("tsallis_infinity_criterion",
        [](const DensityMatrix& r) {
          const auto c = tsallis_infinity_criterion(r);
          return std::pair{c.satisfied_a, c.satisfied_b};
        },
        py::arg("rho"));
  m.def("mutual_entropy", [](const DensityMatrix& r) { return mutual_entropy(r); }, py::arg("rho"));

  m.def("concurrence", [](const DensityMatrix& r) { return concurrence(r); }, py::arg("rho"));
  m.def("lambda_spectrum", [](const DensityMatrix& r) { return lambda_spectrum(r).lambdas; }, py::arg("rho"));

  m.def("decohere",
        [](const DensityMatrix& r) {
          const Decoherence d = decohere(r);
          return std::pair{d.rho_d, Eigen::MatrixXd(d.joint.p)};
        },
        py::arg("rho"), "Returns (decohered state, joint distribution P[alpha, beta])");
  m.def("quantum_deficit", [](const DensityMatrix& r) { return quantum_deficit(r); }, py::arg("rho"));
  m.def("ppt_min_eigenvalue", [](const DensityMatrix& r) { return ppt_min_eigenvalue(r); }, py::arg("rho"));
  m.def("commutes_with_marginals", [](const DensityMatrix& r) { return commutes_with_marginals(r); },
        py::arg("rho"));
  m.def("classify", [](const DensityMatrix& r) { return report_dict(classify(r)); }, py::arg("rho"));

  m.def("run_audit",
        [](int n, std::uint64_t seed, int jobs) {
          AuditOptions options;
          options.n = n;
          options.seed = seed;
          options.jobs = jobs;
          AuditSummary summary;
          {
            py::gil_scoped_release release;
            summary = run_audit(options);
          }
          std::ostringstream text;
          summary.print(text);
          return std::pair{summary.ok(), text.str()};
        },
        py::arg("n") = 1000, py::arg("seed") = 42, py::arg("jobs") = 1, "Returns (all passed, summary text)");
}
