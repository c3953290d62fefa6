// Python bindings: thin JSON-string wrappers over the decision engine,
// certificate tooling, and the fidelity simulator.
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgst/classify.hpp"
#include "pgst/cli.hpp"
#include "pgst/dynamics.hpp"
#include "pgst/engine.hpp"
#include "pgst/serialize.hpp"
#include "pgst/witness.hpp"

namespace py = pybind11;

namespace {

pgst::ProductGraph graph_of(const std::vector<long>& factors, const std::string& ham) {
  return pgst::make_product(factors, pgst::hamiltonian_from_name(ham));
}

pgst::CornerPair pair_of(const pgst::ProductGraph& g, const std::string& selector) {
  const auto slash = selector.find('/');
  if (slash == std::string::npos)
    throw std::domain_error("pair selector must be two bitmasks separated by '/'");
  return pgst::corner_pair(g, selector.substr(0, slash), selector.substr(slash + 1));
}

}  // namespace

PYBIND11_MODULE(pgst_core, m) {
  m.doc() = "Pretty good state transfer on cartesian products of paths";

  m.def(
      "classify",
      [](const std::vector<long>& factors, const std::string& ham) {
        const auto g = graph_of(factors, ham);
        if (g.ham == pgst::Hamiltonian::Laplacian)
          return pgst::laplacian_verdict_to_json(pgst::laplacian_corner_verdict(g));
        return pgst::classification_to_json(pgst::classify_corners(g));
      },
      py::arg("factors"), py::arg("hamiltonian") = "adjacency",
      "Corner-to-corner transfer verdict as a JSON string");

  m.def(
      "decide",
      [](const std::vector<long>& factors, const std::string& pair,
         const std::string& ham, long max_vertices) {
        const auto g = graph_of(factors, ham);
        const auto p = pair_of(g, pair);
        return pgst::decision_to_json(g, p, pgst::decide_pgst(g, p, max_vertices));
      },
      py::arg("factors"), py::arg("pair"), py::arg("hamiltonian") = "adjacency",
      py::arg("max_vertices") = 20000,
      "Decide one corner pair; JSON includes any no-transfer certificate");

  m.def(
      "certify",
      [](const std::string& text) {
        try {
          return pgst::verify_certificate(pgst::certificate_from_json(text));
        } catch (const std::domain_error&) {
          return false;
        }
      },
      py::arg("certificate_json"), "Check a certificate document (JSON string)");

  m.def(
      "witness",
      [](const std::string& kind, long p1, long p2) {
        const auto k = pgst::witness_kind_from_name(kind);
        if (!k) throw std::domain_error("unknown witness kind: " + kind);
        return pgst::certificate_to_json(pgst::build_witness(*k, p1, p2));
      },
      py::arg("kind"), py::arg("p1"), py::arg("p2"),
      "Emit a closed-form certificate as a JSON string");

  m.def(
      "spectrum",
      [](const std::vector<long>& factors, const std::string& ham, long max_vertices) {
        const auto g = graph_of(factors, ham);
        return pgst::spectrum_to_json(g, pgst::spectrum_table(g, max_vertices));
      },
      py::arg("factors"), py::arg("hamiltonian") = "adjacency",
      py::arg("max_vertices") = 20000, "Grouped eigenvalue table as a JSON string");

  m.def(
      "corner_fidelity",
      [](const std::vector<long>& factors, const std::string& pair, double t,
         const std::string& ham) {
        const auto g = graph_of(factors, ham);
        return pgst::corner_fidelity(g, pair_of(g, pair), t);
      },
      py::arg("factors"), py::arg("pair"), py::arg("t"),
      py::arg("hamiltonian") = "adjacency",
      "Transfer fidelity |<b|U(t)|a>| for one corner pair");

  m.def(
      "scan",
      [](const std::vector<long>& factors, const std::string& pair, double t_max,
         long samples, const std::string& ham) {
        const auto g = graph_of(factors, ham);
        const auto p = pair_of(g, pair);
        const auto trace = pgst::scan_fidelity(g, p, t_max, samples);
        return pgst::scan_summary_to_json(g, p, t_max, trace.times.size(), trace,
                                          std::nullopt, std::nullopt, "");
      },
      py::arg("factors"), py::arg("pair"), py::arg("t_max"), py::arg("samples") = 0,
      py::arg("hamiltonian") = "adjacency",
      "Scan fidelity over [0, t_max]; returns the summary as a JSON string");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = pgst::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI job in-process; returns (exit_code, stdout, stderr)");
}
