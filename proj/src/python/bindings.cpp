#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ckbound/bounds.hpp"
#include "ckbound/errors.hpp"
#include "ckbound/expr.hpp"
#include "ckbound/graph6.hpp"
#include "ckbound/json_io.hpp"
#include "ckbound/search.hpp"
#include "ckbound/verify.hpp"

namespace py = pybind11;
using namespace ckbound;

namespace {

SearchMethod method_from(const std::string& name) {
  if (name == "anneal") return SearchMethod::Anneal;
  if (name == "hillclimb") return SearchMethod::HillClimb;
  throw InvalidArgument("method must be 'anneal' or 'hillclimb', got '" + name + "'");
}

}  // namespace

// Structured results cross the boundary as JSON text; the package wrapper
// decodes them.
PYBIND11_MODULE(_core, m) {
  m.doc() = "Adjacency spectra and closed-blowup bounds on c_k";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleParameters>(m, "InfeasibleParameters", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<TableMismatch>(m, "TableMismatch", PyExc_RuntimeError);

  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("graph6_encode",
        [](std::size_t n, const std::vector<Edge>& edges) { return g6_encode(Graph::from_edges(n, edges)); },
        py::arg("n"), py::arg("edges"));
  m.def("graph6_decode",
        [](const std::string& text) {
          const Graph g = g6_decode(text);
          return py::make_tuple(g.n(), g.edges());
        },
        py::arg("text"));
  m.def("eigenvalues", [](const std::string& g6) { return eigen_spectrum(g6_decode(g6)).to_doubles(); },
        py::arg("graph6"));

  m.def("_spectrum_json",
        [](const std::string& expr, bool numeric) {
          const SpectralDescriptor d = resolve_graph_expr(expr);
          const Spectrum s = numeric && d.graph() ? eigen_spectrum(*d.graph()) : d.spectrum;
          return Json{{"name", d.name}, {"n", d.n}, {"exact", s.is_exact()}, {"spectrum", to_json(s)}}.dump();
        },
        py::arg("expr"), py::arg("numeric") = false);
  m.def("_certify_json",
        [](const std::string& expr, std::size_t k) { return to_json(certify(resolve_graph_expr(expr), k)).dump(); },
        py::arg("expr"), py::arg("k"));
  m.def("_recheck_json", [](const std::string& text) { return to_json(recheck_certificate(Json::parse(text))).dump(); },
        py::arg("certificate"));
  m.def("_table_json",
        [](std::size_t lo, std::size_t hi) {
          Json rows = Json::array();
          for (const auto& row : build_table(lo, hi)) rows.push_back(to_json(row));
          return rows.dump();
        },
        py::arg("k_min") = 4, py::arg("k_max") = 24);
  m.def("_exhaustive_json",
        [](std::size_t k, std::size_t n) {
          py::gil_scoped_release release;
          return to_json(exhaustive_max(k, n)).dump();
        },
        py::arg("k"), py::arg("n"));
  m.def("_search_json",
        [](std::size_t k, std::size_t n, const std::string& method, std::uint64_t seed, std::uint64_t budget,
           std::size_t restarts) {
          SearchConfig cfg;
          cfg.k = k;
          cfg.n = n;
          cfg.method = method_from(method);
          cfg.seed = seed;
          cfg.budget = budget;
          cfg.restarts = restarts;
          py::gil_scoped_release release;
          return to_json(local_search(cfg)).dump();
        },
        py::arg("k"), py::arg("n"), py::arg("method") = "anneal", py::arg("seed") = kDefaultSeed,
        py::arg("budget") = 100000, py::arg("restarts") = 1);
  m.def("_verify_json", [] {
    Json out = Json::array();
    for (const auto& c : run_verification()) {
      out.push_back({{"check", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"detail", c.detail}});
    }
    return out.dump();
  });
  m.def("nikiforov_upper", &nikiforov_upper, py::arg("k"));
  m.def("reference_lower", &reference_lower, py::arg("k"));
}
