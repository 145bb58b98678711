#include "ckbound/json_io.hpp"

#include <cmath>

#include "ckbound/errors.hpp"
#include "ckbound/graph6.hpp"

namespace ckbound {

namespace {

Verification verification_from_string(const std::string& s) {
  if (s == "verified") return Verification::Verified;
  if (s == "exact-formula") return Verification::ExactFormula;
  if (s == "asserted") return Verification::Asserted;
  throw InvalidArgument("unknown verification status '" + s + "'");
}

SearchMethod method_from_string(const std::string& s) {
  if (s == "exhaustive") return SearchMethod::Exhaustive;
  if (s == "stream") return SearchMethod::Stream;
  if (s == "hillclimb") return SearchMethod::HillClimb;
  if (s == "anneal") return SearchMethod::Anneal;
  throw InvalidArgument("unknown search method '" + s + "'");
}

Json provenance_json(const Provenance& p) {
  return std::visit(
      [](const auto& src) -> Json {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExplicitSource>) {
          return {{"kind", "explicit"}, {"graph6", g6_encode(*src.graph)}};
        } else if constexpr (std::is_same_v<T, SrgParams>) {
          return {{"kind", "srg"}, {"v", src.v}, {"k", src.k}, {"lambda", src.lambda}, {"mu", src.mu}};
        } else if constexpr (std::is_same_v<T, IntersectionArray>) {
          return {{"kind", "intersection-array"}, {"b", src.b}, {"c", src.c}};
        } else if constexpr (std::is_same_v<T, AssertedSource>) {
          return {{"kind", "asserted"}, {"note", src.note}};
        } else {
          return {{"kind", "derived"}, {"note", src.note}, {"verification", to_string(src.inherited)}};
        }
      },
      p);
}

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.multiplicity != y.multiplicity || !exactly_equal(x.value, y.value)) return false;
  }
  return true;
}

Json ratio_json(const EigenValue& r) {
  return {{"exact", r.is_exact() ? Json(r.to_string()) : Json(nullptr)}, {"float", r.to_double()}};
}

}  // namespace

Json to_json(const EigenValue& v) {
  if (v.is_exact()) return v.to_string();
  return v.to_double();
}

EigenValue eigenvalue_from_json(const Json& j) {
  if (j.is_string()) return EigenValue::parse(j.get<std::string>());
  if (j.is_number()) return EigenValue::real(j.get<double>());
  throw InvalidArgument("eigenvalue must be a string or a number");
}

Json to_json(const Spectrum& s) {
  Json arr = Json::array();
  for (const auto& e : s.entries()) arr.push_back({{"value", to_json(e.value)}, {"mult", e.multiplicity}});
  return arr;
}

Spectrum spectrum_from_json(const Json& j) {
  std::vector<SpectrumEntry> entries;
  for (const auto& item : j) {
    entries.push_back({eigenvalue_from_json(item.at("value")), item.at("mult").get<std::size_t>()});
  }
  return Spectrum(std::move(entries));
}

Json to_json(const SpectralDescriptor& d) {
  return {{"name", d.name}, {"n", d.n}, {"spectrum", to_json(d.spectrum)}, {"provenance", provenance_json(d.provenance)}};
}

SpectralDescriptor descriptor_from_json(const Json& j) {
  const auto name = j.at("name").get<std::string>();
  const auto n = j.at("n").get<std::size_t>();
  Spectrum spectrum = spectrum_from_json(j.at("spectrum"));
  const Json& prov = j.at("provenance");
  const auto kind = prov.at("kind").get<std::string>();
  SpectralDescriptor d;
  if (kind == "explicit") {
    Graph g = g6_decode(prov.at("graph6").get<std::string>());
    if (g.n() != n) throw ConsistencyError(name + ": graph6 order disagrees with n");
    if (spectrum.is_exact()) {
      d = explicit_descriptor(name, std::move(g), std::move(spectrum));
    } else {
      d = {name, n, std::move(spectrum), ExplicitSource{std::make_shared<const Graph>(std::move(g))}};
    }
    return d;
  }
  if (kind == "srg" || kind == "intersection-array") {
    d = kind == "srg" ? srg_spectrum({prov.at("v").get<std::int64_t>(), prov.at("k").get<std::int64_t>(),
                                      prov.at("lambda").get<std::int64_t>(), prov.at("mu").get<std::int64_t>()})
                      : drg_spectrum({prov.at("b").get<std::vector<std::int64_t>>(),
                                      prov.at("c").get<std::vector<std::int64_t>>()});
    if (d.n != n || !same_spectrum(d.spectrum, spectrum)) {
      throw ConsistencyError(name + ": stored spectrum disagrees with its parameters");
    }
    d.name = name;
    return d;
  }
  if (kind == "asserted") {
    return asserted_descriptor(name, n, std::move(spectrum), prov.at("note").get<std::string>());
  }
  if (kind == "derived") {
    d = {name, n, std::move(spectrum),
         DerivedSource{prov.at("note").get<std::string>(),
                       verification_from_string(prov.at("verification").get<std::string>())}};
    check_descriptor_invariants(d);
    return d;
  }
  throw InvalidArgument("unknown provenance kind '" + kind + "'");
}

Json to_json(const BoundCertificate& c) {
  return {{"k", c.k},
          {"descriptor", to_json(c.base)},
          {"ratio", ratio_json(c.ratio)},
          {"verification", to_string(c.verification)},
          {"not_attained", c.degenerate}};
}

BoundCertificate recheck_certificate(const Json& j) {
  const SpectralDescriptor d = descriptor_from_json(j.at("descriptor"));
  BoundCertificate c = certify(d, j.at("k").get<std::size_t>());
  const Json& ratio = j.at("ratio");
  if (!ratio.at("exact").is_null()) {
    if (!exactly_equal(c.ratio, EigenValue::parse(ratio.at("exact").get<std::string>()))) {
      throw ConsistencyError("certificate ratio " + ratio.at("exact").get<std::string>() + " does not recompute (got " +
                             c.ratio.to_string() + ")");
    }
  } else if (std::abs(c.ratio.to_double() - ratio.at("float").get<double>()) > 1e-12) {
    throw ConsistencyError("certificate ratio does not recompute");
  }
  if (to_string(c.verification) != j.at("verification").get<std::string>()) {
    throw ConsistencyError("certificate verification status does not recompute");
  }
  return c;
}

Json to_json(const TableRow& row) {
  Json graphs = Json::array();
  Json statuses = Json::array();
  for (const auto& c : row.certificates) {
    graphs.push_back(c.base.name);
    statuses.push_back(to_string(c.verification));
  }
  const EigenValue& ratio = row.certificates.empty() ? row.expected : row.certificates.front().ratio;
  return {{"k", row.k},
          {"ratio", ratio_json(ratio)},
          {"expected", row.expected.to_string()},
          {"printed_decimal", row.printed_decimal},
          {"graphs", graphs},
          {"verification", statuses},
          {"upper_bound", nikiforov_upper(static_cast<int>(row.k))},
          {"match", row.match}};
}

Json to_json(const SearchResult& r) {
  Json history = Json::array();
  for (const auto& [i, v] : r.history) history.push_back({i, v});
  return {{"k", r.k},
          {"n", r.n},
          {"seed", r.seed},
          {"method", to_string(r.method)},
          {"evaluations", r.evaluations},
          {"best_ratio", r.best_ratio},
          {"best_graph", r.best_graph},
          {"history", history}};
}

SearchResult search_result_from_json(const Json& j) {
  SearchResult r;
  r.k = j.at("k").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.method = method_from_string(j.at("method").get<std::string>());
  r.evaluations = j.at("evaluations").get<std::uint64_t>();
  r.best_ratio = j.at("best_ratio").get<double>();
  r.best_graph = j.at("best_graph").get<std::string>();
  for (const auto& h : j.at("history")) r.history.emplace_back(h.at(0).get<std::uint64_t>(), h.at(1).get<double>());
  return r;
}

Json witness_json(const SearchResult& r) {
  const SpectralDescriptor d = explicit_descriptor("g6:" + r.best_graph, g6_decode(r.best_graph));
  return {{"graph6", r.best_graph},
          {"k", r.k},
          {"ratio", r.best_ratio},
          {"spectrum", to_json(d.spectrum)},
          {"certificate", to_json(certify(d, r.k))}};
}

Json to_json(const CampaignReport& report) {
  Json per_n = Json::array();
  for (const auto& e : report.per_n) {
    per_n.push_back({{"n", e.n}, {"best_ratio", e.best.best_ratio}, {"best_graph", e.best.best_graph},
                     {"seed", e.best.seed}});
  }
  Json out{{"k", 3},
           {"threshold", 1.0 / 3.0},
           {"per_n", per_n},
           {"global_best", report.global_best ? to_json(*report.global_best) : Json(nullptr)},
           {"exceeded", report.exceeded}};
  if (report.exceeded && report.global_best) out["witness"] = witness_json(*report.global_best);
  return out;
}

}  // namespace ckbound
