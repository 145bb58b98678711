// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ckbound/bounds.hpp"
#include "ckbound/expr.hpp"
#include "ckbound/graph6.hpp"
#include "ckbound/json_io.hpp"
#include "ckbound/search.hpp"
#include "oracles.hpp"

using namespace ckbound;

namespace {

// Tolerances
constexpr double kBlowupTol = 1e-8;
constexpr double kWitnessTol = 1e-9;
constexpr double kC3Slack = 1e-9;
constexpr double kUpperSlack = 1e-12;
constexpr double kAnnealFloor = 0.25;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

// Everything whose ratio must respect the proven upper bound.
struct Ledger {
  std::vector<std::pair<std::size_t, double>> ratios;
  std::size_t certificates = 0;
  std::size_t searches = 0;

  void add(const BoundCertificate& c) {
    ratios.emplace_back(c.k, c.ratio.to_double());
    ++certificates;
  }
  void add(const SearchResult& r) {
    ratios.emplace_back(r.k, r.best_ratio);
    ++searches;
  }
};

Ledger ledger;
int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.passed) ++failures;
  std::printf("%s  %d. %s  (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

bool exact_sum_identities(const SpectralDescriptor& d, std::int64_t v, std::int64_t k) {
  return d.spectrum.size() == static_cast<std::size_t>(v) && exactly_equal(d.spectrum.power_sum(1), EigenValue(0)) &&
         exactly_equal(d.spectrum.power_sum(2), EigenValue(v * k));
}

bool witness_ok(const SearchResult& r) {
  const Graph w = g6_decode(r.best_graph);
  return w.n() == r.n && std::abs(oracle::limit_ratio(w, r.k) - r.best_ratio) < kWitnessTol;
}

}  // namespace

int main() {
  criterion(1, "table k = 4..24 reproduces exactly", 5.0, [] {
    Outcome o;
    const auto rows = build_table(4, 24);
    const auto published = published_table();
    o.require(rows.size() == 21 && published.size() == 21, "expected 21 rows");
    for (std::size_t i = 0; i < rows.size() && i < published.size(); ++i) {
      const auto& row = rows[i];
      const auto& pub = published[i];
      const std::string k = "k=" + std::to_string(row.k);
      o.require(row.k == pub.k, k + " out of order");
      o.require(!row.certificates.empty(), k + " has no certificate");
      for (const auto& c : row.certificates) {
        ledger.add(c);
        o.require(c.ratio.is_exact(), k + " ratio not exact");
        o.require(exactly_equal(c.ratio, pub.ratio), k + " ratio " + c.ratio.to_string());
        o.require(decimal_matches(c.ratio.to_double(), pub.decimal), k + " decimal " + pub.decimal);
        o.require((row.k == 24) == (c.verification == Verification::Asserted), k + " status");
      }
      o.require(row.match, k + " flagged as mismatch");
    }
    o.require(rows.size() == 21 && exactly_equal(rows.back().expected, EigenValue(Rational(56, 552))),
              "row 24 is not 56/552");
    return o;
  });

  criterion(2, "icosahedron certifies (1+sqrt5)/12 at k = 4", 0, [] {
    Outcome o;
    const auto c = certify(icosahedron_descriptor(), 4);
    ledger.add(c);
    o.require(exactly_equal(c.ratio, EigenValue::quadratic(Rational(1, 12), Rational(1, 12), 5)),
              "ratio " + c.ratio.to_string());
    o.require(std::abs(c.ratio.to_double() - 0.26967) < 0.5e-5, "decimal disagrees with 0.26967");
    o.require(c.verification == Verification::Verified, "not verified on the explicit graph");
    return o;
  });

  criterion(3, "J(k,2) certifies 2(k-3)/(k(k-1)) for k = 6..16, above 1/k and 1/(k-1/2)", 0, [] {
    Outcome o;
    for (std::int64_t k = 6; k <= 16; ++k) {
      const auto c = certify(johnson_descriptor(k, 2), static_cast<std::size_t>(k));
      ledger.add(c);
      const std::string tag = "k=" + std::to_string(k);
      o.require(exactly_equal(c.ratio, EigenValue(Rational(2 * (k - 3), k * (k - 1)))), tag + " " + c.ratio.to_string());
      o.require(compare(c.ratio, EigenValue(Rational(1, k))) > 0, tag + " not above 1/k");
      o.require(compare(c.ratio, EigenValue(Rational(2, 2 * k - 1))) > 0, tag + " not above 1/(k-1/2)");
    }
    return o;
  });

  criterion(4, "analytic blowup spectrum matches 50 random explicit blowups, t = 1..3", 30.0, [] {
    Outcome o;
    std::mt19937_64 rng(20240);
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Graph g = oracle::random_graph(rng, 1 + rng() % 10);
      const auto d = explicit_descriptor("g", g);
      for (std::size_t t = 1; t <= 3; ++t) {
        const Graph big = closed_blowup_graph(g, t);
        const auto analytic = blowup_spectrum(d, t).spectrum;
        worst = std::max(worst, max_deviation(eigen_spectrum(big), analytic));
        worst = std::max(worst, oracle::max_abs_diff(oracle::eigenvalues(big), analytic.to_doubles()));
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
    o.require(worst <= kBlowupTol, buf);
    return o;
  });

  criterion(5, "SRG/DRG spectral identities and the Gosset/J(8,2) tie at k = 8", 0, [] {
    Outcome o;
    for (const SrgParams p : {SrgParams{9, 4, 1, 2}, SrgParams{10, 3, 0, 1}, SrgParams{57, 24, 11, 9},
                              SrgParams{125, 72, 45, 36}, SrgParams{243, 132, 81, 60}}) {
      const auto d = srg_spectrum(p);
      o.require(d.spectrum.is_exact(), srg_name(p) + " not exact");
      o.require(exact_sum_identities(d, p.v, p.k), srg_name(p) + " identities");
    }
    const auto gosset = gosset_descriptor();
    o.require(gosset.spectrum.is_exact(), "Gosset not exact");
    o.require(exact_sum_identities(gosset, 56, 27), "Gosset identities");
    const auto cg = certify(gosset, 8);
    const auto cj = certify(johnson_descriptor(8, 2), 8);
    ledger.add(cg);
    ledger.add(cj);
    o.require(exactly_equal(cg.ratio, cj.ratio), "Gosset and J(8,2) disagree");
    o.require(exactly_equal(cg.ratio, EigenValue(Rational(5, 28))), "k=8 ratio is not 5/28");
    return o;
  });

  criterion(6, "exhaustive oracles: (2,4) = 1/2, (3,6) = 1/3, (3,n) <= 1/3 for n = 4..7", 600.0, [] {
    Outcome o;
    const auto two = exhaustive_max(2, 4);
    ledger.add(two);
    o.require(std::abs(two.best_ratio - 0.5) < kWitnessTol, "exhaustive_max(2,4) != 1/2");
    o.require(witness_ok(two), "(2,4) witness does not recompute");
    for (std::size_t n = 4; n <= 7; ++n) {
      const auto r = exhaustive_max(3, n);
      ledger.add(r);
      o.require(witness_ok(r), "(3," + std::to_string(n) + ") witness does not recompute");
      o.require(r.best_ratio <= 1.0 / 3 + kC3Slack, "(3," + std::to_string(n) + ") exceeds 1/3");
      if (n == 6) o.require(std::abs(r.best_ratio - 1.0 / 3) < kWitnessTol, "exhaustive_max(3,6) != 1/3");
    }
    return o;
  });

  criterion(8, "seeded anneal k = 4, n = 12, seed 42 is reproducible and reaches 0.25", 300.0, [] {
    Outcome o;
    SearchConfig cfg;
    cfg.k = 4;
    cfg.n = 12;
    cfg.seed = 42;
    cfg.budget = 100000;
    cfg.restarts = 20;
    cfg.method = SearchMethod::Anneal;
    const auto a = local_search(cfg);
    const auto b = local_search(cfg);
    ledger.add(a);
    o.require(to_json(a).dump() == to_json(b).dump(), "runs differ");
    o.require(witness_ok(a), "witness does not recompute");
    o.require(a.best_ratio >= kAnnealFloor, "best " + std::to_string(a.best_ratio));
    const double ico = (1 + std::sqrt(5.0)) / 12;
    o.detail = "best " + std::to_string(a.best_ratio) + (a.best_ratio >= ico - 1e-9 ? " (icosahedral)" : "") +
               (o.passed ? "" : "; " + o.detail);
    return o;
  });

  criterion(9, "graph6 round-trips (n <= 5 exhaustive, 1000 random n <= 10) and fixed vectors", 0, [] {
    Outcome o;
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      const std::size_t pairs = n * (n - 1) / 2;
      for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask, ++count) {
        const Graph g = oracle::from_mask(n, mask);
        const std::string s = g6_encode(g);
        o.require(s == oracle::graph6(g) && g6_decode(s) == g, "n=" + std::to_string(n) + " mask " + std::to_string(mask));
      }
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; ++i) {
      const Graph g = oracle::random_graph(rng, 1 + rng() % 10);
      const std::string s = g6_encode(g);
      o.require(s == oracle::graph6(g) && g6_decode(s) == g, "random graph " + std::to_string(i));
    }
    o.require(g6_decode("B?") == empty_graph(3) && g6_encode(empty_graph(3)) == "B?", "B? vector");
    o.require(g6_decode("Bw") == complete(3) && g6_encode(complete(3)) == "Bw", "Bw vector");
    if (o.passed) o.detail = std::to_string(count) + " exhaustive + 1000 random";
    return o;
  });

  criterion(7, "no certificate or search result exceeds 1/(2 sqrt(k-1))", 0, [] {
    Outcome o;
    // every table descriptor at every admissible k, not only its own row
    for (const auto& row : build_table(4, 24)) {
      for (const auto& c : row.certificates) {
        for (std::size_t k = 2; k <= c.base.n; ++k) {
          ledger.ratios.emplace_back(k, limit_ratio(c.base, k).value.to_double());
        }
      }
    }
    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::size_t k = 2; k <= n; ++k) ledger.add(exhaustive_max(k, n));
    }
    std::size_t checked = 0;
    for (const auto& [k, ratio] : ledger.ratios) {
      if (k < 2) continue;
      ++checked;
      if (ratio > nikiforov_upper(static_cast<int>(k)) + kUpperSlack) {
        o.require(false, "k=" + std::to_string(k) + " ratio " + std::to_string(ratio));
      }
    }
    if (o.passed) {
      o.detail = std::to_string(checked) + " ratios (" + std::to_string(ledger.certificates) + " certificates, " +
                 std::to_string(ledger.searches) + " searches)";
    }
    return o;
  });

  std::printf("%s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " FAILED").c_str());
  return failures == 0 ? 0 : 1;
}
