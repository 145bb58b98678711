#include "ckbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

#include "ckbound/bounds.hpp"
#include "ckbound/search.hpp"

namespace ckbound {

namespace {

constexpr double kSpectrumTol = 1e-8;

Graph random_graph(SearchRng& rng, std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) b.set_edge(i, j, rng.coin());
  }
  return b.build();
}

VerifyCheck guarded(const std::string& name, const std::function<VerifyCheck()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, 0, std::string("exception: ") + e.what()};
  }
}

VerifyCheck spectrum_match(const std::string& name, const Graph& g, const Spectrum& exact) {
  const Spectrum numeric = eigen_spectrum(g);
  if (numeric.size() != exact.size()) return {name, false, 0, "vertex count differs from spectrum size"};
  const double dev = max_deviation(numeric, exact);
  return {name, dev <= kSpectrumTol, dev, ""};
}

bool exact_identities(const SpectralDescriptor& d, std::int64_t degree, std::string& why) {
  const auto n = static_cast<std::int64_t>(d.n);
  if (static_cast<std::int64_t>(d.spectrum.size()) != n) {
    why = d.name + ": multiplicities do not sum to n";
    return false;
  }
  if (!exactly_equal(d.spectrum.power_sum(1), EigenValue(0))) {
    why = d.name + ": trace is not 0";
    return false;
  }
  if (!exactly_equal(d.spectrum.power_sum(2), EigenValue(n * degree))) {
    why = d.name + ": sum of squares is not n*k";
    return false;
  }
  return true;
}

bool exactly_same(const Spectrum& a, const Spectrum& b) {
  return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
                    [](const SpectrumEntry& x, const SpectrumEntry& y) {
                      return x.multiplicity == y.multiplicity && exactly_equal(x.value, y.value);
                    });
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& opts) {
  std::vector<VerifyCheck> out;

  out.push_back(guarded("icosahedron spectrum", [&] {
    const Graph g = opts.icosahedron_override ? *opts.icosahedron_override : icosahedron();
    VerifyCheck c = spectrum_match("icosahedron spectrum", g, icosahedron_spectrum());
    if (g.regular_degree() != std::optional<std::size_t>(5) || g.edge_count() != 30) {
      c.passed = false;
      c.detail = "not 5-regular with 30 edges";
    }
    return c;
  }));

  out.push_back(guarded("family spectra (Johnson, Petersen, Paley)", [&] {
    VerifyCheck c{"family spectra (Johnson, Petersen, Paley)", true, 0, ""};
    auto fold = [&](const VerifyCheck& sub) {
      c.residual = std::max(c.residual, sub.residual);
      if (!sub.passed) {
        c.passed = false;
        c.detail += sub.name + " ";
      }
    };
    for (std::int64_t m = 4; m <= 16; ++m) {
      fold(spectrum_match("J(" + std::to_string(m) + ",2)", johnson(m, 2), johnson_spectrum(m, 2)));
    }
    fold(spectrum_match("Petersen", petersen(), srg_spectrum({10, 3, 0, 1}).spectrum));
    for (std::int64_t q : {5, 9, 13}) {
      const auto d = paley_descriptor(q);
      fold(spectrum_match(d.name, *d.graph(), d.spectrum));
    }
    return c;
  }));

  out.push_back(guarded("power-sum identities on random graphs", [&] {
    VerifyCheck c{"power-sum identities on random graphs", true, 0, ""};
    SearchRng rng(opts.seed);
    for (std::size_t i = 0; i < 4 * opts.random_graphs; ++i) {
      const Graph g = random_graph(rng, 1 + rng.below(15));
      const auto report = spectrum_invariant_checks(g, eigen_spectrum(g));
      for (const auto& chk : report.checks) c.residual = std::max(c.residual, chk.residual);
      if (!report.passed()) c.passed = false;
    }
    return c;
  }));

  out.push_back(guarded("closed blowup: analytic vs explicit", [&] {
    VerifyCheck c{"closed blowup: analytic vs explicit", true, 0, ""};
    SearchRng rng(opts.seed + 1);
    for (std::size_t i = 0; i < opts.random_graphs; ++i) {
      const Graph g = random_graph(rng, 1 + rng.below(10));
      const Spectrum base = eigen_spectrum(g);
      for (std::size_t t = 1; t <= 3; ++t) {
        const double dev = max_deviation(eigen_spectrum(closed_blowup_graph(g, t)), blowup_spectrum(base, t));
        c.residual = std::max(c.residual, dev);
        if (dev > kSpectrumTol) c.passed = false;
      }
    }
    return c;
  }));

  out.push_back(guarded("SRG/DRG spectral identities", [&] {
    VerifyCheck c{"SRG/DRG spectral identities", true, 0, ""};
    std::string why;
    for (const SrgParams& p : {SrgParams{9, 4, 1, 2}, SrgParams{10, 3, 0, 1}, SrgParams{57, 24, 11, 9},
                               SrgParams{125, 72, 45, 36}, SrgParams{243, 132, 81, 60}}) {
      if (!exact_identities(srg_spectrum(p), p.k, why)) c.passed = false;
      const auto via_drg = drg_spectrum({{p.k, p.k - p.lambda - 1}, {1, p.mu}});
      if (!exactly_same(via_drg.spectrum, srg_spectrum(p).spectrum)) {
        c.passed = false;
        why += " srg/drg disagree for " + srg_name(p);
      }
    }
    if (!exact_identities(gosset_descriptor(), 27, why)) c.passed = false;
    c.detail = why;
    return c;
  }));

  out.push_back(guarded("bound table k = 4..24", [&] {
    VerifyCheck c{"bound table k = 4..24", true, 0, ""};
    for (const auto& row : build_table(4, 24)) {
      if (!row.match) {
        c.passed = false;
        c.detail += "k=" + std::to_string(row.k) + " ";
      }
      for (const auto& cert : row.certificates) {
        const double slack = cert.ratio.to_double() - nikiforov_upper(static_cast<int>(row.k));
        if (slack > 0) {
          c.passed = false;
          c.detail += "k=" + std::to_string(row.k) + " exceeds upper bound ";
        }
      }
    }
    return c;
  }));

  return out;
}

}  // namespace ckbound
