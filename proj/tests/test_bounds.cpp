#include "doctest.h"

#include <cmath>
#include <random>

#include "ckbound/bounds.hpp"
#include "ckbound/errors.hpp"
#include "ckbound/expr.hpp"
#include "oracles.hpp"

using namespace ckbound;

namespace {

bool same(const Spectrum& a, const Spectrum& b) {
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    if (a.entries()[i].multiplicity != b.entries()[i].multiplicity) return false;
    if (!exactly_equal(a.entries()[i].value, b.entries()[i].value)) return false;
  }
  return true;
}

Spectrum spec(std::initializer_list<std::pair<EigenValue, std::size_t>> items) {
  std::vector<SpectrumEntry> e;
  for (const auto& [v, m] : items) e.push_back({v, m});
  return Spectrum(std::move(e));
}

SpectralDescriptor c4_descriptor() { return explicit_descriptor("C4", cycle(4), spec({{2, 1}, {0, 2}, {-2, 1}})); }

const EigenValue kC4 = EigenValue::quadratic(Rational(1, 12), Rational(1, 12), 5);

}  // namespace

TEST_CASE("blowup spectrum transform") {
  const auto b = blowup_spectrum(icosahedron_descriptor(), 2);
  CHECK(b.t == 2);
  CHECK(b.spectrum.size() == 24);
  CHECK(same(b.spectrum, spec({{11, 1}, {EigenValue::quadratic(1, 2, 5), 3}, {-1, 17}, {EigenValue::quadratic(1, -2, 5), 3}})));

  const auto c4 = blowup_spectrum(c4_descriptor(), 2);
  CHECK(same(c4.spectrum, spec({{5, 1}, {1, 2}, {-1, 4}, {-3, 1}})));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = explicit_descriptor("g", oracle::random_graph(rng, 1 + rng() % 8));
    CHECK(max_deviation(blowup_spectrum(d, 1).spectrum, d.spectrum) == 0);
  }
  CHECK_THROWS_AS(blowup_spectrum(c4_descriptor(), 0), InvalidArgument);
}

TEST_CASE("analytic blowup matches the explicit blowup graph") {
  std::mt19937_64 rng(1234);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 10);
    const auto d = explicit_descriptor("g", g);
    for (std::size_t t = 1; t <= 3; ++t) {
      const auto explicit_ev = oracle::eigenvalues(closed_blowup_graph(g, t));
      worst = std::max(worst, oracle::max_abs_diff(explicit_ev, blowup_spectrum(d, t).spectrum.to_doubles()));
      worst = std::max(worst, oracle::max_abs_diff(explicit_ev, oracle::blowup_values(oracle::eigenvalues(g), t)));
    }
  }
  CHECK(worst < 1e-8);
  const auto icosa2 = eigen_spectrum(closed_blowup_graph(icosahedron(), 2));
  CHECK(max_deviation(icosa2, blowup_spectrum(icosahedron_descriptor(), 2).spectrum) < 1e-8);
}

TEST_CASE("k-th largest of a blowup merges literally") {
  CHECK(exactly_equal(kth_largest_of_blowup(icosahedron_descriptor(), 3, 4), EigenValue::quadratic(2, 3, 5)));
  CHECK(exactly_equal(kth_largest_of_blowup(johnson_descriptor(7, 2), 2, 7), EigenValue(7)));
  CHECK(exactly_equal(kth_largest_of_blowup(c4_descriptor(), 2, 4), EigenValue(-1)));
  CHECK(exactly_equal(kth_largest_of_blowup(c4_descriptor(), 2, 8), EigenValue(-3)));
  CHECK_THROWS_AS(kth_largest_of_blowup(c4_descriptor(), 2, 9), InvalidArgument);
  CHECK_THROWS_AS(kth_largest_of_blowup(c4_descriptor(), 2, 0), InvalidArgument);
  CHECK(exactly_equal(finite_blowup_ratio(icosahedron_descriptor(), 1, 4),
                      EigenValue::quadratic(0, Rational(1, 12), 5)));
}

TEST_CASE("limit ratios") {
  const auto ico = limit_ratio(icosahedron_descriptor(), 4);
  CHECK(exactly_equal(ico.value, kC4));
  CHECK_FALSE(ico.degenerate);
  for (std::int64_t k = 4; k <= 20; ++k) {
    CHECK(exactly_equal(limit_ratio(johnson_descriptor(k, 2), static_cast<std::size_t>(k)).value,
                        EigenValue(Rational(2 * (k - 3), k * (k - 1)))));
  }
  CHECK(exactly_equal(limit_ratio(complete_descriptor(7), 1).value, EigenValue(1)));

  const auto k5 = limit_ratio(complete_descriptor(5), 2);
  CHECK(exactly_equal(k5.value, EigenValue(0)));
  CHECK(k5.degenerate);
  const auto c4 = limit_ratio(c4_descriptor(), 4);
  CHECK(exactly_equal(c4.value, EigenValue(0)));
  CHECK(c4.degenerate);
  CHECK_FALSE(limit_ratio(c4_descriptor(), 3).degenerate);
  CHECK_THROWS_AS(limit_ratio(c4_descriptor(), 5), InvalidArgument);
}

TEST_CASE("reference formulas") {
  CHECK(nikiforov_upper(2) == 0.5);
  CHECK(nikiforov_upper(4) == doctest::Approx(0.28868).epsilon(1e-5));
  CHECK(nikiforov_upper(4) > kC4.to_double());
  CHECK(nikiforov_upper(17) == 0.125);
  CHECK_THROWS_AS(nikiforov_upper(1), InvalidArgument);
  CHECK(reference_lower(5) == doctest::Approx(2.0 / 9));
  CHECK(reference_lower(6) == doctest::Approx(2.0 / 11));
  CHECK(reference_lower(10) == doctest::Approx(2.0 / 19));
  CHECK_THROWS_AS(reference_lower(4), InvalidArgument);
  CHECK(nikiforov_asymptotic_lower(8) == doctest::Approx(1 / (2 * std::sqrt(7.0) + 2)));
}

TEST_CASE("certificates") {
  const auto ico = certify(icosahedron_descriptor(), 4);
  CHECK(exactly_equal(ico.ratio, kC4));
  CHECK(ico.verification == Verification::Verified);
  CHECK(ico.ratio.to_double() == doctest::Approx(0.26967).epsilon(1e-5));

  const auto s243 = certify(srg_spectrum({243, 132, 81, 60}), 22);
  CHECK(exactly_equal(s243.ratio, EigenValue(Rational(25, 243))));
  CHECK(s243.verification == Verification::ExactFormula);

  const auto k5 = certify(complete_descriptor(5), 2);
  CHECK(exactly_equal(k5.ratio, EigenValue(0)));
  CHECK(k5.degenerate);

  CHECK(certify(co3_taylor_descriptor(), 24).verification == Verification::Asserted);
  CHECK(certify(resolve_graph_expr("union:icosahedron+srg:10,3,0,1"), 4).verification == Verification::ExactFormula);
  CHECK_THROWS_AS(certify(icosahedron_descriptor(), 13), InvalidArgument);
}

TEST_CASE("an explicit graph whose stored spectrum is wrong fails certification") {
  SpectralDescriptor d = icosahedron_descriptor();
  // trace and size are fine, the values are not
  d.spectrum = spec({{5, 1}, {EigenValue::sqrt_of(5), 3}, {0, 4}, {-EigenValue::sqrt_of(5), 3}, {-5, 1}});
  CHECK_THROWS_AS(certify(d, 4), ConsistencyError);
}

TEST_CASE("upper bound dominance is enforced") {
  CHECK_NOTHROW(check_upper_dominance(4, 0.28));
  CHECK_THROWS_AS(check_upper_dominance(4, 0.29), ConsistencyError);
  CHECK_NOTHROW(check_upper_dominance(1, 1.0));
  // an asserted spectrum that beats the proven bound is a bug, not a result
  const auto fake = asserted_descriptor("fake", 4, spec({{1, 3}, {-3, 1}}), "impossible");
  CHECK_THROWS_AS(certify(fake, 3), ConsistencyError);
}

TEST_CASE("published table values") {
  const auto rows = published_table();
  REQUIRE(rows.size() == 21);
  CHECK(exactly_equal(rows[0].ratio, kC4));
  CHECK(rows[0].decimal == "0.26967");
  CHECK(exactly_equal(rows[20].ratio, EigenValue(Rational(7, 69))));
  CHECK(decimal_matches(7.0 / 45, "0.1555"));   // truncated in print
  CHECK(decimal_matches(7.0 / 45, "0.1556"));
  CHECK_FALSE(decimal_matches(7.0 / 45, "0.1554"));
  CHECK(decimal_matches(5.0 / 28, "0.178571"));
}

TEST_CASE("table rows") {
  const auto rows = build_table(4, 24);
  REQUIRE(rows.size() == 21);
  for (const auto& row : rows) {
    CAPTURE(row.k);
    CHECK(row.match);
    for (const auto& c : row.certificates) {
      CHECK(exactly_equal(c.ratio, row.expected));
      CHECK(c.ratio.to_double() <= nikiforov_upper(static_cast<int>(row.k)) + 1e-12);
      if (row.k >= 6) CHECK(c.ratio.to_double() > reference_lower(static_cast<int>(row.k)));
      if (row.k >= 6 && row.k <= 16) {
        const auto k = static_cast<std::int64_t>(row.k);
        CHECK(exactly_equal(c.ratio, EigenValue(Rational(2 * (k - 3), k * (k - 1)))));
      }
    }
  }
  CHECK(exactly_equal(rows[11 - 4].expected, EigenValue(Rational(8, 55))));
  CHECK(rows[19 - 4].certificates.front().base.name == "srg(57,24,11,9)");
  const auto& eight = rows[8 - 4];
  REQUIRE(eight.certificates.size() == 2);
  CHECK(exactly_equal(eight.certificates[0].ratio, eight.certificates[1].ratio));
  CHECK(rows.back().certificates.front().verification == Verification::Asserted);
  CHECK(rows[6 - 4].certificates.size() == 2);

  CHECK(build_table(8, 8).size() == 1);
  CHECK_THROWS_AS(build_table(1, 3), InvalidArgument);
  CHECK_THROWS_AS(build_table(20, 25), InvalidArgument);
  CHECK_NOTHROW(reproduce_table());
}

TEST_CASE("finite blowup ratios increase with t towards the limit") {
  for (const auto& row : build_table(4, 24)) {
    for (const auto& c : row.certificates) {
      CAPTURE(c.base.name);
      EigenValue previous = finite_blowup_ratio(c.base, 1, row.k);
      for (std::size_t t = 2; t <= 10; ++t) {
        const EigenValue r = finite_blowup_ratio(c.base, t, row.k);
        CHECK(compare(r, previous) >= 0);
        CHECK(compare(r, c.ratio) <= 0);
        previous = r;
      }
    }
  }
}
