#include "ckbound/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "ckbound/errors.hpp"

namespace ckbound {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

// Antipodal-pair layout: apex 0, upper pentagon 1..5, lower pentagon 6..10,
// apex 11.
constexpr std::array<Edge, 30> kIcosahedronEdges{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
    {1, 6}, {1, 7}, {2, 7}, {2, 8}, {3, 8},
    {3, 9}, {4, 9}, {4, 10}, {5, 10}, {5, 6},
    {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
    {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11},
}};

// Requires an exact non-negative integer; returns it.
std::size_t exact_multiplicity(const EigenValue& m, const std::string& what) {
  const Rational* r = m.as_rational();
  if (r == nullptr || !r->is_integer() || r->sign() < 0) {
    throw InfeasibleParameters(what + ": multiplicity " + m.to_string() + " is not a non-negative integer");
  }
  return static_cast<std::size_t>(r->num());
}

std::size_t rounded_multiplicity(double m, const std::string& what) {
  const double r = std::round(m);
  if (std::abs(m - r) > 1e-6 || r < 0) {
    throw InfeasibleParameters(what + ": multiplicity " + std::to_string(m) + " is not integral");
  }
  return static_cast<std::size_t>(r);
}

// Polynomial with rational coefficients, lowest degree first.
using Poly = std::vector<Rational>;

Poly poly_mul_linear(const Poly& p, const Rational& root) {
  // p(x) * (x - root)
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= p[i] * root;
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

Poly poly_scale(Poly a, const Rational& s) {
  for (auto& x : a) x *= s;
  return a;
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Divide by (x - root), which must be a root.
Poly poly_deflate(const Poly& p, const Rational& root) {
  const std::size_t deg = p.size() - 1;
  Poly q(deg);
  Rational carry;
  for (std::size_t i = deg; i-- > 0;) {
    carry = p[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

}  // namespace

const char* to_string(Verification v) noexcept {
  switch (v) {
    case Verification::Verified: return "verified";
    case Verification::ExactFormula: return "exact-formula";
    case Verification::Asserted: return "asserted";
  }
  return "asserted";
}

const Graph* SpectralDescriptor::graph() const noexcept {
  if (const auto* e = std::get_if<ExplicitSource>(&provenance)) return e->graph.get();
  return nullptr;
}

Verification SpectralDescriptor::verification() const noexcept {
  return std::visit(
      [](const auto& src) -> Verification {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, ExplicitSource>) return Verification::Verified;
        else if constexpr (std::is_same_v<T, SrgParams> || std::is_same_v<T, IntersectionArray>)
          return Verification::ExactFormula;
        else if constexpr (std::is_same_v<T, DerivedSource>) return src.inherited;
        else return Verification::Asserted;
      },
      provenance);
}

void check_descriptor_invariants(const SpectralDescriptor& d) {
  if (d.spectrum.size() != d.n) {
    throw InvalidArgument(d.name + ": multiplicities sum to " + std::to_string(d.spectrum.size()) +
                          ", expected n = " + std::to_string(d.n));
  }
  const EigenValue trace = d.spectrum.power_sum(1);
  if (trace.is_exact() ? sign(trace) != 0 : std::abs(trace.to_double()) > 1e-9 * static_cast<double>(d.n)) {
    throw InvalidArgument(d.name + ": spectrum has nonzero trace " + trace.to_string());
  }
}

SpectralDescriptor explicit_descriptor(std::string name, Graph g) {
  Spectrum s = eigen_spectrum(g);
  const std::size_t n = g.n();
  return {std::move(name), n, std::move(s), ExplicitSource{std::make_shared<const Graph>(std::move(g))}};
}

SpectralDescriptor explicit_descriptor(std::string name, Graph g, Spectrum exact) {
  const std::size_t n = g.n();
  const double dev = max_deviation(eigen_spectrum(g), exact);
  if (!(dev <= 1e-8)) {
    throw ConsistencyError(name + ": stated spectrum deviates from the eigensolver by " + std::to_string(dev));
  }
  SpectralDescriptor d{std::move(name), n, std::move(exact),
                       ExplicitSource{std::make_shared<const Graph>(std::move(g))}};
  check_descriptor_invariants(d);
  return d;
}

Graph johnson(std::int64_t m, std::int64_t r) {
  if (r < 1 || m < 2 * r) throw InvalidArgument("johnson(m, r) requires m >= 2r >= 2");
  if (m > 62) throw InvalidArgument("johnson(m, r) supports m <= 62");
  const std::int64_t count = binomial(m, r);
  if (count > 20000) throw InvalidArgument("johnson graph too large (" + std::to_string(count) + " vertices)");
  std::vector<std::uint64_t> subsets;
  subsets.reserve(static_cast<std::size_t>(count));
  // r-subsets in lexicographic order of their sorted element lists
  std::vector<std::int64_t> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    subsets.push_back(mask);
    std::int64_t pos = r - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - r + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (std::int64_t j = pos + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  GraphBuilder b(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (std::popcount(subsets[i] & subsets[j]) == r - 1) b.set_edge(i, j, true);
    }
  }
  return b.build();
}

Graph icosahedron() { return Graph::from_edges(12, kIcosahedronEdges); }

Graph petersen() { return complement(johnson(5, 2)); }

Graph paley(std::int64_t q) {
  if (q == 9) return cartesian_product(complete(3), complete(3));
  if (!is_prime(q) || q % 4 != 1) {
    throw InvalidArgument("paley(q) requires q prime with q = 1 (mod 4), or q = 9; got " + std::to_string(q));
  }
  std::vector<bool> residue(static_cast<std::size_t>(q), false);
  for (std::int64_t x = 1; x < q; ++x) residue[static_cast<std::size_t>(x * x % q)] = true;
  GraphBuilder b(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    for (std::int64_t j = i + 1; j < q; ++j) {
      if (residue[static_cast<std::size_t>(j - i)]) b.set_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
    }
  }
  return b.build();
}

Spectrum complete_spectrum(std::size_t n) {
  if (n == 0) throw InvalidArgument("complete graph needs n >= 1");
  if (n == 1) return Spectrum({{0, 1}});
  return Spectrum({{static_cast<std::int64_t>(n) - 1, 1}, {-1, n - 1}});
}

Spectrum johnson_spectrum(std::int64_t m, std::int64_t r) {
  if (r < 1 || m < 2 * r) throw InvalidArgument("johnson(m, r) requires m >= 2r >= 2");
  std::vector<SpectrumEntry> entries;
  for (std::int64_t j = 0; j <= r; ++j) {
    const std::int64_t theta = (r - j) * (m - r - j) - j;
    const std::int64_t mult = binomial(m, j) - binomial(m, j - 1);
    if (mult > 0) entries.push_back({theta, static_cast<std::size_t>(mult)});
  }
  return Spectrum(std::move(entries));
}

Spectrum icosahedron_spectrum() {
  return Spectrum({{5, 1}, {EigenValue::sqrt_of(5), 3}, {-1, 5}, {-EigenValue::sqrt_of(5), 3}});
}

SpectralDescriptor complete_descriptor(std::size_t n) {
  return explicit_descriptor("K" + std::to_string(n), complete(n), complete_spectrum(n));
}

SpectralDescriptor johnson_descriptor(std::int64_t m, std::int64_t r) {
  return explicit_descriptor("J(" + std::to_string(m) + "," + std::to_string(r) + ")", johnson(m, r),
                             johnson_spectrum(m, r));
}

SpectralDescriptor icosahedron_descriptor() {
  return explicit_descriptor("icosahedron", icosahedron(), icosahedron_spectrum());
}

SpectralDescriptor petersen_descriptor() {
  return explicit_descriptor("Petersen", petersen(), srg_spectrum({10, 3, 0, 1}).spectrum);
}

SpectralDescriptor paley_descriptor(std::int64_t q) {
  Graph g = paley(q);
  const SrgParams p = q == 9 ? SrgParams{9, 4, 1, 2} : SrgParams{q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4};
  return explicit_descriptor("Paley(" + std::to_string(q) + ")", std::move(g), srg_spectrum(p).spectrum);
}

std::string srg_name(const SrgParams& p) {
  return "srg(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
         std::to_string(p.mu) + ")";
}

std::string drg_name(const IntersectionArray& a) {
  std::string s = "drg{";
  for (std::size_t i = 0; i < a.b.size(); ++i) s += (i ? "," : "") + std::to_string(a.b[i]);
  s += ";";
  for (std::size_t i = 0; i < a.c.size(); ++i) s += (i ? "," : "") + std::to_string(a.c[i]);
  return s + "}";
}

SpectralDescriptor srg_spectrum(const SrgParams& p) {
  const std::string name = srg_name(p);
  if (!(0 < p.k && p.k < p.v) || p.lambda < 0 || p.mu < 0 || p.lambda >= p.k || p.mu > p.k) {
    throw InfeasibleParameters(name + ": parameters out of range");
  }
  if (p.k * (p.k - p.lambda - 1) != (p.v - p.k - 1) * p.mu) {
    throw InfeasibleParameters(name + ": k(k-lambda-1) != (v-k-1)mu");
  }
  const std::int64_t diff = p.lambda - p.mu;
  const std::int64_t disc = diff * diff + 4 * (p.k - p.mu);
  const EigenValue theta = EigenValue::quadratic(Rational(diff, 2), Rational(1, 2), disc);
  const EigenValue tau = EigenValue::quadratic(Rational(diff, 2), Rational(-1, 2), disc);
  const EigenValue gap = EigenValue::sqrt_of(disc);
  const EigenValue skew = EigenValue(2 * p.k + (p.v - 1) * diff) / gap;
  const EigenValue half(Rational(1, 2));
  const std::size_t f = exact_multiplicity(half * (EigenValue(p.v - 1) - skew), name);
  const std::size_t g = exact_multiplicity(half * (EigenValue(p.v - 1) + skew), name);

  std::vector<SpectrumEntry> entries{{p.k, 1}};
  if (f > 0) entries.push_back({theta, f});
  if (g > 0) entries.push_back({tau, g});
  SpectralDescriptor d{name, static_cast<std::size_t>(p.v), Spectrum(std::move(entries)), p};
  check_descriptor_invariants(d);
  return d;
}

SpectralDescriptor drg_spectrum(const IntersectionArray& a) {
  const std::string name = drg_name(a);
  const std::size_t d = a.diameter();
  if (d == 0 || a.c.size() != d) throw InfeasibleParameters(name + ": b and c must have equal nonzero length");
  if (a.c[0] != 1) throw InfeasibleParameters(name + ": c_1 must be 1");
  for (std::size_t i = 0; i < d; ++i) {
    if (a.b[i] <= 0 || a.c[i] <= 0) throw InfeasibleParameters(name + ": entries must be positive");
    if (i > 0 && (a.b[i] > a.b[i - 1] || a.c[i] < a.c[i - 1])) {
      throw InfeasibleParameters(name + ": b must be non-increasing and c non-decreasing");
    }
  }
  const std::int64_t k = a.b[0];
  // Row i of the intersection matrix: (c_i, a_i, b_i), with c_0 = b_d = 0.
  auto b_at = [&](std::size_t i) -> std::int64_t { return i < d ? a.b[i] : 0; };
  auto c_at = [&](std::size_t i) -> std::int64_t { return i == 0 ? 0 : a.c[i - 1]; };
  std::vector<std::int64_t> diag(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    diag[i] = k - b_at(i) - c_at(i);
    if (diag[i] < 0) throw InfeasibleParameters(name + ": a_" + std::to_string(i) + " is negative");
  }

  std::vector<Rational> sizes{1};
  Rational n_total = 1;
  for (std::size_t j = 1; j <= d; ++j) {
    sizes.push_back(sizes.back() * Rational(b_at(j - 1)) / Rational(c_at(j)));
    if (!sizes.back().is_integer()) throw InfeasibleParameters(name + ": k_" + std::to_string(j) + " is not an integer");
    n_total += sizes.back();
  }
  const std::int64_t n = n_total.num();

  // det(xI - L) by the three-term continuant recurrence.
  Poly prev{1};
  Poly cur{Rational(-diag[0]), 1};
  for (std::size_t i = 1; i <= d; ++i) {
    Poly next = poly_sub(poly_mul_linear(cur, Rational(diag[i])),
                         poly_scale(prev, Rational(b_at(i - 1) * c_at(i))));
    prev = std::move(cur);
    cur = std::move(next);
  }

  std::vector<EigenValue> roots;
  Poly rest = cur;
  for (std::int64_t x = k; x >= -k && rest.size() > 1; --x) {
    if (poly_eval(rest, Rational(x)).sign() == 0) {
      roots.emplace_back(x);
      rest = poly_deflate(rest, Rational(x));
    }
  }
  if (rest.size() == 3) {
    // x^2 + p x + q
    const Rational p = rest[1] / rest[2];
    const Rational q = rest[0] / rest[2];
    const Rational disc = p * p - Rational(4) * q;
    // disc = num/den; sqrt(disc) = sqrt(num*den)/den
    roots.push_back(EigenValue::quadratic(-p / Rational(2), Rational(1, 2 * disc.den()), disc.num() * disc.den()));
    roots.push_back(EigenValue::quadratic(-p / Rational(2), Rational(-1, 2 * disc.den()), disc.num() * disc.den()));
  } else if (rest.size() > 3) {
    // Irreducible part of degree >= 3: numeric roots from the symmetrised matrix.
    std::vector<double> sym((d + 1) * (d + 1), 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      sym[i * (d + 1) + i] = static_cast<double>(diag[i]);
      if (i < d) {
        const double off = std::sqrt(static_cast<double>(b_at(i)) * static_cast<double>(c_at(i + 1)));
        sym[i * (d + 1) + i + 1] = sym[(i + 1) * (d + 1) + i] = off;
      }
    }
    for (double x : symmetric_eigenvalues(sym, d + 1)) {
      const bool known = std::any_of(roots.begin(), roots.end(), [&](const EigenValue& r) {
        return r.is_exact() && std::abs(r.to_double() - x) < 1e-6;
      });
      if (!known) roots.push_back(EigenValue::real(x));
    }
  }

  std::vector<SpectrumEntry> entries;
  std::size_t total = 0;
  for (const auto& theta : roots) {
    std::vector<EigenValue> u{EigenValue(1), theta / EigenValue(k)};
    for (std::size_t j = 1; j < d; ++j) {
      u.push_back(((theta - EigenValue(diag[j])) * u[j] - EigenValue(c_at(j)) * u[j - 1]) / EigenValue(b_at(j)));
    }
    EigenValue norm;
    for (std::size_t j = 0; j <= d; ++j) norm = norm + EigenValue(sizes[j]) * u[j] * u[j];
    const EigenValue m = EigenValue(n) / norm;
    const std::size_t mult = m.is_exact() ? exact_multiplicity(m, name) : rounded_multiplicity(m.to_double(), name);
    if (mult == 0) throw InfeasibleParameters(name + ": eigenvalue " + theta.to_string() + " has multiplicity 0");
    entries.push_back({theta, mult});
    total += mult;
  }
  if (total != static_cast<std::size_t>(n)) {
    throw InfeasibleParameters(name + ": multiplicities sum to " + std::to_string(total) + ", expected " +
                               std::to_string(n));
  }
  SpectralDescriptor desc{name, static_cast<std::size_t>(n), Spectrum(std::move(entries)), a};
  check_descriptor_invariants(desc);
  return desc;
}

IntersectionArray gosset_array() { return {{27, 10, 1}, {1, 10, 27}}; }

SpectralDescriptor gosset_descriptor() {
  SpectralDescriptor d = drg_spectrum(gosset_array());
  d.name = "Gosset";
  return d;
}

SpectralDescriptor asserted_descriptor(std::string name, std::size_t n, Spectrum spectrum, std::string note) {
  SpectralDescriptor d{std::move(name), n, std::move(spectrum), AssertedSource{std::move(note)}};
  check_descriptor_invariants(d);
  return d;
}

SpectralDescriptor co3_taylor_descriptor() {
  return asserted_descriptor("Taylor graph of Co3", 552, Spectrum({{275, 1}, {55, 23}, {-1, 275}, {-5, 253}}),
                             "two-graph of Co3 on 276 points; spectrum 275^1 55^23 (-1)^275 (-5)^253 from the literature");
}

}  // namespace ckbound
