#include "ckbound/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ckbound/errors.hpp"

namespace ckbound {

namespace {

constexpr int kMaxSweeps = 30;

bool descending(const EigenValue& x, const EigenValue& y) {
  const int c = compare(x, y, 0.0);
  if (c != 0) return c > 0;
  return false;
}

bool plain_nonnegative_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) {
  for (const auto& e : entries) {
    if (e.multiplicity == 0) throw InvalidArgument("spectrum multiplicities must be positive");
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return descending(a.value, b.value); });
  for (auto& e : entries) {
    size_ += e.multiplicity;
    if (!entries_.empty() && exactly_equal(entries_.back().value, e.value)) {
      entries_.back().multiplicity += e.multiplicity;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

Spectrum Spectrum::from_floats(std::span<const double> values) {
  std::vector<SpectrumEntry> entries;
  entries.reserve(values.size());
  for (double v : values) entries.push_back({EigenValue::real(v), 1});
  return Spectrum(std::move(entries));
}

bool Spectrum::is_exact() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.value.is_exact(); });
}

const EigenValue& Spectrum::kth_largest(std::size_t k) const {
  if (k == 0 || k > size_) {
    throw InvalidArgument("k = " + std::to_string(k) + " out of range 1.." + std::to_string(size_));
  }
  std::size_t seen = 0;
  for (const auto& e : entries_) {
    seen += e.multiplicity;
    if (seen >= k) return e.value;
  }
  throw ConsistencyError("spectrum multiplicities inconsistent");
}

std::vector<double> Spectrum::to_doubles() const {
  std::vector<double> out;
  out.reserve(size_);
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value.to_double());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

EigenValue Spectrum::power_sum(int p) const {
  EigenValue total;
  for (const auto& e : entries_) {
    EigenValue term = static_cast<std::int64_t>(e.multiplicity);
    for (int i = 0; i < p; ++i) term = term * e.value;
    total = total + term;
  }
  return total;
}

Spectrum Spectrum::merged_for_display(double gap) const {
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries_) {
    if (!out.empty() && !out.back().value.is_exact() && !e.value.is_exact() &&
        std::abs(out.back().value.to_double() - e.value.to_double()) < gap) {
      out.back().multiplicity += e.multiplicity;
    } else {
      out.push_back(e);
    }
  }
  Spectrum s;
  s.entries_ = std::move(out);
  s.size_ = size_;
  return s;
}

std::string Spectrum::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ' ';
    std::string v = e.value.pretty();
    if (v == "-0") v = "0";
    if (!plain_nonnegative_integer(v)) v = "(" + v + ")";
    out += v + "^" + std::to_string(e.multiplicity);
  }
  return out;
}

Spectrum spectrum_union(const Spectrum& a, const Spectrum& b) {
  std::vector<SpectrumEntry> all = a.entries();
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return Spectrum(std::move(all));
}

double max_deviation(const Spectrum& a, const Spectrum& b) {
  const auto x = a.to_doubles();
  const auto y = b.to_doubles();
  if (x.size() != y.size()) throw InvalidArgument("spectra have different sizes");
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw InvalidArgument("matrix size does not match n");
  const double threshold = 1e-12 * static_cast<double>(n);
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(s);
  };

  bool converged = off_norm() < threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        }
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const double tau = s / (1 + c);
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r * n + p];
          const double arq = a[r * n + q];
          const double new_rp = arp - s * (arq + tau * arp);
          const double new_rq = arq + s * (arp - tau * arq);
          a[r * n + p] = a[p * n + r] = new_rp;
          a[r * n + q] = a[q * n + r] = new_rq;
        }
      }
    }
    converged = off_norm() < threshold;
  }
  if (!converged) {
    throw NumericError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) +
                       " sweeps (n = " + std::to_string(n) + ")");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a[i * n + i];
    if (!std::isfinite(out[i])) throw NumericError("Jacobi eigensolver produced a non-finite eigenvalue");
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Spectrum eigen_spectrum(const Graph& g) {
  const auto values = symmetric_eigenvalues(g.adjacency_matrix(), g.n());
  return Spectrum::from_floats(values);
}

EigenValue kth_largest(const Spectrum& s, std::size_t k) { return s.kth_largest(k); }

bool InvariantReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

InvariantReport spectrum_invariant_checks(const Graph& g, const Spectrum& s) {
  constexpr double kTol = 1e-6;
  const auto values = s.to_doubles();
  double s1 = 0, s2 = 0, s3 = 0;
  for (double v : values) {
    s1 += v;
    s2 += v * v;
    s3 += v * v * v;
  }
  auto make = [&](std::string name, double expected, double actual) {
    const double r = std::abs(expected - actual);
    return InvariantCheck{std::move(name), expected, actual, r, r <= kTol};
  };
  InvariantReport report;
  report.checks.push_back(make("trace", 0.0, s1));
  report.checks.push_back(make("sum of squares = 2|E|", 2.0 * static_cast<double>(g.edge_count()), s2));
  report.checks.push_back(make("sum of cubes = 6 triangles", 6.0 * static_cast<double>(g.triangle_count()), s3));
  if (values.size() != g.n()) {
    report.checks.push_back(make("eigenvalue count", static_cast<double>(g.n()), static_cast<double>(values.size())));
  }
  return report;
}

}  // namespace ckbound
