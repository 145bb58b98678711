#include "ckbound/bounds.hpp"

#include <cmath>

#include "ckbound/errors.hpp"

namespace ckbound {

namespace {

constexpr double kExplicitTolerance = 1e-8;

std::vector<SpectralDescriptor> row_descriptors(std::size_t k) {
  if (k == 4) return {icosahedron_descriptor()};
  if (k == 5) return {paley_descriptor(9)};
  if (k == 6) return {petersen_descriptor(), johnson_descriptor(6, 2)};
  if (k == 8) return {johnson_descriptor(8, 2), gosset_descriptor()};
  if (k <= 16) return {johnson_descriptor(static_cast<std::int64_t>(k), 2)};
  if (k <= 19) return {srg_spectrum({57, 24, 11, 9})};
  if (k <= 21) return {srg_spectrum({125, 72, 45, 36})};
  if (k <= 23) return {srg_spectrum({243, 132, 81, 60})};
  return {co3_taylor_descriptor()};
}

}  // namespace

Spectrum blowup_spectrum(const Spectrum& s, std::size_t t) {
  if (t == 0) throw InvalidArgument("blowup factor t must be >= 1");
  const EigenValue scale(static_cast<std::int64_t>(t));
  const EigenValue shift(static_cast<std::int64_t>(t) - 1);
  std::vector<SpectrumEntry> entries;
  entries.reserve(s.entries().size() + 1);
  for (const auto& e : s.entries()) entries.push_back({scale * e.value + shift, e.multiplicity});
  if (t > 1) entries.push_back({-1, (t - 1) * s.size()});
  return Spectrum(std::move(entries));
}

BlowupSpectrum blowup_spectrum(const SpectralDescriptor& base, std::size_t t) {
  return {base, t, blowup_spectrum(base.spectrum, t)};
}

EigenValue kth_largest_of_blowup(const SpectralDescriptor& base, std::size_t t, std::size_t k) {
  if (t == 0) throw InvalidArgument("blowup factor t must be >= 1");
  if (k == 0 || k > base.n * t) {
    throw InvalidArgument("k = " + std::to_string(k) + " out of range 1.." + std::to_string(base.n * t));
  }
  return blowup_spectrum(base.spectrum, t).kth_largest(k);
}

EigenValue finite_blowup_ratio(const SpectralDescriptor& base, std::size_t t, std::size_t k) {
  return kth_largest_of_blowup(base, t, k) / EigenValue(static_cast<std::int64_t>(base.n * t));
}

LimitRatio limit_ratio(const Spectrum& s, std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw InvalidArgument("k = " + std::to_string(k) + " out of range 1.." + std::to_string(n));
  const EigenValue shifted = s.kth_largest(k) + EigenValue(1);
  if (sign(shifted) <= 0) return {EigenValue(0), true};
  return {shifted / EigenValue(static_cast<std::int64_t>(n)), false};
}

LimitRatio limit_ratio(const SpectralDescriptor& base, std::size_t k) {
  return limit_ratio(base.spectrum, base.n, k);
}

double nikiforov_upper(int k) {
  if (k < 2) throw InvalidArgument("upper bound 1/(2 sqrt(k-1)) needs k >= 2");
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(k - 1)));
}

double nikiforov_asymptotic_lower(int k) {
  if (k < 2) throw InvalidArgument("asymptotic lower bound needs k >= 2");
  return 1.0 / (2.0 * std::sqrt(static_cast<double>(k - 1)) + std::cbrt(static_cast<double>(k)));
}

double reference_lower(int k) {
  if (k < 5) throw InvalidArgument("lower bound 1/(k - 1/2) is stated for k >= 5");
  return 1.0 / (static_cast<double>(k) - 0.5);
}

void check_upper_dominance(std::size_t k, double ratio, double slack) {
  if (k < 2) return;
  const double upper = nikiforov_upper(static_cast<int>(k));
  if (ratio > upper + slack) {
    throw ConsistencyError("ratio " + std::to_string(ratio) + " exceeds the proven upper bound " +
                           std::to_string(upper) + " for k = " + std::to_string(k));
  }
}

BoundCertificate certify(const SpectralDescriptor& base, std::size_t k) {
  const LimitRatio lr = limit_ratio(base, k);
  const Verification status = base.verification();
  if (const Graph* g = base.graph()) {
    const double dev = max_deviation(eigen_spectrum(*g), base.spectrum);
    if (!(dev <= kExplicitTolerance)) {
      throw ConsistencyError(base.name + ": stored spectrum deviates from the eigensolver by " + std::to_string(dev));
    }
  }
  check_upper_dominance(k, lr.value.to_double());
  return {k, base, lr.value, lr.degenerate, status};
}

std::vector<PublishedRow> published_table() {
  const EigenValue golden_ratio_row = EigenValue::quadratic(Rational(1, 12), Rational(1, 12), 5);
  return {
      {4, golden_ratio_row, "0.26967"},
      {5, Rational(2, 9), "0.2222"},
      {6, Rational(1, 5), "0.2"},
      {7, Rational(4, 21), "0.190476"},
      {8, Rational(5, 28), "0.178571"},
      {9, Rational(1, 6), "0.1666"},
      {10, Rational(7, 45), "0.1555"},
      {11, Rational(8, 55), "0.14545"},
      {12, Rational(3, 22), "0.13636"},
      {13, Rational(5, 39), "0.128205"},
      {14, Rational(11, 91), "0.1208791"},
      {15, Rational(4, 35), "0.1142857"},
      {16, Rational(13, 120), "0.108333"},
      {17, Rational(2, 19), "0.10526"},
      {18, Rational(2, 19), "0.10526"},
      {19, Rational(2, 19), "0.10526"},
      {20, Rational(13, 125), "0.104"},
      {21, Rational(13, 125), "0.104"},
      {22, Rational(25, 243), "0.10288"},
      {23, Rational(25, 243), "0.10288"},
      {24, Rational(56, 552), "0.101449"},
  };
}

bool decimal_matches(double value, const std::string& printed) {
  const auto dot = printed.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  return std::abs(value - std::stod(printed)) < std::pow(10.0, -digits);
}

std::vector<TableRow> build_table(std::size_t k_min, std::size_t k_max) {
  if (k_min < 4 || k_max > 24 || k_min > k_max) {
    throw InvalidArgument("table range must lie within 4..24");
  }
  std::vector<TableRow> rows;
  for (const auto& pub : published_table()) {
    if (pub.k < k_min || pub.k > k_max) continue;
    TableRow row{pub.k, {}, pub.ratio, pub.decimal, true};
    for (const auto& d : row_descriptors(pub.k)) {
      row.certificates.push_back(certify(d, pub.k));
      const auto& cert = row.certificates.back();
      row.match = row.match && exactly_equal(cert.ratio, pub.ratio) &&
                  decimal_matches(cert.ratio.to_double(), pub.decimal);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> reproduce_table() {
  auto rows = build_table(4, 24);
  std::string bad;
  for (const auto& r : rows) {
    if (r.match) continue;
    bad += " k=" + std::to_string(r.k) + " (expected " + r.expected.to_string() + ", got";
    for (const auto& c : r.certificates) bad += " " + c.ratio.to_string();
    bad += ")";
  }
  if (!bad.empty()) throw TableMismatch("bound table mismatch:" + bad);
  return rows;
}

}  // namespace ckbound
