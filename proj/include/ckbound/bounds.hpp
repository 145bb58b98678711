#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ckbound/families.hpp"

namespace ckbound {

/// Spectrum of the closed blowup G^[t] on n*t vertices.
struct BlowupSpectrum {
  SpectralDescriptor base;
  std::size_t t = 1;
  Spectrum spectrum;
};

/// {t*lambda + t - 1 : lambda in s} merged with (t-1)*n extra -1s.
Spectrum blowup_spectrum(const Spectrum& s, std::size_t t);
BlowupSpectrum blowup_spectrum(const SpectralDescriptor& base, std::size_t t);

/// k-th largest eigenvalue of G^[t], read off the merged multiset.
EigenValue kth_largest_of_blowup(const SpectralDescriptor& base, std::size_t t, std::size_t k);

/// lambda_k(G^[t]) / (n t).
EigenValue finite_blowup_ratio(const SpectralDescriptor& base, std::size_t t, std::size_t k);

/// sup_t lambda_k(G^[t]) / (n t).
struct LimitRatio {
  EigenValue value;
  /// lambda_k <= -1: every blowup ratio is negative and the reported
  /// supremum 0 is not attained.
  bool degenerate = false;
};

LimitRatio limit_ratio(const Spectrum& s, std::size_t n, std::size_t k);
LimitRatio limit_ratio(const SpectralDescriptor& base, std::size_t k);

/// c_k <= 1 / (2 sqrt(k-1)), k >= 2.
double nikiforov_upper(int k);
/// 1 / (2 sqrt(k-1) + k^(1/3)); holds only for unspecified large k, so it is
/// for display and never asserted.
double nikiforov_asymptotic_lower(int k);
/// Prior lower bound 1 / (k - 1/2), k >= 5.
double reference_lower(int k);

struct BoundCertificate {
  std::size_t k = 0;
  SpectralDescriptor base;
  EigenValue ratio;
  bool degenerate = false;
  Verification verification = Verification::Asserted;
};

/// Certificate for c_k >= limit_ratio(base, k). Explicit graphs are re-solved
/// numerically and must agree with the stored spectrum within 1e-8. Throws
/// ConsistencyError when that fails or when the ratio beats the proven upper
/// bound.
BoundCertificate certify(const SpectralDescriptor& base, std::size_t k);

/// Throws ConsistencyError if ratio > nikiforov_upper(k) + slack (k >= 2).
void check_upper_dominance(std::size_t k, double ratio, double slack = 1e-12);

struct TableRow {
  std::size_t k = 0;
  std::vector<BoundCertificate> certificates;
  EigenValue expected;
  /// Decimal exactly as printed in the published table.
  std::string printed_decimal;
  bool match = false;
};

/// Published bound for row k (4..24) and its printed decimal.
struct PublishedRow {
  std::size_t k;
  EigenValue ratio;
  std::string decimal;
};
std::vector<PublishedRow> published_table();

/// True when |value - printed| is below one unit in the printed last digit,
/// i.e. the printed decimal is a rounding or truncation of value.
bool decimal_matches(double value, const std::string& printed);

/// Rows k_min..k_max (within 4..24) with a match flag per row.
std::vector<TableRow> build_table(std::size_t k_min = 4, std::size_t k_max = 24);

/// Full k = 4..24 table; throws TableMismatch naming every failing row.
std::vector<TableRow> reproduce_table();

}  // namespace ckbound
