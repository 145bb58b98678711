#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ckbound/exact.hpp"
#include "ckbound/graph.hpp"

namespace ckbound {

struct SpectrumEntry {
  EigenValue value;
  std::size_t multiplicity = 1;
};

/// Eigenvalue multiset, sorted descending. Exact values that are equal are
/// merged into one entry; Float values are kept unmerged so near-degenerate
/// eigenvalues are never conflated.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<SpectrumEntry> entries);
  static Spectrum from_floats(std::span<const double> values);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  /// Sum of multiplicities.
  std::size_t size() const noexcept { return size_; }
  bool is_exact() const noexcept;

  /// k-th largest counting multiplicity, 1-based.
  const EigenValue& kth_largest(std::size_t k) const;
  /// All values expanded by multiplicity, descending.
  std::vector<double> to_doubles() const;
  /// Sum of multiplicity * value^p (exact when the spectrum is).
  EigenValue power_sum(int p) const;

  /// Float entries closer than `gap` collapse into one entry (display only).
  Spectrum merged_for_display(double gap = 1e-7) const;
  /// "5^1 (sqrt5)^3 (-1)^5 (-sqrt5)^3"
  std::string to_text() const;

 private:
  std::vector<SpectrumEntry> entries_;
  std::size_t size_ = 0;
};

/// Multiset union.
Spectrum spectrum_union(const Spectrum& a, const Spectrum& b);

/// Max |difference| between the sorted expansions; throws if sizes differ.
double max_deviation(const Spectrum& a, const Spectrum& b);

/// Eigenvalues of a dense symmetric n*n row-major matrix by cyclic Jacobi
/// rotations, descending. At most 30 sweeps; stops once the off-diagonal
/// Frobenius norm drops below 1e-12 * n. Throws NumericError otherwise.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

/// Adjacency eigenvalues of g as unmerged Float values.
Spectrum eigen_spectrum(const Graph& g);

/// Free-function form of Spectrum::kth_largest.
EigenValue kth_largest(const Spectrum& s, std::size_t k);

struct InvariantCheck {
  std::string name;
  double expected = 0;
  double actual = 0;
  double residual = 0;
  bool passed = false;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  bool passed() const noexcept;
};

/// Power-sum identities: sum = 0, sum of squares = 2|E|,
/// sum of cubes = 6 * #triangles, each within 1e-6.
InvariantReport spectrum_invariant_checks(const Graph& g, const Spectrum& s);

}  // namespace ckbound
