#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ckbound/graph.hpp"
#include "ckbound/spectrum.hpp"

namespace ckbound {

/// Parameters (v, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph.
struct IntersectionArray {
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;

  std::size_t diameter() const noexcept { return b.size(); }
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

enum class Verification { Verified, ExactFormula, Asserted };

const char* to_string(Verification v) noexcept;

struct ExplicitSource {
  std::shared_ptr<const Graph> graph;
};
struct AssertedSource {
  std::string note;
};
/// Spectrum obtained by transforming other descriptors (union, complement,
/// blowup) when no explicit graph is available.
struct DerivedSource {
  std::string note;
  Verification inherited = Verification::Asserted;
};

using Provenance = std::variant<ExplicitSource, SrgParams, IntersectionArray, AssertedSource, DerivedSource>;

/// A graph known through its spectrum, with a record of where the spectrum
/// comes from.
struct SpectralDescriptor {
  std::string name;
  std::size_t n = 0;
  Spectrum spectrum;
  Provenance provenance;

  /// The explicit graph, or nullptr for parameter-level descriptors.
  const Graph* graph() const noexcept;
  /// Status a certificate built on this descriptor carries.
  Verification verification() const noexcept;
};

/// Throws InvalidArgument unless multiplicities sum to n and the trace is 0
/// (exactly for exact spectra, within 1e-9 * n otherwise).
void check_descriptor_invariants(const SpectralDescriptor& d);

/// Explicit descriptor. With no exact spectrum supplied the eigensolver
/// provides a Float one; a supplied spectrum must agree with the eigensolver
/// within 1e-8 (ConsistencyError otherwise).
SpectralDescriptor explicit_descriptor(std::string name, Graph g);
SpectralDescriptor explicit_descriptor(std::string name, Graph g, Spectrum exact);

// Graph constructors.
Graph johnson(std::int64_t m, std::int64_t r);
Graph icosahedron();
Graph petersen();
/// Prime q = 1 (mod 4), or q = 9 realised as K3 x K3.
Graph paley(std::int64_t q);

// Known exact spectra.
Spectrum complete_spectrum(std::size_t n);
Spectrum johnson_spectrum(std::int64_t m, std::int64_t r);
Spectrum icosahedron_spectrum();

// Explicit descriptors carrying their exact spectra.
SpectralDescriptor complete_descriptor(std::size_t n);
SpectralDescriptor johnson_descriptor(std::int64_t m, std::int64_t r);
SpectralDescriptor icosahedron_descriptor();
SpectralDescriptor petersen_descriptor();
SpectralDescriptor paley_descriptor(std::int64_t q);

/// Spectrum k^1 theta^f tau^g from the SRG eigenvalue formulas. Throws
/// InfeasibleParameters when the multiplicities are not non-negative integers.
SpectralDescriptor srg_spectrum(const SrgParams& p);

/// Spectrum from the intersection matrix. Eigenvalues are exact when they are
/// integers or quadratic irrationals, Float otherwise. Throws
/// InfeasibleParameters for invalid arrays or non-integral multiplicities.
SpectralDescriptor drg_spectrum(const IntersectionArray& a);

/// Intersection array of the Gosset graph, {27,10,1; 1,10,27}.
IntersectionArray gosset_array();
SpectralDescriptor gosset_descriptor();

SpectralDescriptor asserted_descriptor(std::string name, std::size_t n, Spectrum spectrum, std::string note);

/// The Taylor graph of Co3 on 552 vertices, with the spectrum
/// 275^1 55^23 (-1)^275 (-5)^253 taken from the literature.
SpectralDescriptor co3_taylor_descriptor();

std::string srg_name(const SrgParams& p);
std::string drg_name(const IntersectionArray& a);

}  // namespace ckbound
