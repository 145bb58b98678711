#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckbound/graph.hpp"

namespace ckbound {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  /// Worst residual seen by the check (0 for exact checks).
  double residual = 0;
  std::string detail;
};

struct VerifyOptions {
  /// Replaces the built-in icosahedron in the spectrum check.
  std::optional<Graph> icosahedron_override;
  std::uint64_t seed = 20240601;
  std::size_t random_graphs = 50;
};

/// Cross-checks: exact vs numeric family spectra, power-sum identities,
/// analytic vs explicit blowups, SRG/DRG identities and the bound table.
std::vector<VerifyCheck> run_verification(const VerifyOptions& opts = {});

}  // namespace ckbound
