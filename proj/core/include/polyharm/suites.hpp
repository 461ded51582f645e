#pragma once

// Verification suites: each runs one family of identities over a sample and
// reports the worst deviation next to its tolerance. Shared by the command
// line tool and the acceptance test.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyharm/quadrature.hpp"

namespace polyharm {

struct SuiteConfig {
  std::vector<int> dims{2, 3};
  std::vector<int> orders{1, 2, 3};
  std::uint64_t seed = kDefaultSeed;
  /// Replaces every row tolerance when set.
  std::optional<double> tolerance;
};

struct SuiteRow {
  std::string suite;
  std::string property;
  std::string label;  // parameters of the row, e.g. "n=3 p=2"
  double deviation;
  double tolerance;
  bool statistical = false;  // Monte Carlo rule, 5-sigma tolerance

  bool passed() const { return deviation <= tolerance; }
};

/// route-agreement, series-identity, diagonal-dim, zonal-properties, dimension-nullspace,
/// reproduction, orthogonality, almansi, sector-integrals, hua-convergence,
/// hua-reproduction, limit-theorem, gegenbauer
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name or an unsupported dimension.
std::vector<SuiteRow> run_suite(const std::string& name, const SuiteConfig& config = {});

}  // namespace polyharm
