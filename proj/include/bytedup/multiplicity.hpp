#pragma once

#include <cstdint>

#include "bytedup/dedup.hpp"

namespace bytedup {

// Redundancy multiplicity of a deduplicated sequence, kept as the exact
// ratio total/unique. An empty input reports rho = 1 by convention.
struct MultiplicityStats {
  std::uint64_t total = 0;
  std::uint64_t unique = 0;

  double rho() const noexcept {
    return unique == 0 ? 1.0 : static_cast<double>(total) / static_cast<double>(unique);
  }
  // 1 - 1/rho, computed as (total - unique) / total.
  double reduction_fraction() const noexcept {
    return total == 0 ? 0.0 : static_cast<double>(total - unique) / static_cast<double>(total);
  }
  bool has_duplicates() const noexcept { return total != unique; }
};

/// Throws std::invalid_argument when `total` disagrees with the result's
/// conserved counters.
MultiplicityStats multiplicity(const DedupResult& result, std::uint64_t total);

}  // namespace bytedup
