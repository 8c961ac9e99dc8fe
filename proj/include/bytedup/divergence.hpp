#pragma once

#include <cstdint>
#include <string_view>

#include "bytedup/ingest.hpp"

namespace bytedup::audit {

// Unique counts under the LF-only and the CR-stripping splitters. The
// difference is explained by equivalence classes that merge once a CR
// before LF is dropped, i.e. texts seen both with and without that CR.
struct DivergenceAccount {
  std::uint64_t lf_unique = 0;
  std::uint64_t normalizing_unique = 0;
  // Counted independently by grouping LF-framed records on their CR-stripped form.
  std::uint64_t mixed_ending_classes = 0;

  bool identity_holds() const noexcept {
    return lf_unique >= normalizing_unique && lf_unique - normalizing_unique == mixed_ending_classes;
  }
};

DivergenceAccount account_divergence(const IngestSource& source);
DivergenceAccount account_divergence(std::string_view bytes);

}  // namespace bytedup::audit
