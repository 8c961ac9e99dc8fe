#include "bytedup/multiplicity.hpp"

#include <stdexcept>
#include <string>

namespace bytedup {

MultiplicityStats multiplicity(const DedupResult& result, std::uint64_t total) {
  if (total != result.unique_count + result.duplicate_count) {
    throw std::invalid_argument("multiplicity: total " + std::to_string(total) +
                                " != unique + duplicate " + std::to_string(result.total()));
  }
  if (total > 0 && result.unique_count == 0) {
    throw std::invalid_argument("multiplicity: non-empty input with zero unique records");
  }
  return MultiplicityStats{total, result.unique_count};
}

}  // namespace bytedup
