#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bytedup/chunk_sequence.hpp"

namespace bytedup::audit {

// Reference dedup: a standard hash set over the full record bytes, written
// without any of the engine's fingerprint or index code.
struct OracleResult {
  std::vector<std::string> unique_records;
  std::uint64_t unique_count = 0;
  std::uint64_t duplicate_count = 0;
};

OracleResult oracle_dedup(const ChunkSequence& records);

}  // namespace bytedup::audit
