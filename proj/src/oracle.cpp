#include "bytedup/oracle.hpp"

#include <unordered_set>

namespace bytedup::audit {

OracleResult oracle_dedup(const ChunkSequence& records) {
  OracleResult r;
  std::unordered_set<std::string> seen;
  seen.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::string rec(records[i]);
    if (seen.insert(rec).second) {
      r.unique_records.push_back(std::move(rec));
    }
  }
  r.unique_count = r.unique_records.size();
  r.duplicate_count = records.size() - r.unique_count;
  return r;
}

}  // namespace bytedup::audit
