#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bytedup/byte_arena.hpp"
#include "bytedup/chunk_sequence.hpp"
#include "bytedup/fingerprint.hpp"
#include "bytedup/fingerprint_index.hpp"

namespace bytedup {

// Below this many records per worker the engine stays on one thread.
inline constexpr std::size_t kDefaultMinBlockRecords = 4096;

struct DedupOptions {
  unsigned workers = 1;
  std::size_t min_block_records = kDefaultMinBlockRecords;
  FingerprintFn fingerprint_fn = &fingerprint;
};

struct DedupResult {
  // First occurrence of each equivalence class, in increasing original index.
  std::vector<std::string> unique_records;
  // 0-based original index of each entry in unique_records.
  std::vector<std::size_t> survivor_indices;
  std::uint64_t unique_count = 0;
  std::uint64_t duplicate_count = 0;
  // Survivors absent from the baseline; 0 when no baseline was supplied.
  std::uint64_t novelty_count = 0;
  // Pure dedup wall time, excluding ingestion and emission.
  std::uint64_t dedup_us = 0;

  std::uint64_t total() const noexcept { return unique_count + duplicate_count; }
};

/// Preloaded set of records used for novelty accounting. Owns its bytes.
class Baseline {
 public:
  explicit Baseline(FingerprintFn fn = &fingerprint) : fn_(fn) {}

  Baseline(Baseline&&) noexcept = default;
  Baseline& operator=(Baseline&&) noexcept = default;

  /// Returns true if the record was not already present.
  bool add(std::string_view record);
  bool contains(std::string_view record) const { return index_.contains(record, fn_(record)); }
  bool contains(std::string_view record, const Fingerprint& fp, FingerprintFn fp_source) const;

  std::size_t size() const noexcept { return index_.size(); }

 private:
  FingerprintFn fn_;
  ByteArena arena_;
  FingerprintIndex index_;
};

/// First-occurrence filter under byte equality. Output is identical for any
/// worker count.
DedupResult dedup_ordered(const ChunkSequence& input, const DedupOptions& options = {});
DedupResult dedup_ordered(std::span<const std::string_view> input, const DedupOptions& options = {});

/// dedup_ordered plus novelty_count relative to `baseline` (which may be empty).
DedupResult dedup_with_baseline(const ChunkSequence& input, const Baseline& baseline,
                                const DedupOptions& options = {});

inline std::uint64_t round_ns_to_us(std::uint64_t ns) { return (ns + 500) / 1000; }

}  // namespace bytedup
