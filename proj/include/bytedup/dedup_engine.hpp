#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "bytedup/byte_arena.hpp"
#include "bytedup/dedup.hpp"
#include "bytedup/fingerprint_index.hpp"

namespace bytedup {

enum class Retention {
  kCopy,    // survivors are copied into the engine's arena; input may be reused
  kBorrow,  // the caller keeps every processed record alive for the session
};

// Stateful dedup session: batches are processed in order, each against all
// records seen in earlier batches. Inside a batch, records are split into
// contiguous blocks that workers fingerprint and dedup locally; a sequential
// pass then admits local survivors to the global index in original order, so
// the survivor set never depends on the worker count.
//
// A session is single-owner. Distinct sessions share no state.
class DedupEngine {
 public:
  explicit DedupEngine(DedupOptions options = {}, const Baseline* baseline = nullptr,
                       Retention retention = Retention::kCopy);

  // Returns batch-local indices of the survivors, strictly increasing.
  const std::vector<std::size_t>& process(std::span<const std::string_view> batch);

  // Views of the last batch's survivors, valid for the engine's lifetime
  // under kCopy and for the input's lifetime under kBorrow.
  std::span<const std::string_view> last_survivors() const noexcept { return survivor_views_; }

  std::uint64_t records_seen() const noexcept { return unique_ + duplicate_; }
  std::uint64_t unique_count() const noexcept { return unique_; }
  std::uint64_t duplicate_count() const noexcept { return duplicate_; }
  std::uint64_t novelty_count() const noexcept { return novelty_; }
  std::uint64_t dedup_ns() const noexcept { return dedup_ns_; }
  std::uint64_t dedup_us() const noexcept { return round_ns_to_us(dedup_ns_); }

  // Retained bytes plus index and scratch capacity.
  std::size_t memory_bytes() const noexcept;
  std::size_t retained_bytes() const noexcept { return arena_.bytes_used(); }

 private:
  void process_sequential(std::span<const std::string_view> batch);
  void process_parallel(std::span<const std::string_view> batch, std::size_t blocks);
  void admit(std::size_t i, std::string_view record, const Fingerprint& fp);

  DedupOptions options_;
  const Baseline* baseline_;
  Retention retention_;
  FingerprintIndex index_;
  ByteArena arena_;

  std::vector<std::size_t> survivors_;
  std::vector<std::string_view> survivor_views_;
  std::vector<Fingerprint> scratch_fp_;
  std::vector<unsigned char> scratch_keep_;

  std::uint64_t unique_ = 0;
  std::uint64_t duplicate_ = 0;
  std::uint64_t novelty_ = 0;
  std::uint64_t dedup_ns_ = 0;
};

}  // namespace bytedup
