#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bytedup/chunk_sequence.hpp"

namespace bytedup::bench {

enum class RepetitionPattern {
  kBlockRepeat,  // u0..u(U-1) repeated chunks/U times back to back
  kShuffled,     // same multiset, seeded Fisher-Yates order
  kSnowball,     // turn t resends turns 1..t; chunks = U(U+1)/2
};

std::string_view pattern_name(RepetitionPattern p);
std::optional<RepetitionPattern> parse_pattern(std::string_view name);

struct WorkloadSpec {
  std::string name;
  std::size_t chunks = 0;
  std::size_t unique = 0;
  std::size_t record_bytes = 0;  // target size of every record
  std::uint64_t seed = 42;
  RepetitionPattern pattern = RepetitionPattern::kBlockRepeat;

  double rho() const { return static_cast<double>(chunks) / static_cast<double>(unique); }
};

/// Throws ConfigError when the counts do not fit the pattern.
void validate(const WorkloadSpec& spec);

/// Deterministic for a fixed spec: exactly `unique` distinct records, each at
/// least once, arranged per the repetition pattern.
ChunkSequence generate_workload(const WorkloadSpec& spec);

// The reference-baseline rows. Record sizes approximate the published total
// payload sizes (KiB / chunks); counts are exact.
const std::vector<WorkloadSpec>& reference_workloads();

// 15 chunks: 5 distinct ~500-byte passages, each repeated three times.
WorkloadSpec rag15_workload();

std::optional<WorkloadSpec> find_workload(std::string_view name);

/// Every record followed by one LF (records never contain LF).
std::string serialize_lines(const ChunkSequence& records);

// JSONL dataset of {"text": ...} lines; `unique_entries` distinct passages,
// each appearing `duplication_factor` times.
struct JsonlDatasetSpec {
  std::uint64_t seed = 42;
  std::size_t unique_entries = 100000;
  std::size_t duplication_factor = 2;
  RepetitionPattern pattern = RepetitionPattern::kBlockRepeat;
  std::string field = "text";
};

std::string generate_jsonl_dataset(const JsonlDatasetSpec& spec);

// Deterministic 64-bit generator with a platform-independent bounded draw
// (std distributions differ between standard libraries).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // [0, n), n > 0. Modulo bias is below 2^-40 for the ranges used here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // Inclusive range.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

 private:
  std::uint64_t state_;
};

}  // namespace bytedup::bench
