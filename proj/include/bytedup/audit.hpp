#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bytedup/dedup.hpp"
#include "bytedup/framing.hpp"
#include "bytedup/ingest.hpp"
#include "bytedup/oracle.hpp"
#include "bytedup/stream.hpp"

namespace bytedup::audit {

struct EquivalenceVerdict {
  std::string corpus_id;
  std::uint64_t engine_unique = 0;
  std::uint64_t oracle_unique = 0;
  std::uint64_t engine_duplicate = 0;
  std::uint64_t oracle_duplicate = 0;
  bool counts_match = false;
  bool survivors_match = false;
  bool violation = true;
  // First index at which the ordered survivor lists differ.
  std::optional<std::size_t> first_divergence;

  std::string to_json() const;
};

/// Compares engine survivors (ordered) and counters against the oracle.
EquivalenceVerdict judge(std::string corpus_id, const DedupResult& engine, const OracleResult& oracle);

struct AuditOptions {
  unsigned workers = 1;
  std::size_t min_block_records = kDefaultMinBlockRecords;
  std::size_t batch_bytes = std::size_t{4} << 20;
};

// Engine (streaming, full pipeline) vs oracle on identically framed records.
// The source is read once; both sides see the same bytes.
EquivalenceVerdict verify_equivalence(const IngestSource& source, const FramingMode& mode,
                                      const AuditOptions& options = {}, std::string corpus_id = {});

struct DeterminismRun {
  unsigned run = 0;
  unsigned workers = 0;
  std::string output_sha256;
  std::uint64_t unique_count = 0;
  std::uint64_t duplicate_count = 0;
  std::uint64_t novelty_count = 0;
};

struct DeterminismReport {
  bool pass = false;
  std::vector<DeterminismRun> runs;
  // Indices into `runs` of the first pair that disagrees.
  std::optional<std::pair<std::size_t, std::size_t>> divergent;

  std::string to_json() const;
};

using StreamRunner =
    std::function<StreamResult(const IngestSource&, const FramingMode&, const StreamOptions&)>;

struct DeterminismOptions {
  // Small blocks so even tiny workloads take the multi-worker path.
  std::size_t min_block_records = 1;
  std::size_t batch_bytes = std::size_t{4} << 20;
  StreamRunner runner;  // defaults to run_stream without an output sink
};

/// Every (run, worker count) pair must yield the same output digest and
/// counters. Throws ConfigError when runs < 2 or worker_counts is empty.
DeterminismReport verify_determinism(const IngestSource& source, const FramingMode& mode, unsigned runs,
                                     const std::vector<unsigned>& worker_counts,
                                     const DeterminismOptions& options = {});

// Randomized differential battery.
struct BatterySpec {
  std::uint64_t seed = 1;
  std::size_t corpora = 10000;
  std::size_t max_records = 10000;
  std::size_t max_record_bytes = 1024;
  std::size_t max_redundancy = 10;
};

struct BatteryReport {
  std::size_t corpora = 0;
  std::size_t violations = 0;
  std::uint64_t records = 0;
  std::uint64_t max_records_seen = 0;
  std::uint64_t max_record_bytes_seen = 0;
  std::vector<EquivalenceVerdict> failures;  // first few only
};

BatteryReport run_equivalence_battery(const BatterySpec& spec);

}  // namespace bytedup::audit
