#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "bytedup/dedup.hpp"
#include "bytedup/framing.hpp"
#include "bytedup/ingest.hpp"
#include "bytedup/output_sink.hpp"

namespace bytedup {

struct StreamOptions {
  unsigned workers = 1;
  std::size_t min_block_records = kDefaultMinBlockRecords;
  // Input is framed and deduplicated in batches of at most this many bytes
  // (longer single records extend a batch as needed).
  std::size_t batch_bytes = std::size_t{4} << 20;
  const Baseline* baseline = nullptr;
  // Also collect unique_records / survivor_indices in the result.
  bool retain_records = false;
  FingerprintFn fingerprint_fn = &fingerprint;
};

struct StreamResult {
  DedupResult result;
  // SHA-256 over exactly the bytes emitted to the primary output.
  std::string output_sha256;
  std::uint64_t output_bytes = 0;
  // High-water mark of DedupEngine::memory_bytes() plus the batch buffers.
  std::size_t peak_memory_bytes = 0;
  std::size_t retained_bytes = 0;
};

// Reads `source`, frames it, deduplicates, and writes the survivors to `out`
// (may be null) joined by single LF bytes with no trailing LF. Output is a
// pure function of the input bytes and the framing mode.
//
// Throws IngestError, FramingError (JSONL) or WriteError.
StreamResult run_stream(const IngestSource& source, const FramingMode& mode,
                        const StreamOptions& options, OutputSink* out);

/// As above, over an already opened source.
StreamResult run_stream(ByteSource& input, const FramingMode& mode, const StreamOptions& options,
                        OutputSink* out);

}  // namespace bytedup
