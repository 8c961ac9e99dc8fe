#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "bytedup/dedup.hpp"

namespace bytedup {

inline constexpr std::string_view kDefaultEngineId = "bytedup_v1";

// One diagnostic line per dedup session:
//   engine=<id> dedup_us=<n> unique_count=<n> duplicate_count=<n> novelty_count=<n>\n
struct TelemetryLine {
  std::string engine_id;
  std::uint64_t dedup_us = 0;
  std::uint64_t unique_count = 0;
  std::uint64_t duplicate_count = 0;
  std::uint64_t novelty_count = 0;

  static TelemetryLine from(const DedupResult& result, std::string_view engine_id);

  // Serialized form including the terminating LF.
  std::string format() const;

  // Accepts exactly the format() grammar, with or without the final LF.
  static std::optional<TelemetryLine> parse(std::string_view line);

  friend bool operator==(const TelemetryLine&, const TelemetryLine&) = default;
};

/// Engine ids are single tokens: non-empty, no whitespace, no '='.
bool valid_engine_id(std::string_view id);

// Writes the line to `diag` as one write under a process-wide lock, so
// concurrent sessions sharing the stream never interleave partial lines.
TelemetryLine emit_telemetry(const DedupResult& result, std::string_view engine_id, std::ostream& diag);

// Same, straight to a file descriptor with a single write(2).
TelemetryLine emit_telemetry(const DedupResult& result, std::string_view engine_id, int fd);

}  // namespace bytedup
