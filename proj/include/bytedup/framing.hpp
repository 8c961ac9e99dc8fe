#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bytedup/chunk_sequence.hpp"

namespace bytedup {

struct FramingMode {
  enum class Kind {
    kLinesLf,                // split on 0x0A only; 0x0D bytes stay in the record
    kLinesCrlfNormalizing,   // split on optional 0x0D then 0x0A, dropping that 0x0D
    kJsonl,                  // one JSON object per LF line; record = value of `field`
  };

  Kind kind = Kind::kLinesLf;
  std::string field;

  static FramingMode lines_lf() { return {}; }
  static FramingMode crlf_normalizing() { return {Kind::kLinesCrlfNormalizing, {}}; }
  static FramingMode jsonl(std::string field = "text") { return {Kind::kJsonl, std::move(field)}; }

  std::string name() const;

  friend bool operator==(const FramingMode&, const FramingMode&) = default;
};

/// Parses "lines", "lines-crlf" or "jsonl" (field supplied separately).
std::optional<FramingMode::Kind> parse_framing_kind(std::string_view name);

// Appends the LF-delimited records of `bytes` to `out`. A trailing run
// without LF is a record; input ending in LF yields no trailing empty record.
// With `strip_cr`, a single 0x0D directly before each LF is dropped.
void split_lines(std::string_view bytes, bool strip_cr, std::vector<std::string_view>& out);

/// Frames a whole buffer. JSONL mode is forwarded to parse_jsonl.
ChunkSequence tokenize(std::string_view bytes, const FramingMode& mode);

/// Decodes the string value of `field` from one JSON object line. Throws
/// FramingError tagged with `line_number` (1-based).
std::string extract_jsonl_field(std::string_view line, std::string_view field,
                                std::uint64_t line_number);

/// Every LF-delimited line must be a JSON object carrying a string `field`;
/// the first offending line aborts with FramingError.
ChunkSequence parse_jsonl(std::string_view bytes, std::string_view field);

/// Inverse of split_lines without CR stripping: LF-joins the records and
/// appends a final LF when `trailing_lf` is set.
std::string join_lines(const std::vector<std::string_view>& records, bool trailing_lf);

}  // namespace bytedup
