#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bytedup/latency.hpp"

namespace bytedup::bench {

// Plain-text table, one row per report, ordered A, C, D.
std::string render_table(const std::vector<LatencyReport>& reports);

// One JSON object per line, same order as render_table.
std::string render_jsonl(const std::vector<LatencyReport>& reports);

/// Inverse of render_jsonl. Throws ConfigError on malformed input.
std::vector<LatencyReport> parse_jsonl_reports(std::string_view text);

}  // namespace bytedup::bench
