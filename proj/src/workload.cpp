#include "bytedup/workload.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "bytedup/errors.hpp"

namespace bytedup::bench {
namespace {

constexpr std::string_view kWords[] = {
    "context", "retrieval", "passage", "model",  "token",   "budget", "query",  "answer",
    "system",  "latency",   "record",  "stream", "vector",  "index",  "source", "section",
    "the",     "of",        "and",     "to",     "in",      "is",     "for",    "with",
    "data",    "result",    "value",   "chunk",  "prompt",  "cache",  "order",  "first"};

// "<tag> " followed by seeded words, cut or padded to exactly `size` bytes.
// The tag makes every generated passage distinct by construction.
std::string passage(SplitMix64& rng, std::string_view tag, std::size_t size) {
  std::string s(tag);
  s.push_back(' ');
  while (s.size() < size) {
    s.append(kWords[rng.below(std::size(kWords))]);
    s.push_back(rng.below(12) == 0 ? '.' : ' ');
  }
  if (s.size() > size && size >= tag.size()) s.resize(std::max(size, tag.size()));
  return s;
}

std::vector<std::size_t> arrangement(const WorkloadSpec& spec, SplitMix64& rng) {
  std::vector<std::size_t> order;
  order.reserve(spec.chunks);
  switch (spec.pattern) {
    case RepetitionPattern::kBlockRepeat:
      for (std::size_t r = 0; r < spec.chunks / spec.unique; ++r) {
        for (std::size_t u = 0; u < spec.unique; ++u) order.push_back(u);
      }
      break;
    case RepetitionPattern::kShuffled:
      for (std::size_t i = 0; i < spec.chunks; ++i) order.push_back(i % spec.unique);
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
      break;
    case RepetitionPattern::kSnowball:
      for (std::size_t turn = 1; turn <= spec.unique; ++turn) {
        for (std::size_t u = 0; u < turn; ++u) order.push_back(u);
      }
      break;
  }
  return order;
}

}  // namespace

std::string_view pattern_name(RepetitionPattern p) {
  switch (p) {
    case RepetitionPattern::kBlockRepeat:
      return "block";
    case RepetitionPattern::kShuffled:
      return "shuffled";
    case RepetitionPattern::kSnowball:
      return "snowball";
  }
  return "unknown";
}

std::optional<RepetitionPattern> parse_pattern(std::string_view name) {
  if (name == "block") return RepetitionPattern::kBlockRepeat;
  if (name == "shuffled") return RepetitionPattern::kShuffled;
  if (name == "snowball") return RepetitionPattern::kSnowball;
  return std::nullopt;
}

void validate(const WorkloadSpec& spec) {
  if (spec.unique == 0) throw ConfigError("workload " + spec.name + ": unique must be >= 1");
  if (spec.chunks < spec.unique) throw ConfigError("workload " + spec.name + ": chunks < unique");
  // Each passage opens with a "[NNNNNN]" tag; shorter records could not stay distinct.
  const std::size_t tag_bytes = 2 + std::max<std::size_t>(6, std::to_string(spec.unique - 1).size());
  if (spec.record_bytes < tag_bytes) {
    throw ConfigError("workload " + spec.name + ": record_bytes must be >= " + std::to_string(tag_bytes));
  }
  switch (spec.pattern) {
    case RepetitionPattern::kBlockRepeat:
      if (spec.chunks % spec.unique != 0) {
        throw ConfigError("workload " + spec.name + ": block-repeat needs chunks divisible by unique");
      }
      break;
    case RepetitionPattern::kShuffled:
      break;
    case RepetitionPattern::kSnowball:
      if (spec.chunks != spec.unique * (spec.unique + 1) / 2) {
        throw ConfigError("workload " + spec.name + ": snowball needs chunks = unique*(unique+1)/2");
      }
      break;
  }
}

ChunkSequence generate_workload(const WorkloadSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);

  std::vector<std::string> pool;
  pool.reserve(spec.unique);
  char tag[32];
  for (std::size_t u = 0; u < spec.unique; ++u) {
    std::snprintf(tag, sizeof tag, "[%06zu]", u);
    pool.push_back(passage(rng, tag, spec.record_bytes));
  }

  ChunkSequence seq;
  seq.reserve(spec.chunks, spec.chunks * spec.record_bytes);
  for (std::size_t u : arrangement(spec, rng)) seq.push_back(pool[u]);
  return seq;
}

const std::vector<WorkloadSpec>& reference_workloads() {
  static const std::vector<WorkloadSpec> rows = {
      {"rag-topk15", 45, 15, 2963, 42, RepetitionPattern::kBlockRepeat},
      {"long-context-rag", 100, 50, 4000, 42, RepetitionPattern::kBlockRepeat},
      {"multi-turn-snowball", 55, 10, 5721, 42, RepetitionPattern::kSnowball},
      {"minimal-rag", 5, 5, 3072, 42, RepetitionPattern::kBlockRepeat},
      {"large-context", 100, 100, 4000, 42, RepetitionPattern::kBlockRepeat},
  };
  return rows;
}

WorkloadSpec rag15_workload() { return {"rag15", 15, 5, 500, 42, RepetitionPattern::kBlockRepeat}; }

std::optional<WorkloadSpec> find_workload(std::string_view name) {
  if (name == "rag15") return rag15_workload();
  for (const auto& w : reference_workloads()) {
    if (w.name == name) return w;
  }
  return std::nullopt;
}

std::string serialize_lines(const ChunkSequence& records) {
  std::string out;
  out.reserve(records.total_bytes() + records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.append(records[i]);
    out.push_back('\n');
  }
  return out;
}

std::string generate_jsonl_dataset(const JsonlDatasetSpec& spec) {
  if (spec.unique_entries == 0 || spec.duplication_factor == 0) {
    throw ConfigError("dataset: unique_entries and duplication_factor must be >= 1");
  }
  WorkloadSpec layout{"dataset", spec.unique_entries * spec.duplication_factor, spec.unique_entries, 200,
                      spec.seed, spec.pattern};
  if (layout.pattern == RepetitionPattern::kSnowball) throw ConfigError("dataset: snowball not supported");
  validate(layout);

  SplitMix64 rng(spec.seed);
  std::vector<std::string> pool;
  pool.reserve(spec.unique_entries);
  char tag[32];
  for (std::size_t u = 0; u < spec.unique_entries; ++u) {
    std::snprintf(tag, sizeof tag, "p%zu", u);
    // 20..200 bytes of passage text.
    pool.push_back(passage(rng, tag, static_cast<std::size_t>(rng.between(20, 200))));
  }

  std::string out;
  out.reserve(layout.chunks * 128);
  nlohmann::json line = nlohmann::json::object();
  for (std::size_t u : arrangement(layout, rng)) {
    line[spec.field] = pool[u];
    out += line.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace bytedup::bench
