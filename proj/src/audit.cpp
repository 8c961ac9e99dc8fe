#include "bytedup/audit.hpp"

#include <algorithm>
#include <json.hpp>

#include "bytedup/corpus.hpp"
#include "bytedup/errors.hpp"
#include "bytedup/workload.hpp"

namespace bytedup::audit {

std::string EquivalenceVerdict::to_json() const {
  nlohmann::json j = {
      {"corpus", corpus_id},
      {"engine_unique", engine_unique},
      {"oracle_unique", oracle_unique},
      {"engine_duplicate", engine_duplicate},
      {"oracle_duplicate", oracle_duplicate},
      {"counts_match", counts_match},
      {"survivors_match", survivors_match},
      {"violation", violation},
  };
  j["first_divergence"] = first_divergence ? nlohmann::json(*first_divergence) : nlohmann::json(nullptr);
  return j.dump();
}

EquivalenceVerdict judge(std::string corpus_id, const DedupResult& engine, const OracleResult& oracle) {
  EquivalenceVerdict v;
  v.corpus_id = std::move(corpus_id);
  v.engine_unique = engine.unique_count;
  v.oracle_unique = oracle.unique_count;
  v.engine_duplicate = engine.duplicate_count;
  v.oracle_duplicate = oracle.duplicate_count;
  v.counts_match = v.engine_unique == v.oracle_unique && v.engine_duplicate == v.oracle_duplicate;

  const auto& a = engine.unique_records;
  const auto& b = oracle.unique_records;
  const std::size_t common = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < common && a[i] == b[i]) ++i;
  if (i < common || a.size() != b.size()) v.first_divergence = i;

  v.survivors_match = !v.first_divergence && a.size() == engine.unique_count;
  v.violation = !v.counts_match || !v.survivors_match;
  return v;
}

EquivalenceVerdict verify_equivalence(const IngestSource& source, const FramingMode& mode,
                                      const AuditOptions& options, std::string corpus_id) {
  const std::string bytes = read_all(source);
  if (corpus_id.empty()) corpus_id = describe(source);

  StreamOptions so;
  so.workers = options.workers;
  so.min_block_records = options.min_block_records;
  so.batch_bytes = options.batch_bytes;
  so.retain_records = true;
  const StreamResult engine = run_stream(MemoryInput{bytes}, mode, so, nullptr);

  const OracleResult oracle = oracle_dedup(tokenize(bytes, mode));
  return judge(std::move(corpus_id), engine.result, oracle);
}

std::string DeterminismReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["runs"] = nlohmann::json::array();
  for (const auto& r : runs) {
    j["runs"].push_back({{"run", r.run},
                         {"workers", r.workers},
                         {"sha256", r.output_sha256},
                         {"unique_count", r.unique_count},
                         {"duplicate_count", r.duplicate_count},
                         {"novelty_count", r.novelty_count}});
  }
  j["divergent"] = divergent ? nlohmann::json::array({divergent->first, divergent->second}) : nlohmann::json(nullptr);
  return j.dump();
}

DeterminismReport verify_determinism(const IngestSource& source, const FramingMode& mode, unsigned runs,
                                     const std::vector<unsigned>& worker_counts,
                                     const DeterminismOptions& options) {
  if (runs < 2) throw ConfigError("determinism check needs at least 2 runs");
  if (worker_counts.empty()) throw ConfigError("determinism check needs at least one worker count");

  StreamRunner runner = options.runner;
  if (!runner) {
    runner = [](const IngestSource& s, const FramingMode& m, const StreamOptions& o) {
      return run_stream(s, m, o, nullptr);
    };
  }

  // Standard input can only be consumed once; every other source is re-read
  // from scratch on each run.
  std::string buffered;
  IngestSource effective = source;
  if (std::holds_alternative<StdinInput>(source)) {
    buffered = read_all(source);
    effective = MemoryInput{buffered};
  }

  DeterminismReport report;
  for (unsigned run = 0; run < runs; ++run) {
    for (unsigned w : worker_counts) {
      StreamOptions so;
      so.workers = w;
      so.min_block_records = options.min_block_records;
      so.batch_bytes = options.batch_bytes;
      const StreamResult r = runner(effective, mode, so);
      report.runs.push_back(DeterminismRun{run, w, r.output_sha256, r.result.unique_count,
                                           r.result.duplicate_count, r.result.novelty_count});
    }
  }

  report.pass = true;
  const DeterminismRun& first = report.runs.front();
  for (std::size_t i = 1; i < report.runs.size(); ++i) {
    const DeterminismRun& r = report.runs[i];
    if (r.output_sha256 != first.output_sha256 || r.unique_count != first.unique_count ||
        r.duplicate_count != first.duplicate_count || r.novelty_count != first.novelty_count) {
      report.pass = false;
      report.divergent = std::make_pair(std::size_t{0}, i);
      break;
    }
  }
  return report;
}

BatteryReport run_equivalence_battery(const BatterySpec& spec) {
  bench::SplitMix64 rng(spec.seed);
  BatteryReport report;
  static constexpr std::size_t kBatchBytes[] = {64, 4096, std::size_t{1} << 20};

  for (std::size_t c = 0; c < spec.corpora; ++c) {
    RandomCorpusSpec cs;
    cs.seed = rng.next();
    cs.records = rng.below(spec.max_records + 1);
    cs.max_record_bytes = rng.below(spec.max_record_bytes + 1);
    cs.redundancy = rng.between(1, std::max<std::size_t>(spec.max_redundancy, 1));
    const ChunkSequence corpus = generate_random_corpus(cs);
    const std::string bytes = bench::serialize_lines(corpus);

    AuditOptions ao;
    ao.workers = static_cast<unsigned>(rng.between(1, 4));
    ao.min_block_records = rng.between(1, 512);
    ao.batch_bytes = kBatchBytes[rng.below(std::size(kBatchBytes))];

    const EquivalenceVerdict v =
        verify_equivalence(MemoryInput{bytes}, FramingMode::lines_lf(), ao, "battery-" + std::to_string(c));

    ++report.corpora;
    report.records += corpus.size();
    report.max_records_seen = std::max<std::uint64_t>(report.max_records_seen, corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      report.max_record_bytes_seen = std::max<std::uint64_t>(report.max_record_bytes_seen, corpus[i].size());
    }
    if (v.violation) {
      ++report.violations;
      if (report.failures.size() < 8) report.failures.push_back(v);
    }
  }
  return report;
}

}  // namespace bytedup::audit
