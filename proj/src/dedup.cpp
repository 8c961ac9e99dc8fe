#include "bytedup/dedup.hpp"

#include "bytedup/dedup_engine.hpp"

namespace bytedup {
namespace {

DedupResult run(std::span<const std::string_view> input, const DedupOptions& options,
                const Baseline* baseline) {
  DedupEngine engine(options, baseline, Retention::kBorrow);
  const auto& survivors = engine.process(input);

  DedupResult result;
  result.unique_count = engine.unique_count();
  result.duplicate_count = engine.duplicate_count();
  result.novelty_count = engine.novelty_count();
  result.dedup_us = engine.dedup_us();
  result.survivor_indices = survivors;
  result.unique_records.reserve(survivors.size());
  for (std::size_t i : survivors) result.unique_records.emplace_back(input[i]);
  return result;
}

}  // namespace

bool Baseline::add(std::string_view record) {
  return index_.insert_with(record, fn_(record), [this](std::string_view r) { return arena_.store(r); });
}

bool Baseline::contains(std::string_view record, const Fingerprint& fp, FingerprintFn fp_source) const {
  return index_.contains(record, fp_source == fn_ ? fp : fn_(record));
}

DedupResult dedup_ordered(std::span<const std::string_view> input, const DedupOptions& options) {
  return run(input, options, nullptr);
}

DedupResult dedup_ordered(const ChunkSequence& input, const DedupOptions& options) {
  const auto views = input.views();
  return run(views, options, nullptr);
}

DedupResult dedup_with_baseline(const ChunkSequence& input, const Baseline& baseline,
                                const DedupOptions& options) {
  const auto views = input.views();
  return run(views, options, &baseline);
}

}  // namespace bytedup
