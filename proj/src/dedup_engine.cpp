#include "bytedup/dedup_engine.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace bytedup {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

}  // namespace

DedupEngine::DedupEngine(DedupOptions options, const Baseline* baseline, Retention retention)
    : options_(options), baseline_(baseline), retention_(retention) {
  if (options_.workers == 0) options_.workers = 1;
  if (options_.min_block_records == 0) options_.min_block_records = 1;
  if (options_.fingerprint_fn == nullptr) options_.fingerprint_fn = &fingerprint;
}

const std::vector<std::size_t>& DedupEngine::process(std::span<const std::string_view> batch) {
  const auto start = Clock::now();
  survivors_.clear();
  survivor_views_.clear();
  if (index_.size() == 0) index_.reserve(batch.size());

  const std::size_t by_size = batch.size() / options_.min_block_records;
  const std::size_t blocks = std::min<std::size_t>(options_.workers, std::max<std::size_t>(1, by_size));
  if (blocks <= 1) {
    process_sequential(batch);
  } else {
    process_parallel(batch, blocks);
  }

  duplicate_ += batch.size() - survivors_.size();
  dedup_ns_ += elapsed_ns(start);
  return survivors_;
}

void DedupEngine::admit(std::size_t i, std::string_view record, const Fingerprint& fp) {
  std::string_view kept;
  const bool fresh = index_.insert_with(record, fp, [&](std::string_view r) {
    kept = retention_ == Retention::kCopy ? arena_.store(r) : r;
    return kept;
  });
  if (!fresh) return;

  survivors_.push_back(i);
  survivor_views_.push_back(kept);
  ++unique_;
  if (baseline_ != nullptr && !baseline_->contains(record, fp, options_.fingerprint_fn)) ++novelty_;
}

void DedupEngine::process_sequential(std::span<const std::string_view> batch) {
  const FingerprintFn fn = options_.fingerprint_fn;
  for (std::size_t i = 0; i < batch.size(); ++i) admit(i, batch[i], fn(batch[i]));
}

void DedupEngine::process_parallel(std::span<const std::string_view> batch, std::size_t blocks) {
  const std::size_t n = batch.size();
  scratch_fp_.resize(n);
  scratch_keep_.assign(n, 0);
  const FingerprintFn fn = options_.fingerprint_fn;

  // Stage 1: each worker owns one contiguous block and drops in-block repeats.
  auto run_block = [&](std::size_t b) {
    const std::size_t lo = n * b / blocks;
    const std::size_t hi = n * (b + 1) / blocks;
    FingerprintIndex local(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) {
      scratch_fp_[i] = fn(batch[i]);
      scratch_keep_[i] = local.insert(batch[i], scratch_fp_[i]) ? 1 : 0;
    }
  };
  {
    std::vector<std::jthread> workers;
    workers.reserve(blocks - 1);
    for (std::size_t b = 1; b < blocks; ++b) workers.emplace_back(run_block, b);
    run_block(0);
  }

  // Stage 2: a global first occurrence is always a block-local one, so only
  // local survivors need reconciling, in original index order.
  for (std::size_t i = 0; i < n; ++i) {
    if (scratch_keep_[i]) admit(i, batch[i], scratch_fp_[i]);
  }
}

std::size_t DedupEngine::memory_bytes() const noexcept {
  return arena_.bytes_reserved() + index_.memory_bytes() +
         survivors_.capacity() * sizeof(std::size_t) +
         survivor_views_.capacity() * sizeof(std::string_view) +
         scratch_fp_.capacity() * sizeof(Fingerprint) + scratch_keep_.capacity();
}

}  // namespace bytedup
