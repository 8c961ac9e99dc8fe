#include "bytedup/corpus.hpp"

#include <algorithm>
#include <string_view>
#include <vector>

#include "bytedup/workload.hpp"

namespace bytedup::audit {

using bench::SplitMix64;

namespace {

// Random bytes without 0x0A.
std::string random_record(SplitMix64& rng, std::size_t len) {
  std::string s(len, '\0');
  for (std::size_t i = 0; i < len; i += 8) {
    std::uint64_t w = rng.next();
    for (std::size_t k = 0; k < 8 && i + k < len; ++k, w >>= 8) {
      char c = static_cast<char>(w & 0xff);
      s[i + k] = c == '\n' ? '\x0b' : c;
    }
  }
  return s;
}

}  // namespace

ChunkSequence generate_random_corpus(const RandomCorpusSpec& spec) {
  SplitMix64 rng(spec.seed);
  const std::size_t r = std::max<std::size_t>(spec.redundancy, 1);
  const std::size_t pool_size = std::max<std::size_t>(1, (spec.records + r - 1) / r);

  std::vector<std::string> pool;
  pool.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) {
    const std::uint64_t kind = pool.empty() ? 0 : rng.below(8);
    if (kind == 6) {
      // One-byte mutation of an earlier member.
      std::string s = pool[rng.below(pool.size())];
      if (!s.empty()) {
        char& c = s[rng.below(s.size())];
        c = static_cast<char>(c ^ (1 + rng.below(255)));
        if (c == '\n') c = '\x0c';
      } else {
        s = "\r";
      }
      pool.push_back(std::move(s));
    } else if (kind == 7) {
      // Truncation of an earlier member, possibly to empty.
      const std::string& src = pool[rng.below(pool.size())];
      pool.push_back(src.substr(0, src.empty() ? 0 : rng.below(src.size() + 1)));
    } else {
      pool.push_back(random_record(rng, rng.below(spec.max_record_bytes + 1)));
    }
  }

  ChunkSequence seq;
  seq.reserve(spec.records, 0);
  for (std::size_t i = 0; i < spec.records; ++i) {
    // The first pool_size draws walk the pool so every member shows up.
    const std::size_t pick = i < pool_size ? i : rng.below(pool_size);
    seq.push_back(pool[pick]);
  }
  return seq;
}

MixedEndingCorpus generate_mixed_ending_corpus(const MixedEndingSpec& spec) {
  SplitMix64 rng(spec.seed);
  std::vector<std::string> lines;

  auto text = [&](std::string_view tag, std::size_t i) {
    std::string t(tag);
    t += std::to_string(i);
    t.push_back(' ');
    const std::size_t extra = rng.below(40);
    for (std::size_t k = 0; k < extra; ++k) t.push_back(static_cast<char>('a' + rng.below(26)));
    if (rng.below(5) == 0) t.insert(t.size() / 2, "\r");  // interior CR, never trailing
    return t;
  };
  auto copies = [&] { return 1 + rng.below(std::max<std::size_t>(spec.max_copies, 1)); };

  for (std::size_t i = 0; i < spec.mixed_classes; ++i) {
    const std::string t = text("mixed-", i);
    lines.push_back(t + "\r\n");
    lines.push_back(t + "\n");
    const std::uint64_t extra = copies() - 1;
    for (std::uint64_t c = 0; c < extra; ++c) lines.push_back(t + (rng.below(2) ? "\r\n" : "\n"));
  }
  for (std::size_t i = 0; i < spec.lf_only_classes; ++i) {
    const std::string t = text("lf-", i);
    for (std::uint64_t c = copies(); c > 0; --c) lines.push_back(t + "\n");
  }
  for (std::size_t i = 0; i < spec.crlf_only_classes; ++i) {
    const std::string t = text("crlf-", i);
    for (std::uint64_t c = copies(); c > 0; --c) lines.push_back(t + "\r\n");
  }
  for (std::size_t i = lines.size(); i > 1; --i) std::swap(lines[i - 1], lines[rng.below(i)]);

  MixedEndingCorpus corpus;
  corpus.mixed_classes = spec.mixed_classes;
  corpus.lines = lines.size();
  for (const auto& l : lines) corpus.bytes += l;
  return corpus;
}

}  // namespace bytedup::audit
