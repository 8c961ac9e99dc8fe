#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "bytedup/chunk_sequence.hpp"

namespace bytedup::audit {

// Seeded corpus for differential testing: `records` draws from a pool of
// about records/redundancy distinct-ish byte strings (0x0A excluded so the
// corpus survives LF framing). Part of the pool are one-byte mutations and
// truncations of other members, so near-duplicates are common.
struct RandomCorpusSpec {
  std::uint64_t seed = 0;
  std::size_t records = 0;
  std::size_t max_record_bytes = 1024;
  std::size_t redundancy = 1;
};

ChunkSequence generate_random_corpus(const RandomCorpusSpec& spec);

// LF-terminated lines where exactly `mixed_classes` texts occur with both
// "\r\n" and "\n" endings; the remaining texts use one ending uniformly.
// Texts never end in 0x0D but may contain it elsewhere.
struct MixedEndingSpec {
  std::uint64_t seed = 0;
  std::size_t mixed_classes = 0;
  std::size_t lf_only_classes = 20;
  std::size_t crlf_only_classes = 20;
  std::size_t max_copies = 4;
};

struct MixedEndingCorpus {
  std::string bytes;
  std::size_t mixed_classes = 0;
  std::size_t lines = 0;
};

MixedEndingCorpus generate_mixed_ending_corpus(const MixedEndingSpec& spec);

}  // namespace bytedup::audit
