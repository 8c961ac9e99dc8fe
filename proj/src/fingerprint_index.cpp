#include "bytedup/fingerprint_index.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

namespace bytedup {
namespace {

constexpr std::size_t kMinSlots = 16;

std::size_t slots_for(std::size_t records) {
  const std::size_t want = records * 2;
  return std::bit_ceil(want < kMinSlots ? kMinSlots : want);
}

inline bool same_bytes(const char* a, std::string_view b) {
  return b.empty() || std::memcmp(a, b.data(), b.size()) == 0;
}

}  // namespace

FingerprintIndex::FingerprintIndex(std::size_t expected_records)
    : slots_(slots_for(expected_records)) {
  entries_.reserve(expected_records);
}

std::size_t FingerprintIndex::find_slot(const Fingerprint& fp) const noexcept {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = static_cast<std::size_t>(fp.lo) & mask;
  for (;;) {
    const Slot& s = slots_[pos];
    if (s.head == 0 || (s.lo == fp.lo && s.hi == fp.hi && s.length == fp.length)) return pos;
    pos = (pos + 1) & mask;
  }
}

bool FingerprintIndex::contains(std::string_view record, const Fingerprint& fp) const {
  const Slot& s = slots_[find_slot(fp)];
  for (std::uint32_t e = s.head; e != 0; e = entries_[e - 1].next) {
    const Entry& entry = entries_[e - 1];
    if (entry.size == record.size() && same_bytes(entry.data, record)) return true;
  }
  return false;
}

bool FingerprintIndex::chain_contains(std::uint32_t head, std::string_view record,
                                      std::uint32_t* tail) {
  for (std::uint32_t e = head; e != 0; e = entries_[e - 1].next) {
    const Entry& entry = entries_[e - 1];
    if (entry.size == record.size() && same_bytes(entry.data, record)) return true;
    ++verified_collisions_;
    *tail = e;
  }
  return false;
}

void FingerprintIndex::link(std::size_t pos, std::uint32_t tail, std::string_view kept,
                            const Fingerprint& fp) {
  if (entries_.size() >= UINT32_MAX) throw std::length_error("fingerprint index is full");
  entries_.push_back(Entry{kept.data(), kept.size(), 0});
  const auto id = static_cast<std::uint32_t>(entries_.size());

  if (tail != 0) {
    entries_[tail - 1].next = id;
    return;
  }
  slots_[pos] = Slot{fp.lo, fp.hi, fp.length, id};
  if (++used_slots_ * 2 > slots_.size()) grow();
}

void FingerprintIndex::grow() {
  std::vector<Slot> old(slots_.size() * 2);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  for (const Slot& s : old) {
    if (s.head == 0) continue;
    std::size_t pos = static_cast<std::size_t>(s.lo) & mask;
    while (slots_[pos].head != 0) pos = (pos + 1) & mask;
    slots_[pos] = s;
  }
}

void FingerprintIndex::reserve(std::size_t records) {
  entries_.reserve(records);
  while (slots_.size() < slots_for(records)) grow();
}

void FingerprintIndex::clear() {
  std::fill(slots_.begin(), slots_.end(), Slot{});
  entries_.clear();
  used_slots_ = 0;
  verified_collisions_ = 0;
}

std::size_t FingerprintIndex::memory_bytes() const noexcept {
  return slots_.capacity() * sizeof(Slot) + entries_.capacity() * sizeof(Entry);
}

}  // namespace bytedup
