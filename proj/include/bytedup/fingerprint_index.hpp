#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "bytedup/fingerprint.hpp"

namespace bytedup {

// Associative index over record views, keyed by (digest, length). Records
// whose fingerprints coincide are chained and told apart by a full byte
// comparison, so membership answers are exact regardless of the digest.
//
// The index stores views only; the caller keeps the referenced bytes alive
// for the lifetime of the index.
class FingerprintIndex {
 public:
  explicit FingerprintIndex(std::size_t expected_records = 0);

  // Inserts `record` unless a byte-identical record is already present.
  // Returns true when the record was new.
  bool insert(std::string_view record, const Fingerprint& fp) {
    return insert_with(record, fp, [](std::string_view r) { return r; });
  }

  // As insert(), but a new record is indexed under the view returned by
  // `keep(record)`, letting the caller move the bytes to stable storage only
  // once the record is known to be new.
  template <class Keep>
  bool insert_with(std::string_view record, const Fingerprint& fp, Keep&& keep);

  bool contains(std::string_view record, const Fingerprint& fp) const;

  void reserve(std::size_t records);
  void clear();

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t slot_count() const noexcept { return slots_.size(); }

  // Number of byte comparisons that rejected an equal-fingerprint record.
  std::uint64_t verified_collisions() const noexcept { return verified_collisions_; }

  std::size_t memory_bytes() const noexcept;

 private:
  struct Slot {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t length = 0;
    std::uint32_t head = 0;  // entry index + 1, 0 = empty
  };
  struct Entry {
    const char* data;
    std::size_t size;
    std::uint32_t next;  // entry index + 1, 0 = end of chain
  };

  std::size_t find_slot(const Fingerprint& fp) const noexcept;
  bool chain_contains(std::uint32_t head, std::string_view record, std::uint32_t* tail);
  void link(std::size_t pos, std::uint32_t tail, std::string_view kept, const Fingerprint& fp);
  void grow();

  std::vector<Slot> slots_;
  std::vector<Entry> entries_;
  std::size_t used_slots_ = 0;
  std::uint64_t verified_collisions_ = 0;
};

template <class Keep>
bool FingerprintIndex::insert_with(std::string_view record, const Fingerprint& fp, Keep&& keep) {
  const std::size_t pos = find_slot(fp);
  std::uint32_t tail = 0;
  if (chain_contains(slots_[pos].head, record, &tail)) return false;
  link(pos, tail, keep(record), fp);
  return true;
}

}  // namespace bytedup
