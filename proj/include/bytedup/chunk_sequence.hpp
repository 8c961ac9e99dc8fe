#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bytedup {

// Ordered multiset of records (arbitrary byte strings) held in one
// contiguous buffer. Position i in the sequence is the record's original
// index; order is exactly the order of insertion.
class ChunkSequence {
 public:
  ChunkSequence() = default;
  ChunkSequence(std::initializer_list<std::string_view> records);
  explicit ChunkSequence(const std::vector<std::string>& records);

  void push_back(std::string_view record);
  void reserve(std::size_t records, std::size_t bytes);

  std::size_t size() const noexcept { return spans_.size(); }
  bool empty() const noexcept { return spans_.empty(); }
  std::size_t total_bytes() const noexcept { return storage_.size(); }

  std::string_view operator[](std::size_t i) const noexcept {
    return std::string_view(storage_.data() + spans_[i].offset, spans_[i].length);
  }

  std::vector<std::string_view> views() const;
  std::vector<std::string> to_strings() const;

 private:
  struct Span {
    std::size_t offset;
    std::size_t length;
  };
  std::string storage_;
  std::vector<Span> spans_;
};

}  // namespace bytedup
