#include "bytedup/chunk_sequence.hpp"

namespace bytedup {

ChunkSequence::ChunkSequence(std::initializer_list<std::string_view> records) {
  for (auto r : records) push_back(r);
}

ChunkSequence::ChunkSequence(const std::vector<std::string>& records) {
  std::size_t bytes = 0;
  for (const auto& r : records) bytes += r.size();
  reserve(records.size(), bytes);
  for (const auto& r : records) push_back(r);
}

void ChunkSequence::push_back(std::string_view record) {
  spans_.push_back(Span{storage_.size(), record.size()});
  storage_.append(record);
}

void ChunkSequence::reserve(std::size_t records, std::size_t bytes) {
  spans_.reserve(records);
  storage_.reserve(bytes);
}

std::vector<std::string_view> ChunkSequence::views() const {
  std::vector<std::string_view> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

std::vector<std::string> ChunkSequence::to_strings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i]);
  return out;
}

}  // namespace bytedup
