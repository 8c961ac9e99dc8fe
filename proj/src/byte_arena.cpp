#include "bytedup/byte_arena.hpp"

#include <cstring>

namespace bytedup {

std::string_view ByteArena::store(std::string_view bytes) {
  if (bytes.empty()) return std::string_view{};

  if (bytes.size() > block_bytes_ / 4) {
    // Large records get a dedicated block, inserted behind the current one so
    // the partially filled block keeps receiving small records.
    Block own{std::make_unique<char[]>(bytes.size()), bytes.size(), bytes.size()};
    std::memcpy(own.data.get(), bytes.data(), bytes.size());
    const char* p = own.data.get();
    blocks_.insert(blocks_.empty() ? blocks_.end() : blocks_.end() - 1, std::move(own));
    used_ += bytes.size();
    reserved_ += bytes.size();
    return std::string_view(p, bytes.size());
  }

  if (blocks_.empty() || blocks_.back().capacity - blocks_.back().fill < bytes.size()) {
    blocks_.push_back(Block{std::make_unique<char[]>(block_bytes_), block_bytes_, 0});
    reserved_ += block_bytes_;
  }
  Block& b = blocks_.back();
  char* dst = b.data.get() + b.fill;
  std::memcpy(dst, bytes.data(), bytes.size());
  b.fill += bytes.size();
  used_ += bytes.size();
  return std::string_view(dst, bytes.size());
}

void ByteArena::clear() {
  blocks_.clear();
  used_ = 0;
  reserved_ = 0;
}

}  // namespace bytedup
