#pragma once

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

namespace bytedup {

// Append-only byte storage handing out views that stay valid until the
// arena is destroyed or cleared.
class ByteArena {
 public:
  explicit ByteArena(std::size_t block_bytes = 1 << 16) : block_bytes_(block_bytes) {}

  ByteArena(ByteArena&&) noexcept = default;
  ByteArena& operator=(ByteArena&&) noexcept = default;
  ByteArena(const ByteArena&) = delete;
  ByteArena& operator=(const ByteArena&) = delete;

  std::string_view store(std::string_view bytes);

  void clear();

  std::size_t bytes_used() const noexcept { return used_; }
  std::size_t bytes_reserved() const noexcept { return reserved_; }

 private:
  struct Block {
    std::unique_ptr<char[]> data;
    std::size_t capacity = 0;
    std::size_t fill = 0;
  };

  std::size_t block_bytes_;
  std::vector<Block> blocks_;
  std::size_t used_ = 0;
  std::size_t reserved_ = 0;
};

}  // namespace bytedup
