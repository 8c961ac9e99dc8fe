#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace bytedup {

struct FileInput {
  std::string path;
};
struct StdinInput {};
struct MemoryInput {
  std::string_view bytes;  // not owned
};

/// Where record bytes come from. Bytes are consumed once, in order, untranscoded.
using IngestSource = std::variant<FileInput, StdinInput, MemoryInput>;

std::string describe(const IngestSource& source);

class ByteSource {
 public:
  virtual ~ByteSource() = default;
  // Fills `dst` as far as possible; returns fewer bytes only at end of input.
  // Throws IngestError on read failure.
  virtual std::size_t read(char* dst, std::size_t capacity) = 0;
};

/// Throws IngestError if the source cannot be opened.
std::unique_ptr<ByteSource> open_source(const IngestSource& source);

/// Reads the whole source into memory.
std::string read_all(const IngestSource& source);

}  // namespace bytedup
