#include "bytedup/ingest.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include "bytedup/errors.hpp"

namespace bytedup {
namespace {

class FdSource final : public ByteSource {
 public:
  FdSource(int fd, bool owned, std::string name) : fd_(fd), owned_(owned), name_(std::move(name)) {}
  ~FdSource() override {
    if (owned_) ::close(fd_);
  }
  FdSource(const FdSource&) = delete;
  FdSource& operator=(const FdSource&) = delete;

  std::size_t read(char* dst, std::size_t capacity) override {
    std::size_t got = 0;
    while (got < capacity && !eof_) {
      const ssize_t n = ::read(fd_, dst + got, capacity - got);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw IngestError("cannot read " + name_ + ": " + std::strerror(errno));
      }
      if (n == 0) eof_ = true;
      got += static_cast<std::size_t>(n);
    }
    return got;
  }

 private:
  int fd_;
  bool owned_;
  bool eof_ = false;
  std::string name_;
};

class MemorySource final : public ByteSource {
 public:
  explicit MemorySource(std::string_view bytes) : bytes_(bytes) {}

  std::size_t read(char* dst, std::size_t capacity) override {
    const std::size_t n = std::min(capacity, bytes_.size() - pos_);
    if (n > 0) std::memcpy(dst, bytes_.data() + pos_, n);
    pos_ += n;
    return n;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string describe(const IngestSource& source) {
  return std::visit(Overloaded{
                        [](const FileInput& f) { return "file:" + f.path; },
                        [](const StdinInput&) { return std::string("stdin"); },
                        [](const MemoryInput& m) { return "memory:" + std::to_string(m.bytes.size()) + "B"; },
                    },
                    source);
}

std::unique_ptr<ByteSource> open_source(const IngestSource& source) {
  return std::visit(Overloaded{
                        [](const FileInput& f) -> std::unique_ptr<ByteSource> {
                          const int fd = ::open(f.path.c_str(), O_RDONLY | O_CLOEXEC);
                          if (fd < 0) {
                            throw IngestError("cannot open " + f.path + ": " + std::strerror(errno));
                          }
                          return std::make_unique<FdSource>(fd, true, f.path);
                        },
                        [](const StdinInput&) -> std::unique_ptr<ByteSource> {
                          return std::make_unique<FdSource>(STDIN_FILENO, false, "stdin");
                        },
                        [](const MemoryInput& m) -> std::unique_ptr<ByteSource> {
                          return std::make_unique<MemorySource>(m.bytes);
                        },
                    },
                    source);
}

std::string read_all(const IngestSource& source) {
  if (const auto* m = std::get_if<MemoryInput>(&source)) return std::string(m->bytes);
  auto in = open_source(source);
  std::string out;
  constexpr std::size_t kChunk = 1 << 20;
  for (;;) {
    const std::size_t old = out.size();
    out.resize(old + kChunk);
    const std::size_t n = in->read(out.data() + old, kChunk);
    out.resize(old + n);
    if (n < kChunk) break;
  }
  return out;
}

}  // namespace bytedup
