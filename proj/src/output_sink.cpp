#include "bytedup/output_sink.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "bytedup/errors.hpp"

namespace bytedup {
namespace {
constexpr std::size_t kBufferBytes = 1 << 16;
}

FdSink::FdSink(int fd, bool owned, std::string name) : fd_(fd), owned_(owned), name_(std::move(name)) {
  buffer_.reserve(kBufferBytes);
}

FdSink::~FdSink() {
  if (fd_ < 0) return;
  try {
    flush();
  } catch (const WriteError&) {
  }
  if (owned_) ::close(fd_);
}

std::unique_ptr<FdSink> FdSink::open_file(const std::string& path) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) throw WriteError("cannot open " + path + ": " + std::strerror(errno));
  return std::make_unique<FdSink>(fd, true, path);
}

void FdSink::write(std::string_view bytes) {
  if (buffer_.size() + bytes.size() > kBufferBytes) {
    flush();
    if (bytes.size() >= kBufferBytes) {
      write_all(bytes.data(), bytes.size());
      return;
    }
  }
  buffer_.append(bytes);
}

void FdSink::flush() {
  if (buffer_.empty()) return;
  // Clear first so a failing descriptor is not retried from the destructor.
  std::string pending;
  pending.swap(buffer_);
  buffer_.reserve(kBufferBytes);
  write_all(pending.data(), pending.size());
}

void FdSink::close() {
  flush();
  if (owned_ && fd_ >= 0) {
    const int rc = ::close(fd_);
    fd_ = -1;
    if (rc != 0) throw WriteError("cannot close " + name_ + ": " + std::strerror(errno));
  }
}

void FdSink::write_all(const char* data, std::size_t size) {
  while (size > 0) {
    const ssize_t n = ::write(fd_, data, size);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw WriteError("cannot write " + name_ + ": " + std::strerror(errno));
    }
    data += n;
    size -= static_cast<std::size_t>(n);
  }
}

}  // namespace bytedup
