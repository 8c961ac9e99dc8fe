#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace bytedup {

class OutputSink {
 public:
  virtual ~OutputSink() = default;
  virtual void write(std::string_view bytes) = 0;
  virtual void flush() {}
};

class StringSink final : public OutputSink {
 public:
  void write(std::string_view bytes) override { data_.append(bytes); }
  const std::string& str() const noexcept { return data_; }
  std::string take() { return std::move(data_); }

 private:
  std::string data_;
};

// Buffered writer over a POSIX file descriptor. Throws WriteError on failure.
class FdSink final : public OutputSink {
 public:
  // Takes ownership of `fd` when `owned` is set.
  FdSink(int fd, bool owned, std::string name = "output");
  ~FdSink() override;
  FdSink(const FdSink&) = delete;
  FdSink& operator=(const FdSink&) = delete;

  // Creates or truncates `path`.
  static std::unique_ptr<FdSink> open_file(const std::string& path);

  void write(std::string_view bytes) override;
  void flush() override;
  // Flushes and closes an owned descriptor, reporting close errors.
  void close();

 private:
  void write_all(const char* data, std::size_t size);

  int fd_;
  bool owned_;
  std::string name_;
  std::string buffer_;
};

}  // namespace bytedup
