#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bytedup {

/// Input could not be opened or read.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A record could not be framed (malformed JSONL line, missing field, ...).
class FramingError : public std::runtime_error {
 public:
  FramingError(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number of the offending input line.
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

/// Output could not be written.
class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters (workload specs, harness settings).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bytedup
