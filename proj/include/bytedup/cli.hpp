#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bytedup/framing.hpp"
#include "bytedup/ingest.hpp"
#include "bytedup/output_sink.hpp"
#include "bytedup/telemetry.hpp"

namespace bytedup::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIngest = 2,
  kExitFraming = 3,
  kExitWrite = 4,
};

struct CliConfig {
  IngestSource input = StdinInput{};
  std::optional<std::string> output_path;  // unset: primary output stream
  FramingMode framing = FramingMode::lines_lf();
  unsigned workers = 1;
  std::optional<std::string> baseline_path;
  std::string engine_id = std::string(kDefaultEngineId);
  bool stats = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

unsigned default_workers();

/// Parses the flag surface (argv[0] excluded). Throws UsageError.
CliConfig parse_args(const std::vector<std::string>& args);

// Runs one dedup session. Unique records go to the configured output file or
// to `primary`; the telemetry line and any one-line error go to `diag`.
int run_cli(const CliConfig& config, OutputSink& primary, std::ostream& diag);

/// Process entry point: parses argv, wires stdout/stderr, returns the exit code.
int cli_main(int argc, char** argv);

}  // namespace bytedup::cli
