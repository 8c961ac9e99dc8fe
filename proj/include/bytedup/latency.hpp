#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bytedup/workload.hpp"

namespace bytedup::bench {

// Integration styles, cheapest first.
enum class DeploymentMode {
  kInProcess,           // A: direct dedup_ordered() call on pre-framed records
  kPipeSubprocess,      // C: spawn the CLI, payload over stdin, result over stdout
  kTempfileSubprocess,  // D: write a temp input file, spawn with --input/--output, read back
};

std::string_view mode_name(DeploymentMode mode);
std::string_view mode_letter(DeploymentMode mode);
std::optional<DeploymentMode> parse_mode(std::string_view name);

struct LatencyReport {
  DeploymentMode mode = DeploymentMode::kInProcess;
  std::string workload;
  std::vector<double> samples_us;  // warm-up calls excluded
  double median_us = 0;
  double p95_us = 0;
  double p99_us = 0;
  std::size_t trials = 0;
  std::size_t warmup_calls = 0;

  friend bool operator==(const LatencyReport&, const LatencyReport&) = default;
};

/// Nearest-rank percentile: the ceil(p/100 * n)-th smallest sample (1-based).
double nearest_rank(std::vector<double> samples, double percentile);

LatencyReport summarize(DeploymentMode mode, std::string workload, std::vector<double> samples_us,
                        std::size_t warmup_calls);

struct HarnessConfig {
  std::string cli_path;  // the bytedup binary, required for subprocess modes
  std::filesystem::path temp_root = std::filesystem::temp_directory_path();
};

// Prepared runner for one mode. Every call's output is checked against the
// expected survivors outside the timed region; a mismatch throws HarnessError.
class ModeRunner {
 public:
  virtual ~ModeRunner() = default;
  virtual DeploymentMode mode() const = 0;
  // One timed call, in microseconds.
  virtual double call_us() = 0;
};

std::unique_ptr<ModeRunner> make_runner(DeploymentMode mode, const WorkloadSpec& workload,
                                        const HarnessConfig& config);

/// Requires trials >= 30. Warm-up calls run first and are discarded.
LatencyReport measure_mode(DeploymentMode mode, const WorkloadSpec& workload, std::size_t trials,
                           std::size_t warmup, const HarnessConfig& config);

// Measures several modes with calls interleaved round-robin, so slow drift
// in machine state affects every mode alike. Reports follow `modes` order.
std::vector<LatencyReport> measure_ladder(const std::vector<DeploymentMode>& modes,
                                          const WorkloadSpec& workload, std::size_t trials,
                                          std::size_t warmup, const HarnessConfig& config);

}  // namespace bytedup::bench
