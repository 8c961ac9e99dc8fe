#include "bytedup/latency.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>

#include "bytedup/dedup.hpp"
#include "bytedup/errors.hpp"
#include "bytedup/framing.hpp"
#include "bytedup/subprocess.hpp"

namespace bytedup::bench {
namespace {

using Clock = std::chrono::steady_clock;

double micros_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

// LF-joined survivors exactly as the CLI emits them.
std::string expected_output(const ChunkSequence& records) {
  const DedupResult r = dedup_ordered(records);
  std::vector<std::string_view> views(r.unique_records.begin(), r.unique_records.end());
  return join_lines(views, false);
}

class InProcessRunner final : public ModeRunner {
 public:
  explicit InProcessRunner(ChunkSequence records) : records_(std::move(records)) {
    expected_unique_ = dedup_ordered(records_).unique_count;
  }
  DeploymentMode mode() const override { return DeploymentMode::kInProcess; }

  double call_us() override {
    const auto t0 = Clock::now();
    const DedupResult r = dedup_ordered(records_);
    const double us = micros_since(t0);
    sink_.fetch_add(r.unique_count, std::memory_order_relaxed);
    if (r.unique_count != expected_unique_) throw HarnessError("in_process: unexpected unique count");
    return us;
  }

 private:
  ChunkSequence records_;
  std::uint64_t expected_unique_ = 0;
  std::atomic<std::uint64_t> sink_{0};
};

class PipeRunner final : public ModeRunner {
 public:
  PipeRunner(const ChunkSequence& records, std::string cli)
      : payload_(serialize_lines(records)), expected_(expected_output(records)), cli_(std::move(cli)) {}
  DeploymentMode mode() const override { return DeploymentMode::kPipeSubprocess; }

  double call_us() override {
    const auto t0 = Clock::now();
    ProcessResult p = run_process({cli_}, payload_);
    const double us = micros_since(t0);
    if (p.exit_code != 0) throw HarnessError("pipe_subprocess: CLI exited with " + std::to_string(p.exit_code));
    if (p.out != expected_) throw HarnessError("pipe_subprocess: unexpected output");
    return us;
  }

 private:
  std::string payload_;
  std::string expected_;
  std::string cli_;
};

class TempfileRunner final : public ModeRunner {
 public:
  TempfileRunner(const ChunkSequence& records, std::string cli, const std::filesystem::path& root)
      : payload_(serialize_lines(records)), expected_(expected_output(records)), cli_(std::move(cli)) {
    static std::atomic<unsigned> counter{0};
    dir_ = root / ("bytedup-bench-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(dir_);
    in_path_ = (dir_ / "input.txt").string();
    out_path_ = (dir_ / "output.txt").string();
  }
  ~TempfileRunner() override {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  DeploymentMode mode() const override { return DeploymentMode::kTempfileSubprocess; }

  double call_us() override {
    const auto t0 = Clock::now();
    {
      std::ofstream f(in_path_, std::ios::binary | std::ios::trunc);
      f.write(payload_.data(), static_cast<std::streamsize>(payload_.size()));
      if (!f) throw HarnessError("tempfile_subprocess: cannot write " + in_path_);
    }
    ProcessResult p = run_process({cli_, "--input", in_path_, "--output", out_path_}, {});
    std::string out;
    {
      std::ifstream f(out_path_, std::ios::binary);
      out.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    std::filesystem::remove(in_path_);
    std::filesystem::remove(out_path_);
    const double us = micros_since(t0);
    if (p.exit_code != 0) {
      throw HarnessError("tempfile_subprocess: CLI exited with " + std::to_string(p.exit_code));
    }
    if (out != expected_) throw HarnessError("tempfile_subprocess: unexpected output");
    return us;
  }

 private:
  std::string payload_;
  std::string expected_;
  std::string cli_;
  std::filesystem::path dir_;
  std::string in_path_;
  std::string out_path_;
};

}  // namespace

std::string_view mode_name(DeploymentMode mode) {
  switch (mode) {
    case DeploymentMode::kInProcess:
      return "in_process";
    case DeploymentMode::kPipeSubprocess:
      return "pipe_subprocess";
    case DeploymentMode::kTempfileSubprocess:
      return "tempfile_subprocess";
  }
  return "unknown";
}

std::string_view mode_letter(DeploymentMode mode) {
  switch (mode) {
    case DeploymentMode::kInProcess:
      return "A";
    case DeploymentMode::kPipeSubprocess:
      return "C";
    case DeploymentMode::kTempfileSubprocess:
      return "D";
  }
  return "?";
}

std::optional<DeploymentMode> parse_mode(std::string_view name) {
  for (auto m : {DeploymentMode::kInProcess, DeploymentMode::kPipeSubprocess,
                 DeploymentMode::kTempfileSubprocess}) {
    if (name == mode_name(m) || name == mode_letter(m)) return m;
  }
  return std::nullopt;
}

double nearest_rank(std::vector<double> samples, double percentile) {
  if (samples.empty()) return 0;
  std::sort(samples.begin(), samples.end());
  const double exact = percentile / 100.0 * static_cast<double>(samples.size());
  auto rank = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, samples.size());
  return samples[rank - 1];
}

LatencyReport summarize(DeploymentMode mode, std::string workload, std::vector<double> samples_us,
                        std::size_t warmup_calls) {
  LatencyReport r;
  r.mode = mode;
  r.workload = std::move(workload);
  r.median_us = nearest_rank(samples_us, 50);
  r.p95_us = nearest_rank(samples_us, 95);
  r.p99_us = nearest_rank(samples_us, 99);
  r.trials = samples_us.size();
  r.warmup_calls = warmup_calls;
  r.samples_us = std::move(samples_us);
  return r;
}

std::unique_ptr<ModeRunner> make_runner(DeploymentMode mode, const WorkloadSpec& workload,
                                        const HarnessConfig& config) {
  ChunkSequence records = generate_workload(workload);
  if (mode != DeploymentMode::kInProcess) {
    if (config.cli_path.empty() || ::access(config.cli_path.c_str(), X_OK) != 0) {
      throw HarnessError(std::string(mode_name(mode)) + ": CLI binary not executable: " + config.cli_path);
    }
  }
  switch (mode) {
    case DeploymentMode::kInProcess:
      return std::make_unique<InProcessRunner>(std::move(records));
    case DeploymentMode::kPipeSubprocess:
      return std::make_unique<PipeRunner>(records, config.cli_path);
    case DeploymentMode::kTempfileSubprocess:
      return std::make_unique<TempfileRunner>(records, config.cli_path, config.temp_root);
  }
  throw HarnessError("unknown deployment mode");
}

std::vector<LatencyReport> measure_ladder(const std::vector<DeploymentMode>& modes,
                                          const WorkloadSpec& workload, std::size_t trials,
                                          std::size_t warmup, const HarnessConfig& config) {
  if (trials < 30) throw ConfigError("latency measurement needs at least 30 trials");
  std::vector<std::unique_ptr<ModeRunner>> runners;
  for (auto m : modes) runners.push_back(make_runner(m, workload, config));

  std::vector<std::vector<double>> samples(modes.size());
  for (auto& s : samples) s.reserve(trials);
  for (std::size_t call = 0; call < warmup + trials; ++call) {
    for (std::size_t m = 0; m < runners.size(); ++m) {
      double us = 0;
      try {
        us = runners[m]->call_us();
      } catch (const HarnessError&) {
        throw;
      } catch (const std::exception& e) {
        throw HarnessError(std::string(mode_name(modes[m])) + ": " + e.what());
      }
      if (call >= warmup) samples[m].push_back(us);
    }
  }

  std::vector<LatencyReport> reports;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    reports.push_back(summarize(modes[m], workload.name, std::move(samples[m]), warmup));
  }
  return reports;
}

LatencyReport measure_mode(DeploymentMode mode, const WorkloadSpec& workload, std::size_t trials,
                           std::size_t warmup, const HarnessConfig& config) {
  return measure_ladder({mode}, workload, trials, warmup, config).front();
}

}  // namespace bytedup::bench
