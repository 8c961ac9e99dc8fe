#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include "bytedup/cli.hpp"
#include "bytedup/output_sink.hpp"
#include "bytedup/sha256.hpp"
#include "bytedup/stream.hpp"
#include "bytedup/telemetry.hpp"
#include "bytedup/workload.hpp"

namespace bytedup {
namespace {

const std::regex kGrammar(
    R"(engine=[A-Za-z0-9_.\-]+ dedup_us=[0-9]+ unique_count=[0-9]+ duplicate_count=[0-9]+ novelty_count=[0-9]+\n)");

DedupResult counts(std::uint64_t us, std::uint64_t u, std::uint64_t d, std::uint64_t n) {
  DedupResult r;
  r.dedup_us = us;
  r.unique_count = u;
  r.duplicate_count = d;
  r.novelty_count = n;
  return r;
}

TEST(Telemetry, ExactFormat) {
  const auto line = TelemetryLine::from(counts(12, 2, 1, 0), kDefaultEngineId).format();
  EXPECT_EQ(line, "engine=bytedup_v1 dedup_us=12 unique_count=2 duplicate_count=1 novelty_count=0\n");
  EXPECT_TRUE(std::regex_match(line, kGrammar));
}

TEST(Telemetry, EmptyInputLine) {
  const auto line = TelemetryLine::from(counts(0, 0, 0, 0), "x").format();
  EXPECT_EQ(line, "engine=x dedup_us=0 unique_count=0 duplicate_count=0 novelty_count=0\n");
}

TEST(Telemetry, ParseRoundTrip) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    TelemetryLine t{"eng_" + std::to_string(i), rng(), rng(), rng(), rng()};
    const auto parsed = TelemetryLine::parse(t.format());
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, t);
  }
}

TEST(Telemetry, ParseRejectsDeviations) {
  for (std::string bad : {
           "",
           "engine=a dedup_us=1 unique_count=2 duplicate_count=3\n",
           "engine=a dedup_us=1 unique_count=2 duplicate_count=3 novelty_count=4",
           "engine=a  dedup_us=1 unique_count=2 duplicate_count=3 novelty_count=4\n",
           "engine=a dedup_us=-1 unique_count=2 duplicate_count=3 novelty_count=4\n",
           "engine=a unique_count=2 dedup_us=1 duplicate_count=3 novelty_count=4\n",
           "engine= dedup_us=1 unique_count=2 duplicate_count=3 novelty_count=4\n",
           "engine=a dedup_us=1 unique_count=2 duplicate_count=3 novelty_count=4 extra=5\n",
           "engine=a dedup_us=1x unique_count=2 duplicate_count=3 novelty_count=4\n",
       }) {
    EXPECT_FALSE(TelemetryLine::parse(bad).has_value()) << bad;
  }
}

TEST(Telemetry, EngineIdValidation) {
  EXPECT_TRUE(valid_engine_id("bytedup_v1"));
  EXPECT_TRUE(valid_engine_id("a.b-c"));
  EXPECT_FALSE(valid_engine_id(""));
  EXPECT_FALSE(valid_engine_id("has space"));
  EXPECT_FALSE(valid_engine_id("a=b"));
}

TEST(Telemetry, EmitWritesOneLineToStream) {
  std::ostringstream diag;
  emit_telemetry(counts(1, 2, 3, 4), "e", diag);
  EXPECT_EQ(diag.str(), "engine=e dedup_us=1 unique_count=2 duplicate_count=3 novelty_count=4\n");
}

TEST(Telemetry, ConcurrentEmittersNeverInterleave) {
  int fds[2];
  ASSERT_EQ(pipe(fds), 0);
  constexpr int kThreads = 8;
  constexpr int kLines = 200;
  std::string collected;
  std::thread reader([&] {
    char buf[4096];
    ssize_t n;
    while ((n = ::read(fds[0], buf, sizeof buf)) > 0) collected.append(buf, static_cast<std::size_t>(n));
  });
  {
    std::vector<std::jthread> writers;
    for (int t = 0; t < kThreads; ++t) {
      writers.emplace_back([t, fd = fds[1]] {
        for (int i = 0; i < kLines; ++i) {
          emit_telemetry(counts(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(t), 1, 2),
                         "worker_" + std::to_string(t), fd);
        }
      });
    }
  }
  ::close(fds[1]);
  reader.join();
  ::close(fds[0]);

  std::istringstream in(collected);
  std::string line;
  int good = 0;
  while (std::getline(in, line)) {
    ASSERT_TRUE(TelemetryLine::parse(line + "\n").has_value()) << line;
    ++good;
  }
  EXPECT_EQ(good, kThreads * kLines);
}

// Primary output must not depend on whether telemetry is emitted.
TEST(Telemetry, StatsDoNotTouchPrimaryOutput) {
  const auto spec = *bench::find_workload("rag15");
  const std::string bytes = bench::serialize_lines(bench::generate_workload(spec)) + "tail\r";
  for (bool stats : {true, false}) {
    cli::CliConfig cfg;
    cfg.input = MemoryInput{bytes};
    cfg.stats = stats;
    StringSink out;
    std::ostringstream diag;
    ASSERT_EQ(cli::run_cli(cfg, out, diag), cli::kExitOk);
    const auto reference = run_stream(MemoryInput{bytes}, FramingMode::lines_lf(), {}, nullptr);
    EXPECT_EQ(sha256_hex(out.str()), reference.output_sha256);
    EXPECT_EQ(diag.str().empty(), !stats);
  }
}

TEST(Telemetry, DedupTimeIsComparableAcrossSources) {
  bench::WorkloadSpec spec{"mem", 200000, 20000, 64, 42, bench::RepetitionPattern::kShuffled};
  const std::string bytes = bench::serialize_lines(bench::generate_workload(spec));
  const auto path = std::filesystem::temp_directory_path() / "bytedup_telemetry_timing.txt";
  {
    std::ofstream f(path, std::ios::binary);
    f << bytes;
  }
  // Take the best of a few runs on each side to suppress scheduler noise.
  std::uint64_t mem_us = UINT64_MAX, file_us = UINT64_MAX;
  for (int i = 0; i < 3; ++i) {
    mem_us = std::min(mem_us, run_stream(MemoryInput{bytes}, FramingMode::lines_lf(), {}, nullptr).result.dedup_us);
    file_us = std::min(file_us, run_stream(FileInput{path.string()}, FramingMode::lines_lf(), {}, nullptr).result.dedup_us);
  }
  std::filesystem::remove(path);
  ASSERT_GT(mem_us, 0u);
  ASSERT_GT(file_us, 0u);
  EXPECT_LT(std::max(mem_us, file_us), 10 * std::min(mem_us, file_us));
}

}  // namespace
}  // namespace bytedup
