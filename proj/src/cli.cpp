#include "bytedup/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <iostream>
#include <memory>
#include <thread>

#include "bytedup/errors.hpp"
#include "bytedup/stream.hpp"

namespace bytedup::cli {
namespace {

constexpr const char* kProgram = "bytedup";

void fail(std::ostream& diag, const std::string& message) {
  diag << kProgram << ": error: " << message << '\n';
  diag.flush();
}

struct Flags {
  std::string input = "-";
  std::string output = "-";
  std::string format = "lines";
  std::string field = "text";
  unsigned jobs = 0;
  std::string baseline;
  std::string engine_id = std::string(kDefaultEngineId);
  bool no_stats = false;
};

void define(CLI::App& app, Flags& f) {
  app.add_option("-i,--input", f.input, "Input file, '-' for standard input")->capture_default_str();
  app.add_option("-o,--output", f.output, "Output file, '-' for standard output")->capture_default_str();
  app.add_option("-f,--format", f.format, "Record framing: lines, lines-crlf, jsonl")
      ->check(CLI::IsMember({"lines", "lines-crlf", "jsonl"}))
      ->capture_default_str();
  app.add_option("--field", f.field, "JSONL field holding the record text")->capture_default_str();
  app.add_option("-j,--jobs", f.jobs, "Worker threads (default: logical CPU count)")->check(CLI::PositiveNumber);
  app.add_option("--baseline", f.baseline, "Records counted as already seen for novelty_count");
  app.add_option("--engine-id", f.engine_id, "Engine identifier in the telemetry line")->capture_default_str();
  app.add_flag("--no-stats", f.no_stats, "Do not emit the telemetry line");
}

CliConfig to_config(const Flags& f) {
  CliConfig c;
  if (f.input != "-") c.input = FileInput{f.input};
  if (f.output != "-") c.output_path = f.output;
  const auto kind = parse_framing_kind(f.format);
  if (!kind) throw UsageError("unknown format " + f.format);
  c.framing.kind = *kind;
  if (*kind == FramingMode::Kind::kJsonl) {
    if (f.field.empty()) throw UsageError("--field must not be empty");
    c.framing.field = f.field;
  }
  c.workers = f.jobs == 0 ? default_workers() : f.jobs;
  if (!f.baseline.empty()) c.baseline_path = f.baseline;
  if (!valid_engine_id(f.engine_id)) throw UsageError("--engine-id must be a single token without '='");
  c.engine_id = f.engine_id;
  c.stats = !f.no_stats;
  return c;
}

Baseline load_baseline(const std::string& path, const FramingMode& mode) {
  const std::string bytes = read_all(FileInput{path});
  const ChunkSequence records = tokenize(bytes, mode);
  Baseline baseline;
  for (std::size_t i = 0; i < records.size(); ++i) baseline.add(records[i]);
  return baseline;
}

}  // namespace

unsigned default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

CliConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Byte-exact first-occurrence record deduplication", kProgram};
  Flags f;
  define(app, f);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return to_config(f);
}

int run_cli(const CliConfig& config, OutputSink& primary, std::ostream& diag) {
  std::unique_ptr<ByteSource> input;
  std::optional<Baseline> baseline;
  try {
    input = open_source(config.input);
    if (config.baseline_path) baseline.emplace(load_baseline(*config.baseline_path, config.framing));
  } catch (const IngestError& e) {
    fail(diag, e.what());
    return kExitIngest;
  } catch (const FramingError& e) {
    fail(diag, std::string("baseline: ") + e.what());
    return kExitFraming;
  }

  std::unique_ptr<FdSink> file_out;
  OutputSink* out = &primary;
  if (config.output_path) {
    try {
      file_out = FdSink::open_file(*config.output_path);
    } catch (const WriteError& e) {
      fail(diag, e.what());
      return kExitWrite;
    }
    out = file_out.get();
  }

  StreamOptions options;
  options.workers = config.workers;
  options.baseline = baseline ? &*baseline : nullptr;

  StreamResult sr;
  try {
    sr = run_stream(*input, config.framing, options, out);
    if (file_out) file_out->close();
    else primary.flush();
  } catch (const IngestError& e) {
    fail(diag, e.what());
    return kExitIngest;
  } catch (const FramingError& e) {
    fail(diag, e.what());
    return kExitFraming;
  } catch (const WriteError& e) {
    fail(diag, e.what());
    return kExitWrite;
  }

  if (config.stats) emit_telemetry(sr.result, config.engine_id, diag);
  return kExitOk;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Byte-exact first-occurrence record deduplication", kProgram};
  Flags f;
  define(app, f);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  CliConfig config;
  try {
    config = to_config(f);
  } catch (const UsageError& e) {
    fail(std::cerr, e.what());
    return kExitUsage;
  }

  FdSink primary(STDOUT_FILENO, false, "stdout");
  return run_cli(config, primary, std::cerr);
}

}  // namespace bytedup::cli
