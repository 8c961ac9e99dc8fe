// bytedup-bench: workload generation and deployment-mode latency ladder.

#include <unistd.h>

#include <CLI11.hpp>
#include <climits>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bytedup/errors.hpp"
#include "bytedup/latency.hpp"
#include "bytedup/report.hpp"
#include "bytedup/subprocess.hpp"
#include "bytedup/workload.hpp"

namespace {

using namespace bytedup;
using namespace bytedup::bench;

void write_out(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw WriteError("cannot write " + path);
}

std::string sibling_cli() {
  char buf[PATH_MAX];
  const ssize_t n = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
  if (n <= 0) return "bytedup";
  buf[n] = '\0';
  return (std::filesystem::path(buf).parent_path() / "bytedup").string();
}

std::vector<DeploymentMode> parse_modes(const std::string& list) {
  std::vector<DeploymentMode> modes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto m = parse_mode(item);
    if (!m) throw ConfigError("unknown mode " + item);
    modes.push_back(*m);
  }
  return modes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bytedup benchmark harness"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List built-in workloads");

  std::string gen_name, gen_out = "-";
  auto* gen = app.add_subcommand("generate", "Write a workload as LF-terminated records");
  gen->add_option("-w,--workload", gen_name, "Workload name")->required();
  gen->add_option("-o,--out", gen_out, "Output path ('-' for stdout)");

  JsonlDatasetSpec ds;
  std::string ds_out = "-", ds_pattern = "block";
  auto* dataset = app.add_subcommand("dataset", "Write a seeded JSONL dataset");
  dataset->add_option("--seed", ds.seed)->capture_default_str();
  dataset->add_option("--unique", ds.unique_entries)->capture_default_str();
  dataset->add_option("--factor", ds.duplication_factor, "Copies of each entry")->capture_default_str();
  dataset->add_option("--pattern", ds_pattern, "block or shuffled")->capture_default_str();
  dataset->add_option("--field", ds.field)->capture_default_str();
  dataset->add_option("-o,--out", ds_out, "Output path ('-' for stdout)");

  std::string run_workload = "rag15", run_modes = "A,C,D", run_json, run_cli = sibling_cli();
  std::size_t trials = 100, warmup = 10;
  auto* run = app.add_subcommand("run", "Measure deployment modes on one workload");
  run->add_option("-w,--workload", run_workload)->capture_default_str();
  run->add_option("-m,--modes", run_modes, "Comma-separated: A,C,D or mode names")->capture_default_str();
  run->add_option("-n,--trials", trials)->capture_default_str();
  run->add_option("--warmup", warmup)->capture_default_str();
  run->add_option("--cli", run_cli, "Path to the bytedup binary")->capture_default_str();
  run->add_option("--json", run_json, "Also write JSON-lines reports to this path");

  std::string render_in = "-";
  bool render_json = false;
  auto* render = app.add_subcommand("render", "Render JSON-lines reports as a table");
  render->add_option("-i,--in", render_in, "Report file ('-' for stdin)");
  render->add_flag("--json", render_json, "Re-emit JSON lines instead of a table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& w : reference_workloads()) {
        std::cout << w.name << " chunks=" << w.chunks << " unique=" << w.unique
                  << " record_bytes=" << w.record_bytes << " pattern=" << pattern_name(w.pattern) << '\n';
      }
      const auto r = rag15_workload();
      std::cout << r.name << " chunks=" << r.chunks << " unique=" << r.unique << " record_bytes=" << r.record_bytes
                << " pattern=" << pattern_name(r.pattern) << '\n';
    } else if (*gen) {
      const auto spec = find_workload(gen_name);
      if (!spec) throw ConfigError("unknown workload " + gen_name);
      write_out(gen_out, serialize_lines(generate_workload(*spec)));
    } else if (*dataset) {
      const auto p = parse_pattern(ds_pattern);
      if (!p) throw ConfigError("unknown pattern " + ds_pattern);
      ds.pattern = *p;
      write_out(ds_out, generate_jsonl_dataset(ds));
    } else if (*run) {
      const auto spec = find_workload(run_workload);
      if (!spec) throw ConfigError("unknown workload " + run_workload);
      HarnessConfig config;
      config.cli_path = run_cli;
      const auto reports = measure_ladder(parse_modes(run_modes), *spec, trials, warmup, config);
      std::cout << render_table(reports);
      if (!run_json.empty()) write_out(run_json, render_jsonl(reports));
    } else if (*render) {
      std::string text;
      if (render_in == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      } else {
        std::ifstream f(render_in, std::ios::binary);
        if (!f) throw ConfigError("cannot read " + render_in);
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
      }
      const auto reports = parse_jsonl_reports(text);
      std::cout << (render_json ? render_jsonl(reports) : render_table(reports));
    }
  } catch (const std::exception& e) {
    std::cerr << "bytedup-bench: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
