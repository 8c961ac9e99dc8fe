#include "bytedup/report.hpp"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "bytedup/errors.hpp"
#include "bytedup/framing.hpp"

namespace bytedup::bench {
namespace {

std::vector<LatencyReport> ordered(std::vector<LatencyReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const LatencyReport& a, const LatencyReport& b) { return a.mode < b.mode; });
  return reports;
}

std::string format_us(double us) {
  char buf[64];
  if (us < 1000) {
    std::snprintf(buf, sizeof buf, "%.2f us", us);
  } else {
    std::snprintf(buf, sizeof buf, "%.3f ms", us / 1000.0);
  }
  return buf;
}

}  // namespace

std::string render_table(const std::vector<LatencyReport>& reports) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-20s %-20s %12s %12s %12s %7s %7s\n", "Mode", "Description",
                "Workload", "Median", "p95", "p99", "Trials", "Warmup");
  out += line;
  for (const auto& r : ordered(reports)) {
    std::snprintf(line, sizeof line, "%-4s %-20s %-20s %12s %12s %12s %7zu %7zu\n",
                  std::string(mode_letter(r.mode)).c_str(), std::string(mode_name(r.mode)).c_str(),
                  r.workload.c_str(), format_us(r.median_us).c_str(), format_us(r.p95_us).c_str(),
                  format_us(r.p99_us).c_str(), r.trials, r.warmup_calls);
    out += line;
  }
  return out;
}

std::string render_jsonl(const std::vector<LatencyReport>& reports) {
  std::string out;
  for (const auto& r : ordered(reports)) {
    nlohmann::json j = {
        {"mode", mode_name(r.mode)},
        {"workload", r.workload},
        {"trials", r.trials},
        {"warmup_calls", r.warmup_calls},
        {"median_us", r.median_us},
        {"p95_us", r.p95_us},
        {"p99_us", r.p99_us},
        {"samples_us", r.samples_us},
    };
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<LatencyReport> parse_jsonl_reports(std::string_view text) {
  std::vector<std::string_view> lines;
  split_lines(text, false, lines);
  std::vector<LatencyReport> reports;
  std::size_t n = 0;
  for (auto line : lines) {
    ++n;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      LatencyReport r;
      const auto mode = parse_mode(j.at("mode").get<std::string>());
      if (!mode) throw ConfigError("unknown mode");
      r.mode = *mode;
      r.workload = j.at("workload").get<std::string>();
      r.trials = j.at("trials").get<std::size_t>();
      r.warmup_calls = j.at("warmup_calls").get<std::size_t>();
      r.median_us = j.at("median_us").get<double>();
      r.p95_us = j.at("p95_us").get<double>();
      r.p99_us = j.at("p99_us").get<double>();
      r.samples_us = j.at("samples_us").get<std::vector<double>>();
      reports.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw ConfigError("report line " + std::to_string(n) + ": " + e.what());
    }
  }
  return reports;
}

}  // namespace bytedup::bench
