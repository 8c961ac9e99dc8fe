// bytedup-audit: differential equivalence, determinism and splitter-divergence checks.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "bytedup/audit.hpp"
#include "bytedup/divergence.hpp"
#include "bytedup/errors.hpp"

namespace {

using namespace bytedup;
using namespace bytedup::audit;

constexpr int kExitFailed = 5;

IngestSource source_for(const std::string& path) {
  if (path == "-") return StdinInput{};
  return FileInput{path};
}

FramingMode framing_for(const std::string& format, const std::string& field) {
  const auto kind = parse_framing_kind(format);
  if (!kind) throw ConfigError("unknown format " + format);
  FramingMode m;
  m.kind = *kind;
  if (*kind == FramingMode::Kind::kJsonl) m.field = field;
  return m;
}

std::vector<unsigned> parse_workers(const std::string& list) {
  std::vector<unsigned> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const unsigned long v = std::stoul(item);
    if (v == 0) throw ConfigError("worker counts must be positive");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bytedup correctness auditor"};
  app.require_subcommand(1);

  std::string input = "-", format = "lines", field = "text";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "Input file ('-' for stdin)")->capture_default_str();
    sub->add_option("-f,--format", format, "lines, lines-crlf or jsonl")->capture_default_str();
    sub->add_option("--field", field, "JSONL field")->capture_default_str();
  };

  unsigned verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "Engine vs independent oracle on one input");
  add_input(verify);
  verify->add_option("-j,--jobs", verify_jobs)->check(CLI::PositiveNumber)->capture_default_str();

  unsigned runs = 3;
  std::string jobs_list = "1,2,4";
  auto* determinism = app.add_subcommand("determinism", "Output digests across runs and worker counts");
  add_input(determinism);
  determinism->add_option("--runs", runs)->check(CLI::Range(2u, 1000u))->capture_default_str();
  determinism->add_option("--jobs", jobs_list, "Comma-separated worker counts")->capture_default_str();

  auto* divergence = app.add_subcommand("divergence", "LF-only vs CR-stripping splitter accounting");
  divergence->add_option("-i,--input", input, "Input file ('-' for stdin)")->capture_default_str();

  BatterySpec battery_spec;
  auto* battery = app.add_subcommand("battery", "Randomized differential battery");
  battery->add_option("--seed", battery_spec.seed)->capture_default_str();
  battery->add_option("--corpora", battery_spec.corpora)->capture_default_str();
  battery->add_option("--max-records", battery_spec.max_records)->capture_default_str();
  battery->add_option("--max-record-bytes", battery_spec.max_record_bytes)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      AuditOptions o;
      o.workers = verify_jobs;
      const auto v = verify_equivalence(source_for(input), framing_for(format, field), o);
      std::cout << v.to_json() << '\n';
      return v.violation ? kExitFailed : 0;
    }
    if (*determinism) {
      const auto r = verify_determinism(source_for(input), framing_for(format, field), runs,
                                        parse_workers(jobs_list));
      std::cout << r.to_json() << '\n';
      return r.pass ? 0 : kExitFailed;
    }
    if (*divergence) {
      const auto a = account_divergence(source_for(input));
      std::cout << "{\"lf_unique\":" << a.lf_unique << ",\"normalizing_unique\":" << a.normalizing_unique
                << ",\"mixed_ending_classes\":" << a.mixed_ending_classes
                << ",\"identity_holds\":" << (a.identity_holds() ? "true" : "false") << "}\n";
      return a.identity_holds() ? 0 : kExitFailed;
    }
    if (*battery) {
      const auto r = run_equivalence_battery(battery_spec);
      std::cout << "{\"corpora\":" << r.corpora << ",\"records\":" << r.records
                << ",\"violations\":" << r.violations << "}\n";
      for (const auto& f : r.failures) std::cout << f.to_json() << '\n';
      return r.violations == 0 ? 0 : kExitFailed;
    }
  } catch (const IngestError& e) {
    std::cerr << "bytedup-audit: error: " << e.what() << '\n';
    return 2;
  } catch (const FramingError& e) {
    std::cerr << "bytedup-audit: error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "bytedup-audit: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
