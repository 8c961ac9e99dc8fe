#include "bytedup/telemetry.hpp"

#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <mutex>
#include <ostream>

namespace bytedup {
namespace {

std::mutex& diag_mutex() {
  static std::mutex m;
  return m;
}

// Consumes "<key>=<digits>" from the front of `rest`.
bool take_counter(std::string_view& rest, std::string_view key, std::uint64_t& value) {
  if (rest.substr(0, key.size()) != key || rest.size() <= key.size() || rest[key.size()] != '=') return false;
  rest.remove_prefix(key.size() + 1);
  const char* first = rest.data();
  const char* last = rest.data() + rest.size();
  if (first == last || *first < '0' || *first > '9') return false;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{}) return false;
  rest.remove_prefix(static_cast<std::size_t>(ptr - first));
  return true;
}

bool take_space(std::string_view& rest) {
  if (rest.empty() || rest.front() != ' ') return false;
  rest.remove_prefix(1);
  return true;
}

}  // namespace

bool valid_engine_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '=' || c == '\v' || c == '\f') return false;
  }
  return true;
}

TelemetryLine TelemetryLine::from(const DedupResult& result, std::string_view engine_id) {
  return TelemetryLine{std::string(engine_id), result.dedup_us, result.unique_count,
                       result.duplicate_count, result.novelty_count};
}

std::string TelemetryLine::format() const {
  std::string s;
  s.reserve(96 + engine_id.size());
  s += "engine=";
  s += engine_id;
  s += " dedup_us=" + std::to_string(dedup_us);
  s += " unique_count=" + std::to_string(unique_count);
  s += " duplicate_count=" + std::to_string(duplicate_count);
  s += " novelty_count=" + std::to_string(novelty_count);
  s += '\n';
  return s;
}

std::optional<TelemetryLine> TelemetryLine::parse(std::string_view line) {
  if (line.empty() || line.back() != '\n') return std::nullopt;
  line.remove_suffix(1);
  constexpr std::string_view kEngine = "engine=";
  if (line.substr(0, kEngine.size()) != kEngine) return std::nullopt;
  line.remove_prefix(kEngine.size());

  const std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos) return std::nullopt;
  TelemetryLine t;
  t.engine_id = std::string(line.substr(0, sp));
  if (!valid_engine_id(t.engine_id)) return std::nullopt;
  line.remove_prefix(sp);

  if (!take_space(line) || !take_counter(line, "dedup_us", t.dedup_us)) return std::nullopt;
  if (!take_space(line) || !take_counter(line, "unique_count", t.unique_count)) return std::nullopt;
  if (!take_space(line) || !take_counter(line, "duplicate_count", t.duplicate_count)) return std::nullopt;
  if (!take_space(line) || !take_counter(line, "novelty_count", t.novelty_count)) return std::nullopt;
  if (!line.empty()) return std::nullopt;
  return t;
}

TelemetryLine emit_telemetry(const DedupResult& result, std::string_view engine_id, std::ostream& diag) {
  TelemetryLine t = TelemetryLine::from(result, engine_id);
  const std::string text = t.format();
  std::lock_guard lock(diag_mutex());
  diag.write(text.data(), static_cast<std::streamsize>(text.size()));
  diag.flush();
  return t;
}

TelemetryLine emit_telemetry(const DedupResult& result, std::string_view engine_id, int fd) {
  TelemetryLine t = TelemetryLine::from(result, engine_id);
  const std::string text = t.format();
  std::lock_guard lock(diag_mutex());
  std::size_t off = 0;
  while (off < text.size()) {
    const ssize_t n = ::write(fd, text.data() + off, text.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    off += static_cast<std::size_t>(n);
  }
  return t;
}

}  // namespace bytedup
