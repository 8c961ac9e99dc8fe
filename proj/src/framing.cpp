#include "bytedup/framing.hpp"

#include <json.hpp>

#include "bytedup/errors.hpp"

namespace bytedup {

std::string FramingMode::name() const {
  switch (kind) {
    case Kind::kLinesLf:
      return "lines";
    case Kind::kLinesCrlfNormalizing:
      return "lines-crlf";
    case Kind::kJsonl:
      return "jsonl:" + field;
  }
  return "unknown";
}

std::optional<FramingMode::Kind> parse_framing_kind(std::string_view name) {
  if (name == "lines") return FramingMode::Kind::kLinesLf;
  if (name == "lines-crlf") return FramingMode::Kind::kLinesCrlfNormalizing;
  if (name == "jsonl") return FramingMode::Kind::kJsonl;
  return std::nullopt;
}

void split_lines(std::string_view bytes, bool strip_cr, std::vector<std::string_view>& out) {
  std::size_t start = 0;
  while (start < bytes.size()) {
    const std::size_t lf = bytes.find('\n', start);
    if (lf == std::string_view::npos) {
      out.push_back(bytes.substr(start));
      return;
    }
    std::size_t end = lf;
    if (strip_cr && end > start && bytes[end - 1] == '\r') --end;
    out.push_back(bytes.substr(start, end - start));
    start = lf + 1;
  }
}

ChunkSequence tokenize(std::string_view bytes, const FramingMode& mode) {
  if (mode.kind == FramingMode::Kind::kJsonl) return parse_jsonl(bytes, mode.field);

  std::vector<std::string_view> views;
  split_lines(bytes, mode.kind == FramingMode::Kind::kLinesCrlfNormalizing, views);
  ChunkSequence seq;
  seq.reserve(views.size(), bytes.size());
  for (auto v : views) seq.push_back(v);
  return seq;
}

std::string extract_jsonl_field(std::string_view line, std::string_view field,
                                std::uint64_t line_number) {
  nlohmann::json doc = nlohmann::json::parse(line.begin(), line.end(), nullptr, false);
  if (doc.is_discarded()) throw FramingError(line_number, "malformed JSON");
  if (!doc.is_object()) throw FramingError(line_number, "JSON value is not an object");

  auto it = doc.find(field);
  if (it == doc.end()) throw FramingError(line_number, "missing field \"" + std::string(field) + "\"");
  if (!it->is_string()) {
    throw FramingError(line_number, "field \"" + std::string(field) + "\" is not a string");
  }
  return std::move(it->get_ref<std::string&>());
}

ChunkSequence parse_jsonl(std::string_view bytes, std::string_view field) {
  std::vector<std::string_view> lines;
  split_lines(bytes, false, lines);
  ChunkSequence seq;
  seq.reserve(lines.size(), bytes.size());
  std::uint64_t line_number = 0;
  for (auto line : lines) seq.push_back(extract_jsonl_field(line, field, ++line_number));
  return seq;
}

std::string join_lines(const std::vector<std::string_view>& records, bool trailing_lf) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i > 0) out.push_back('\n');
    out.append(records[i]);
  }
  if (trailing_lf) out.push_back('\n');
  return out;
}

}  // namespace bytedup
