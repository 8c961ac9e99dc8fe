#include "bytedup/stream.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <vector>

#include "bytedup/dedup_engine.hpp"
#include "bytedup/sha256.hpp"

namespace bytedup {
namespace {

class Emitter {
 public:
  explicit Emitter(OutputSink* out) : out_(out) {}

  void emit(std::string_view record) {
    if (!first_) put("\n");
    first_ = false;
    put(record);
  }

  std::uint64_t bytes() const noexcept { return bytes_; }
  std::string finish() {
    if (out_ != nullptr) out_->flush();
    return digest_.hex_digest();
  }

 private:
  void put(std::string_view bytes) {
    digest_.update(bytes);
    bytes_ += bytes.size();
    if (out_ != nullptr) out_->write(bytes);
  }

  OutputSink* out_;
  Sha256 digest_;
  bool first_ = true;
  std::uint64_t bytes_ = 0;
};

}  // namespace

StreamResult run_stream(const IngestSource& source, const FramingMode& mode,
                        const StreamOptions& options, OutputSink* out) {
  auto input = open_source(source);
  return run_stream(*input, mode, options, out);
}

StreamResult run_stream(ByteSource& input, const FramingMode& mode, const StreamOptions& options,
                        OutputSink* out) {
  const DedupOptions dedup_options{options.workers, options.min_block_records, options.fingerprint_fn};
  DedupEngine engine(dedup_options, options.baseline, Retention::kCopy);
  Emitter emitter(out);
  StreamResult sr;

  const std::size_t chunk = std::max<std::size_t>(options.batch_bytes, 1);
  const bool jsonl = mode.kind == FramingMode::Kind::kJsonl;
  const bool strip_cr = mode.kind == FramingMode::Kind::kLinesCrlfNormalizing;

  std::string buffer;
  std::size_t carry = 0;
  std::vector<std::string_view> lines;
  std::vector<std::string> decoded;
  std::vector<std::string_view> records;
  std::uint64_t line_number = 0;
  std::uint64_t base_index = 0;

  for (bool eof = false; !eof;) {
    buffer.resize(carry + chunk);
    const std::size_t got = input.read(buffer.data() + carry, chunk);
    eof = got < chunk;
    const std::string_view data(buffer.data(), carry + got);

    // Only complete lines are framed until end of input.
    std::size_t cut = data.size();
    if (!eof) {
      const std::size_t lf = data.rfind('\n');
      cut = lf == std::string_view::npos ? 0 : lf + 1;
    }

    lines.clear();
    split_lines(data.substr(0, cut), jsonl ? false : strip_cr, lines);

    if (jsonl) {
      decoded.clear();
      decoded.reserve(lines.size());
      for (auto line : lines) decoded.push_back(extract_jsonl_field(line, mode.field, ++line_number));
      records.assign(decoded.begin(), decoded.end());
    } else {
      records.swap(lines);
    }

    const auto& survivors = engine.process(records);
    const auto kept = engine.last_survivors();
    for (std::size_t k = 0; k < survivors.size(); ++k) {
      emitter.emit(kept[k]);
      if (options.retain_records) {
        sr.result.unique_records.emplace_back(kept[k]);
        sr.result.survivor_indices.push_back(base_index + survivors[k]);
      }
    }
    base_index += records.size();

    std::size_t scratch = buffer.capacity() + records.capacity() * sizeof(std::string_view) +
                          lines.capacity() * sizeof(std::string_view);
    for (const auto& d : decoded) scratch += d.capacity();
    sr.peak_memory_bytes = std::max(sr.peak_memory_bytes, engine.memory_bytes() + scratch);

    carry = data.size() - cut;
    if (carry > 0) std::memmove(buffer.data(), buffer.data() + cut, carry);
    if (jsonl) records.clear();
  }

  sr.result.unique_count = engine.unique_count();
  sr.result.duplicate_count = engine.duplicate_count();
  sr.result.novelty_count = engine.novelty_count();
  sr.result.dedup_us = engine.dedup_us();
  sr.retained_bytes = engine.retained_bytes();
  sr.output_bytes = emitter.bytes();
  sr.output_sha256 = emitter.finish();
  return sr;
}

}  // namespace bytedup
