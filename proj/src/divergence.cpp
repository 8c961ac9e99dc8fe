#include "bytedup/divergence.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bytedup/framing.hpp"
#include "bytedup/stream.hpp"

namespace bytedup::audit {

DivergenceAccount account_divergence(const IngestSource& source) {
  const std::string bytes = read_all(source);
  return account_divergence(std::string_view(bytes));
}

DivergenceAccount account_divergence(std::string_view bytes) {
  DivergenceAccount acc;
  acc.lf_unique = run_stream(MemoryInput{bytes}, FramingMode::lines_lf(), {}, nullptr).result.unique_count;
  acc.normalizing_unique =
      run_stream(MemoryInput{bytes}, FramingMode::crlf_normalizing(), {}, nullptr).result.unique_count;

  // Group the distinct LF-framed records by the record the CR-stripping
  // splitter would produce for them. Only LF-terminated records lose a CR.
  std::vector<std::string_view> records;
  split_lines(bytes, false, records);
  const bool last_unterminated = !bytes.empty() && bytes.back() != '\n';

  std::unordered_map<std::string_view, std::unordered_set<std::string_view>> classes;
  for (std::size_t i = 0; i < records.size(); ++i) {
    std::string_view key = records[i];
    const bool terminated = !(last_unterminated && i + 1 == records.size());
    if (terminated && !key.empty() && key.back() == '\r') key.remove_suffix(1);
    classes[key].insert(records[i]);
  }
  for (const auto& [key, members] : classes) acc.mixed_ending_classes += members.size() - 1;
  return acc;
}

}  // namespace bytedup::audit
