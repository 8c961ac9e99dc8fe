#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "bytedup/workload.hpp"
#include "bytedup/dedup.hpp"
#include "bytedup/errors.hpp"
#include "bytedup/framing.hpp"
#include "bytedup/ingest.hpp"
#include "bytedup/output_sink.hpp"
#include "bytedup/sha256.hpp"
#include "bytedup/stream.hpp"
#include "test_oracles.hpp"

namespace bytedup {
namespace {

std::vector<std::string> records(std::string_view bytes, const FramingMode& mode) {
  return tokenize(bytes, mode).to_strings();
}

// Independent restatement of the output contract: survivors joined by LF.
std::string joined(const std::vector<std::string>& survivors) {
  std::string out;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (i) out.push_back('\n');
    out += survivors[i];
  }
  return out;
}

StreamResult stream_bytes(std::string_view bytes, const FramingMode& mode, StreamOptions opts,
                          std::string* out = nullptr) {
  StringSink sink;
  StreamResult r = run_stream(MemoryInput{bytes}, mode, opts, &sink);
  if (out) *out = sink.take();
  return r;
}

// ---- framing ----------------------------------------------------------------

TEST(Framing, CrlfAndLfDifferUnderLfMode) {
  const auto lf = records("x\r\nx\n", FramingMode::lines_lf());
  EXPECT_EQ(lf, (std::vector<std::string>{"x\r", "x"}));
  EXPECT_EQ(dedup_ordered(ChunkSequence(lf)).unique_count, 2u);

  const auto norm = records("x\r\nx\n", FramingMode::crlf_normalizing());
  EXPECT_EQ(norm, (std::vector<std::string>{"x", "x"}));
  EXPECT_EQ(dedup_ordered(ChunkSequence(norm)).unique_count, 1u);
}

TEST(Framing, EdgeCases) {
  EXPECT_TRUE(records("", FramingMode::lines_lf()).empty());
  EXPECT_EQ(records("\n", FramingMode::lines_lf()), (std::vector<std::string>{""}));
  EXPECT_EQ(records("a", FramingMode::lines_lf()), (std::vector<std::string>{"a"}));
  EXPECT_EQ(records("a\n\nb", FramingMode::lines_lf()), (std::vector<std::string>{"a", "", "b"}));
  // Only a CR directly before LF is dropped; an unterminated tail keeps its CR.
  EXPECT_EQ(records("a\r", FramingMode::crlf_normalizing()), (std::vector<std::string>{"a\r"}));
  EXPECT_EQ(records("a\r\r\n", FramingMode::crlf_normalizing()), (std::vector<std::string>{"a\r"}));
  EXPECT_EQ(records("\r\n", FramingMode::crlf_normalizing()), (std::vector<std::string>{""}));
  EXPECT_EQ(records("a\rb\n", FramingMode::crlf_normalizing()), (std::vector<std::string>{"a\rb"}));
}

TEST(Framing, MatchesHandSplitOnRandomBytes) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::string bytes(rng() % 200, '\0');
    for (auto& c : bytes) c = "ab\r\n"[rng() % 4];
    EXPECT_EQ(records(bytes, FramingMode::lines_lf()), testing::hand_split(bytes, false)) << trial;
    EXPECT_EQ(records(bytes, FramingMode::crlf_normalizing()), testing::hand_split(bytes, true)) << trial;
  }
}

TEST(Framing, ReconstructionProperty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    std::string bytes(rng() % 300, '\0');
    for (auto& c : bytes) c = static_cast<char>(rng() % 3 == 0 ? '\n' : rng());
    const auto parts = records(bytes, FramingMode::lines_lf());
    std::string rebuilt;
    for (const auto& p : parts) rebuilt += p + "\n";
    if (!bytes.empty() && bytes.back() != '\n') rebuilt.pop_back();
    EXPECT_EQ(rebuilt, bytes);
  }
}

TEST(Framing, ParseFramingKind) {
  EXPECT_EQ(parse_framing_kind("lines"), FramingMode::Kind::kLinesLf);
  EXPECT_EQ(parse_framing_kind("lines-crlf"), FramingMode::Kind::kLinesCrlfNormalizing);
  EXPECT_EQ(parse_framing_kind("jsonl"), FramingMode::Kind::kJsonl);
  EXPECT_FALSE(parse_framing_kind("csv").has_value());
}

// ---- jsonl ---------------------------------------------------------------------

TEST(Jsonl, FieldValueIsTheRecord) {
  const auto r = parse_jsonl(R"({"text":"alpha","id":1}
{"id":2,"text":"alpha"}
{"text":"beta"}
)",
                             "text");
  EXPECT_EQ(r.to_strings(), (std::vector<std::string>{"alpha", "alpha", "beta"}));
  EXPECT_EQ(dedup_ordered(r).unique_count, 2u);
}

TEST(Jsonl, EscapesAreDecodedBeforeComparison) {
  const auto r = parse_jsonl("{\"text\":\"caf\\u00e9\"}\n{\"text\":\"caf\xc3\xa9\"}\n{\"text\":\"a\\nb\"}", "text");
  EXPECT_EQ(r.to_strings(), (std::vector<std::string>{"caf\xc3\xa9", "caf\xc3\xa9", "a\nb"}));
}

TEST(Jsonl, CustomField) {
  EXPECT_EQ(parse_jsonl(R"({"body":"x","text":"y"})", "body").to_strings(), (std::vector<std::string>{"x"}));
}

TEST(Jsonl, TrailingCrIsTolerated) {
  EXPECT_EQ(parse_jsonl("{\"text\":\"a\"}\r\n{\"text\":\"b\"}\r\n", "text").to_strings(),
            (std::vector<std::string>{"a", "b"}));
}

std::uint64_t framing_error_line(std::string_view bytes) {
  try {
    parse_jsonl(bytes, "text");
  } catch (const FramingError& e) {
    return e.line();
  }
  return 0;
}

TEST(Jsonl, ErrorsReportOneBasedLine) {
  std::string doc;
  for (int i = 1; i <= 6; ++i) doc += R"({"text":"ok"})" "\n";
  EXPECT_EQ(framing_error_line(doc + R"({"other":"x"})" "\n"), 7u);
  EXPECT_EQ(framing_error_line(doc + "{not json\n"), 7u);
  EXPECT_EQ(framing_error_line(doc + R"({"text":5})" "\n"), 7u);
  EXPECT_EQ(framing_error_line(doc + R"({"text":null})"), 7u);
  EXPECT_EQ(framing_error_line(doc + "[\"text\"]\n"), 7u);
  EXPECT_EQ(framing_error_line("\n"), 1u);
  EXPECT_EQ(framing_error_line(doc), 0u);
}

TEST(Jsonl, ErrorMessageNamesLine) {
  try {
    parse_jsonl("{\"text\":\"a\"}\n{}\n", "text");
    FAIL();
  } catch (const FramingError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Jsonl, BlockDuplicatedDatasetHalvesExactly) {
  bench::JsonlDatasetSpec spec;
  const std::string data = bench::generate_jsonl_dataset(spec);
  const auto recs = parse_jsonl(data, "text");
  ASSERT_EQ(recs.size(), 200000u);
  const auto r = dedup_ordered(recs);
  EXPECT_EQ(r.unique_count, 100000u);
  EXPECT_EQ(r.duplicate_count, 100000u);
  std::unordered_set<std::string> set;
  for (auto v : recs.views()) set.emplace(v);
  EXPECT_EQ(set.size(), 100000u);
}

// ---- run_stream -------------------------------------------------------------------

TEST(Stream, OutputIsSurvivorsJoinedByLf) {
  std::string out;
  const auto r = stream_bytes("a\na\nb\n", FramingMode::lines_lf(), {}, &out);
  EXPECT_EQ(out, "a\nb");
  EXPECT_EQ(r.result.unique_count, 2u);
  EXPECT_EQ(r.result.duplicate_count, 1u);
  EXPECT_EQ(r.output_bytes, 3u);
  EXPECT_EQ(r.output_sha256, sha256_hex("a\nb"));
}

TEST(Stream, EmptyInputGivesEmptyOutput) {
  std::string out = "junk";
  const auto r = stream_bytes("", FramingMode::lines_lf(), {}, &out);
  EXPECT_EQ(out, "");
  EXPECT_EQ(r.result.total(), 0u);
  EXPECT_EQ(r.output_sha256, "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Stream, MatchesOracleForAnyBatchAndWorkerSplit) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    std::string bytes(rng() % 2000, '\0');
    for (auto& c : bytes) c = "abc\r\n\n"[rng() % 6];
    for (const auto& mode : {FramingMode::lines_lf(), FramingMode::crlf_normalizing()}) {
      const auto expected =
          testing::naive_first_occurrence(testing::hand_split(bytes, mode.kind != FramingMode::Kind::kLinesLf));
      StreamOptions o;
      o.workers = 1 + static_cast<unsigned>(rng() % 4);
      o.min_block_records = 1 + rng() % 8;
      o.batch_bytes = 1 + rng() % 64;
      o.retain_records = true;
      std::string out;
      const auto r = stream_bytes(bytes, mode, o, &out);
      ASSERT_EQ(r.result.unique_records, expected.unique_records) << trial;
      ASSERT_EQ(r.result.survivor_indices, expected.survivor_indices) << trial;
      ASSERT_EQ(out, joined(expected.unique_records)) << trial;
    }
  }
}

TEST(Stream, RecordsLongerThanBatch) {
  const std::string big(10000, 'q');
  const std::string bytes = big + "\n" + "s\n" + big + "\n" + big + "x";
  StreamOptions o;
  o.batch_bytes = 100;
  std::string out;
  const auto r = stream_bytes(bytes, FramingMode::lines_lf(), o, &out);
  EXPECT_EQ(r.result.unique_count, 3u);
  EXPECT_EQ(out, big + "\ns\n" + big + "x");
}

TEST(Stream, JsonlLineNumbersAreGlobalAcrossBatches) {
  std::string doc;
  for (int i = 1; i < 50; ++i) doc += "{\"text\":\"r" + std::to_string(i) + "\"}\n";
  doc += "{\"txt\":1}\n";
  StreamOptions o;
  o.batch_bytes = 37;
  try {
    stream_bytes(doc, FramingMode::jsonl(), o);
    FAIL();
  } catch (const FramingError& e) {
    EXPECT_EQ(e.line(), 50u);
  }
}

TEST(Stream, JsonlMatchesWholeBufferParse) {
  const std::string doc = bench::generate_jsonl_dataset({7, 500, 3, bench::RepetitionPattern::kShuffled, "text"});
  const auto expected = dedup_ordered(parse_jsonl(doc, "text"));
  StreamOptions o;
  o.batch_bytes = 257;
  o.workers = 3;
  o.min_block_records = 2;
  o.retain_records = true;
  const auto r = stream_bytes(doc, FramingMode::jsonl(), o);
  EXPECT_EQ(r.result.unique_records, expected.unique_records);
  EXPECT_EQ(r.result.unique_count, 500u);
  EXPECT_EQ(r.result.duplicate_count, 1000u);
}

TEST(Stream, MillionRecordsMatchSetOracle) {
  std::mt19937_64 rng(1'000'000);
  std::string bytes;
  bytes.reserve(12'000'000);
  std::unordered_set<std::string> seen;
  std::string expected_out;
  std::uint64_t expected_unique = 0;
  for (int i = 0; i < 1'000'000; ++i) {
    const std::string rec = "r" + std::to_string(rng() % 400'000);
    bytes += rec;
    bytes.push_back('\n');
    if (seen.insert(rec).second) {
      if (expected_unique++) expected_out.push_back('\n');
      expected_out += rec;
    }
  }
  StreamOptions o;
  o.workers = 4;
  o.batch_bytes = 1 << 20;
  std::string out;
  const auto r = stream_bytes(bytes, FramingMode::lines_lf(), o, &out);
  EXPECT_EQ(r.result.unique_count, expected_unique);
  EXPECT_EQ(r.result.duplicate_count, 1'000'000u - expected_unique);
  EXPECT_TRUE(out == expected_out);
}

TEST(Stream, MemoryTracksUniqueBytesNotInputBytes) {
  auto corpus = [](std::size_t unique, std::size_t copies) {
    std::string bytes;
    for (std::size_t c = 0; c < copies; ++c) {
      for (std::size_t u = 0; u < unique; ++u) bytes += std::string(100, static_cast<char>('a' + u % 26)) + std::to_string(u) + "\n";
    }
    return bytes;
  };
  StreamOptions o;
  o.batch_bytes = 64 << 10;
  const auto repeated = stream_bytes(corpus(2000, 10), FramingMode::lines_lf(), o);
  const auto single = stream_bytes(corpus(2000, 1), FramingMode::lines_lf(), o);
  EXPECT_EQ(repeated.retained_bytes, single.retained_bytes);
  std::size_t unique_bytes = 0;
  for (std::size_t u = 0; u < 2000; ++u) unique_bytes += 100 + std::to_string(u).size();
  EXPECT_EQ(single.retained_bytes, unique_bytes);
  // Ten times the input must not cost anywhere near ten times the memory.
  EXPECT_LT(repeated.peak_memory_bytes, 2 * single.peak_memory_bytes);
}

TEST(Stream, ReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "bytedup_stream_test_input.txt";
  {
    std::ofstream f(path, std::ios::binary);
    f << "z\ny\nz\n";
  }
  StringSink sink;
  const auto r = run_stream(FileInput{path.string()}, FramingMode::lines_lf(), {}, &sink);
  EXPECT_EQ(sink.str(), "z\ny");
  EXPECT_EQ(r.result.duplicate_count, 1u);
  std::filesystem::remove(path);
}

TEST(Stream, UnreadableInputIsIngestError) {
  EXPECT_THROW(run_stream(FileInput{"/nonexistent/dir/input.txt"}, FramingMode::lines_lf(), {}, nullptr),
               IngestError);
  EXPECT_THROW(run_stream(FileInput{"/"}, FramingMode::lines_lf(), {}, nullptr), IngestError);
}

TEST(Stream, CountersAreReproducible) {
  const auto spec = *bench::find_workload("rag15");
  const std::string bytes = bench::serialize_lines(bench::generate_workload(spec));
  std::vector<StreamResult> runs;
  for (unsigned w : {1u, 2u, 4u}) {
    StreamOptions o;
    o.workers = w;
    o.min_block_records = 1;
    runs.push_back(stream_bytes(bytes, FramingMode::lines_lf(), o));
  }
  for (const auto& r : runs) {
    EXPECT_EQ(r.output_sha256, runs[0].output_sha256);
    EXPECT_EQ(r.result.unique_count, 5u);
    EXPECT_EQ(r.result.duplicate_count, 10u);
    EXPECT_EQ(r.result.novelty_count, 0u);
  }
}

TEST(Stream, BaselineNovelty) {
  Baseline base;
  base.add("a");
  base.add("zz");
  StreamOptions o;
  o.baseline = &base;
  const auto r = stream_bytes("a\nb\nc\nb\na\n", FramingMode::lines_lf(), o);
  EXPECT_EQ(r.result.novelty_count, 2u);
}

// ---- helpers ------------------------------------------------------------------------

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  Sha256 h;
  h.update("a");
  h.update("bc");
  EXPECT_EQ(h.hex_digest(), sha256_hex("abc"));
}

TEST(Ingest, MemoryReadAll) {
  EXPECT_EQ(read_all(MemoryInput{"abc"}), "abc");
  EXPECT_THROW(read_all(FileInput{"/nonexistent/x"}), IngestError);
}

TEST(Join, TrailingFlag) {
  const std::vector<std::string_view> v = {"a", "b"};
  EXPECT_EQ(join_lines(v, false), "a\nb");
  EXPECT_EQ(join_lines(v, true), "a\nb\n");
}

}  // namespace
}  // namespace bytedup
