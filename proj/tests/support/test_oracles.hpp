#pragma once

// Test-only reference implementations. They share no code with the engine:
// no fingerprints, no index, no framing helpers.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace bytedup::testing {

inline bool bytes_equal(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

struct NaiveResult {
  std::vector<std::string> unique_records;
  std::vector<std::size_t> survivor_indices;
};

// O(n^2) first-occurrence scan: record i survives iff no earlier record is
// byte-equal to it.
inline NaiveResult naive_first_occurrence(const std::vector<std::string>& records) {
  NaiveResult r;
  for (std::size_t i = 0; i < records.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) seen = bytes_equal(records[i], records[j]);
    if (!seen) {
      r.unique_records.push_back(records[i]);
      r.survivor_indices.push_back(i);
    }
  }
  return r;
}

// Splits on LF by hand, mirroring the documented framing rules.
inline std::vector<std::string> hand_split(const std::string& bytes, bool strip_cr) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : bytes) {
    if (c == '\n') {
      if (strip_cr && !cur.empty() && cur.back() == '\r') cur.pop_back();
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Random multiset: `n` records drawn from `distinct` random strings of
// length [0, max_len], alphabet restricted to `alphabet` bytes so collisions
// between short strings are common.
inline std::vector<std::string> random_multiset(std::mt19937_64& rng, std::size_t n, std::size_t distinct,
                                                std::size_t max_len, const std::string& alphabet) {
  std::vector<std::string> pool;
  for (std::size_t i = 0; i < distinct; ++i) {
    const std::size_t len = rng() % (max_len + 1);
    std::string s;
    for (std::size_t k = 0; k < len; ++k) s.push_back(alphabet[rng() % alphabet.size()]);
    pool.push_back(std::move(s));
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(pool[rng() % pool.size()]);
  return out;
}

inline std::string all_bytes_alphabet() {
  std::string a;
  for (int c = 0; c < 256; ++c) a.push_back(static_cast<char>(c));
  return a;
}

}  // namespace bytedup::testing
