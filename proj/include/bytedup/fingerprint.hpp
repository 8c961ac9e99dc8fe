#pragma once

#include <cstdint>
#include <string_view>

namespace bytedup {

/// 128-bit content digest plus the record length. Two equal records always
/// produce equal fingerprints; the converse is never assumed.
struct Fingerprint {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t length = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

using FingerprintFn = Fingerprint (*)(std::string_view);

/// Seed-fixed 128-bit digest (MurmurHash3 x64/128 construction). Input words
/// are assembled little-endian so the value is the same on every target.
Fingerprint fingerprint(std::string_view record) noexcept;

inline constexpr std::uint32_t kFingerprintSeed = 0x9e3779b9U;

}  // namespace bytedup
