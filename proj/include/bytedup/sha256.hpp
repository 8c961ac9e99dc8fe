#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace bytedup {

// Incremental SHA-256 (OpenSSL EVP backend).
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;

  void update(std::string_view bytes);
  // Lowercase hex digest; the hasher must not be updated afterwards.
  std::string hex_digest();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string sha256_hex(std::string_view bytes);

}  // namespace bytedup
