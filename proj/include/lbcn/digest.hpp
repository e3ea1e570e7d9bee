#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lbcn {

using Digest32 = std::array<std::uint8_t, 32>;

/// Incremental SHA-256 (backed by OpenSSL). One digest algorithm is used for
/// the transcript-file integrity hash, the RNG stream and proof challenges.
class Sha256 {
 public:
  Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  ~Sha256();

  void update(const void* data, std::size_t len);
  void update(std::span<const std::uint8_t> data) { update(data.data(), data.size()); }
  void update(std::string_view s) { update(s.data(), s.size()); }
  void update_u64(std::uint64_t v);

  Digest32 finish();

 private:
  void* ctx_;
};

Digest32 sha256(std::span<const std::uint8_t> data);

}  // namespace lbcn
