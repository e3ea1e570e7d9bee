#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "lbcn/digest.hpp"

namespace lbcn {

using Seed = std::array<std::uint8_t, 32>;

Seed seed_from_u64(std::uint64_t x);

/// Deterministic counter-based cryptographic byte stream (ChaCha20 keystream
/// under the seed, nonce = chunk counter). Identical (seed, counter) always
/// yields the identical stream, so every protocol run replays bit-exactly.
/// Child streams derive by hashing the parent seed with a purpose tag and
/// numeric context (participant id, epoch, ...) so per-entity randomness is
/// independent of scheduling order.
class Rng {
 public:
  explicit Rng(const Seed& seed);

  std::uint8_t byte();
  void fill(std::uint8_t* out, std::size_t len);
  std::uint64_t next_u64();
  /// Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);
  bool bit() { return (byte() & 1) != 0; }

  Rng derive(std::string_view tag, std::initializer_list<std::uint64_t> context = {}) const;

  const Seed& seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  void refill();

  Seed seed_;
  std::uint64_t counter_ = 0;  // next keystream chunk index
  std::vector<std::uint8_t> buf_;
  std::size_t pos_ = 0;
};

}  // namespace lbcn
