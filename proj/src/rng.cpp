#include "lbcn/rng.hpp"

#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace lbcn {

namespace {
constexpr std::size_t kChunk = 4096;
}

Seed seed_from_u64(std::uint64_t x) {
  Sha256 h;
  h.update("lbcn.seed");
  h.update_u64(x);
  return h.finish();
}

Rng::Rng(const Seed& seed) : seed_(seed) {}

void Rng::refill() {
  // 16-byte ChaCha20 IV in OpenSSL: 4-byte block counter || 12-byte nonce.
  std::uint8_t iv[16] = {0};
  for (int i = 0; i < 8; ++i) iv[4 + i] = static_cast<std::uint8_t>(counter_ >> (8 * i));
  static thread_local std::vector<std::uint8_t> zeros(kChunk, 0);
  buf_.resize(kChunk);
  EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
  int out_len = 0;
  if (ctx == nullptr ||
      EVP_EncryptInit_ex(ctx, EVP_chacha20(), nullptr, seed_.data(), iv) != 1 ||
      EVP_EncryptUpdate(ctx, buf_.data(), &out_len, zeros.data(), kChunk) != 1 ||
      out_len != static_cast<int>(kChunk)) {
    EVP_CIPHER_CTX_free(ctx);
    throw std::runtime_error("chacha20 keystream failed");
  }
  EVP_CIPHER_CTX_free(ctx);
  ++counter_;
  pos_ = 0;
}

std::uint8_t Rng::byte() {
  if (pos_ >= buf_.size()) refill();
  return buf_[pos_++];
}

void Rng::fill(std::uint8_t* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = byte();
}

std::uint64_t Rng::next_u64() {
  std::uint64_t v;
  if (buf_.size() - pos_ >= 8) {
    std::memcpy(&v, buf_.data() + pos_, 8);
    pos_ += 8;
    return v;
  }
  std::uint8_t tmp[8];
  for (auto& b : tmp) b = byte();
  std::memcpy(&v, tmp, 8);
  return v;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  // Largest multiple of bound that fits in 64 bits; reject above it.
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  for (;;) {
    std::uint64_t v = next_u64();
    if (v < limit) return v % bound;
  }
}

Rng Rng::derive(std::string_view tag, std::initializer_list<std::uint64_t> context) const {
  Sha256 h;
  h.update(seed_.data(), seed_.size());
  h.update("lbcn.derive");
  h.update_u64(tag.size());
  h.update(tag);
  for (std::uint64_t c : context) h.update_u64(c);
  return Rng(h.finish());
}

}  // namespace lbcn
