#pragma once

#include <cstdint>
#include <vector>

#include "lbcn/error.hpp"
#include "lbcn/rng.hpp"

namespace lbcn {

/// Plain integer vector (unreduced, possibly negative).
using ZVector = std::vector<std::int64_t>;

/// Vector with entries reduced to [0, modulus).
using ZqVector = std::vector<std::uint64_t>;

struct Modulus {
  std::uint64_t value;

  explicit Modulus(std::uint64_t v) : value(v) {
    if (v < 2) throw Error(ErrorCode::invalid_params, "modulus must be >= 2");
  }
};

bool is_prime_u64(std::uint64_t n);

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  a %= m;
  b %= m;
  std::uint64_t s = a + b;
  if (s < a || s >= m) s -= m;
  return s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  a %= m;
  b %= m;
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Modular inverse via extended Euclid; throws if gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

/// Reduce a signed integer into [0, m).
inline std::uint64_t reduce_signed(std::int64_t x, std::uint64_t m) {
  std::int64_t r = x % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

/// Unique representative of x mod m in [-(m-1)/2, (m-1)/2] for odd m,
/// [-m/2, m/2-1] for even m.
std::int64_t centered_rep(std::int64_t x, const Modulus& m);
std::int64_t centered_rep_u(std::uint64_t x, const Modulus& m);

struct ZqMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;  // row-major

  ZqMatrix() = default;
  ZqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

ZqMatrix random_matrix(std::size_t rows, std::size_t cols, const Modulus& q, Rng& rng);
ZqVector random_vector(std::size_t len, const Modulus& q, Rng& rng);

/// Exact A*x reduced mod q; x may be signed/unreduced.
ZqVector mat_vec_mul(const ZqMatrix& a, const ZVector& x, const Modulus& q);
ZqVector mat_vec_mul(const ZqMatrix& a, const ZqVector& x, const Modulus& q);

/// <a, x> mod q with signed x.
std::uint64_t dot_mod(const ZqVector& a, const ZVector& x, const Modulus& q);
std::uint64_t dot_mod(const ZqVector& a, const ZqVector& x, const Modulus& q);

/// Exact sum of squares (the coordinates are already centered integers).
unsigned __int128 norm_sq(const ZVector& x);
double norm_l2(const ZVector& x);

}  // namespace lbcn
