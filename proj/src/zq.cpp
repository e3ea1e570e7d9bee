#include "lbcn/zq.hpp"

#include <cmath>

namespace lbcn {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the standard base set.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
  a %= m;
  if (a == 0) throw Error(ErrorCode::index_zero, "no inverse of 0");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t qt = r / new_r;
    std::int64_t tmp = t - qt * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - qt * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error(ErrorCode::invalid_params, "element not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::int64_t centered_rep(std::int64_t x, const Modulus& m) {
  return centered_rep_u(reduce_signed(x, m.value), m);
}

std::int64_t centered_rep_u(std::uint64_t x, const Modulus& m) {
  x %= m.value;
  // Odd m: |rep| <= (m-1)/2.  Even m: rep in [-m/2, m/2-1].
  std::uint64_t half = m.value / 2;
  bool wrap = (m.value % 2 == 1) ? (x > half) : (x >= half);
  if (wrap) return static_cast<std::int64_t>(x) - static_cast<std::int64_t>(m.value);
  return static_cast<std::int64_t>(x);
}

ZqMatrix random_matrix(std::size_t rows, std::size_t cols, const Modulus& q, Rng& rng) {
  ZqMatrix m(rows, cols);
  for (auto& e : m.a) e = rng.uniform_below(q.value);
  return m;
}

ZqVector random_vector(std::size_t len, const Modulus& q, Rng& rng) {
  ZqVector v(len);
  for (auto& e : v) e = rng.uniform_below(q.value);
  return v;
}

namespace {

ZqVector mat_vec_mul_reduced(const ZqMatrix& a, const ZqVector& x, const Modulus& q) {
  ZqVector out(a.rows);
  if (q.value >> 32) {
    // Wide moduli: products no longer leave headroom for accumulation.
    for (std::size_t r = 0; r < a.rows; ++r) {
      const std::uint64_t* row = a.a.data() + r * a.cols;
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < a.cols; ++c) {
        acc = add_mod(acc, mul_mod(row[c], x[c], q.value), q.value);
      }
      out[r] = acc;
    }
    return out;
  }
  for (std::size_t r = 0; r < a.rows; ++r) {
    unsigned __int128 acc = 0;
    const std::uint64_t* row = a.a.data() + r * a.cols;
    for (std::size_t c = 0; c < a.cols; ++c) {
      acc += static_cast<unsigned __int128>(row[c]) * x[c];
    }
    out[r] = static_cast<std::uint64_t>(acc % q.value);
  }
  return out;
}

}  // namespace

ZqVector mat_vec_mul(const ZqMatrix& a, const ZVector& x, const Modulus& q) {
  if (a.cols != x.size()) throw Error(ErrorCode::dimension_mismatch, "mat_vec_mul dims");
  ZqVector reduced(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) reduced[i] = reduce_signed(x[i], q.value);
  return mat_vec_mul_reduced(a, reduced, q);
}

ZqVector mat_vec_mul(const ZqMatrix& a, const ZqVector& x, const Modulus& q) {
  if (a.cols != x.size()) throw Error(ErrorCode::dimension_mismatch, "mat_vec_mul dims");
  bool needs_reduce = false;
  for (std::uint64_t v : x) {
    if (v >= q.value) {
      needs_reduce = true;
      break;
    }
  }
  if (!needs_reduce) return mat_vec_mul_reduced(a, x, q);
  ZqVector reduced(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) reduced[i] = x[i] % q.value;
  return mat_vec_mul_reduced(a, reduced, q);
}

std::uint64_t dot_mod(const ZqVector& a, const ZVector& x, const Modulus& q) {
  if (a.size() != x.size()) throw Error(ErrorCode::dimension_mismatch, "dot_mod dims");
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<unsigned __int128>(a[i] % q.value) * reduce_signed(x[i], q.value);
  }
  return static_cast<std::uint64_t>(acc % q.value);
}

std::uint64_t dot_mod(const ZqVector& a, const ZqVector& x, const Modulus& q) {
  if (a.size() != x.size()) throw Error(ErrorCode::dimension_mismatch, "dot_mod dims");
  unsigned __int128 acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<unsigned __int128>(a[i] % q.value) * (x[i] % q.value);
  }
  return static_cast<std::uint64_t>(acc % q.value);
}

unsigned __int128 norm_sq(const ZVector& x) {
  unsigned __int128 acc = 0;
  for (std::int64_t v : x) {
    unsigned __int128 av = v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    acc += av * av;
  }
  return acc;
}

double norm_l2(const ZVector& x) {
  return std::sqrt(static_cast<double>(norm_sq(x)));
}

}  // namespace lbcn
