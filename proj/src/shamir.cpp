#include "lbcn/shamir.hpp"

#include "lbcn/error.hpp"

namespace lbcn {

ShareVector sss_share_with_poly(const std::vector<std::uint64_t>& coeffs, std::size_t n_prime,
                                const Modulus& p) {
  ShareVector sv;
  for (std::uint64_t i = 1; i <= n_prime; ++i) {
    // Horner evaluation at point i.
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = add_mod(mul_mod(acc, i, p.value), *it, p.value);
    }
    sv.shares[i] = acc;
  }
  return sv;
}

std::pair<ShareVector, std::vector<std::uint64_t>> sss_share(std::uint64_t s, std::size_t n_prime,
                                                             std::size_t t, const Modulus& p,
                                                             Rng& rng) {
  if (t >= n_prime) throw Error(ErrorCode::threshold_too_large, "need t < n'");
  if (n_prime > p.value - 1) throw Error(ErrorCode::field_too_small, "need n' <= p-1");
  if (s >= p.value) throw Error(ErrorCode::secret_out_of_range, "secret not in Z_p");
  std::vector<std::uint64_t> coeffs(t + 1);
  coeffs[0] = s;
  for (std::size_t k = 1; k <= t; ++k) coeffs[k] = rng.uniform_below(p.value);
  return {sss_share_with_poly(coeffs, n_prime, p), coeffs};
}

LagrangeCoeffs lagrange_coeffs(const std::set<std::uint64_t>& s_set, const Modulus& p) {
  if (s_set.empty()) throw Error(ErrorCode::invalid_params, "empty index set");
  LagrangeCoeffs lc;
  for (std::uint64_t i : s_set) {
    if (i == 0) throw Error(ErrorCode::index_zero, "index 0 not allowed");
    if (i >= p.value) throw Error(ErrorCode::invalid_params, "index out of field");
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j : s_set) {
      if (j == i) continue;
      num = mul_mod(num, j, p.value);
      den = mul_mod(den, sub_mod(j, i, p.value), p.value);
    }
    lc.coeffs[i] = mul_mod(num, inv_mod(den, p.value), p.value);
  }
  return lc;
}

std::uint64_t sss_combine(const std::set<std::uint64_t>& s_set,
                          const std::map<std::uint64_t, std::uint64_t>& shares, const Modulus& p) {
  LagrangeCoeffs lc = lagrange_coeffs(s_set, p);
  std::uint64_t acc = 0;
  for (std::uint64_t i : s_set) {
    auto it = shares.find(i);
    if (it == shares.end()) throw Error(ErrorCode::invalid_params, "share missing for index");
    acc = add_mod(acc, mul_mod(lc.coeffs[i], it->second, p.value), p.value);
  }
  return acc;
}

ParityMatrix parity_matrix(std::size_t n_prime, std::size_t t, const Modulus& p) {
  if (n_prime > p.value - 1) throw Error(ErrorCode::field_too_small, "need n' <= p-1");
  if (n_prime < 2 || t + 1 >= n_prime) {
    throw Error(ErrorCode::degenerate_dims, "parity matrix needs n' - t - 1 >= 1");
  }
  ParityMatrix h;
  h.n = n_prime;
  h.cols = n_prime - t - 1;
  h.h.resize(h.n * h.cols);
  for (std::uint64_t i = 1; i <= n_prime; ++i) {
    std::uint64_t w = 1;
    for (std::uint64_t j = 1; j <= n_prime; ++j) {
      if (j == i) continue;
      w = mul_mod(w, sub_mod(i, j, p.value), p.value);
    }
    std::uint64_t vi = inv_mod(w, p.value);
    std::uint64_t pw = vi;  // v_i * i^k, k = 0..
    for (std::size_t k = 0; k < h.cols; ++k) {
      h.h[(i - 1) * h.cols + k] = pw;
      pw = mul_mod(pw, i, p.value);
    }
  }
  return h;
}

bool is_valid_share_vector(const std::vector<std::uint64_t>& m, const ParityMatrix& h,
                           const Modulus& p) {
  if (m.size() != h.n) throw Error(ErrorCode::dimension_mismatch, "share vector length != rows");
  for (std::size_t k = 0; k < h.cols; ++k) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < h.n; ++i) {
      acc = add_mod(acc, mul_mod(m[i], h.at(i, k), p.value), p.value);
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace lbcn
