#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lbcn/rng.hpp"
#include "lbcn/zq.hpp"

namespace lbcn {

/// Shares indexed by participant 1..n'; values in [0, p).
struct ShareVector {
  std::map<std::uint64_t, std::uint64_t> shares;
};

/// Parity-check matrix of the Shamir evaluation code at points 1..n': column
/// k has entries v_i * i^k with v_i = prod_{j != i} (i - j)^{-1} mod p. A
/// vector m is a valid share vector iff m^T H = 0 (mod p).
struct ParityMatrix {
  std::size_t n = 0;        // rows
  std::size_t cols = 0;     // n - t - 1
  std::vector<std::uint64_t> h;  // row-major

  std::uint64_t at(std::size_t i, std::size_t k) const { return h[i * cols + k]; }
};

struct LagrangeCoeffs {
  std::map<std::uint64_t, std::uint64_t> coeffs;
};

/// Degree-t polynomial with constant term s, evaluated at 1..n'. The
/// coefficient list is returned so callers can reuse it as a proof witness.
std::pair<ShareVector, std::vector<std::uint64_t>> sss_share(std::uint64_t s, std::size_t n_prime,
                                                             std::size_t t, const Modulus& p,
                                                             Rng& rng);

/// Evaluation of an explicit coefficient list (test hook and sss_share body).
ShareVector sss_share_with_poly(const std::vector<std::uint64_t>& coeffs, std::size_t n_prime,
                                const Modulus& p);

LagrangeCoeffs lagrange_coeffs(const std::set<std::uint64_t>& s_set, const Modulus& p);

std::uint64_t sss_combine(const std::set<std::uint64_t>& s_set,
                          const std::map<std::uint64_t, std::uint64_t>& shares, const Modulus& p);

ParityMatrix parity_matrix(std::size_t n_prime, std::size_t t, const Modulus& p);

bool is_valid_share_vector(const std::vector<std::uint64_t>& m, const ParityMatrix& h,
                           const Modulus& p);

}  // namespace lbcn
