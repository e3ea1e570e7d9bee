#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles here
// are deliberately written from scratch (Fermat inverses, schoolbook loops,
// Gaussian elimination) so they do not share code with the library paths
// they check.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lbcn/drng.hpp"
#include "lbcn/params.hpp"
#include "lbcn/pvss.hpp"
#include "lbcn/sim.hpp"
#include "lbcn/transcript.hpp"

namespace lbcn::test {

inline SystemParams load_set(const std::string& name) {
  std::string file = (name == "stat31") ? "/stat31.cfg" : "/params.cfg";
  ParamConfig cfg = load_param_config(std::string(LBCN_CONFIG_DIR) + file);
  return cfg.get(name);
}

inline SystemParams tiny_params() { return load_set("tiny"); }
inline SystemParams toy_params() { return load_set("toy"); }
inline SystemParams small_params() { return load_set("small"); }
inline SystemParams stat31_params() { return load_set("stat31"); }

/// Minimal field for exhaustive checks; fails the noise budget on paper but
/// never in practice at desk scale (see stat31.cfg for the same trade).
inline SystemParams p7_params() {
  SystemParams p;
  p.name = "p7";
  p.p = 7;
  p.q = 49;
  p.u = 2;
  p.v = 2;
  p.alpha = 0.5 / 49.0;
  p.r_enc = 0.5;
  p.beta = std::sqrt(2.0) * 1.0 * (p.alpha + 1.0 / 98.0);
  p.n = 4;
  p.t = 1;
  p.lambda_sec = 16;
  p.rep = 16;
  return p;
}

inline PvssPublicParams make_pp(const SystemParams& params, std::uint64_t seed,
                                bool allow_invalid = false) {
  return pvss_setup(params, seed_from_u64(seed), allow_invalid);
}

// ---------- independent oracles ----------

inline std::uint64_t oracle_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t oracle_inv(std::uint64_t a, std::uint64_t p) {
  return oracle_pow(a % p, p - 2, p);  // Fermat, p prime
}

/// Interpolate f(0) from point set {(i, y_i)} by the textbook formula.
inline std::uint64_t oracle_interpolate_zero(const std::map<std::uint64_t, std::uint64_t>& pts,
                                             std::uint64_t p) {
  unsigned __int128 acc = 0;
  for (const auto& [xi, yi] : pts) {
    unsigned __int128 term = yi % p;
    for (const auto& [xj, yj] : pts) {
      if (xj == xi) continue;
      (void)yj;
      term = term * (xj % p) % p;
      term = term * oracle_inv((xj + p - xi) % p, p) % p;
    }
    acc = (acc + term) % p;
  }
  return static_cast<std::uint64_t>(acc);
}

/// Schoolbook triple-loop matrix-vector product mod q.
inline std::vector<std::uint64_t> oracle_matvec(const ZqMatrix& a,
                                                const std::vector<std::int64_t>& x,
                                                std::uint64_t q) {
  std::vector<std::uint64_t> out(a.rows, 0);
  for (std::size_t r = 0; r < a.rows; ++r) {
    unsigned __int128 acc = 0;
    for (std::size_t c = 0; c < a.cols; ++c) {
      std::int64_t v = x[c] % static_cast<std::int64_t>(q);
      if (v < 0) v += static_cast<std::int64_t>(q);
      acc += static_cast<unsigned __int128>(a.at(r, c)) % q * static_cast<std::uint64_t>(v);
    }
    out[r] = static_cast<std::uint64_t>(acc % q);
  }
  return out;
}

/// All share vectors of degree <= t polynomials at points 1..n (the code).
inline std::set<std::vector<std::uint64_t>> oracle_codewords(std::uint64_t p, std::size_t n,
                                                             std::size_t t) {
  std::set<std::vector<std::uint64_t>> words;
  std::vector<std::uint64_t> coeff(t + 1, 0);
  for (;;) {
    std::vector<std::uint64_t> w(n);
    for (std::uint64_t x = 1; x <= n; ++x) {
      unsigned __int128 acc = 0, pw = 1;
      for (std::uint64_t c : coeff) {
        acc = (acc + c * pw) % p;
        pw = pw * x % p;
      }
      w[x - 1] = static_cast<std::uint64_t>(acc);
    }
    words.insert(std::move(w));
    std::size_t k = 0;
    while (k <= t && ++coeff[k] == p) coeff[k++] = 0;
    if (k > t) break;
  }
  return words;
}

/// Null space basis of m^T -> (m^T H) via Gaussian elimination over Z_p:
/// returns a basis of { h : w . h = 0 for all codewords w }.
inline std::vector<std::vector<std::uint64_t>> oracle_dual_basis(std::uint64_t p, std::size_t n,
                                                                 std::size_t t) {
  // Rows = generator of the code (monomial evaluations), solve G h = 0.
  std::vector<std::vector<std::uint64_t>> g(t + 1, std::vector<std::uint64_t>(n));
  for (std::size_t k = 0; k <= t; ++k) {
    for (std::uint64_t x = 1; x <= n; ++x) g[k][x - 1] = oracle_pow(x, k, p);
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < g.size(); ++col) {
    std::size_t sel = row;
    while (sel < g.size() && g[sel][col] == 0) ++sel;
    if (sel == g.size()) continue;
    std::swap(g[sel], g[row]);
    std::uint64_t inv = oracle_inv(g[row][col], p);
    for (std::size_t c = 0; c < n; ++c) g[row][c] = g[row][c] * inv % p;
    for (std::size_t r2 = 0; r2 < g.size(); ++r2) {
      if (r2 == row || g[r2][col] == 0) continue;
      std::uint64_t f = g[r2][col];
      for (std::size_t c = 0; c < n; ++c) {
        g[r2][c] = (g[r2][c] + (p - f) * g[row][c]) % p;
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t col = 0; col < n; ++col) {
    bool is_pivot = false;
    for (std::size_t c : pivot_cols) is_pivot |= (c == col);
    if (is_pivot) continue;
    std::vector<std::uint64_t> h(n, 0);
    h[col] = 1;
    for (std::size_t r2 = 0; r2 < pivot_cols.size(); ++r2) {
      h[pivot_cols[r2]] = (p - g[r2][col]) % p;
    }
    basis.push_back(std::move(h));
  }
  return basis;
}

// ---------- simulation conveniences ----------

inline SimResult quick_sim(const SystemParams& params, std::size_t n, std::size_t t,
                           std::size_t epochs, std::uint64_t seed,
                           const std::string& strategy = "honest",
                           std::set<std::uint64_t> corrupted = {}, bool allow_invalid = false) {
  NetworkConfig cfg;
  cfg.n = n;
  cfg.t = t;
  cfg.seed = seed;
  cfg.strategy = strategy;
  cfg.corrupted = std::move(corrupted);
  cfg.allow_invalid = allow_invalid;
  return sim_run(cfg, params, epochs);
}

/// Independent output-law check: every (t+1)-subset of every dealer's
/// verified reveals must interpolate to the recorded secret, and omega must
/// be their sum.
inline bool oracle_output_law(const PvssPublicParams& pp, const EpochRecord& rec) {
  if (!rec.omega) return false;
  unsigned __int128 sum = 0;
  for (std::uint64_t dealer : rec.qual_prime) {
    auto sit = rec.share_sets.find(dealer);
    if (sit == rec.share_sets.end()) return false;
    const auto& holders = sit->second;
    const std::size_t k = pp.params.t + 1;
    if (holders.size() < k) return false;
    std::optional<std::uint64_t> value;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::map<std::uint64_t, std::uint64_t> pts;
      for (std::size_t i : idx) {
        std::uint64_t h = holders[i];
        pts[h] = rec.reveals.at(KeyId{dealer, h}).share;
      }
      std::uint64_t v = oracle_interpolate_zero(pts, pp.params.p);
      if (!value) value = v;
      if (*value != v) return false;
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == holders.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    auto rit = rec.secrets.find(dealer);
    if (rit == rec.secrets.end() || rit->second != *value) return false;
    sum = (sum + *value) % pp.params.p;
  }
  return static_cast<std::uint64_t>(sum) == *rec.omega;
}

}  // namespace lbcn::test
