#include "lbcn/pke.hpp"

#include <cmath>

#include "lbcn/error.hpp"
#include "lbcn/gaussian.hpp"

namespace lbcn {

namespace {
constexpr int kKeygenRetryCap = 100;
}

ZqMatrix pke_setup(const SystemParams& params, Rng& rng) {
  params.check_structure();
  return random_matrix(params.v, params.u, Modulus(params.q), rng);
}

PkeKeyPair pke_keygen(const ZqMatrix& a, const SystemParams& params, Rng& rng) {
  if (a.rows != params.v || a.cols != params.u) {
    throw Error(ErrorCode::dimension_mismatch, "keygen: A must be v x u");
  }
  const Modulus q(params.q);
  const double aq = params.alpha_q();
  const double s_bound_sq = static_cast<double>(params.v) * aq * aq;
  const double e_bound_sq = static_cast<double>(params.u) * aq * aq;
  const GaussianSampler& sampler = cached_sampler(aq, default_tail_cut(aq));
  for (int attempt = 0; attempt < kKeygenRetryCap; ++attempt) {
    ZVector s(params.v), e(params.u);
    for (auto& x : s) x = sampler.draw(rng);
    for (auto& x : e) x = sampler.draw(rng);
    if (static_cast<double>(norm_sq(s)) >= s_bound_sq) continue;
    if (static_cast<double>(norm_sq(e)) >= e_bound_sq) continue;
    // b = s^T A + e^T  (i.e. b_j = <s, column j> + e_j)
    ZqVector b(params.u);
    for (std::size_t j = 0; j < params.u; ++j) {
      unsigned __int128 acc = reduce_signed(e[j], q.value);
      for (std::size_t i = 0; i < params.v; ++i) {
        acc += static_cast<unsigned __int128>(a.at(i, j)) * reduce_signed(s[i], q.value);
      }
      b[j] = static_cast<std::uint64_t>(acc % q.value);
    }
    return PkeKeyPair{std::move(b), std::move(s), std::move(e)};
  }
  throw Error(ErrorCode::retry_exhausted, "keygen norm bounds unsatisfiable");
}

Ciphertext pke_encrypt_with(const ZqMatrix& a, const ZqVector& pk_b, std::uint64_t m,
                            const EncRandomness& er, const SystemParams& params) {
  if (m >= params.p) throw Error(ErrorCode::message_out_of_range, "message not in Z_p");
  if (a.cols != er.r.size() || pk_b.size() != params.u || a.rows != params.v) {
    throw Error(ErrorCode::dimension_mismatch, "encrypt dims");
  }
  const Modulus q(params.q);
  Ciphertext ct;
  ct.c1 = mat_vec_mul(a, er.r, q);
  std::uint64_t br = dot_mod(pk_b, er.r, q);
  std::uint64_t noise = reduce_signed(er.e, q.value);
  ct.c2 = add_mod(add_mod(br, noise, q.value), mul_mod(params.p, m, q.value), q.value);
  return ct;
}

std::pair<Ciphertext, EncRandomness> pke_encrypt(const ZqMatrix& a, const ZqVector& pk_b,
                                                 std::uint64_t m, const SystemParams& params,
                                                 Rng& rng) {
  EncRandomness er;
  const GaussianSampler& r_sampler = cached_sampler(params.r_enc, default_tail_cut(params.r_enc));
  const GaussianSampler& e_sampler =
      cached_sampler(params.beta_q(), default_tail_cut(params.beta_q()));
  er.r.resize(params.u);
  for (auto& x : er.r) x = r_sampler.draw(rng);
  er.e = e_sampler.draw(rng);
  Ciphertext ct = pke_encrypt_with(a, pk_b, m, er, params);
  return {std::move(ct), std::move(er)};
}

DecryptionWitness pke_decrypt(const ZqVector& pk_b, const ZVector& sk_s, const Ciphertext& ct,
                              const SystemParams& params) {
  if (ct.c1.size() != params.v || sk_s.size() != params.v || pk_b.size() != params.u) {
    throw Error(ErrorCode::dimension_mismatch, "decrypt dims");
  }
  const Modulus q(params.q);
  const Modulus p(params.p);
  std::uint64_t d = sub_mod(ct.c2, dot_mod(ct.c1, sk_s, q), q.value);
  DecryptionWitness w;
  w.f = centered_rep_u(d % params.p, p);
  // d - f is divisible by p; (d - f)/p lands in [0, p] and p wraps to 0.
  std::int64_t df = static_cast<std::int64_t>(d) - w.f;
  std::uint64_t msg = static_cast<std::uint64_t>(df) / params.p;
  w.message = msg % params.p;
  return w;
}

}  // namespace lbcn
