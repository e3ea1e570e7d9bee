#include "lbcn/pvss.hpp"

#include "lbcn/error.hpp"

namespace lbcn {

namespace {

// With t = n'-1 every share vector is a codeword and the parity block is
// empty; the statement then only proves encryption validity.
ParityMatrix share_parity(std::size_t n_prime, std::size_t t, const Modulus& p) {
  if (t + 1 < n_prime) return parity_matrix(n_prime, t, p);
  ParityMatrix h;
  h.n = n_prime;
  h.cols = 0;
  return h;
}

}  // namespace

PvssPublicParams pvss_setup(const SystemParams& params, const Seed& seed, bool allow_invalid) {
  params.check_structure();
  PvssPublicParams pp;
  pp.params = params;
  pp.setup_seed = seed;
  pp.budget = validate_params(params);
  if (!pp.budget.pass() && !allow_invalid) {
    throw Error(ErrorCode::invalid_params, "parameter set fails its noise budget");
  }
  Rng base(seed);
  Rng a_rng = base.derive("pvss.setup.A");
  pp.a_mat = pke_setup(params, a_rng);
  pp.crs0 = proof_setup("nizk0.key", params, base);
  pp.crs1 = proof_setup("nizk1.share", params, base);
  pp.crs2 = proof_setup("nizk2.dec", params, base);
  return pp;
}

std::pair<KeyAnnouncement, PkeKeyPair> pvss_keygen(const PvssPublicParams& pp, Rng& rng) {
  PkeKeyPair kp = pke_keygen(pp.a_mat, pp.params, rng);
  LinearStatement st = build_key_statement(pp.a_mat, kp.pk_b, pp.params);
  ZVector witness;
  witness.reserve(pp.params.v + pp.params.u);
  witness.insert(witness.end(), kp.sk_s.begin(), kp.sk_s.end());
  witness.insert(witness.end(), kp.noise_e.begin(), kp.noise_e.end());
  KeyAnnouncement ka;
  ka.pk_b = kp.pk_b;
  ka.proof0 = prove(pp.crs0, st, witness, rng);
  return {std::move(ka), std::move(kp)};
}

bool pvss_keyver(const PvssPublicParams& pp, const KeyAnnouncement& ka) {
  try {
    LinearStatement st = build_key_statement(pp.a_mat, ka.pk_b, pp.params);
    return verify(pp.crs0, st, ka.proof0);
  } catch (const Error&) {
    return false;
  }
}

PvssShareResult pvss_share(const PvssPublicParams& pp, const std::vector<ZqVector>& pks,
                           std::uint64_t s, std::size_t n_prime, std::size_t t, Rng& rng) {
  if (pks.size() != n_prime) {
    throw Error(ErrorCode::dimension_mismatch, "share: |pks| != n'");
  }
  if (s >= pp.params.p) throw Error(ErrorCode::secret_out_of_range, "secret not in Z_p");
  if (t >= n_prime) throw Error(ErrorCode::threshold_too_large, "share: need t < n'");

  const Modulus p(pp.params.p);
  auto [share_vec, poly] = sss_share(s, n_prime, t, p, rng);

  PvssShareResult out;
  out.shares.resize(n_prime);
  out.transcript.ciphertexts.resize(n_prime);
  // Witness layout (r_1..r_n' | e_1..e_n' | m_1..m_n').
  ZVector witness(n_prime * (pp.params.u + 2), 0);
  const std::size_t e_off = n_prime * pp.params.u;
  const std::size_t m_off = e_off + n_prime;
  for (std::size_t i = 0; i < n_prime; ++i) {
    std::uint64_t share_i = share_vec.shares.at(i + 1);
    out.shares[i] = share_i;
    auto [ct, er] = pke_encrypt(pp.a_mat, pks[i], share_i, pp.params, rng);
    out.transcript.ciphertexts[i] = std::move(ct);
    for (std::size_t c = 0; c < pp.params.u; ++c) witness[i * pp.params.u + c] = er.r[c];
    witness[e_off + i] = er.e;
    witness[m_off + i] = static_cast<std::int64_t>(share_i);
  }

  ParityMatrix h = share_parity(n_prime, t, p);
  LinearStatement st = build_share_statement(pp.a_mat, pks, out.transcript.ciphertexts, h,
                                             pp.params);
  out.transcript.proof1 = prove(pp.crs1, st, witness, rng);
  return out;
}

bool pvss_sharever(const PvssPublicParams& pp, const std::vector<ZqVector>& pks,
                   std::size_t n_prime, std::size_t t, const SharingTranscript& tr) {
  try {
    if (pks.size() != n_prime || tr.ciphertexts.size() != n_prime) return false;
    ParityMatrix h = share_parity(n_prime, t, Modulus(pp.params.p));
    LinearStatement st = build_share_statement(pp.a_mat, pks, tr.ciphertexts, h, pp.params);
    return verify(pp.crs1, st, tr.proof1);
  } catch (const Error&) {
    return false;
  }
}

DecryptionShare pvss_dec(const PvssPublicParams& pp, const ZqVector& pk_b, const PkeKeyPair& keys,
                         const Ciphertext& ct, Rng& rng) {
  DecryptionWitness dw = pke_decrypt(pk_b, keys.sk_s, ct, pp.params);
  LinearStatement st = build_dec_statement(pp.a_mat, pk_b, ct, dw.message, pp.params);
  ZVector witness;
  witness.reserve(pp.params.v + pp.params.u + 1);
  witness.insert(witness.end(), keys.sk_s.begin(), keys.sk_s.end());
  witness.insert(witness.end(), keys.noise_e.begin(), keys.noise_e.end());
  witness.push_back(dw.f);
  DecryptionShare ds;
  ds.share = dw.message;
  ds.proof2 = prove(pp.crs2, st, witness, rng);
  return ds;
}

bool pvss_decver(const PvssPublicParams& pp, const ZqVector& pk_b, const Ciphertext& ct,
                 const DecryptionShare& ds) {
  try {
    LinearStatement st = build_dec_statement(pp.a_mat, pk_b, ct, ds.share, pp.params);
    return verify(pp.crs2, st, ds.proof2);
  } catch (const Error&) {
    return false;
  }
}

std::optional<std::uint64_t> pvss_combine(const PvssPublicParams& pp,
                                          const std::set<std::uint64_t>& s_set,
                                          const std::map<std::uint64_t, std::uint64_t>& shares) {
  if (s_set.size() <= pp.params.t) return std::nullopt;
  std::set<std::uint64_t> chosen;
  for (std::uint64_t i : s_set) {
    chosen.insert(i);
    if (chosen.size() == pp.params.t + 1) break;
  }
  return sss_combine(chosen, shares, Modulus(pp.params.p));
}

}  // namespace lbcn
