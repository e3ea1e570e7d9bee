#include "lbcn/proof.hpp"

#include <cmath>

#include "lbcn/error.hpp"
#include "lbcn/gaussian.hpp"

namespace lbcn {

namespace {

constexpr int kRejectionRetryCap = 1000;
// Lyubashevsky rejection constant for sigma = 11 * ||shift||.
const double kRejectionM = std::exp(12.0 / 11.0 + 1.0 / (2.0 * 11.0 * 11.0));

ZqVector reduce_vector(const ZVector& x, std::uint64_t q) {
  ZqVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = reduce_signed(x[i], q);
  return out;
}

bool derive_challenge_bit(const ProofCrs& crs, const Digest32& stmt_digest, std::uint32_t index,
                          const ZqVector& commitment, std::size_t q_width) {
  ByteWriter w(q_width);
  w.zq_vector(commitment);
  Sha256 h;
  h.update("lbcn.chal");
  h.update(crs.crs_bytes.data(), crs.crs_bytes.size());
  h.update(stmt_digest.data(), stmt_digest.size());
  h.update_u64(index);
  h.update(w.data().data(), w.data().size());
  return (h.finish()[0] & 1) != 0;
}

}  // namespace

double LinearStatement::response_bound() const {
  return sigma_mask() * std::sqrt(2.0 * static_cast<double>(m_mat.cols));
}

ProofCrs proof_setup(const std::string& relation_id, const SystemParams& params, const Rng& rng) {
  Rng child = rng.derive("lbcn.crs", {params.q, params.u, params.v});
  child = child.derive(relation_id);
  ProofCrs crs;
  crs.relation_id = relation_id;
  crs.crs_bytes.resize(32);
  child.fill(crs.crs_bytes.data(), crs.crs_bytes.size());
  return crs;
}

LinearStatement build_key_statement(const ZqMatrix& a, const ZqVector& pk_b,
                                    const SystemParams& params) {
  if (a.rows != params.v || a.cols != params.u || pk_b.size() != params.u) {
    throw Error(ErrorCode::dimension_mismatch, "key statement dims");
  }
  LinearStatement st;
  st.q = params.q;
  st.rep = params.rep;
  st.domain_tag = Bytes{'k', 'e', 'y'};
  // M = [A^T | I_u], witness (s; e)
  st.m_mat = ZqMatrix(params.u, params.v + params.u);
  for (std::size_t r = 0; r < params.u; ++r) {
    for (std::size_t c = 0; c < params.v; ++c) st.m_mat.at(r, c) = a.at(c, r);
    st.m_mat.at(r, params.v + r) = 1;
  }
  st.target = pk_b;
  st.bound_zk = std::sqrt(static_cast<double>(params.v + params.u)) * params.alpha_q() *
                std::sqrt(2.0);
  st.slack = st.response_bound() / st.bound_zk;
  return st;
}

LinearStatement build_share_statement(const ZqMatrix& a, const std::vector<ZqVector>& pks,
                                      const std::vector<Ciphertext>& cts, const ParityMatrix& h,
                                      const SystemParams& params) {
  const std::size_t np = pks.size();
  if (cts.size() != np || h.n != np) {
    throw Error(ErrorCode::dimension_mismatch, "share statement: n' mismatch");
  }
  if (a.rows != params.v || a.cols != params.u) {
    throw Error(ErrorCode::dimension_mismatch, "share statement: A dims");
  }
  const std::size_t u = params.u, v = params.v;
  const std::size_t wdim = np * (u + 2);
  const std::size_t rows = np * v + np + h.cols;
  const std::size_t e_off = np * u;
  const std::size_t m_off = np * u + np;

  LinearStatement st;
  st.q = params.q;
  st.rep = params.rep;
  st.domain_tag = Bytes{'s', 'h', 'a', 'r', 'e'};
  st.domain_tag.push_back(static_cast<std::uint8_t>(h.cols));  // binds t via H dims
  st.m_mat = ZqMatrix(rows, wdim);
  st.target.assign(rows, 0);

  for (std::size_t i = 0; i < np; ++i) {
    if (pks[i].size() != u || cts[i].c1.size() != v) {
      throw Error(ErrorCode::dimension_mismatch, "share statement: pk/ct dims");
    }
    // c1_i = A r_i
    for (std::size_t r = 0; r < v; ++r) {
      std::size_t row = i * v + r;
      for (std::size_t c = 0; c < u; ++c) st.m_mat.at(row, i * u + c) = a.at(r, c);
      st.target[row] = cts[i].c1[r];
    }
    // c2_i = <b_i, r_i> + e_i + p m_i
    std::size_t row = np * v + i;
    for (std::size_t c = 0; c < u; ++c) st.m_mat.at(row, i * u + c) = pks[i][c];
    st.m_mat.at(row, e_off + i) = 1;
    st.m_mat.at(row, m_off + i) = params.p % params.q;
    st.target[row] = cts[i].c2;
  }
  // parity rows, lifted from mod p to mod q = p^2 by the factor p
  for (std::size_t k = 0; k < h.cols; ++k) {
    std::size_t row = np * v + np + k;
    for (std::size_t i = 0; i < np; ++i) {
      st.m_mat.at(row, m_off + i) = mul_mod(params.p, h.at(i, k), params.q);
    }
  }

  const double b_r = std::sqrt(static_cast<double>(np * u)) * 12.0 * params.r_enc;
  const double b_e = std::sqrt(static_cast<double>(np)) * 12.0 * params.beta_q();
  const double b_m = std::sqrt(static_cast<double>(np)) * static_cast<double>(params.p - 1);
  st.bound_zk = std::sqrt(2.0) * std::sqrt(b_r * b_r + b_e * b_e + b_m * b_m);
  st.slack = st.response_bound() / st.bound_zk;
  return st;
}

LinearStatement build_dec_statement(const ZqMatrix& a, const ZqVector& pk_b, const Ciphertext& ct,
                                    std::uint64_t claimed_share, const SystemParams& params) {
  if (claimed_share >= params.p) {
    throw Error(ErrorCode::share_out_of_range, "claimed share not in Z_p");
  }
  if (a.rows != params.v || a.cols != params.u || pk_b.size() != params.u ||
      ct.c1.size() != params.v) {
    throw Error(ErrorCode::dimension_mismatch, "dec statement dims");
  }
  const std::size_t u = params.u, v = params.v;
  LinearStatement st;
  st.q = params.q;
  st.rep = params.rep;
  st.domain_tag = Bytes{'d', 'e', 'c'};
  st.m_mat = ZqMatrix(u + 1, v + u + 1);
  st.target.assign(u + 1, 0);
  for (std::size_t r = 0; r < u; ++r) {
    for (std::size_t c = 0; c < v; ++c) st.m_mat.at(r, c) = a.at(c, r);
    st.m_mat.at(r, v + r) = 1;
    st.target[r] = pk_b[r];
  }
  for (std::size_t c = 0; c < v; ++c) st.m_mat.at(u, c) = ct.c1[c];
  st.m_mat.at(u, v + u) = 1;
  st.target[u] = sub_mod(ct.c2, mul_mod(params.p, claimed_share, params.q), params.q);

  const double key_part = std::sqrt(static_cast<double>(u + v)) * params.alpha_q();
  const double f_part = static_cast<double>(params.p - 1) / 2.0;
  st.bound_zk = std::sqrt(2.0) * std::sqrt(key_part * key_part + f_part * f_part);
  st.slack = st.response_bound() / st.bound_zk;
  return st;
}

Digest32 statement_digest(const ProofCrs& crs, const LinearStatement& stmt) {
  ByteWriter w(int_width(stmt.q));
  w.u64(stmt.q);
  w.u64(stmt.m_mat.rows);
  w.u64(stmt.m_mat.cols);
  for (std::uint64_t e : stmt.m_mat.a) w.zq(e);
  w.zq_vector(stmt.target);
  w.f64(stmt.bound_zk);
  w.f64(stmt.slack);
  w.u64(stmt.rep);
  w.bytes(stmt.domain_tag);
  Sha256 h;
  h.update("lbcn.stmt");
  h.update(crs.crs_bytes.data(), crs.crs_bytes.size());
  h.update(w.data().data(), w.data().size());
  return h.finish();
}

Proof prove(const ProofCrs& crs, const LinearStatement& stmt, const ZVector& witness, Rng& rng) {
  const Modulus q(stmt.q);
  if (witness.size() != stmt.m_mat.cols) {
    throw Error(ErrorCode::witness_invalid, "witness length mismatch");
  }
  if (norm_l2(witness) > stmt.bound_zk) {
    throw Error(ErrorCode::witness_invalid, "witness norm above bound");
  }
  ZqVector w_red = reduce_vector(witness, q.value);
  if (mat_vec_mul(stmt.m_mat, w_red, q) != stmt.target) {
    throw Error(ErrorCode::witness_invalid, "witness does not satisfy relation");
  }

  const Digest32 sd = statement_digest(crs, stmt);
  const std::size_t q_width = int_width(stmt.q);
  const double sigma = stmt.sigma_mask();
  const GaussianSampler& mask_sampler = cached_sampler(sigma, default_tail_cut(sigma));
  const double resp_bound_sq = stmt.response_bound() * stmt.response_bound();
  const std::size_t wdim = stmt.m_mat.cols;

  Proof proof;
  proof.rep = stmt.rep;
  proof.commitments.resize(stmt.rep);
  proof.responses.resize(stmt.rep);
  proof.challenges.assign((stmt.rep + 7) / 8, 0);

  for (std::uint32_t j = 0; j < stmt.rep; ++j) {
    bool done = false;
    for (int attempt = 0; attempt < kRejectionRetryCap && !done; ++attempt) {
      ZVector y(wdim);
      for (auto& e : y) e = mask_sampler.draw(rng);
      ZqVector commit = mat_vec_mul(stmt.m_mat, y, q);
      bool c = derive_challenge_bit(crs, sd, j, commit, q_width);
      ZVector z = y;
      if (c) {
        for (std::size_t i = 0; i < z.size(); ++i) z[i] += witness[i];
      }
      // Accept with probability rho(z) / (M * rho(y)) so accepted responses
      // are distributed independently of the witness shift.
      const long double nz = static_cast<long double>(norm_sq(z));
      const long double ny = static_cast<long double>(norm_sq(y));
      const long double log_ratio =
          -static_cast<long double>(M_PI) * (nz - ny) / (static_cast<long double>(sigma) * sigma);
      const long double uu =
          (static_cast<long double>(rng.next_u64() >> 11) + 0.5L) / 9007199254740992.0L;
      if (std::log(uu) + std::log(static_cast<long double>(kRejectionM)) >= log_ratio) continue;
      if (static_cast<double>(nz) > resp_bound_sq) continue;
      proof.commitments[j] = std::move(commit);
      proof.responses[j] = std::move(z);
      if (c) proof.challenges[j >> 3] |= static_cast<std::uint8_t>(1u << (j & 7));
      done = true;
    }
    if (!done) throw Error(ErrorCode::retry_exhausted, "rejection sampling cap exceeded");
  }
  return proof;
}

bool verify(const ProofCrs& crs, const LinearStatement& stmt, const Proof& proof) {
  try {
    const Modulus q(stmt.q);
    if (proof.rep != stmt.rep) return false;
    if (proof.commitments.size() != stmt.rep || proof.responses.size() != stmt.rep) return false;
    if (proof.challenges.size() != (stmt.rep + 7u) / 8u) return false;
    // trailing pad bits must be zero (canonical form)
    for (std::uint32_t j = stmt.rep; j < 8 * proof.challenges.size(); ++j) {
      if ((proof.challenges[j >> 3] >> (j & 7)) & 1) return false;
    }
    const Digest32 sd = statement_digest(crs, stmt);
    const std::size_t q_width = int_width(stmt.q);
    const double rb = stmt.response_bound();
    const auto bound_sq = static_cast<unsigned __int128>(rb * rb);

    for (std::uint32_t j = 0; j < stmt.rep; ++j) {
      const ZqVector& a_j = proof.commitments[j];
      const ZVector& z_j = proof.responses[j];
      if (a_j.size() != stmt.m_mat.rows || z_j.size() != stmt.m_mat.cols) return false;
      for (std::uint64_t e : a_j) {
        if (e >= stmt.q) return false;
      }
      bool c = derive_challenge_bit(crs, sd, j, a_j, q_width);
      if (c != proof.challenge_bit(j)) return false;
      if (norm_sq(z_j) > bound_sq) return false;
      ZqVector lhs = mat_vec_mul(stmt.m_mat, z_j, q);
      for (std::size_t r = 0; r < lhs.size(); ++r) {
        std::uint64_t rhs = a_j[r];
        if (c) rhs = add_mod(rhs, stmt.target[r], stmt.q);
        if (lhs[r] != rhs) return false;
      }
    }
    return true;
  } catch (const Error&) {
    return false;
  } catch (const DecodeError&) {
    return false;
  }
}

}  // namespace lbcn
