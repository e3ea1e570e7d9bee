#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbcn/encoding.hpp"
#include "lbcn/params.hpp"
#include "lbcn/pke.hpp"
#include "lbcn/rng.hpp"
#include "lbcn/shamir.hpp"
#include "lbcn/zq.hpp"

namespace lbcn {

/// A linear relation over Z_q: the prover knows integer w with
/// M w = target (mod q) and ||w|| <= bound_zk. Verification only guarantees
/// the relaxed bound slack * bound_zk (the gap language).
struct LinearStatement {
  ZqMatrix m_mat;
  ZqVector target;
  std::uint64_t q = 0;
  double bound_zk = 0.0;
  double slack = 1.0;
  std::uint32_t rep = 0;
  Bytes domain_tag;

  double sigma_mask() const { return 11.0 * bound_zk; }
  /// L_sound norm bound on responses: sigma_mask * sqrt(2 * witness_dim).
  double response_bound() const;
};

struct ProofCrs {
  Bytes crs_bytes;  // 32 bytes, deterministic from (seed, relation id)
  std::string relation_id;
};

/// rep-fold commit/challenge/response transcript with binary challenges.
/// Challenge bit j re-derives from (crs, statement digest, j, commitment j).
struct Proof {
  std::uint32_t rep = 0;
  std::vector<ZqVector> commitments;
  Bytes challenges;  // ceil(rep/8) bytes, bit j = (challenges[j/8] >> (j%8)) & 1
  std::vector<ZVector> responses;

  bool challenge_bit(std::uint32_t j) const {
    return ((challenges[j >> 3] >> (j & 7)) & 1) != 0;
  }
};

ProofCrs proof_setup(const std::string& relation_id, const SystemParams& params, const Rng& rng);

LinearStatement build_key_statement(const ZqMatrix& a, const ZqVector& pk_b,
                                    const SystemParams& params);

/// Statement for one dealer's sharing: per participant i the two encryption
/// row blocks c1_i = A r_i and c2_i = <b_i, r_i> + e_i + p m_i, plus the
/// parity rows sum_i m_i * (p H[i][k]) = 0 that lift the mod-p share check
/// into Z_q. Witness layout: (r_1..r_n' | e_1..e_n' | m_1..m_n').
LinearStatement build_share_statement(const ZqMatrix& a, const std::vector<ZqVector>& pks,
                                      const std::vector<Ciphertext>& cts, const ParityMatrix& h,
                                      const SystemParams& params);

/// Statement for one holder's decryption of ct against claimed_share:
/// [A^T | I | 0](s;e;f) = pk_b and [c1^T | 0 | 1](s;e;f) = c2 - p*claimed.
LinearStatement build_dec_statement(const ZqMatrix& a, const ZqVector& pk_b, const Ciphertext& ct,
                                    std::uint64_t claimed_share, const SystemParams& params);

Digest32 statement_digest(const ProofCrs& crs, const LinearStatement& stmt);

Proof prove(const ProofCrs& crs, const LinearStatement& stmt, const ZVector& witness, Rng& rng);

bool verify(const ProofCrs& crs, const LinearStatement& stmt, const Proof& proof);

}  // namespace lbcn
