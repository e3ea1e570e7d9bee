#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "lbcn/params.hpp"
#include "lbcn/pke.hpp"
#include "lbcn/proof.hpp"
#include "lbcn/rng.hpp"

namespace lbcn {

struct PvssPublicParams {
  SystemParams params;
  Seed setup_seed{};
  ZqMatrix a_mat;
  ProofCrs crs0, crs1, crs2;
  NoiseBudgetReport budget;
};

struct KeyAnnouncement {
  ZqVector pk_b;
  Proof proof0;
};

struct SharingTranscript {
  std::uint64_t dealer = 0;
  std::vector<Ciphertext> ciphertexts;
  Proof proof1;
};

struct DecryptionShare {
  std::uint64_t holder = 0;
  std::uint64_t share = 0;  // in Z_p
  Proof proof2;
};

/// A plus the three relation CRSs, all deterministic from the setup seed.
PvssPublicParams pvss_setup(const SystemParams& params, const Seed& seed,
                            bool allow_invalid = false);

std::pair<KeyAnnouncement, PkeKeyPair> pvss_keygen(const PvssPublicParams& pp, Rng& rng);

bool pvss_keyver(const PvssPublicParams& pp, const KeyAnnouncement& ka);

struct PvssShareResult {
  SharingTranscript transcript;
  std::vector<std::uint64_t> shares;  // dealer-side view, shares[i] for participant i+1
};

PvssShareResult pvss_share(const PvssPublicParams& pp, const std::vector<ZqVector>& pks,
                           std::uint64_t s, std::size_t n_prime, std::size_t t, Rng& rng);

bool pvss_sharever(const PvssPublicParams& pp, const std::vector<ZqVector>& pks,
                   std::size_t n_prime, std::size_t t, const SharingTranscript& tr);

DecryptionShare pvss_dec(const PvssPublicParams& pp, const ZqVector& pk_b, const PkeKeyPair& keys,
                         const Ciphertext& ct, Rng& rng);

bool pvss_decver(const PvssPublicParams& pp, const ZqVector& pk_b, const Ciphertext& ct,
                 const DecryptionShare& ds);

/// Bottom if |S| <= t; otherwise Lagrange over the lowest t+1 indices of S
/// (all qualifying subsets of a verified transcript agree).
std::optional<std::uint64_t> pvss_combine(const PvssPublicParams& pp,
                                          const std::set<std::uint64_t>& s_set,
                                          const std::map<std::uint64_t, std::uint64_t>& shares);

}  // namespace lbcn
