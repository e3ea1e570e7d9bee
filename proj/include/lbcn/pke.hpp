#pragma once

#include <cstdint>

#include "lbcn/params.hpp"
#include "lbcn/rng.hpp"
#include "lbcn/zq.hpp"

namespace lbcn {

struct PkeKeyPair {
  ZqVector pk_b;   // length u
  ZVector sk_s;    // length v, ||s|| < sqrt(v)*alpha*q
  ZVector noise_e;  // length u, ||e|| < sqrt(u)*alpha*q; kept as proof witness
};

struct Ciphertext {
  ZqVector c1;       // length v
  std::uint64_t c2 = 0;
};

struct DecryptionWitness {
  std::uint64_t message = 0;  // in Z_p
  std::int64_t f = 0;         // |f| <= (p-1)/2
};

struct EncRandomness {
  ZVector r;           // length u
  std::int64_t e = 0;  // noise of width beta*q
};

/// Uniform public matrix A in Z_q^{v x u}.
ZqMatrix pke_setup(const SystemParams& params, Rng& rng);

/// Gaussian key pair with norm-bound retries (capped, then retry-exhausted).
PkeKeyPair pke_keygen(const ZqMatrix& a, const SystemParams& params, Rng& rng);

/// c1 = A r, c2 = <b, r> + e + p*m (mod q). Randomness is returned so the
/// sharing proof can use it as witness.
std::pair<Ciphertext, EncRandomness> pke_encrypt(const ZqMatrix& a, const ZqVector& pk_b,
                                                 std::uint64_t m, const SystemParams& params,
                                                 Rng& rng);

/// Deterministic encryption body (test hook for forced randomness).
Ciphertext pke_encrypt_with(const ZqMatrix& a, const ZqVector& pk_b, std::uint64_t m,
                            const EncRandomness& er, const SystemParams& params);

/// Total: wrong keys simply yield garbage. The noise witness f accompanies
/// the message for the decryption proof.
DecryptionWitness pke_decrypt(const ZqVector& pk_b, const ZVector& sk_s, const Ciphertext& ct,
                              const SystemParams& params);

}  // namespace lbcn
