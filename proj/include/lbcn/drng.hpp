#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lbcn/pvss.hpp"
#include "lbcn/rng.hpp"

namespace lbcn {

/// (dealer, holder) pair in QUAL numbering; the key pk_ij under which dealer
/// i's share for holder j is encrypted. Holder j generated it and keeps sk.
struct KeyId {
  std::uint64_t dealer = 0;
  std::uint64_t holder = 0;
  auto operator<=>(const KeyId&) const = default;
};

struct PublicDirectory {
  std::vector<std::uint64_t> qual;                  // original ids, ascending
  std::map<std::uint64_t, std::uint64_t> renumbering;  // original -> qual id (1..n')
  std::map<KeyId, KeyAnnouncement> announcements;   // keyed by qual ids

  std::size_t size() const { return qual.size(); }
  /// pk_i = (pk_ij)_j for dealer i, ordered by holder 1..n'.
  std::vector<ZqVector> dealer_pk_tuple(std::uint64_t dealer_qual) const;
};

enum class Phase : std::uint8_t { idle, shared, revealed, done };

struct ParticipantState {
  std::uint64_t id_original = 0;
  std::optional<std::uint64_t> id_qual;
  std::map<std::uint64_t, PkeKeyPair> my_keys;  // dealer qual id -> held key pair
  std::vector<std::uint64_t> qual;              // original ids
  std::vector<std::uint64_t> qual_prime;        // per-epoch, qual ids
  Phase phase = Phase::idle;
  std::uint64_t epoch = 0;
  std::uint64_t current_secret = 0;
};

/// One epoch's broadcast record. The public proof pi of Figure-6 style
/// verification is (qual_prime, sharings, reveals) together with the
/// directory's key announcements; share_sets, secrets and omega are the
/// deterministic finalize outputs that every honest node recomputes
/// identically and a verifier re-derives.
struct EpochRecord {
  std::uint64_t epoch = 0;
  std::vector<std::uint64_t> qual_prime;
  std::map<std::uint64_t, SharingTranscript> sharings;
  std::map<KeyId, DecryptionShare> reveals;
  std::map<std::uint64_t, std::vector<std::uint64_t>> share_sets;
  std::map<std::uint64_t, std::uint64_t> secrets;
  std::optional<std::uint64_t> omega;
};

PvssPublicParams drng_setup(const SystemParams& params, const Seed& seed,
                            bool allow_invalid = false);

/// One participant's Init action: a key announcement (and held key pair) for
/// every dealer. Streams derive from (master seed, holder id, dealer id).
struct InitKeys {
  std::map<std::uint64_t, KeyAnnouncement> announcements;  // dealer original id
  std::map<std::uint64_t, PkeKeyPair> keys;
};
InitKeys init_generate_keys(const PvssPublicParams& pp,
                            const std::vector<std::uint64_t>& dealer_orig_ids,
                            std::uint64_t self_orig, const Rng& master);

/// Cross-verify all posted announcements, fix QUAL, re-enumerate it
/// order-preservingly and assemble the directory.
PublicDirectory init_assemble(
    const PvssPublicParams& pp,
    const std::map<std::uint64_t, std::map<std::uint64_t, KeyAnnouncement>>& posted);

ParticipantState build_participant_state(const PublicDirectory& dir, std::uint64_t orig_id,
                                         const std::map<std::uint64_t, PkeKeyPair>& keys_by_orig);

struct InitResult {
  PublicDirectory directory;
  std::map<std::uint64_t, ParticipantState> states;  // by original id
};
/// Honest one-shot Init for n participants (ids 1..n).
InitResult drng_init(const PvssPublicParams& pp, std::size_t n, const Rng& master);

void drng_begin_epoch(ParticipantState& state, std::uint64_t epoch);

SharingTranscript drng_randgen_round1(ParticipantState& state, const PvssPublicParams& pp,
                                      const PublicDirectory& dir, const Rng& master);

/// The per-epoch set of dealers whose sharing transcripts verify.
std::vector<std::uint64_t> compute_qual_prime(
    const PvssPublicParams& pp, const PublicDirectory& dir,
    const std::map<std::uint64_t, SharingTranscript>& received);

/// Reveals keyed by dealer. `precomputed_qual` lets a lockstep scheduler skip
/// re-verifying transcripts it already verified (the outcome is identical for
/// every node).
std::map<std::uint64_t, DecryptionShare> drng_randgen_round2(
    ParticipantState& state, const PvssPublicParams& pp, const PublicDirectory& dir,
    const std::map<std::uint64_t, SharingTranscript>& received, const Rng& master,
    const std::vector<std::uint64_t>* precomputed_qual = nullptr);

/// Pure function of the broadcast record; every honest node computes the
/// identical EpochRecord. Bottom omega is a value, not an error.
EpochRecord drng_finalize(const PvssPublicParams& pp, const PublicDirectory& dir,
                          std::uint64_t epoch,
                          const std::map<std::uint64_t, SharingTranscript>& sharings,
                          const std::map<KeyId, DecryptionShare>& reveals);

/// Full external verification: key proofs for all of QUAL, sharing proofs
/// for QUAL', decryption proofs for every claimed reveal, reconstruction and
/// the output sum, each checked against the record's own claims.
bool drng_ver(const PvssPublicParams& pp, const PublicDirectory& dir, const EpochRecord& rec);

struct JoinOffer {
  std::uint64_t joiner_orig = 0;
  std::map<std::uint64_t, KeyAnnouncement> joiner_announcements;  // dealer orig id
  std::map<std::uint64_t, PkeKeyPair> joiner_keys;
  std::map<std::uint64_t, KeyAnnouncement> holder_announcements;  // holder orig id
  std::map<std::uint64_t, PkeKeyPair> holder_keys;
};

JoinOffer drng_join_generate(const PvssPublicParams& pp, const PublicDirectory& dir,
                             std::uint64_t joiner_orig, const Rng& master);

/// Extended directory, or nullopt (directory unchanged) if any offered
/// announcement fails key verification. Existing announcements are carried
/// over untouched.
std::optional<PublicDirectory> drng_join_apply(const PvssPublicParams& pp,
                                               const PublicDirectory& dir, const JoinOffer& offer);

void drng_join_commit_states(const PublicDirectory& new_dir, const JoinOffer& offer,
                             std::map<std::uint64_t, ParticipantState>& states);

}  // namespace lbcn
