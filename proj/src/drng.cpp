#include "lbcn/drng.hpp"

#include <algorithm>

#include "lbcn/error.hpp"

namespace lbcn {

std::vector<ZqVector> PublicDirectory::dealer_pk_tuple(std::uint64_t dealer_qual) const {
  std::vector<ZqVector> pks;
  pks.reserve(qual.size());
  for (std::uint64_t j = 1; j <= qual.size(); ++j) {
    pks.push_back(announcements.at(KeyId{dealer_qual, j}).pk_b);
  }
  return pks;
}

PvssPublicParams drng_setup(const SystemParams& params, const Seed& seed, bool allow_invalid) {
  return pvss_setup(params, seed, allow_invalid);
}

InitKeys init_generate_keys(const PvssPublicParams& pp,
                            const std::vector<std::uint64_t>& dealer_orig_ids,
                            std::uint64_t self_orig, const Rng& master) {
  InitKeys out;
  for (std::uint64_t dealer : dealer_orig_ids) {
    Rng rng = master.derive("init.key", {self_orig, dealer});
    auto [ka, kp] = pvss_keygen(pp, rng);
    out.announcements.emplace(dealer, std::move(ka));
    out.keys.emplace(dealer, std::move(kp));
  }
  return out;
}

PublicDirectory init_assemble(
    const PvssPublicParams& pp,
    const std::map<std::uint64_t, std::map<std::uint64_t, KeyAnnouncement>>& posted) {
  // A participant qualifies iff it posted a verifying announcement for every
  // dealer in the roster.
  std::vector<std::uint64_t> roster;
  for (const auto& [holder, _] : posted) roster.push_back(holder);

  PublicDirectory dir;
  for (const auto& [holder, anns] : posted) {
    bool ok = true;
    for (std::uint64_t dealer : roster) {
      auto it = anns.find(dealer);
      if (it == anns.end() || !pvss_keyver(pp, it->second)) {
        ok = false;
        break;
      }
    }
    if (ok) dir.qual.push_back(holder);
  }
  std::sort(dir.qual.begin(), dir.qual.end());
  if (dir.qual.size() < pp.params.t + 1) {
    throw Error(ErrorCode::qual_too_small, "fewer than t+1 participants qualified");
  }
  std::uint64_t next = 1;
  for (std::uint64_t orig : dir.qual) dir.renumbering[orig] = next++;
  for (std::uint64_t dealer_orig : dir.qual) {
    for (std::uint64_t holder_orig : dir.qual) {
      dir.announcements[KeyId{dir.renumbering[dealer_orig], dir.renumbering[holder_orig]}] =
          posted.at(holder_orig).at(dealer_orig);
    }
  }
  return dir;
}

ParticipantState build_participant_state(const PublicDirectory& dir, std::uint64_t orig_id,
                                         const std::map<std::uint64_t, PkeKeyPair>& keys_by_orig) {
  ParticipantState st;
  st.id_original = orig_id;
  st.qual = dir.qual;
  auto it = dir.renumbering.find(orig_id);
  if (it == dir.renumbering.end()) return st;  // not qualified
  st.id_qual = it->second;
  for (std::uint64_t dealer_orig : dir.qual) {
    auto kit = keys_by_orig.find(dealer_orig);
    if (kit != keys_by_orig.end()) {
      st.my_keys[dir.renumbering.at(dealer_orig)] = kit->second;
    }
  }
  return st;
}

InitResult drng_init(const PvssPublicParams& pp, std::size_t n, const Rng& master) {
  std::vector<std::uint64_t> roster(n);
  for (std::size_t i = 0; i < n; ++i) roster[i] = i + 1;
  std::map<std::uint64_t, std::map<std::uint64_t, KeyAnnouncement>> posted;
  std::map<std::uint64_t, std::map<std::uint64_t, PkeKeyPair>> keys;
  for (std::uint64_t id : roster) {
    InitKeys ik = init_generate_keys(pp, roster, id, master);
    posted[id] = std::move(ik.announcements);
    keys[id] = std::move(ik.keys);
  }
  InitResult res;
  res.directory = init_assemble(pp, posted);
  for (std::uint64_t id : roster) {
    res.states[id] = build_participant_state(res.directory, id, keys[id]);
  }
  return res;
}

void drng_begin_epoch(ParticipantState& state, std::uint64_t epoch) {
  state.epoch = epoch;
  state.phase = Phase::idle;
  state.qual_prime.clear();
  state.current_secret = 0;
}

SharingTranscript drng_randgen_round1(ParticipantState& state, const PvssPublicParams& pp,
                                      const PublicDirectory& dir, const Rng& master) {
  if (state.phase != Phase::idle) {
    throw Error(ErrorCode::wrong_phase, "round1 requires phase idle");
  }
  if (!state.id_qual) {
    throw Error(ErrorCode::wrong_phase, "round1 requires QUAL membership");
  }
  Rng secret_rng = master.derive("epoch.secret", {state.id_original, state.epoch});
  std::uint64_t s = secret_rng.uniform_below(pp.params.p);
  Rng share_rng = master.derive("epoch.share", {state.id_original, state.epoch});
  PvssShareResult res = pvss_share(pp, dir.dealer_pk_tuple(*state.id_qual), s, dir.size(),
                                   pp.params.t, share_rng);
  res.transcript.dealer = *state.id_qual;
  state.current_secret = s;
  state.phase = Phase::shared;
  return std::move(res.transcript);
}

std::vector<std::uint64_t> compute_qual_prime(
    const PvssPublicParams& pp, const PublicDirectory& dir,
    const std::map<std::uint64_t, SharingTranscript>& received) {
  std::vector<std::uint64_t> qp;
  for (const auto& [dealer, tr] : received) {
    if (dealer < 1 || dealer > dir.size() || tr.dealer != dealer) continue;
    if (pvss_sharever(pp, dir.dealer_pk_tuple(dealer), dir.size(), pp.params.t, tr)) {
      qp.push_back(dealer);
    }
  }
  return qp;
}

std::map<std::uint64_t, DecryptionShare> drng_randgen_round2(
    ParticipantState& state, const PvssPublicParams& pp, const PublicDirectory& dir,
    const std::map<std::uint64_t, SharingTranscript>& received, const Rng& master,
    const std::vector<std::uint64_t>* precomputed_qual) {
  if (state.phase != Phase::shared) {
    throw Error(ErrorCode::wrong_phase, "round2 requires phase shared");
  }
  state.qual_prime = precomputed_qual ? *precomputed_qual : compute_qual_prime(pp, dir, received);
  state.phase = Phase::revealed;

  std::map<std::uint64_t, DecryptionShare> reveals;
  const std::uint64_t self = *state.id_qual;
  if (std::find(state.qual_prime.begin(), state.qual_prime.end(), self) ==
      state.qual_prime.end()) {
    return reveals;  // only QUAL' members reveal
  }
  for (std::uint64_t dealer : state.qual_prime) {
    const SharingTranscript& tr = received.at(dealer);
    const Ciphertext& ct = tr.ciphertexts.at(self - 1);
    Rng rng = master.derive("epoch.dec", {state.id_original, state.epoch, dealer});
    DecryptionShare ds = pvss_dec(pp, dir.announcements.at(KeyId{dealer, self}).pk_b,
                                  state.my_keys.at(dealer), ct, rng);
    ds.holder = self;
    reveals.emplace(dealer, std::move(ds));
  }
  return reveals;
}

EpochRecord drng_finalize(const PvssPublicParams& pp, const PublicDirectory& dir,
                          std::uint64_t epoch,
                          const std::map<std::uint64_t, SharingTranscript>& sharings,
                          const std::map<KeyId, DecryptionShare>& reveals) {
  EpochRecord rec;
  rec.epoch = epoch;
  rec.sharings = sharings;
  rec.reveals = reveals;
  for (const auto& [dealer, tr] : sharings) {
    if (dealer < 1 || dealer > dir.size() || tr.dealer != dealer) continue;
    if (pvss_sharever(pp, dir.dealer_pk_tuple(dealer), dir.size(), pp.params.t, tr)) {
      rec.qual_prime.push_back(dealer);
    }
  }
  std::sort(rec.qual_prime.begin(), rec.qual_prime.end());

  bool all_reconstructed = true;
  for (std::uint64_t dealer : rec.qual_prime) {
    const SharingTranscript& tr = sharings.at(dealer);
    std::vector<std::uint64_t> s_i;
    std::map<std::uint64_t, std::uint64_t> dealer_shares;
    for (std::uint64_t holder : rec.qual_prime) {
      auto it = reveals.find(KeyId{dealer, holder});
      if (it == reveals.end()) continue;
      const DecryptionShare& ds = it->second;
      if (ds.holder != holder) continue;
      const Ciphertext& ct = tr.ciphertexts.at(holder - 1);
      if (pvss_decver(pp, dir.announcements.at(KeyId{dealer, holder}).pk_b, ct, ds)) {
        s_i.push_back(holder);
        dealer_shares[holder] = ds.share;
      }
    }
    rec.share_sets[dealer] = s_i;
    auto combined = pvss_combine(pp, std::set<std::uint64_t>(s_i.begin(), s_i.end()),
                                 dealer_shares);
    if (combined) {
      rec.secrets[dealer] = *combined;
    } else {
      all_reconstructed = false;
    }
  }
  if (all_reconstructed) {
    std::uint64_t omega = 0;
    for (std::uint64_t dealer : rec.qual_prime) {
      omega = add_mod(omega, rec.secrets.at(dealer), pp.params.p);
    }
    rec.omega = omega;
  }
  return rec;
}

namespace {

bool directory_well_formed(const PvssPublicParams& pp, const PublicDirectory& dir) {
  const std::size_t np = dir.qual.size();
  if (np == 0 || dir.renumbering.size() != np) return false;
  std::uint64_t expect = 1;
  std::uint64_t prev_orig = 0;
  for (std::uint64_t orig : dir.qual) {
    if (orig <= prev_orig) return false;  // ascending original ids
    auto it = dir.renumbering.find(orig);
    if (it == dir.renumbering.end() || it->second != expect) return false;
    prev_orig = orig;
    ++expect;
  }
  if (dir.announcements.size() != np * np) return false;
  for (std::uint64_t i = 1; i <= np; ++i) {
    for (std::uint64_t j = 1; j <= np; ++j) {
      auto it = dir.announcements.find(KeyId{i, j});
      if (it == dir.announcements.end()) return false;
      if (!pvss_keyver(pp, it->second)) return false;
    }
  }
  return true;
}

}  // namespace

bool drng_ver(const PvssPublicParams& pp, const PublicDirectory& dir, const EpochRecord& rec) {
  try {
    if (!directory_well_formed(pp, dir)) return false;
    EpochRecord expect = drng_finalize(pp, dir, rec.epoch, rec.sharings, rec.reveals);
    if (expect.qual_prime != rec.qual_prime) return false;
    if (expect.share_sets != rec.share_sets) return false;
    if (expect.secrets != rec.secrets) return false;
    if (expect.omega != rec.omega) return false;
    return true;
  } catch (const Error&) {
    return false;
  } catch (const DecodeError&) {
    return false;
  } catch (const std::out_of_range&) {
    return false;
  }
}

JoinOffer drng_join_generate(const PvssPublicParams& pp, const PublicDirectory& dir,
                             std::uint64_t joiner_orig, const Rng& master) {
  if (!dir.qual.empty() && joiner_orig <= dir.qual.back()) {
    throw Error(ErrorCode::invalid_params, "joiner id must extend the roster");
  }
  JoinOffer offer;
  offer.joiner_orig = joiner_orig;
  std::vector<std::uint64_t> dealers = dir.qual;
  dealers.push_back(joiner_orig);
  InitKeys joiner = init_generate_keys(pp, dealers, joiner_orig, master);
  offer.joiner_announcements = std::move(joiner.announcements);
  offer.joiner_keys = std::move(joiner.keys);
  for (std::uint64_t holder_orig : dir.qual) {
    Rng rng = master.derive("join.key", {holder_orig, joiner_orig});
    auto [ka, kp] = pvss_keygen(pp, rng);
    offer.holder_announcements.emplace(holder_orig, std::move(ka));
    offer.holder_keys.emplace(holder_orig, std::move(kp));
  }
  return offer;
}

std::optional<PublicDirectory> drng_join_apply(const PvssPublicParams& pp,
                                               const PublicDirectory& dir,
                                               const JoinOffer& offer) {
  std::vector<std::uint64_t> dealers = dir.qual;
  dealers.push_back(offer.joiner_orig);
  for (std::uint64_t dealer : dealers) {
    auto it = offer.joiner_announcements.find(dealer);
    if (it == offer.joiner_announcements.end() || !pvss_keyver(pp, it->second)) {
      return std::nullopt;
    }
  }
  for (std::uint64_t holder : dir.qual) {
    auto it = offer.holder_announcements.find(holder);
    if (it == offer.holder_announcements.end() || !pvss_keyver(pp, it->second)) {
      return std::nullopt;
    }
  }
  PublicDirectory out = dir;
  out.qual.push_back(offer.joiner_orig);
  const std::uint64_t joiner_qual = out.qual.size();
  out.renumbering[offer.joiner_orig] = joiner_qual;
  for (std::uint64_t dealer_orig : dir.qual) {
    out.announcements[KeyId{out.renumbering.at(dealer_orig), joiner_qual}] =
        offer.joiner_announcements.at(dealer_orig);
  }
  out.announcements[KeyId{joiner_qual, joiner_qual}] =
      offer.joiner_announcements.at(offer.joiner_orig);
  for (std::uint64_t holder_orig : dir.qual) {
    out.announcements[KeyId{joiner_qual, out.renumbering.at(holder_orig)}] =
        offer.holder_announcements.at(holder_orig);
  }
  return out;
}

void drng_join_commit_states(const PublicDirectory& new_dir, const JoinOffer& offer,
                             std::map<std::uint64_t, ParticipantState>& states) {
  const std::uint64_t joiner_qual = new_dir.renumbering.at(offer.joiner_orig);
  for (auto& [orig, st] : states) {
    st.qual = new_dir.qual;
    auto kit = offer.holder_keys.find(orig);
    if (kit != offer.holder_keys.end() && st.id_qual) {
      st.my_keys[joiner_qual] = kit->second;
    }
  }
  ParticipantState js;
  js.id_original = offer.joiner_orig;
  js.id_qual = joiner_qual;
  js.qual = new_dir.qual;
  for (const auto& [dealer_orig, kp] : offer.joiner_keys) {
    js.my_keys[new_dir.renumbering.at(dealer_orig)] = kp;
  }
  states[offer.joiner_orig] = std::move(js);
}

}  // namespace lbcn
