#include "lbcn/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "lbcn/error.hpp"

namespace lbcn {

namespace {

enum MsgType : std::uint8_t {
  kMsgInit = 1,
  kMsgSharing = 2,
  kMsgReveals = 3,
  kMsgGossip = 4,
};

Seed derive_seed(const Rng& rng, std::string_view tag) { return rng.derive(tag).seed(); }

Bytes encode_init_payload(const SystemParams& params,
                          const std::map<std::uint64_t, KeyAnnouncement>& anns) {
  ByteWriter w(int_width(params.q));
  w.u8(kMsgInit);
  w.u64(anns.size());
  for (const auto& [dealer, ka] : anns) {
    w.u64(dealer);
    encode_key_announcement(w, ka);
  }
  return w.take();
}

std::optional<std::map<std::uint64_t, KeyAnnouncement>> decode_init_payload(
    const SystemParams& params, const Bytes& payload) {
  try {
    ByteReader r(payload, int_width(params.q), params.q);
    if (r.u8() != kMsgInit) return std::nullopt;
    std::uint64_t count = r.length(1u << 16);
    std::map<std::uint64_t, KeyAnnouncement> anns;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t dealer = r.u64();
      anns[dealer] = decode_key_announcement(r);
    }
    if (!r.done()) return std::nullopt;
    return anns;
  } catch (const DecodeError&) {
    return std::nullopt;
  }
}

Bytes encode_sharing_payload(const SystemParams& params, std::uint64_t epoch,
                             const SharingTranscript& tr) {
  ByteWriter w(int_width(params.q));
  w.u8(kMsgSharing);
  w.u64(epoch);
  encode_sharing(w, tr);
  return w.take();
}

std::optional<SharingTranscript> decode_sharing_payload(const SystemParams& params,
                                                        std::uint64_t epoch,
                                                        const Bytes& payload) {
  try {
    ByteReader r(payload, int_width(params.q), params.q);
    if (r.u8() != kMsgSharing) return std::nullopt;
    if (r.u64() != epoch) return std::nullopt;
    SharingTranscript tr = decode_sharing(r);
    if (!r.done()) return std::nullopt;
    return tr;
  } catch (const DecodeError&) {
    return std::nullopt;
  }
}

Bytes encode_reveals_payload(const SystemParams& params, std::uint64_t epoch,
                             const std::map<std::uint64_t, DecryptionShare>& reveals) {
  ByteWriter w(int_width(params.q));
  w.u8(kMsgReveals);
  w.u64(epoch);
  w.u64(reveals.size());
  for (const auto& [dealer, ds] : reveals) {
    w.u64(dealer);
    encode_reveal(w, ds);
  }
  return w.take();
}

std::optional<std::map<std::uint64_t, DecryptionShare>> decode_reveals_payload(
    const SystemParams& params, std::uint64_t epoch, const Bytes& payload) {
  try {
    ByteReader r(payload, int_width(params.q), params.q);
    if (r.u8() != kMsgReveals) return std::nullopt;
    if (r.u64() != epoch) return std::nullopt;
    std::uint64_t count = r.length(1u << 16);
    std::map<std::uint64_t, DecryptionShare> reveals;
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t dealer = r.u64();
      reveals[dealer] = decode_reveal(r);
    }
    if (!r.done()) return std::nullopt;
    return reveals;
  } catch (const DecodeError&) {
    return std::nullopt;
  }
}

Bytes encode_gossip_payload(const SystemParams& params, std::uint64_t epoch,
                            const std::optional<std::uint64_t>& omega) {
  ByteWriter w(int_width(params.q));
  w.u8(kMsgGossip);
  w.u64(epoch);
  w.u8(omega.has_value() ? 1 : 0);
  if (omega) w.zq(*omega);
  return w.take();
}

using StrategyFn = std::function<std::vector<Bytes>(AdversaryView&)>;

std::vector<Bytes> honest_messages(AdversaryView& v) {
  std::vector<Bytes> out;
  switch (v.phase) {
    case AdversaryView::Phase::init: {
      std::vector<std::uint64_t> roster(v.config->n);
      for (std::size_t i = 0; i < v.config->n; ++i) roster[i] = i + 1;
      InitKeys ik = init_generate_keys(*v.pp, roster, v.self_orig, *v.master);
      if (v.init_keys_out) *v.init_keys_out = ik.keys;
      out.push_back(encode_init_payload(v.pp->params, ik.announcements));
      break;
    }
    case AdversaryView::Phase::round1: {
      SharingTranscript tr = drng_randgen_round1(*v.state, *v.pp, *v.dir, *v.master);
      out.push_back(encode_sharing_payload(v.pp->params, v.epoch, tr));
      break;
    }
    case AdversaryView::Phase::round2: {
      auto reveals = drng_randgen_round2(*v.state, *v.pp, *v.dir, *v.sharings, *v.master);
      if (!reveals.empty()) {
        out.push_back(encode_reveals_payload(v.pp->params, v.epoch, reveals));
      }
      break;
    }
  }
  return out;
}

std::vector<Bytes> silent_reveals(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::round2) return honest_messages(v);
  // Keep the state machine moving, discard the reveals.
  drng_randgen_round2(*v.state, *v.pp, *v.dir, *v.sharings, *v.master);
  return {};
}

std::vector<Bytes> bad_key_proof(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::init) return honest_messages(v);
  std::vector<std::uint64_t> roster(v.config->n);
  for (std::size_t i = 0; i < v.config->n; ++i) roster[i] = i + 1;
  InitKeys ik = init_generate_keys(*v.pp, roster, v.self_orig, *v.master);
  if (v.init_keys_out) *v.init_keys_out = ik.keys;
  for (auto& [dealer, ka] : ik.announcements) {
    if (!ka.proof0.challenges.empty()) ka.proof0.challenges[0] ^= 1;
  }
  return {encode_init_payload(v.pp->params, ik.announcements)};
}

std::vector<Bytes> bad_share_proof(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::round1) return honest_messages(v);
  SharingTranscript tr = drng_randgen_round1(*v.state, *v.pp, *v.dir, *v.master);
  // Prove a different sharing and splice that proof in; the statement no
  // longer matches the published ciphertexts.
  Rng rng = v.master->derive("adv.alt-share", {v.self_orig, v.epoch});
  std::uint64_t alt = rng.uniform_below(v.pp->params.p);
  PvssShareResult other = pvss_share(*v.pp, v.dir->dealer_pk_tuple(*v.state->id_qual), alt,
                                     v.dir->size(), v.pp->params.t, rng);
  tr.proof1 = other.transcript.proof1;
  return {encode_sharing_payload(v.pp->params, v.epoch, tr)};
}

std::vector<Bytes> splice_transcripts(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::round1) return honest_messages(v);
  SharingTranscript tr = drng_randgen_round1(*v.state, *v.pp, *v.dir, *v.master);
  Rng rng = v.master->derive("adv.splice", {v.self_orig, v.epoch});
  std::uint64_t alt = rng.uniform_below(v.pp->params.p);
  PvssShareResult other = pvss_share(*v.pp, v.dir->dealer_pk_tuple(*v.state->id_qual), alt,
                                     v.dir->size(), v.pp->params.t, rng);
  tr.ciphertexts[0] = other.transcript.ciphertexts[0];
  return {encode_sharing_payload(v.pp->params, v.epoch, tr)};
}

std::vector<Bytes> wrong_share_value(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::round2) return honest_messages(v);
  auto reveals = drng_randgen_round2(*v.state, *v.pp, *v.dir, *v.sharings, *v.master);
  for (auto& [dealer, ds] : reveals) {
    ds.share = (ds.share + 1) % v.pp->params.p;
  }
  if (reveals.empty()) return {};
  return {encode_reveals_payload(v.pp->params, v.epoch, reveals)};
}

std::vector<Bytes> overflow_claims(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::round2) return honest_messages(v);
  auto reveals = drng_randgen_round2(*v.state, *v.pp, *v.dir, *v.sharings, *v.master);
  for (auto& [dealer, ds] : reveals) {
    ds.share += v.pp->params.p;  // out of Z_p, still encodable below q
  }
  std::vector<Bytes> out;
  if (!reveals.empty()) out.push_back(encode_reveals_payload(v.pp->params, v.epoch, reveals));
  out.push_back(Bytes{0xff, 0x00, 0xde, 0xad});  // undecodable garbage
  return out;
}

std::vector<Bytes> last_reveal_withhold(AdversaryView& v) {
  if (v.phase != AdversaryView::Phase::round2) return honest_messages(v);
  auto reveals = drng_randgen_round2(*v.state, *v.pp, *v.dir, *v.sharings, *v.master);
  // Rushing: collect the honest reveals already pending this round, simulate
  // the finalize everyone will run, and suppress our own contribution if the
  // would-be output looks unfavorable. PVSS reconstruction makes the value
  // land either way.
  std::map<KeyId, DecryptionShare> all;
  for (const auto& msg : *v.pending_honest) {
    auto dec = decode_reveals_payload(v.pp->params, v.epoch, msg.payload);
    if (!dec) continue;
    auto rit = v.dir->renumbering.find(msg.sender);
    if (rit == v.dir->renumbering.end()) continue;
    for (const auto& [dealer, ds] : *dec) {
      if (ds.holder != rit->second) continue;
      all.emplace(KeyId{dealer, rit->second}, ds);
    }
  }
  for (const auto& [dealer, ds] : reveals) {
    all.emplace(KeyId{dealer, *v.state->id_qual}, ds);
  }
  EpochRecord would_be = drng_finalize(*v.pp, *v.dir, v.epoch, *v.sharings, all);
  bool withhold = would_be.omega.has_value() && (*would_be.omega % 2 == 1);
  if (withhold || reveals.empty()) return {};
  return {encode_reveals_payload(v.pp->params, v.epoch, reveals)};
}

const std::map<std::string, StrategyFn>& strategy_registry() {
  static const std::map<std::string, StrategyFn> registry = {
      {"honest", honest_messages},
      {"honest-but-silent", silent_reveals},
      {"withhold-reveals", silent_reveals},
      {"bad-key-proof", bad_key_proof},
      {"bad-share-proof", bad_share_proof},
      {"wrong-share-value", wrong_share_value},
      {"splice-transcripts", splice_transcripts},
      {"last-reveal-withhold", last_reveal_withhold},
      {"overflow-claims", overflow_claims},
  };
  return registry;
}

class ComputeClock {
 public:
  void add(double ms) { total_ms_ += ms; }
  double total() const { return total_ms_; }

  template <typename F>
  auto time(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      total_ms_ += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
    } else {
      auto r = f();
      total_ms_ += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
      return r;
    }
  }

 private:
  double total_ms_ = 0.0;
};

/// Runs f(i) for i in [0, count) across the configured worker count; results
/// land in index order so the commit order stays canonical.
template <typename F>
void run_indexed(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        f(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

void BroadcastBus::begin_round() {
  if (open_) throw Error(ErrorCode::invalid_params, "bus round already open");
  open_ = true;
  pending_.clear();
}

void BroadcastBus::post(std::uint64_t sender, Bytes payload) {
  if (!open_) throw Error(ErrorCode::invalid_params, "bus round not open");
  pending_.push_back(BusMessage{sender, current_round(), std::move(payload)});
}

void BroadcastBus::barrier() {
  if (!open_) throw Error(ErrorCode::invalid_params, "bus round not open");
  std::stable_sort(pending_.begin(), pending_.end(),
                   [](const BusMessage& a, const BusMessage& b) { return a.sender < b.sender; });
  rounds_.push_back(std::move(pending_));
  pending_.clear();
  open_ = false;
  ++committed_;
}

const std::vector<BusMessage>& BroadcastBus::round_messages(std::uint64_t round) const {
  if (round >= committed_) {
    throw Error(ErrorCode::invalid_params, "round not committed yet (barrier violation)");
  }
  return rounds_.at(round);
}

void BroadcastBus::prune_before(std::uint64_t round) {
  for (std::uint64_t r = 0; r < round && r < rounds_.size(); ++r) {
    rounds_[r].clear();
    rounds_[r].shrink_to_fit();
  }
}

const std::vector<std::string>& adversary_strategies() {
  static const std::vector<std::string> names = {
      "honest-but-silent",    "bad-key-proof",  "bad-share-proof", "wrong-share-value",
      "splice-transcripts", "last-reveal-withhold", "overflow-claims",
  };
  return names;
}

std::vector<Bytes> adversary_act(const std::string& strategy, AdversaryView& view) {
  auto it = strategy_registry().find(strategy);
  if (it == strategy_registry().end()) {
    throw Error(ErrorCode::unknown_strategy, "unknown adversary strategy '" + strategy + "'");
  }
  return it->second(view);
}

TranscriptFile SimResult::transcript() const {
  TranscriptFile tf;
  tf.params = pp.params;
  tf.setup_seed = pp.setup_seed;
  tf.params_valid = pp.budget.pass();
  tf.directory = directory;
  tf.records = records;
  return tf;
}

SimResult sim_run(const NetworkConfig& config, const SystemParams& params, std::size_t epochs) {
  if (config.n < 2 || 2 * config.t >= config.n) {
    throw Error(ErrorCode::invalid_params, "config requires t < n/2");
  }
  for (std::uint64_t c : config.corrupted) {
    if (c < 1 || c > config.n) {
      throw Error(ErrorCode::invalid_params, "corrupted id outside roster");
    }
  }
  if (strategy_registry().find(config.strategy) == strategy_registry().end()) {
    throw Error(ErrorCode::unknown_strategy, "unknown adversary strategy '" + config.strategy + "'");
  }

  SystemParams eff = params;
  eff.n = config.n;
  eff.t = config.t;

  Rng master(seed_from_u64(config.seed));
  SimResult res;
  res.pp = pvss_setup(eff, derive_seed(master, "setup"), config.allow_invalid);
  const PvssPublicParams& pp = res.pp;

  std::vector<std::uint64_t> roster(config.n);
  for (std::size_t i = 0; i < config.n; ++i) roster[i] = i + 1;
  auto pmaster = [&master](std::uint64_t id) { return master.derive("participant", {id}); };
  auto is_corrupt = [&config](std::uint64_t id) { return config.corrupted.count(id) != 0; };

  BroadcastBus bus;
  Metrics& metrics = res.metrics;
  ComputeClock clock;

  auto account = [&metrics](const std::string& phase, const std::vector<BusMessage>& msgs) {
    for (const auto& m : msgs) {
      metrics.bytes_by_phase[phase] += m.payload.size();
      metrics.bytes_total += m.payload.size();
    }
  };

  // ---- Init: one broadcast round of key announcements ----
  std::map<std::uint64_t, std::map<std::uint64_t, PkeKeyPair>> secret_keys;
  bus.begin_round();
  for (std::uint64_t id : roster) {
    if (is_corrupt(id)) continue;
    Rng pm = pmaster(id);
    InitKeys ik = clock.time([&] { return init_generate_keys(pp, roster, id, pm); });
    secret_keys[id] = std::move(ik.keys);
    bus.post(id, encode_init_payload(pp.params, ik.announcements));
  }
  for (std::uint64_t id : roster) {
    if (!is_corrupt(id)) continue;
    Rng pm = pmaster(id);
    AdversaryView view;
    view.phase = AdversaryView::Phase::init;
    view.pp = &pp;
    view.self_orig = id;
    view.master = &pm;
    view.bus = &bus;
    view.pending_honest = &bus.pending_round();
    view.config = &config;
    view.init_keys_out = &secret_keys[id];
    for (Bytes& msg : adversary_act(config.strategy, view)) bus.post(id, std::move(msg));
  }
  bus.barrier();
  metrics.init_rounds = 1;
  account("init", bus.round_messages(0));

  std::map<std::uint64_t, std::map<std::uint64_t, KeyAnnouncement>> posted;
  for (const BusMessage& msg : bus.round_messages(0)) {
    if (posted.count(msg.sender)) continue;  // first message per sender wins
    auto anns = decode_init_payload(pp.params, msg.payload);
    if (anns) posted[msg.sender] = std::move(*anns);
  }
  res.directory = clock.time([&] { return init_assemble(pp, posted); });
  const PublicDirectory& dir = res.directory;

  std::map<std::uint64_t, ParticipantState> states;
  for (std::uint64_t id : dir.qual) {
    states[id] = build_participant_state(dir, id, secret_keys[id]);
  }
  std::vector<std::uint64_t> honest_qual, corrupt_qual;
  for (std::uint64_t id : dir.qual) {
    (is_corrupt(id) ? corrupt_qual : honest_qual).push_back(id);
  }

  // ---- Epochs: two broadcast rounds each ----
  for (std::uint64_t epoch = 0; epoch < epochs; ++epoch) {
    for (auto& [id, st] : states) drng_begin_epoch(st, epoch);

    // Round 1: sharing transcripts.
    bus.begin_round();
    {
      std::vector<Bytes> payloads(honest_qual.size());
      std::vector<double> ms(honest_qual.size(), 0.0);
      run_indexed(honest_qual.size(), config.threads, [&](std::size_t i) {
        std::uint64_t id = honest_qual[i];
        Rng pm = pmaster(id);
        auto t0 = std::chrono::steady_clock::now();
        SharingTranscript tr = drng_randgen_round1(states.at(id), pp, dir, pm);
        ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        payloads[i] = encode_sharing_payload(pp.params, epoch, tr);
      });
      for (std::size_t i = 0; i < honest_qual.size(); ++i) {
        clock.add(ms[i]);
        bus.post(honest_qual[i], std::move(payloads[i]));
      }
    }
    for (std::uint64_t id : corrupt_qual) {
      Rng pm = pmaster(id);
      AdversaryView view;
      view.phase = AdversaryView::Phase::round1;
      view.epoch = epoch;
      view.pp = &pp;
      view.dir = &dir;
      view.state = &states.at(id);
      view.self_orig = id;
      view.master = &pm;
      view.bus = &bus;
      view.pending_honest = &bus.pending_round();
      view.config = &config;
      for (Bytes& msg : adversary_act(config.strategy, view)) bus.post(id, std::move(msg));
    }
    bus.barrier();
    const std::uint64_t r1 = bus.committed_rounds() - 1;
    account("share", bus.round_messages(r1));

    std::map<std::uint64_t, SharingTranscript> sharings;
    for (const BusMessage& msg : bus.round_messages(r1)) {
      auto rit = dir.renumbering.find(msg.sender);
      if (rit == dir.renumbering.end()) continue;
      if (sharings.count(rit->second)) continue;
      auto tr = decode_sharing_payload(pp.params, epoch, msg.payload);
      if (tr) sharings.emplace(rit->second, std::move(*tr));
    }

    // The transcript checks are identical for every node; run them once and
    // hand the outcome to the honest round-2 actions.
    std::vector<std::uint64_t> qual_prime =
        clock.time([&] { return compute_qual_prime(pp, dir, sharings); });

    // Round 2: decrypted shares.
    bus.begin_round();
    {
      std::vector<Bytes> payloads(honest_qual.size());
      std::vector<double> ms(honest_qual.size(), 0.0);
      run_indexed(honest_qual.size(), config.threads, [&](std::size_t i) {
        std::uint64_t id = honest_qual[i];
        Rng pm = pmaster(id);
        auto t0 = std::chrono::steady_clock::now();
        auto reveals = drng_randgen_round2(states.at(id), pp, dir, sharings, pm, &qual_prime);
        ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
        if (!reveals.empty()) payloads[i] = encode_reveals_payload(pp.params, epoch, reveals);
      });
      for (std::size_t i = 0; i < honest_qual.size(); ++i) {
        clock.add(ms[i]);
        if (!payloads[i].empty()) bus.post(honest_qual[i], std::move(payloads[i]));
      }
    }
    for (std::uint64_t id : corrupt_qual) {
      Rng pm = pmaster(id);
      AdversaryView view;
      view.phase = AdversaryView::Phase::round2;
      view.epoch = epoch;
      view.pp = &pp;
      view.dir = &dir;
      view.state = &states.at(id);
      view.self_orig = id;
      view.master = &pm;
      view.bus = &bus;
      view.pending_honest = &bus.pending_round();
      view.sharings = &sharings;
      view.config = &config;
      for (Bytes& msg : adversary_act(config.strategy, view)) bus.post(id, std::move(msg));
    }
    bus.barrier();
    const std::uint64_t r2 = bus.committed_rounds() - 1;
    account("reveal", bus.round_messages(r2));

    std::map<KeyId, DecryptionShare> reveals;
    for (const BusMessage& msg : bus.round_messages(r2)) {
      auto rit = dir.renumbering.find(msg.sender);
      if (rit == dir.renumbering.end()) continue;
      auto dec = decode_reveals_payload(pp.params, epoch, msg.payload);
      if (!dec) continue;
      for (const auto& [dealer, ds] : *dec) {
        // The broadcast channel authenticates senders; a reveal only counts
        // for the holder slot of whoever actually sent it.
        if (ds.holder != rit->second) continue;
        reveals.emplace(KeyId{dealer, rit->second}, ds);
      }
    }

    EpochRecord rec = clock.time([&] { return drng_finalize(pp, dir, epoch, sharings, reveals); });

    if (config.gossip) {
      for (std::uint64_t id : honest_qual) {
        Bytes g = encode_gossip_payload(pp.params, epoch, rec.omega);
        metrics.bytes_by_phase["gossip"] += g.size();
        metrics.bytes_total += g.size();
      }
    }

    res.omegas.push_back(rec.omega);
    if (config.keep_records) res.records.push_back(std::move(rec));
    if (bus.committed_rounds() > 2) bus.prune_before(bus.committed_rounds() - 2);
  }

  metrics.epochs = epochs;
  metrics.rounds_per_epoch =
      epochs == 0 ? 0 : (bus.committed_rounds() - metrics.init_rounds) / epochs;
  metrics.wallclock_model_ms = static_cast<double>(bus.committed_rounds()) * config.delta_ms;
  metrics.compute_ms_per_node = clock.total() / static_cast<double>(dir.qual.size());
  return res;
}

std::vector<ScalingRow> measure_scaling(const SystemParams& params,
                                        const std::vector<std::size_t>& n_list,
                                        std::uint64_t seed) {
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw Error(ErrorCode::invalid_params, "n_list must be ascending");
    }
  }
  std::vector<ScalingRow> rows;
  for (std::size_t n : n_list) {
    NetworkConfig cfg;
    cfg.n = n;
    cfg.t = (n - 1) / 2;
    cfg.seed = seed;
    SimResult r = sim_run(cfg, params, 1);
    ScalingRow row;
    row.n = n;
    row.t = cfg.t;
    row.bytes_total = r.metrics.bytes_total;
    auto phase = [&r](const char* name) {
      auto it = r.metrics.bytes_by_phase.find(name);
      return it == r.metrics.bytes_by_phase.end() ? std::uint64_t{0} : it->second;
    };
    row.bytes_init = phase("init");
    row.bytes_share = phase("share");
    row.bytes_reveal = phase("reveal");
    row.rounds_per_epoch = r.metrics.rounds_per_epoch;
    row.compute_ms_per_node = r.metrics.compute_ms_per_node;
    if (!rows.empty()) {
      row.ratio_vs_prev = static_cast<double>(row.bytes_total) /
                          static_cast<double>(rows.back().bytes_total);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_scaling_table(const std::vector<ScalingRow>& rows) {
  std::ostringstream os;
  os << "n\tt\trounds\tbytes_total\tbytes_init\tbytes_share\tbytes_reveal\tratio\tcompute_ms_node\n";
  for (const auto& r : rows) {
    os << r.n << '\t' << r.t << '\t' << r.rounds_per_epoch << '\t' << r.bytes_total << '\t'
       << r.bytes_init << '\t' << r.bytes_share << '\t' << r.bytes_reveal << '\t';
    if (r.ratio_vs_prev > 0.0) {
      os.setf(std::ios::fixed);
      os.precision(2);
      os << r.ratio_vs_prev;
      os.unsetf(std::ios::fixed);
    } else {
      os << '-';
    }
    os << '\t';
    os.setf(std::ios::fixed);
    os.precision(3);
    os << r.compute_ms_per_node << '\n';
    os.unsetf(std::ios::fixed);
  }
  return os.str();
}

}  // namespace lbcn
