#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lbcn/drng.hpp"
#include "lbcn/transcript.hpp"

namespace lbcn {

/// Lockstep synchronous broadcast model: static corruption set fixed before
/// the run, model latency Delta for wallclock accounting only.
struct NetworkConfig {
  std::size_t n = 4;
  std::size_t t = 1;
  double delta_ms = 100.0;
  std::set<std::uint64_t> corrupted;  // original ids
  std::string strategy = "honest";
  std::uint64_t seed = 0;
  bool gossip = false;
  unsigned threads = 1;
  bool allow_invalid = false;
  bool keep_records = true;  // long statistics runs can drop record bodies
};

struct BusMessage {
  std::uint64_t sender = 0;
  std::uint64_t round = 0;
  Bytes payload;
};

/// Append-only per-round message log. A message posted in round r becomes
/// readable at round r+1; the read API never exposes the pending round, which
/// is what enforces the lockstep barrier.
class BroadcastBus {
 public:
  void begin_round();
  void post(std::uint64_t sender, Bytes payload);
  void barrier();

  std::uint64_t current_round() const { return static_cast<std::uint64_t>(rounds_.size()); }
  std::uint64_t committed_rounds() const { return committed_; }
  const std::vector<BusMessage>& round_messages(std::uint64_t round) const;
  const std::vector<BusMessage>& pending_round() const { return pending_; }

  /// Drop payloads of rounds before `round` (byte totals were already
  /// accounted when posted).
  void prune_before(std::uint64_t round);

 private:
  std::vector<std::vector<BusMessage>> rounds_;
  std::vector<BusMessage> pending_;
  std::uint64_t committed_ = 0;
  bool open_ = false;
};

struct Metrics {
  std::uint64_t init_rounds = 0;
  std::uint64_t rounds_per_epoch = 0;
  std::uint64_t epochs = 0;
  std::uint64_t bytes_total = 0;
  std::map<std::string, std::uint64_t> bytes_by_phase;
  double wallclock_model_ms = 0.0;
  double compute_ms_per_node = 0.0;
};

struct SimResult {
  PvssPublicParams pp;
  PublicDirectory directory;
  std::vector<EpochRecord> records;
  std::vector<std::optional<std::uint64_t>> omegas;  // kept even when records are dropped
  Metrics metrics;

  TranscriptFile transcript() const;
};

const std::vector<std::string>& adversary_strategies();

/// Scheduler-facing view for one corrupted participant in one phase. The
/// rushing order is modeled by handing the adversary the pending honest
/// messages of the round it acts in; the bus read API itself stays strictly
/// behind the barrier.
struct AdversaryView {
  enum class Phase { init, round1, round2 } phase;
  std::uint64_t epoch = 0;
  const PvssPublicParams* pp = nullptr;
  const PublicDirectory* dir = nullptr;
  ParticipantState* state = nullptr;  // null before Init assembles
  std::uint64_t self_orig = 0;
  const Rng* master = nullptr;
  const BroadcastBus* bus = nullptr;
  const std::vector<BusMessage>* pending_honest = nullptr;
  const std::map<std::uint64_t, SharingTranscript>* sharings = nullptr;  // round2 only
  const NetworkConfig* config = nullptr;
  std::map<std::uint64_t, PkeKeyPair>* init_keys_out = nullptr;  // init only
};

std::vector<Bytes> adversary_act(const std::string& strategy, AdversaryView& view);

SimResult sim_run(const NetworkConfig& config, const SystemParams& params, std::size_t epochs);

struct ScalingRow {
  std::size_t n = 0;
  std::size_t t = 0;
  std::uint64_t bytes_total = 0;
  std::uint64_t bytes_init = 0;
  std::uint64_t bytes_share = 0;
  std::uint64_t bytes_reveal = 0;
  double ratio_vs_prev = 0.0;
  std::uint64_t rounds_per_epoch = 0;
  double compute_ms_per_node = 0.0;
};

/// One epoch per n with t = floor((n-1)/2); ratios compare successive rows.
std::vector<ScalingRow> measure_scaling(const SystemParams& params,
                                        const std::vector<std::size_t>& n_list,
                                        std::uint64_t seed);

std::string format_scaling_table(const std::vector<ScalingRow>& rows);

}  // namespace lbcn
