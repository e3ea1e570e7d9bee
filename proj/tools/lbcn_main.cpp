// lbcn: lattice-based PVSS randomness beacon simulator and verifier.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lbcn/drng.hpp"
#include "lbcn/params.hpp"
#include "lbcn/sim.hpp"
#include "lbcn/stats.hpp"
#include "lbcn/transcript.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string find_config(const std::string& requested, const char* argv0) {
  namespace fs = std::filesystem;
  if (fs::exists(requested)) return requested;
  // Fall back to configs/ next to the binary's parent (build tree layouts).
  std::error_code ec;
  fs::path exe = fs::weakly_canonical(fs::path(argv0), ec);
  if (!ec) {
    for (fs::path base = exe.parent_path(); !base.empty(); base = base.parent_path()) {
      fs::path candidate = base / requested;
      if (fs::exists(candidate)) return candidate.string();
      if (base == base.parent_path()) break;
    }
  }
  return requested;  // let the loader produce the error
}

std::set<std::uint64_t> parse_id_list(const std::string& csv) {
  std::set<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.insert(std::stoull(item));
  }
  return out;
}

void print_noise_report(const lbcn::SystemParams& ps, const lbcn::NoiseBudgetReport& rep) {
  std::printf("set %-8s p=%llu q=%llu u=%zu v=%zu rep=%u\n", ps.name.c_str(),
              static_cast<unsigned long long>(ps.p), static_cast<unsigned long long>(ps.q), ps.u,
              ps.v, ps.rep);
  std::printf("  worst-case noise bound : %.2f\n", rep.worst_noise_bound);
  std::printf("  p/2                    : %.2f\n", rep.p_half);
  std::printf("  margin                 : %.3fx\n", rep.margin);
  std::printf("  beta formula           : %s (rel err %.3g)\n",
              rep.beta_formula_ok ? "ok" : "MISMATCH", rep.beta_rel_err);
  std::printf("  verdict                : %s\n", rep.pass() ? "PASS" : "FAIL");
}

int cmd_simulate(const lbcn::SystemParams& params, const lbcn::NetworkConfig& cfg,
                 std::size_t epochs, const std::string& out_path) {
  lbcn::SimResult res = lbcn::sim_run(cfg, params, epochs);
  for (std::size_t e = 0; e < res.omegas.size(); ++e) {
    if (res.omegas[e]) {
      std::printf("epoch %zu: omega = %llu\n", e, static_cast<unsigned long long>(*res.omegas[e]));
    } else {
      std::printf("epoch %zu: omega = bottom (no output; flagged)\n", e);
    }
  }
  const lbcn::Metrics& m = res.metrics;
  std::printf("rounds/epoch = %llu, init rounds = %llu\n",
              static_cast<unsigned long long>(m.rounds_per_epoch),
              static_cast<unsigned long long>(m.init_rounds));
  std::printf("bytes total = %llu (", static_cast<unsigned long long>(m.bytes_total));
  bool first = true;
  for (const auto& [phase, bytes] : m.bytes_by_phase) {
    std::printf("%s%s=%llu", first ? "" : ", ", phase.c_str(),
                static_cast<unsigned long long>(bytes));
    first = false;
  }
  std::printf(")\n");
  std::printf("model wallclock = %.1f ms at delta=%.1f ms\n", m.wallclock_model_ms,
              static_cast<double>(m.wallclock_model_ms) /
                  static_cast<double>(m.init_rounds + m.rounds_per_epoch * std::max<std::uint64_t>(
                                                                               1, m.epochs)));
  if (!out_path.empty()) {
    lbcn::write_file(out_path, lbcn::encode_transcript_file(res.transcript()));
    std::printf("transcript written to %s\n", out_path.c_str());
  }
  return kExitOk;
}

int cmd_verify(const std::string& path) {
  lbcn::Bytes data = lbcn::read_file(path);
  lbcn::TranscriptFile tf = lbcn::decode_transcript_file(data);
  lbcn::PvssPublicParams pp = lbcn::pvss_setup(tf.params, tf.setup_seed, true);
  if (!tf.params_valid && pp.budget.pass()) {
    std::printf("validity flag inconsistent with parameters\n");
    return kExitVerifyFail;
  }
  bool all_ok = true;
  for (const auto& rec : tf.records) {
    bool ok = lbcn::drng_ver(pp, tf.directory, rec);
    std::printf("epoch %llu: %s\n", static_cast<unsigned long long>(rec.epoch),
                ok ? "OK" : "REJECTED");
    all_ok = all_ok && ok;
  }
  if (tf.records.empty()) {
    // A ceremony file: still check the directory key proofs.
    lbcn::EpochRecord empty;
    empty.omega = std::nullopt;
    bool ok = lbcn::drng_ver(pp, tf.directory, empty);
    std::printf("directory: %s\n", ok ? "OK" : "REJECTED");
    all_ok = ok;
  }
  std::printf("verdict: %s\n", all_ok ? "ACCEPT" : "REJECT");
  return all_ok ? kExitOk : kExitVerifyFail;
}

int cmd_stats(const std::string& path, const std::string& which) {
  lbcn::Bytes data = lbcn::read_file(path);
  lbcn::TranscriptFile tf = lbcn::decode_transcript_file(data);
  std::vector<std::uint64_t> omegas;
  std::size_t bottoms = 0;
  for (const auto& rec : tf.records) {
    if (rec.omega) {
      omegas.push_back(*rec.omega);
    } else {
      ++bottoms;
    }
  }
  if (tf.records.size() < 100 || omegas.size() < 100) {
    throw lbcn::Error(lbcn::ErrorCode::too_few_samples,
                      "need at least 100 epochs with outputs for statistics");
  }
  std::printf("%zu outputs over Z_%llu (%zu bottom epochs skipped)\n", omegas.size(),
              static_cast<unsigned long long>(tf.params.p), bottoms);
  if (which == "chi2" || which == "all") {
    lbcn::ChiSquareResult r = lbcn::chi_square_uniform(omegas, tf.params.p);
    std::printf("chi-square uniform  : stat=%.3f dof=%llu p-value=%.6g\n", r.statistic,
                static_cast<unsigned long long>(r.dof), r.p_value);
  }
  if (which == "serial" || which == "all") {
    lbcn::ChiSquareResult r = lbcn::serial_chi_square(omegas, tf.params.p);
    std::printf("serial (lag-1) test : stat=%.3f dof=%llu p-value=%.6g\n", r.statistic,
                static_cast<unsigned long long>(r.dof), r.p_value);
  }
  return kExitOk;
}

int cmd_bench(const lbcn::SystemParams& params, const std::vector<std::size_t>& n_list,
              std::uint64_t seed) {
  auto rows = lbcn::measure_scaling(params, n_list, seed);
  std::fputs(lbcn::format_scaling_table(rows).c_str(), stdout);
  return kExitOk;
}

int cmd_keygen_ceremony(const lbcn::SystemParams& params, std::size_t n, std::size_t t,
                        std::uint64_t seed, const std::string& out_path) {
  lbcn::SystemParams eff = params;
  eff.n = n;
  eff.t = t;
  lbcn::Rng master(lbcn::seed_from_u64(seed));
  lbcn::PvssPublicParams pp = lbcn::pvss_setup(eff, master.derive("setup").seed());
  lbcn::InitResult init = lbcn::drng_init(pp, n, master);
  std::printf("QUAL = {");
  for (std::size_t i = 0; i < init.directory.qual.size(); ++i) {
    std::printf("%s%llu", i ? ", " : "",
                static_cast<unsigned long long>(init.directory.qual[i]));
  }
  std::printf("} (n' = %zu)\n", init.directory.qual.size());
  lbcn::TranscriptFile tf;
  tf.params = eff;
  tf.setup_seed = pp.setup_seed;
  tf.params_valid = pp.budget.pass();
  tf.directory = init.directory;
  lbcn::write_file(out_path, lbcn::encode_transcript_file(tf));
  std::printf("directory written to %s\n", out_path.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice-based PVSS randomness beacon (simulator, verifier, stats)"};
  app.require_subcommand(1);
  app.fallthrough(true);  // global flags like --config may follow the subcommand

  std::string config_path = "configs/params.cfg";
  std::string set_name = "toy";
  app.add_option("--config", config_path, "parameter config file")->capture_default_str();

  // simulate
  auto* sim = app.add_subcommand("simulate", "run Init plus a number of epochs");
  std::size_t n = 4, t = 1, epochs = 1;
  std::uint64_t seed = 0;
  std::string adversary = "honest", corrupt_csv, out_path;
  unsigned threads = 1;
  bool gossip = false, allow_invalid = false;
  sim->add_option("--params", set_name, "parameter set name")->capture_default_str();
  sim->add_option("--n", n, "participant count")->capture_default_str();
  sim->add_option("--t", t, "threshold (must satisfy t < n/2)")->capture_default_str();
  sim->add_option("--epochs", epochs, "epochs to run")->capture_default_str();
  sim->add_option("--seed", seed, "master seed")->capture_default_str();
  sim->add_option("--adversary", adversary, "adversary strategy")->capture_default_str();
  sim->add_option("--corrupt", corrupt_csv, "comma-separated corrupted ids");
  sim->add_option("--out", out_path, "output transcript file");
  sim->add_option("--threads", threads, "deterministic parallel workers")->capture_default_str();
  sim->add_flag("--gossip", gossip, "post-epoch result gossip (not a round)");
  sim->add_flag("--allow-invalid", allow_invalid, "accept parameter sets that fail validation");

  // verify
  auto* ver = app.add_subcommand("verify", "externally verify a transcript file");
  std::string ver_path;
  ver->add_option("file", ver_path, "transcript file")->required();

  // stats
  auto* st = app.add_subcommand("stats", "randomness statistics over a transcript file");
  std::string st_path, st_test = "all";
  st->add_option("file", st_path, "transcript file")->required();
  st->add_option("--test", st_test, "chi2 | serial | all")->capture_default_str();

  // bench
  auto* be = app.add_subcommand("bench", "communication/computation scaling table");
  std::string n_list_csv = "4,8,16";
  std::uint64_t bench_seed = 0;
  be->add_option("--params", set_name, "parameter set name")->capture_default_str();
  be->add_option("--n-list", n_list_csv, "ascending participant counts")->capture_default_str();
  be->add_option("--seed", bench_seed, "master seed")->capture_default_str();

  // params-validate
  auto* pv = app.add_subcommand("params-validate", "noise budget report for parameter sets");
  std::string pv_set = "all";
  pv->add_option("--params", pv_set, "set name or 'all'")->capture_default_str();

  // keygen-ceremony
  auto* kc = app.add_subcommand("keygen-ceremony", "standalone Init producing a directory file");
  std::size_t kc_n = 4, kc_t = 1;
  std::uint64_t kc_seed = 0;
  std::string kc_out = "directory.lbcn";
  kc->add_option("--params", set_name, "parameter set name")->capture_default_str();
  kc->add_option("--n", kc_n, "participant count")->capture_default_str();
  kc->add_option("--t", kc_t, "threshold")->capture_default_str();
  kc->add_option("--seed", kc_seed, "master seed")->capture_default_str();
  kc->add_option("--out", kc_out, "output directory file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ver->parsed()) return cmd_verify(ver_path);
    if (st->parsed()) return cmd_stats(st_path, st_test);

    lbcn::ParamConfig cfg = lbcn::load_param_config(find_config(config_path, argv[0]));

    if (pv->parsed()) {
      bool all_pass = true;
      for (const auto& [name, ps] : cfg.sets) {
        if (pv_set != "all" && pv_set != name) continue;
        ps.check_structure();
        lbcn::NoiseBudgetReport rep = lbcn::validate_params(ps);
        print_noise_report(ps, rep);
        all_pass = all_pass && rep.pass();
      }
      if (pv_set != "all" && cfg.sets.find(pv_set) == cfg.sets.end()) {
        throw lbcn::Error(lbcn::ErrorCode::config_error, "unknown parameter set " + pv_set);
      }
      return all_pass ? kExitOk : kExitVerifyFail;
    }

    const lbcn::SystemParams& params = cfg.get(set_name);
    if (sim->parsed()) {
      lbcn::NetworkConfig nc;
      nc.n = n;
      nc.t = t;
      nc.seed = seed;
      nc.strategy = adversary;
      nc.corrupted = parse_id_list(corrupt_csv);
      nc.threads = threads;
      nc.gossip = gossip;
      nc.allow_invalid = allow_invalid;
      if (!nc.allow_invalid && !lbcn::validate_params(params).pass()) {
        throw lbcn::Error(lbcn::ErrorCode::invalid_params,
                          "parameter set fails validation (use --allow-invalid to override)");
      }
      return cmd_simulate(params, nc, epochs, out_path);
    }
    if (be->parsed()) {
      std::vector<std::size_t> n_list;
      for (std::uint64_t v : parse_id_list(n_list_csv)) n_list.push_back(v);
      return cmd_bench(params, n_list, bench_seed);
    }
    if (kc->parsed()) return cmd_keygen_ceremony(params, kc_n, kc_t, kc_seed, kc_out);
  } catch (const lbcn::DecodeError& e) {
    std::fprintf(stderr, "decode error: %s\n", e.what());
    return kExitUsage;
  } catch (const lbcn::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
