// Acceptance suite: one pass/fail line per protocol-level claim, exercised
// end to end at the shipped parameter sets. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lbcn/stats.hpp"
#include "scenarios.hpp"

using namespace lbcn;
using test::quick_sim;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

std::set<std::uint64_t> pick_corrupt(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed_from_u64(seed ^ 0xC0FFEE));
  std::set<std::uint64_t> out;
  while (out.size() < count) out.insert(1 + rng.uniform_below(n));
  return out;
}

// ---- criterion 1: two rounds per output ----
bool c1_two_rounds(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SystemParams toy = test::toy_params();
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n : {4u, 7u, 10u}) {
    SimResult res = quick_sim(toy, n, (n - 1) / 2, 2, 1000 + n);
    ok = ok && res.metrics.rounds_per_epoch == 2;
    os << "n=" << n << ":rounds=" << res.metrics.rounds_per_epoch << " ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ok = ok && secs < 60.0;
  os << "(" << static_cast<int>(secs) << "s < 60s)";
  detail = os.str();
  return ok;
}

// ---- criterion 2: tolerance of any t < n/2 ----
bool c2_fault_tolerance(std::string& detail) {
  SystemParams tiny = test::tiny_params();
  const std::vector<std::pair<std::size_t, std::size_t>> configs{{4, 1}, {7, 3}, {10, 4}};
  std::size_t runs = 0;
  for (const auto& strategy : adversary_strategies()) {
    for (auto [n, t] : configs) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SimResult res =
            quick_sim(tiny, n, t, 1, seed, strategy, pick_corrupt(n, t, seed * 31 + n));
        ++runs;
        if (res.records.size() != 1 || !res.records[0].omega.has_value()) {
          detail = "bottom output under " + strategy;
          return false;
        }
        if (!drng_ver(res.pp, res.directory, res.records[0])) {
          detail = "verification failed under " + strategy;
          return false;
        }
      }
    }
  }
  // negative control: t+1 withholding corruptions kill the output exactly
  // when fewer than t+1 honest holders remain (n = 2t+1); at even n the
  // honest remainder still reaches the threshold and n-t corruptions are
  // needed instead.
  for (auto [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 2}, {7, 3}}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SimResult res = quick_sim(test::tiny_params(), n, t, 1, seed, "withhold-reveals",
                                pick_corrupt(n, t + 1, seed));
      if (res.records[0].omega.has_value()) {
        detail = "t+1 withholders failed to force bottom at n=2t+1";
        return false;
      }
    }
  }
  for (auto [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 1}, {10, 4}}) {
    SimResult margin = quick_sim(test::tiny_params(), n, t, 1, 7, "withhold-reveals",
                                 pick_corrupt(n, t + 1, 7));
    if (!margin.records[0].omega.has_value()) {
      detail = "even-n margin unexpectedly lost";
      return false;
    }
    SimResult forced = quick_sim(test::tiny_params(), n, t, 1, 7, "withhold-reveals",
                                 pick_corrupt(n, n - t, 7));
    if (forced.records[0].omega.has_value()) {
      detail = "n-t withholders failed to force bottom";
      return false;
    }
  }
  detail = std::to_string(runs) + " adversarial runs all live+verified; bottom forced exactly "
                                  "below t+1 honest holders";
  return true;
}

// ---- criterion 3: output law against the brute-force oracle ----
bool c3_output_law(std::string& detail) {
  SystemParams tiny = test::tiny_params();  // p = 257
  NetworkConfig cfg;
  cfg.n = 4;
  cfg.t = 1;
  cfg.seed = 33;
  SimResult res = sim_run(cfg, tiny, 1000);
  std::size_t checked = 0;
  for (const auto& rec : res.records) {
    if (!rec.omega.has_value() || !test::oracle_output_law(res.pp, rec)) {
      detail = "oracle mismatch at epoch " + std::to_string(rec.epoch);
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + "/1000 epochs match the every-subset Lagrange oracle";
  return checked == 1000;
}

// ---- criterion 4: correctness game ----
bool c4_correctness_game(std::string& detail) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    if (!test::run_correctness_game(test::tiny_params(), 4, 1, 40000 + seed)) {
      detail = "game returned 0 at (4,1)";
      return false;
    }
    if (!test::run_correctness_game(test::tiny_params(), 7, 3, 41000 + seed)) {
      detail = "game returned 0 at (7,3)";
      return false;
    }
  }
  detail = "100/100 runs returned 1 at both (4,1) and (7,3)";
  return true;
}

// ---- criterion 5: verifiability game ----
bool c5_verifiability_game(std::string& detail) {
  test::CheatContext ctx(test::tiny_params(), 555, 4);
  auto cheats = test::cheat_strategies(ctx);
  Rng rng(seed_from_u64(556));
  std::ostringstream os;
  bool ok = cheats.size() == 12;
  for (const auto& cheat : cheats) {
    int rejected = 0;
    for (int i = 0; i < 1000; ++i) rejected += cheat.rejected(ctx.pp, rng);
    if (rejected < 999) ok = false;
    os << cheat.name << "=" << rejected << "/1000 ";
  }
  detail = os.str();
  return ok;
}

// ---- criterion 6: PKE correctness and noise budget ----
bool c6_pke(std::string& detail) {
  std::ostringstream os;
  for (const auto& params : {test::tiny_params(), test::toy_params(), test::small_params()}) {
    NoiseBudgetReport rep = validate_params(params);
    if (!rep.pass()) {
      detail = params.name + " fails validate_params";
      return false;
    }
    Rng rng(seed_from_u64(600));
    ZqMatrix a = pke_setup(params, rng);
    PkeKeyPair kp = pke_keygen(a, params, rng);
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
      std::uint64_t m = rng.uniform_below(params.p);
      auto [ct, er] = pke_encrypt(a, kp.pk_b, m, params, rng);
      failures += (pke_decrypt(kp.pk_b, kp.sk_s, ct, params).message != m);
    }
    if (failures != 0) {
      detail = params.name + ": " + std::to_string(failures) + " round-trip failures";
      return false;
    }
    os << params.name << ":0/10000 margin=" << std::fixed << std::setprecision(2) << rep.margin
       << "x ";
  }
  detail = os.str();
  return true;
}

// ---- criterion 7: exhaustive Shamir/parity oracle ----
bool c7_shamir_exhaustive(std::string& detail) {
  const std::uint64_t p = 7;
  ParityMatrix h = parity_matrix(4, 1, Modulus(p));
  auto words = test::oracle_codewords(p, 4, 1);
  if (words.size() != 49) {
    detail = "code size != 49";
    return false;
  }
  std::size_t codewords_pass = 0, non_codewords_fail = 0, total = 0;
  std::vector<std::uint64_t> m(4);
  for (m[0] = 0; m[0] < p; ++m[0])
    for (m[1] = 0; m[1] < p; ++m[1])
      for (m[2] = 0; m[2] < p; ++m[2])
        for (m[3] = 0; m[3] < p; ++m[3]) {
          ++total;
          bool in_code = words.count(m) != 0;
          bool claimed = is_valid_share_vector(m, h, Modulus(p));
          if (claimed != in_code) {
            detail = "membership mismatch";
            return false;
          }
          codewords_pass += (in_code && claimed);
          non_codewords_fail += (!in_code && !claimed);
        }
  // all qualifying subsets agree on every codeword
  for (const auto& w : words) {
    std::map<std::uint64_t, std::uint64_t> shares;
    for (std::size_t i = 0; i < 4; ++i) shares[i + 1] = w[i];
    std::optional<std::uint64_t> secret;
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
      if (__builtin_popcountll(mask) < 2) continue;
      std::set<std::uint64_t> subset;
      for (std::size_t b = 0; b < 4; ++b)
        if (mask & (1u << b)) subset.insert(b + 1);
      std::uint64_t v = sss_combine(subset, shares, Modulus(p));
      if (!secret) secret = v;
      if (*secret != v) {
        detail = "subset disagreement";
        return false;
      }
    }
  }
  detail = "49/49 codewords pass, " + std::to_string(non_codewords_fail) +
           "/2352 non-codewords fail, all subsets agree";
  return codewords_pass == 49 && non_codewords_fail == total - 49;
}

// ---- criterion 8: mutation rejection via the external verifier ----
bool c8_mutations(std::string& detail) {
  SystemParams tiny = test::tiny_params();
  SimResult base = quick_sim(tiny, 4, 1, 10, 888);
  TranscriptFile tf = base.transcript();
  auto classes = test::mutation_classes(tiny.p, tiny.q);
  if (classes.size() != 15) {
    detail = "expected 15 mutation classes";
    return false;
  }
  Rng rng(seed_from_u64(889));
  std::ostringstream os;
  for (const auto& mc : classes) {
    int rejected = 0, applied = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      if (mc.targets_directory) {
        PublicDirectory dir = tf.directory;
        if (!mc.apply_directory(dir, rng)) continue;
        ++applied;
        rejected += !drng_ver(base.pp, dir, tf.records[trial % tf.records.size()]);
      } else {
        EpochRecord rec = tf.records[trial % tf.records.size()];
        if (!mc.apply(rec, tf.directory, rng)) continue;
        ++applied;
        rejected += !drng_ver(base.pp, tf.directory, rec);
      }
    }
    if (applied < 1000 || rejected != applied) {
      detail = mc.name + ": " + std::to_string(rejected) + "/" + std::to_string(applied) +
               " rejected";
      return false;
    }
    os << mc.name << "=1000/1000 ";
  }
  detail = os.str();
  return true;
}

// ---- criterion 9: uniformity proxy ----
bool c9_uniformity(std::string& detail) {
  SystemParams s31 = test::stat31_params();
  NetworkConfig cfg;
  cfg.n = 4;
  cfg.t = 1;
  cfg.seed = 99;
  cfg.allow_invalid = true;
  cfg.keep_records = false;
  SimResult res = sim_run(cfg, s31, 10000);
  std::vector<std::uint64_t> omegas;
  for (const auto& o : res.omegas) {
    if (!o.has_value()) {
      detail = "bottom epoch in the statistics run";
      return false;
    }
    omegas.push_back(*o);
  }
  ChiSquareResult uni = chi_square_uniform(omegas, s31.p);
  ChiSquareResult ser = serial_chi_square(omegas, s31.p);

  // degenerate fixture: a constant sequence must fail decisively
  std::vector<std::uint64_t> constant(10000, 17);
  ChiSquareResult degen = chi_square_uniform(constant, s31.p);

  std::ostringstream os;
  os << "chi2 p=" << uni.p_value << " serial p=" << ser.p_value << " degenerate p="
     << degen.p_value;
  detail = os.str();
  return uni.p_value > 0.001 && ser.p_value > 0.001 && degen.p_value < 1e-6;
}

// ---- criterion 10: communication scaling ----
bool c10_scaling(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = measure_scaling(test::toy_params(), {4, 8, 16}, 77);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  bool ok = rows.size() == 3;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ok = ok && rows[i].rounds_per_epoch == 2;
    if (i > 0) {
      ok = ok && rows[i].bytes_total > rows[i - 1].bytes_total;
      ok = ok && rows[i].ratio_vs_prev >= 3.0;
      os << "ratio(" << rows[i - 1].n << "->" << rows[i].n << ")=" << std::fixed
         << std::setprecision(2) << rows[i].ratio_vs_prev << " ";
    }
  }
  ok = ok && secs < 300.0;
  os << "(" << static_cast<int>(secs) << "s < 300s)";
  detail = os.str();
  return ok;
}

// ---- criterion 11: determinism ----
bool c11_determinism(std::string& detail) {
  auto bytes = [](const SimResult& r) { return encode_transcript_file(r.transcript()); };
  SimResult a = quick_sim(test::tiny_params(), 5, 2, 3, 321);
  SimResult b = quick_sim(test::tiny_params(), 5, 2, 3, 321);
  if (bytes(a) != bytes(b)) {
    detail = "same-seed runs differ";
    return false;
  }
  NetworkConfig cfg;
  cfg.n = 5;
  cfg.t = 2;
  cfg.seed = 321;
  cfg.threads = 4;
  SimResult c = sim_run(cfg, test::tiny_params(), 3);
  if (bytes(a) != bytes(c)) {
    detail = "parallel mode differs from single-threaded";
    return false;
  }
  SimResult d = quick_sim(test::toy_params(), 4, 1, 1, 7);
  SimResult e = quick_sim(test::toy_params(), 4, 1, 1, 7);
  if (bytes(d) != bytes(e)) {
    detail = "toy-params runs differ";
    return false;
  }
  detail = "byte-identical transcripts across reruns and across thread counts";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  std::vector<Criterion> criteria = {
      {1, "two rounds per output", c1_two_rounds},
      {2, "tolerates any t < n/2", c2_fault_tolerance},
      {3, "output law vs Lagrange oracle", c3_output_law},
      {4, "correctness game", c4_correctness_game},
      {5, "verifiability game (12 cheats)", c5_verifiability_game},
      {6, "PKE round-trip + noise budget", c6_pke},
      {7, "Shamir/parity exhaustive at p=7", c7_shamir_exhaustive},
      {8, "mutation rejection (15 classes)", c8_mutations},
      {9, "uniformity proxy at p=31", c9_uniformity},
      {10, "communication scaling", c10_scaling},
      {11, "deterministic transcripts", c11_determinism},
  };

  bool all_ok = true;
  for (auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%2d] %-34s %s  (%.1fs) %s\n", c.id, c.name.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  std::printf("acceptance: %s\n", all_ok ? "ALL PASS" : "FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
