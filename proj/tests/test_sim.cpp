#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "lbcn/sim.hpp"

using namespace lbcn;

namespace {

Bytes records_bytes(const SimResult& r) { return encode_transcript_file(r.transcript()); }

}  // namespace

TEST_CASE("bus enforces the round barrier") {
  BroadcastBus bus;
  bus.begin_round();
  bus.post(2, Bytes{1, 2});
  bus.post(1, Bytes{3});
  CHECK_THROWS_AS(bus.round_messages(0), Error);  // not committed yet
  bus.barrier();
  const auto& msgs = bus.round_messages(0);
  REQUIRE(msgs.size() == 2);
  CHECK(msgs[0].sender == 1);  // canonical commit order
  CHECK(msgs[1].sender == 2);
  CHECK_THROWS_AS(bus.post(3, Bytes{}), Error);  // no round open
  bus.begin_round();
  bus.post(3, Bytes{9});
  CHECK_THROWS_AS(bus.round_messages(1), Error);  // same-round read is a barrier violation
  bus.barrier();
  CHECK(bus.round_messages(1).size() == 1);
}

TEST_CASE("honest run: ten epochs, two rounds each, verifiable records") {
  SimResult res = test::quick_sim(test::tiny_params(), 4, 1, 10, 77);
  CHECK(res.records.size() == 10);
  CHECK(res.metrics.rounds_per_epoch == 2);
  CHECK(res.metrics.init_rounds == 1);
  for (const auto& rec : res.records) {
    REQUIRE(rec.omega.has_value());
    CHECK(drng_ver(res.pp, res.directory, rec));
    CHECK(test::oracle_output_law(res.pp, rec));
  }
  // per-phase bytes sum to the total
  std::uint64_t sum = 0;
  for (const auto& [phase, b] : res.metrics.bytes_by_phase) sum += b;
  CHECK(sum == res.metrics.bytes_total);
  CHECK(res.metrics.wallclock_model_ms ==
        doctest::Approx((1 + 2 * 10) * 100.0));
}

TEST_CASE("determinism across runs and across thread counts") {
  SimResult a = test::quick_sim(test::tiny_params(), 5, 2, 3, 5);
  SimResult b = test::quick_sim(test::tiny_params(), 5, 2, 3, 5);
  CHECK(records_bytes(a) == records_bytes(b));

  NetworkConfig cfg;
  cfg.n = 5;
  cfg.t = 2;
  cfg.seed = 5;
  cfg.threads = 4;
  SimResult c = sim_run(cfg, test::tiny_params(), 3);
  CHECK(records_bytes(a) == records_bytes(c));

  SimResult d = test::quick_sim(test::tiny_params(), 5, 2, 3, 6);
  CHECK(records_bytes(a) != records_bytes(d));
}

TEST_CASE("config validation") {
  NetworkConfig cfg;
  cfg.n = 4;
  cfg.t = 2;  // t >= n/2
  CHECK_THROWS_AS(sim_run(cfg, test::tiny_params(), 1), Error);
  cfg.t = 1;
  cfg.strategy = "no-such-strategy";
  CHECK_THROWS_AS(sim_run(cfg, test::tiny_params(), 1), Error);
  cfg.strategy = "honest";
  cfg.corrupted = {9};
  CHECK_THROWS_AS(sim_run(cfg, test::tiny_params(), 1), Error);
}

TEST_CASE("withholding reveals cannot stop the output while |C| <= t") {
  SimResult res = test::quick_sim(test::tiny_params(), 5, 2, 3, 11, "withhold-reveals", {2, 4});
  for (const auto& rec : res.records) {
    REQUIRE(rec.omega.has_value());
    // every dealer still reconstructs from the three honest holders
    for (const auto& [dealer, holders] : rec.share_sets) CHECK(holders.size() == 3);
    CHECK(drng_ver(res.pp, res.directory, rec));
  }
}

TEST_CASE("withholding reveals with t+1 corruptions forces bottom") {
  SimResult res = test::quick_sim(test::tiny_params(), 5, 2, 2, 11, "withhold-reveals", {2, 4, 5});
  for (const auto& rec : res.records) {
    CHECK_FALSE(rec.omega.has_value());
    CHECK(drng_ver(res.pp, res.directory, rec));  // a bottom record still verifies
  }
}

TEST_CASE("strategy semantics at n=5, t=2") {
  const auto honest = test::quick_sim(test::tiny_params(), 5, 2, 2, 13);

  SUBCASE("last-reveal-withhold leaves omega unchanged") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "last-reveal-withhold", {5});
    REQUIRE(res.records.size() == 2);
    for (std::size_t e = 0; e < 2; ++e) {
      CHECK(res.records[e].omega == honest.records[e].omega);
    }
  }
  SUBCASE("honest-but-silent leaves omega unchanged") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "honest-but-silent", {1, 2});
    for (std::size_t e = 0; e < 2; ++e) {
      CHECK(res.records[e].omega == honest.records[e].omega);
      CHECK(drng_ver(res.pp, res.directory, res.records[e]));
    }
  }
  SUBCASE("wrong-share-value reveals are rejected but reconstruction survives") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "wrong-share-value", {3});
    for (const auto& rec : res.records) {
      CHECK(rec.omega == honest.records[rec.epoch].omega);
      for (const auto& [dealer, holders] : rec.share_sets) {
        CHECK(holders.size() == 4);  // corrupt holder's reveals all fail decver
        CHECK(std::find(holders.begin(), holders.end(), 3) == holders.end());
      }
      CHECK(drng_ver(res.pp, res.directory, rec));
    }
  }
  SUBCASE("bad-share-proof excludes the dealer but output is produced") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "bad-share-proof", {3});
    for (const auto& rec : res.records) {
      REQUIRE(rec.omega.has_value());
      CHECK(rec.qual_prime == std::vector<std::uint64_t>{1, 2, 4, 5});
      CHECK(drng_ver(res.pp, res.directory, rec));
    }
  }
  SUBCASE("splice-transcripts excludes the dealer") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "splice-transcripts", {2});
    for (const auto& rec : res.records) {
      REQUIRE(rec.omega.has_value());
      CHECK(rec.qual_prime == std::vector<std::uint64_t>{1, 3, 4, 5});
      CHECK(drng_ver(res.pp, res.directory, rec));
    }
  }
  SUBCASE("overflow-claims are rejected like any invalid reveal") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "overflow-claims", {4});
    for (const auto& rec : res.records) {
      CHECK(rec.omega == honest.records[rec.epoch].omega);
      for (const auto& [dealer, holders] : rec.share_sets) {
        CHECK(std::find(holders.begin(), holders.end(), 4) == holders.end());
      }
      CHECK(drng_ver(res.pp, res.directory, rec));
    }
  }
  SUBCASE("bad-key-proof shrinks QUAL at init") {
    auto res = test::quick_sim(test::tiny_params(), 5, 2, 2, 13, "bad-key-proof", {2});
    CHECK(res.directory.qual == std::vector<std::uint64_t>{1, 3, 4, 5});
    for (const auto& rec : res.records) {
      REQUIRE(rec.omega.has_value());
      CHECK(drng_ver(res.pp, res.directory, rec));
    }
  }
}

TEST_CASE("unknown strategy in adversary_act") {
  AdversaryView view{};
  CHECK_THROWS_AS(adversary_act("martian", view), Error);
  CHECK(adversary_strategies().size() == 7);
}

TEST_CASE("gossip bytes are accounted but add no round") {
  NetworkConfig cfg;
  cfg.n = 4;
  cfg.t = 1;
  cfg.seed = 3;
  cfg.gossip = true;
  SimResult res = sim_run(cfg, test::tiny_params(), 2);
  CHECK(res.metrics.rounds_per_epoch == 2);
  CHECK(res.metrics.bytes_by_phase.count("gossip") == 1);
  CHECK(res.metrics.bytes_by_phase.at("gossip") > 0);
}

TEST_CASE("scaling table: quadratic trend") {
  auto rows = test::quick_sim(test::tiny_params(), 4, 1, 1, 1), _ = rows;  // warm cache
  auto table = measure_scaling(test::tiny_params(), {4, 8}, 21);
  REQUIRE(table.size() == 2);
  CHECK(table[0].rounds_per_epoch == 2);
  CHECK(table[1].rounds_per_epoch == 2);
  CHECK(table[1].bytes_total > table[0].bytes_total);
  CHECK(table[1].ratio_vs_prev >= 3.0);
  CHECK(table[0].bytes_init + table[0].bytes_share + table[0].bytes_reveal ==
        table[0].bytes_total);
  std::string text = format_scaling_table(table);
  CHECK(text.find("bytes_total") != std::string::npos);

  CHECK_THROWS_AS(measure_scaling(test::tiny_params(), {8, 4}, 1), Error);
}

TEST_CASE("honest projection equality when corrupt secrets stay in QUAL'") {
  for (const char* strategy : {"honest-but-silent", "wrong-share-value", "last-reveal-withhold",
                               "overflow-claims"}) {
    CAPTURE(strategy);
    auto honest = test::quick_sim(test::tiny_params(), 4, 1, 2, 31);
    auto adv = test::quick_sim(test::tiny_params(), 4, 1, 2, 31, strategy, {2});
    for (std::size_t e = 0; e < 2; ++e) {
      CHECK(adv.records[e].omega == honest.records[e].omega);
    }
  }
}
