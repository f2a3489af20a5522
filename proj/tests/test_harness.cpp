// Copyright 2026 The bqcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "bqc/adversary/serialize.hpp"
#include "bqc/harness/cli.hpp"
#include "bqc/harness/config.hpp"
#include "bqc/harness/experiments.hpp"
#include "bqc/harness/stats.hpp"

using namespace bqc;
using namespace bqc::harness;
using adversary::ChannelModel;
using adversary::Stage;
using fkproto::RoleSampler;

namespace {

RunConfig make(Experiment e, nlohmann::json extra = nlohmann::json::object()) {
  extra["experiment"] = experiment_name(e);
  return config_from_json(extra);
}

ChannelModel random_pauli(Stage stage, const char* letter, int count) {
  return ChannelModel({adversary::RandomPauliAttack{stage, qsim::parse_letter(letter), count}});
}

}  // namespace

TEST_CASE("proportion estimates carry guarded intervals", "[harness][stats]") {
  Estimate e = proportion(30, 100);
  CHECK(e.estimate == Catch::Approx(0.3));
  CHECK(e.std_error == Catch::Approx(std::sqrt(0.21 / 100)));
  CHECK(e.ci_lo < 0.3);
  CHECK(e.ci_hi > 0.3);
  CHECK(e.ci_hi - e.ci_lo == Catch::Approx(2 * (1.959963984540054 * e.std_error + 0.005)));
  Estimate zero = proportion(0, 200);
  CHECK(zero.ci_lo == 0.0);
  CHECK(zero.ci_hi == Catch::Approx(0.0025));
  Estimate all = proportion(200, 200);
  CHECK(all.ci_hi == 1.0);
  CHECK(all.ci_lo < 1.0);
  CHECK_THROWS_AS(proportion(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(proportion(0, 0), std::invalid_argument);
  auto j = e.to_json();
  CHECK(j.at("trials") == 100);
  CHECK(j.at("ci95").size() == 2);
}

TEST_CASE("mean estimates and sigma helpers", "[harness][stats]") {
  MeanAccumulator m;
  for (double x : {1.0, 2.0, 3.0, 4.0}) m.add(x);
  Estimate e = m.result();
  CHECK(e.estimate == Catch::Approx(2.5));
  CHECK(e.std_error == Catch::Approx(std::sqrt((5.0 / 3.0) / 4.0)));
  CHECK_FALSE(e.is_proportion());
  CHECK(within_sigma(e, 2.5 + 3.9 * e.std_error));
  CHECK_FALSE(within_sigma(e, 2.5 + 4.1 * e.std_error));
  CHECK(within_sigma(proportion(500, 1000), 0.5));
  CHECK_FALSE(within_sigma(proportion(600, 1000), 0.5));
  CHECK(within_sigma(proportion(0, 1000), 0.0));
  CHECK_FALSE(within_sigma(proportion(1, 1000), 0.0));
  CHECK(below_bound(proportion(0, 10), 0.0));
  CHECK(separated(proportion(100, 1000), proportion(500, 1000)));
  CHECK_FALSE(separated(proportion(100, 1000), proportion(110, 1000)));
  CHECK(non_increasing({proportion(600, 1000), proportion(610, 1000), proportion(300, 1000)}));
  CHECK_FALSE(non_increasing({proportion(300, 1000), proportion(600, 1000)}));
}

TEST_CASE("chi-square tests", "[harness][stats]") {
  std::map<std::string, long> a = {{"x", 500}, {"y", 500}}, b = {{"x", 250}, {"y", 250}};
  ChiSquare same = two_sample_chi_square(a, b);
  CHECK(same.statistic == Catch::Approx(0.0).margin(1e-12));
  CHECK(same.p_value == Catch::Approx(1.0));
  CHECK(same.passes());
  std::map<std::string, long> c = {{"x", 400}, {"y", 100}};
  CHECK_FALSE(two_sample_chi_square(a, c).passes());
  // Sparse cells are merged: 2 x 2 table with one merged cell.
  std::map<std::string, long> d = {{"x", 500}, {"y", 495}, {"r1", 3}, {"r2", 2}};
  CHECK(two_sample_chi_square(d, b).dof == 2.0);
  // 1 dof, statistic 4 -> p = 0.0455.
  ChiSquare g = goodness_of_fit({60, 40}, {0.5, 0.5});
  CHECK(g.statistic == Catch::Approx(4.0));
  CHECK(g.p_value == Catch::Approx(0.04550026389635842).epsilon(1e-9));
  CHECK(goodness_of_fit({1, 9}, {0.0, 1.0}).p_value == 0.0);
  CHECK(loglog_slope({1, 2, 4}, {3, 12, 48}) == Catch::Approx(2.0));
}

TEST_CASE("config loading enforces the parameter relation", "[harness][config]") {
  RunConfig c = make(Experiment::Compose, {{"nd", 3}});
  REQUIRE(c.p_prime);
  CHECK(c.p_prime_solved);
  CHECK(1 - 4 * (*c.p) * (*c.p) * (1 - *c.p_prime) == Catch::Approx(0.5).epsilon(1e-12));
  CHECK(config_to_json(c).at("pprime_solved") == true);
  CHECK_THROWS_AS(make(Experiment::Compose, {{"nd", 2}, {"pprime", 0.3}}), std::invalid_argument);
  CHECK_THROWS_AS(make(Experiment::Compose, {{"nd", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make(Experiment::Gadget, {{"nd", 3}, {"n", 6}, {"p", 0.25}}),
                  std::invalid_argument);  // p' would be negative
  CHECK_NOTHROW(make(Experiment::Gadget, {{"p", 0.25}, {"pprime", 0.5}}));
  CHECK_THROWS_AS(make(Experiment::Gadget, {{"bogus", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make(Experiment::Gadget, {{"p", 0.7}}), std::invalid_argument);
  CHECK_THROWS_AS(make(Experiment::Compose, {{"adversary", "nobody"}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_experiment("nothing"), std::invalid_argument);

  RunConfig dc = make(Experiment::Fk, {{"graph", "dotted_complete:3"}, {"nt", 1}});
  CHECK(dc.n == 6);
  CHECK(config_graph(dc).edges.size() == 6);
  CHECK(make(Experiment::Verify).n_d == 3);

  RunConfig back = config_from_json(config_to_json(c));
  CHECK(back.p_prime == c.p_prime);
  CHECK(back.n_d == c.n_d);
  CHECK(config_to_json(back).dump() == config_to_json(c).dump().replace(
            config_to_json(c).dump().find("\"pprime_solved\":true"), 20, "\"pprime_solved\":false"));
}

TEST_CASE("honest composed runs always accept", "[harness][acceptance]") {
  TrialStats st = estimate_acceptance(make(Experiment::Compose, {{"trials", 300}, {"seed", 4}}));
  CHECK(st.counts.at("accepted") == 300);
  CHECK(st.metrics.at("acceptance").estimate == 1.0);
  CHECK(within_sigma(st.metrics.at("gadget_runs"), st.extra.at("expected_gadget_runs").get<double>()));
}

TEST_CASE("depolarized outputs lower acceptance as traps are added", "[harness][acceptance][statistical]") {
  // Edgeless graph: each trap sees only its own qubit, flipping with 2e/3.
  const double eps = 0.05, q = 2 * eps / 3;
  std::vector<Estimate> seq;
  for (int nt = 1; nt <= 3; ++nt) {
    RunConfig c = make(Experiment::Compose,
                       {{"graph", "edgeless"}, {"nt", nt}, {"trials", 4000}, {"seed", 10 + nt},
                        {"adversary", {{"type", "depolarizing"}, {"epsilon", eps}}}});
    Estimate e = estimate_acceptance(c).metrics.at("acceptance");
    CHECK(within_sigma(e, std::pow(1 - q, nt)));
    CHECK(e.estimate > 0.0);
    CHECK(e.estimate < 1.0);
    seq.push_back(e);
  }
  CHECK(non_increasing(seq));
  CHECK(seq[2].estimate < seq[0].estimate);
}

TEST_CASE("encoded preparation raises acceptance under transmission noise", "[harness][acceptance]") {
  nlohmann::json noise = {{"type", "iid_xz"}, {"p", 0.02}};
  Estimate bare = estimate_acceptance(make(Experiment::Compose,
                                           {{"adversary", noise}, {"trials", 2000}, {"seed", 3}}))
                      .metrics.at("acceptance");
  Estimate steane =
      estimate_acceptance(make(Experiment::Compose, {{"adversary", noise},
                                                     {"code", "steane"},
                                                     {"trials", 2000},
                                                     {"seed", 3}}))
          .metrics.at("acceptance");
  CHECK(steane.estimate > bare.estimate);
  CHECK(separated(bare, steane));
}

TEST_CASE("trap-miss oracle hand values", "[harness][verify][oracle]") {
  RoleSampler cyc(fkproto::cycle_graph(6), 2, 3);
  CHECK(*trap_miss_oracle(cyc, random_pauli(Stage::Measurement, "X", 1), 1) ==
        Catch::Approx(1.0 / 6));
  CHECK(*trap_miss_oracle(cyc, random_pauli(Stage::Measurement, "X", 2), 1) ==
        Catch::Approx(3.0 / 15));
  CHECK(*trap_miss_oracle(cyc, random_pauli(Stage::Measurement, "Z", 1), 1) == 0.0);
  CHECK(*trap_miss_oracle(cyc, random_pauli(Stage::GraphState, "X", 1), 1) ==
        Catch::Approx(1.0 / 12));
  CHECK(*trap_miss_oracle(cyc, random_pauli(Stage::Measurement, "X", 5), 1) == 0.0);
  CHECK(*trap_miss_oracle(cyc, ChannelModel::honest(), 1) == 0.0);
  RoleSampler wide(fkproto::edgeless_graph(15), 5, 5);
  CHECK(*trap_miss_oracle(wide, random_pauli(Stage::Measurement, "X", 3), 3) ==
        Catch::Approx(10.0 / 455));
  // A path attaches computation vertices to each other: no oracle.
  RoleSampler path(fkproto::path_graph(6), 2, 2);
  CHECK_FALSE(trap_miss_oracle(path, random_pauli(Stage::Measurement, "X", 1), 1));
}

TEST_CASE("p_incorrect on the six-cycle", "[harness][verify][statistical]") {
  RunConfig c = make(Experiment::Verify, {{"trials", 20000}, {"seed", 2}});
  PIncorrectReport none = estimate_p_incorrect(c);
  CHECK(none.p_incorrect.successes == 0);
  CHECK(none.bound == Catch::Approx(2.0 / 3));
  c.adversary = "single_x";
  PIncorrectReport single = estimate_p_incorrect(c);
  CHECK(single.bound_ok);
  REQUIRE(single.oracle);
  CHECK(*single.oracle_ok);
  for (int m : {2, 3}) {
    c.adversary = {{"type", "random_pauli"}, {"stage", "graph_state"}, {"letter", "Y"}, {"count", m}};
    PIncorrectReport r = estimate_p_incorrect(c);
    REQUIRE(r.oracle);
    CHECK(*r.oracle_ok);
    CHECK(r.bound_ok);
  }
  c.n_t = 1;
  CHECK_THROWS_AS(estimate_p_incorrect(c), std::invalid_argument);
}

TEST_CASE("p_incorrect needs a deterministic reference", "[harness][verify]") {
  RunConfig c = make(Experiment::Verify, {{"trials", 10}, {"phi", {2}}});
  CHECK_THROWS_AS(estimate_p_incorrect(c), std::invalid_argument);
}

TEST_CASE("majority decoding at d = 3", "[harness][verify][statistical]") {
  RunConfig c = make(Experiment::Verify, {{"graph", "edgeless"},
                                          {"n", 15},
                                          {"nt", 5},
                                          {"nd", 5},
                                          {"d", 3},
                                          {"trials", 20000},
                                          {"adversary",
                                           {{"type", "random_pauli"},
                                            {"stage", "measurement"},
                                            {"letter", "X"},
                                            {"count", 3}}}});
  PIncorrectReport r = estimate_p_incorrect(c);
  CHECK(r.bound == Catch::Approx(8.0 / 27));
  CHECK(r.bound_ok);
  REQUIRE(r.oracle);
  CHECK(*r.oracle == Catch::Approx(10.0 / 455));
  CHECK(*r.oracle_ok);
  c.d = 2;
  CHECK_THROWS_AS(estimate_p_incorrect(c), std::invalid_argument);
}

TEST_CASE("p_incorrect falls as traps are added", "[harness][verify][property]") {
  std::vector<Estimate> seq;
  for (int nt = 1; nt <= 3; ++nt) {
    RoleSampler rs(fkproto::edgeless_graph(6), nt, 1);
    const int n_c = 5 - nt;
    PIncorrectReport r = measure_p_incorrect(rs, fkproto::Program::trivial(n_c),
                                             random_pauli(Stage::Measurement, "X", 1), 1, 20000,
                                             40 + nt);
    CHECK(within_sigma(r.p_incorrect, n_c / 6.0));
    CHECK(r.bound_ok);
    seq.push_back(r.p_incorrect);
  }
  CHECK(non_increasing(seq));
}

TEST_CASE("blindness audit", "[harness][blindness]") {
  BlindnessReport one = blindness_audit(0.25, 0.5, 500, {all_secrets()}, {}, 9);
  REQUIRE(one.pairwise.size() == 1);
  CHECK(one.pairwise[0][0] == 0.0);
  CHECK(one.exact_distance_to_mixed < 1e-12);
  CHECK(one.distance_to_mixed > 0.0);

  BlindnessReport two =
      blindness_audit(0.25, 0.5, 3000, {wire_basis_class(2, 0), wire_basis_class(2, 1)},
                      {"Z0", "Z1"}, 10);
  CHECK(two.pairwise[0][1] == two.pairwise[1][0]);
  CHECK(two.pairwise[0][1] < 0.2);
  REQUIRE(two.transcripts.size() == 1);
  CHECK(two.transcripts[0].samples_a == 3000);
  CHECK(two.transcripts[0].chi.passes());
  CHECK_THROWS_AS(blindness_audit(0.25, 0.5, 10, {}, {"Z7"}, 1), std::invalid_argument);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(2, 2);
  b(0, 0) = 1.0;
  CHECK(trace_distance(a, b) == Catch::Approx(0.5));
}

TEST_CASE("teleported preparation matches the measured half", "[harness][teleport]") {
  TeleportReport honest = teleport_equivalence(adversary::Honest{}, 4000, 1);
  CHECK(honest.max_branch_distance() < 1e-9);
  CHECK(honest.tp_error < 1e-9);
  CHECK(honest.statistics_ok());
  for (const auto& c : honest.cases) {
    CHECK(c.oracle_same == Catch::Approx(1.0));
    CHECK(c.p2_same.successes == 4000);
    CHECK(c.p2t_same.successes == 4000);
    for (int k = 0; k < 2; ++k) {
      CHECK(within_sigma(c.p2_bits[k], 0.5));
      CHECK(within_sigma(c.p2t_bits[k], 0.5));
    }
  }
  TeleportReport pz = teleport_equivalence(adversary::preset_strategy("plus_zero"), 4000, 2);
  CHECK(pz.tp_error < 1e-9);
  CHECK(pz.statistics_ok());
  for (const auto& c : pz.cases) {
    CHECK(c.oracle_same == Catch::Approx(0.5));
    CHECK(c.p2_to_twirl < 1e-12);
    CHECK(c.p2t_to_twirl < 1e-12);
  }
  // A transmitted X shows up identically in both.
  adversary::Strategy x = adversary::PauliAttack{Stage::Transmission, {0}, qsim::PauliString::parse("X")};
  TeleportReport px = teleport_equivalence(x, 2000, 3);
  CHECK(px.statistics_ok());
  for (const auto& c : px.cases) CHECK(c.p2_to_twirl < 1e-12);
}

TEST_CASE("loss-tolerant preparation is linear in the block size", "[harness][loss]") {
  TrialStats st = loss_experiment(make(Experiment::Loss, {{"code", "steane"}, {"trials", 1500}}));
  CHECK(within_sigma(st.metrics.at("transmissions"), 14.0));
  CHECK(st.metrics.at("correct").estimate == 1.0);
  CHECK(st.extra.at("exponential_baseline") == 896.0);
  CHECK(st.extra.at("loglog_slope_in_n").get<double>() == Catch::Approx(1.0).margin(0.05));
  CHECK(within_sigma(st.metrics.at("block_transmissions"), 896.0));
}

TEST_CASE("gadget experiment reports Pr[Z | accept]", "[harness][gadget][statistical]") {
  TrialStats st = run_gadget_experiment(make(Experiment::Gadget, {{"trials", 100000}, {"seed", 5}}));
  CHECK(within_sigma(st.metrics.at("pr_z_given_accept"), 0.875));
  CHECK(within_sigma(st.metrics.at("acceptance"), 1.0 / 16));
  long total = 0;
  for (int i = 0; i < 10; ++i) total += st.counts.at("label_" + gadget::label_name(i));
  CHECK(total == st.counts.at("accepted"));
}

TEST_CASE("css sweep", "[harness][css]") {
  TrialStats st = css_logical_sweep(make(Experiment::Css, {{"trials", 20000}}));
  CHECK(st.extra.at("single_error_cases") == st.extra.at("single_error_passed"));
  CHECK(st.extra.at("single_error_cases") == 2 * 22 * 2 * 8);
  CHECK(std::abs(st.extra.at("slope").get<double>() - 2.0) < 0.3);
  const CssCheck trivial = css_single_error_check(css::CssCode::trivial());
  CHECK(trivial.passed < trivial.cases);
}

TEST_CASE("cli runs are reproducible and report errors", "[harness][cli]") {
  const auto dir = std::filesystem::temp_directory_path() / "bqc_cli_test";
  std::filesystem::remove_all(dir);
  RunConfig c = make(Experiment::Verify, {{"trials", 500}, {"seed", 7}, {"adversary", "single_x"}});
  nlohmann::json a = run_experiment(c, (dir / "a").string());
  nlohmann::json b = run_experiment(c, (dir / "b").string());
  CHECK(a.dump() == b.dump());
  std::ifstream fa(dir / "a" / "stats.json"), fb(dir / "b" / "stats.json");
  std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(!sa.empty());
  CHECK(sa == sb);
  CHECK(std::filesystem::exists(dir / "a" / "transcript.jsonl"));

  RunConfig g = make(Experiment::Gadget, {{"trials", 50}});
  run_experiment(g, (dir / "g").string());
  CHECK(std::filesystem::exists(dir / "g" / "alice.jsonl"));
  CHECK(std::filesystem::exists(dir / "g" / "bob.jsonl"));

  const char* bad[] = {"bqcsim", "compose", "--nd", "2", "--pprime", "0.3"};
  CHECK(run_cli(6, const_cast<char**>(bad)) != 0);
  const char* unknown[] = {"bqcsim", "nosuch"};
  CHECK(run_cli(2, const_cast<char**>(unknown)) != 0);
  std::filesystem::remove_all(dir);
}
