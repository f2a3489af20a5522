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

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "bqc/fkproto/compose.hpp"
#include "bqc/fkproto/graph.hpp"
#include "bqc/fkproto/pattern.hpp"
#include "bqc/fkproto/protocol.hpp"
#include "bqc/fkproto/roles.hpp"
#include "bqc/fkproto/serialize.hpp"
#include "bqc/qsim/gates.hpp"
#include "bqc/qsim/measure.hpp"
#include "test_util.hpp"

using namespace bqc;
using namespace bqc::fkproto;
using adversary::ChannelModel;
using adversary::Stage;
using qsim::PureState;
using qsim::RandomStream;
using namespace bqc::test;

namespace {

using RoleMap = std::vector<Role>;

/** Every role map with n_t traps whose trap neighbours are dummies, by exhaustive search. */
std::set<RoleMap> brute_force_maps(const GraphSpec& g, int n_t, std::optional<int> n_d) {
  std::set<RoleMap> out;
  const auto nb = g.neighbors();
  long total = 1;
  for (int v = 0; v < g.n_vertices; ++v) total *= 3;
  for (long code = 0; code < total; ++code) {
    RoleMap m(g.n_vertices);
    long c = code;
    for (int v = 0; v < g.n_vertices; ++v) {
      m[v] = static_cast<Role>(c % 3);
      c /= 3;
    }
    if (std::count(m.begin(), m.end(), Role::Trap) != n_t) continue;
    std::set<int> hood;
    bool ok = true;
    for (int v = 0; v < g.n_vertices; ++v) {
      if (m[v] != Role::Trap) continue;
      for (int u : nb[v]) {
        if (m[u] != Role::Dummy) ok = false;
        hood.insert(u);
      }
    }
    if (!ok) continue;
    const long dummies = std::count(m.begin(), m.end(), Role::Dummy);
    if (n_d ? dummies != *n_d : dummies != static_cast<long>(hood.size())) continue;
    out.insert(m);
  }
  return out;
}

GraphSpec with_roles(GraphSpec g, RoleMap roles) {
  g.roles = std::move(roles);
  return g;
}

/** Graph of m computation vertices in a line. */
GraphSpec computation_path(int m) {
  return with_roles(path_graph(m), RoleMap(m, Role::Computation));
}

/** out = |<1| H Rz(phi_last) ... H Rz(phi_0) |+>|^2. */
double direct_chain_one(const std::vector<int>& phi) {
  PureState psi = PureState::plus_k(0);
  for (int a : phi) {
    psi = qsim::apply_gate(std::move(psi), qsim::Gate::rz(a * std::numbers::pi / 4), {0});
    psi = qsim::apply_gate(std::move(psi), qsim::Gate::h(), {0});
  }
  return qsim::project_discard(psi, 0, qsim::Basis::Z, 1).probability;
}

RoleMap roles_of(std::initializer_list<char> s) {
  RoleMap out;
  for (char c : s) out.push_back(parse_role(std::string(1, c)));
  return out;
}

}  // namespace

TEST_CASE("dotted complete graphs", "[fkproto][graph]") {
  GraphSpec g2 = build_dotted_complete(2);
  CHECK(g2.n_vertices == 3);
  CHECK(g2.edges.size() == 2);
  CHECK(connected_components(g2).size() == 1);
  const auto nb = g2.neighbors();
  CHECK(nb[2].size() == 2);

  GraphSpec g3 = build_dotted_complete(3);
  CHECK(g3.n_vertices == 6);
  CHECK(g3.edges.size() == 6);
  for (int v = 0; v < 3; ++v) CHECK(g3.neighbors()[v].size() == 2);

  GraphSpec g4 = build_dotted_complete(4);
  CHECK(g4.n_vertices == 10);
  CHECK(g4.edges.size() == 12);
  for (int v = 0; v < 4; ++v) CHECK(g4.neighbors()[v].size() == 3);
  for (int v = 4; v < 10; ++v) CHECK(g4.neighbors()[v].size() == 2);

  CHECK_THROWS_AS(build_dotted_complete(5), std::invalid_argument);
  CHECK_THROWS_AS(build_dotted_complete(1), std::invalid_argument);
  CHECK(connected_components(edgeless_graph(4)).size() == 4);
}

TEST_CASE("graph validation reports role violations", "[fkproto][graph]") {
  CHECK_NOTHROW(with_roles(path_graph(3), roles_of({'t', 'd', 'c'})).validate());
  CHECK_THROWS_AS(with_roles(path_graph(3), roles_of({'t', 'c', 'c'})).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS(with_roles(path_graph(3), roles_of({'t', 'd'})).validate(),
                  std::invalid_argument);
  GraphSpec bad = path_graph(3);
  bad.edges.push_back({1, 1});
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK(parse_role("trap") == Role::Trap);
  CHECK_THROWS_AS(parse_role("x"), std::invalid_argument);
}

TEST_CASE("path of three: trap placement rules", "[fkproto][roles]") {
  auto maps = feasible_role_maps(path_graph(3), 1);
  std::set<RoleMap> got(maps.begin(), maps.end());
  std::set<RoleMap> want = {roles_of({'t', 'd', 'c'}), roles_of({'d', 't', 'd'}),
                            roles_of({'c', 'd', 't'})};
  CHECK(got == want);
  CHECK(feasible_role_maps(path_graph(3), 0).size() == 1);
  CHECK(feasible_role_maps(path_graph(3), 0, 1).size() == 3);
  CHECK(feasible_role_maps(path_graph(3), 2).size() == 1);  // both ends, middle dummy
  CHECK(feasible_role_maps(path_graph(3), 3).empty());
  CHECK_THROWS_AS(RoleSampler(path_graph(3), 3), std::invalid_argument);
}

TEST_CASE("feasible maps agree with exhaustive search", "[fkproto][roles][property]") {
  const std::vector<GraphSpec> graphs = {build_dotted_complete(3), cycle_graph(6), path_graph(5),
                                         edgeless_graph(4), build_dotted_complete(2)};
  for (const auto& g : graphs) {
    for (int n_t = 0; n_t <= 3; ++n_t) {
      std::vector<std::optional<int>> nds = {std::nullopt, 1, 2, 3};
      for (auto n_d : nds) {
        if (n_d && *n_d + n_t > g.n_vertices) {
          CHECK_THROWS_AS(feasible_role_maps(g, n_t, n_d), std::invalid_argument);
          continue;
        }
        auto maps = feasible_role_maps(g, n_t, n_d);
        std::set<RoleMap> got(maps.begin(), maps.end());
        CHECK(got.size() == maps.size());
        CHECK(got == brute_force_maps(g, n_t, n_d));
        if (!maps.empty()) CHECK(RoleSampler(g, n_t, n_d).count() == Catch::Approx(maps.size()));
      }
    }
  }
}

TEST_CASE("six-cycle with two traps and three dummies", "[fkproto][roles]") {
  RoleSampler rs(cycle_graph(6), 2, 3);
  CHECK(rs.count() == 6.0);
  for (const auto& m : feasible_role_maps(cycle_graph(6), 2, 3)) {
    std::vector<int> traps;
    for (int v = 0; v < 6; ++v) {
      if (m[v] == Role::Trap) traps.push_back(v);
    }
    REQUIRE(traps.size() == 2);
    const int d = (traps[1] - traps[0] + 6) % 6;
    CHECK((d == 2 || d == 4));
    CHECK(std::count(m.begin(), m.end(), Role::Computation) == 1);
  }
}

TEST_CASE("role sampler is uniform over feasible maps", "[fkproto][roles][statistical]") {
  struct Case {
    GraphSpec g;
    int n_t;
    std::optional<int> n_d;
    std::size_t count;
  };
  // Dotted triangle with one trap and three dummies: 3 * 3 primal + 3 * 3 subdividing.
  const std::vector<Case> cases = {{cycle_graph(6), 2, 3, 6},
                                   {build_dotted_complete(3), 1, 3, 18},
                                   {path_graph(3), 1, std::nullopt, 3}};
  RandomStream rng(77);
  for (const auto& c : cases) {
    auto maps = feasible_role_maps(c.g, c.n_t, c.n_d);
    REQUIRE(maps.size() == c.count);
    RoleSampler rs(c.g, c.n_t, c.n_d);
    std::map<RoleMap, double> freq;
    const int n = 18000;
    for (int i = 0; i < n; ++i) {
      GraphSpec s = rs.sample(rng);
      CHECK_NOTHROW(s.validate());
      freq[s.roles] += 1;
    }
    CHECK(freq.size() == c.count);
    for (const auto& m : maps) CHECK(within_4sigma(freq[m], n, 1.0 / static_cast<double>(c.count)));
  }
}

TEST_CASE("trap partition covers the vertices", "[fkproto][roles]") {
  RandomStream rng(3);
  RoleSampler rs(cycle_graph(6), 2, 3);
  for (int i = 0; i < 50; ++i) {
    GraphSpec g = rs.sample(rng);
    REQUIRE(g.partition.size() == 2);
    std::set<int> seen;
    for (const auto& part : g.partition) {
      CHECK(part.size() == 3);
      int traps = 0;
      for (int v : part) {
        seen.insert(v);
        traps += g.roles[v] == Role::Trap;
      }
      CHECK(traps == 1);
    }
    CHECK(seen.size() == 6);
  }
  // 5 - 2 is not a multiple of 2.
  GraphSpec odd = assign_roles(edgeless_graph(5), 2, rng, 1);
  CHECK(odd.partition.empty());
}

TEST_CASE("delta and adaptation arithmetic", "[fkproto][pattern]") {
  const double pi = std::numbers::pi;
  CHECK(compute_delta(0, pi / 4, 0, 0) == Catch::Approx(pi / 4));
  CHECK(compute_delta(1, 0, 1, 1) == Catch::Approx(pi / 4));
  CHECK(compute_delta(4, 0, 0, 0) == Catch::Approx(pi));
  CHECK(compute_delta(7, 3 * pi / 4, 1, 0) == Catch::Approx(3 * pi / 2));
  CHECK(compute_delta(0, -pi / 4, 0, 0) == Catch::Approx(7 * pi / 4));
  CHECK_THROWS_AS(compute_delta(0, 0.3, 0, 0), std::invalid_argument);
  CHECK(compute_delta_units(3, 2, 1, 3) == 5);
  CHECK(adapt_phi(1, 0, 0) == 1);
  CHECK(adapt_phi(1, 1, 0) == 7);
  CHECK(adapt_phi(1, 0, 1) == 5);
  CHECK(adapt_phi(3, 1, 1) == 1);
}

TEST_CASE("pattern placement and validation", "[fkproto][pattern]") {
  GraphSpec g = with_roles(path_graph(5), roles_of({'c', 'd', 't', 'd', 'c'}));
  Program prog = Program::linear_cluster({2, 5});
  Pattern pat = make_pattern(g, prog);
  CHECK(pat.order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(pat.phi[0] == 2);
  CHECK(pat.phi[4] == 5);
  CHECK(pat.phi[2] == 0);
  CHECK(pat.x_deps[4] == std::vector<int>{0});
  CHECK(pat.outputs == std::vector<int>{4});
  CHECK_THROWS_AS(make_pattern(g, Program::trivial(3)), std::invalid_argument);

  Pattern bad = pat;
  bad.phi[2] = 1;
  CHECK_THROWS_AS(bad.validate(g), std::invalid_argument);
  bad = pat;
  bad.order = {4, 1, 2, 3, 0};
  CHECK_THROWS_AS(bad.validate(g), std::invalid_argument);
  Program loop = Program::trivial(2);
  loop.x_deps[0] = {1};
  CHECK_THROWS_AS(loop.validate(), std::invalid_argument);
}

TEST_CASE("linear cluster matches the direct circuit", "[fkproto][oracle]") {
  for (int m = 1; m <= 3; ++m) {
    GraphSpec g = computation_path(m);
    int combos = 1;
    for (int j = 0; j < m; ++j) combos *= 8;
    for (int code = 0; code < combos; ++code) {
      std::vector<int> phi(m);
      for (int j = 0, c = code; j < m; ++j, c /= 8) phi[j] = c % 8;
      Pattern pat = make_pattern(g, Program::linear_cluster(phi));
      OutputDistribution d = reference_distribution(g, pat);
      const double p1 = direct_chain_one(phi);
      CHECK(d[{1}] == Catch::Approx(p1).margin(1e-9));
      CHECK(d[{0}] == Catch::Approx(1 - p1).margin(1e-9));
    }
  }
}

TEST_CASE("blind runs reproduce the reference distribution", "[fkproto][statistical]") {
  RandomStream rng(2024);
  // Chain c-c-c with a trap hanging off a dummy on the side: c0 c1 c2 d3 t4.
  GraphSpec g = with_roles(path_graph(5), roles_of({'c', 'c', 'c', 'd', 't'}));
  for (std::vector<int> phi : {std::vector<int>{1, 3, 0}, std::vector<int>{2, 2, 6}}) {
    Pattern pat = make_pattern(g, Program::linear_cluster(phi));
    OutputDistribution ref = reference_distribution(g, pat);
    const int n = 6000;
    double ones = 0;
    for (int i = 0; i < n; ++i) {
      FkResult r = run_fk(g, pat, prepare_direct(g, rng), ChannelModel::honest(), rng);
      REQUIRE(r.accepted);
      ones += r.outputs[0];
    }
    CHECK(within_4sigma(ones, n, ref[{1}]));
  }
}

TEST_CASE("honest traps never fail", "[fkproto][property]") {
  RandomStream rng(11);
  const std::vector<RoleSampler> cases = {RoleSampler(cycle_graph(6), 2, 3),
                                          RoleSampler(build_dotted_complete(3), 1),
                                          RoleSampler(build_dotted_complete(4), 1)};
  for (const auto& rs : cases) {
    for (int i = 0; i < 3334; ++i) {
      GraphSpec g = rs.sample(rng);
      Program prog = Program::trivial(g.count(Role::Computation));
      for (auto& a : prog.phi) a = static_cast<int>(rng.below(8));
      FkResult r = run_fk(g, make_pattern(g, prog), prepare_direct(g, rng),
                          ChannelModel::honest(), rng);
      REQUIRE(r.accepted);
      for (const auto& t : r.traps) CHECK(t.b == t.r);
    }
  }
}

TEST_CASE("attacks on a trap are always caught", "[fkproto]") {
  RandomStream rng(5);
  GraphSpec g = with_roles(path_graph(3), roles_of({'t', 'd', 'c'}));
  Pattern pat = make_pattern(g, Program::trivial(1));
  auto run = [&](const ChannelModel& m) {
    int acc = 0;
    for (int i = 0; i < 500; ++i) {
      FkResult r = run_fk(g, pat, prepare_direct(g, rng), m, rng);
      bool all = true;
      for (const auto& t : r.traps) all = all && t.passed();
      CHECK(r.accepted == all);
      acc += r.accepted;
    }
    return acc;
  };
  using adversary::PauliAttack;
  const auto x = qsim::PauliString::parse("X");
  const auto z = qsim::PauliString::parse("Z");
  CHECK(run(ChannelModel({PauliAttack{Stage::Measurement, {0}, x}})) == 0);
  CHECK(run(ChannelModel({PauliAttack{Stage::GraphState, {0}, z}})) == 0);
  // After the CZ layer a dummy flip no longer reaches the trap.
  CHECK(run(ChannelModel({PauliAttack{Stage::GraphState, {1}, x}})) == 500);
  CHECK(run(ChannelModel({PauliAttack{Stage::Measurement, {2}, x}})) == 500);
  CHECK(run(ChannelModel({PauliAttack{Stage::GraphState, {1}, z}})) == 500);
}

TEST_CASE("dummy neighbours are compensated in delta", "[fkproto][property]") {
  // c0 - d1 - c2 with a trap t3 on d1: the dummy's bit must not change any readout.
  GraphSpec g = with_roles(GraphSpec{4, {{0, 1}, {1, 2}, {1, 3}}, {}, {}},
                           roles_of({'c', 'd', 'c', 't'}));
  Program prog = Program::trivial(2);
  prog.phi = {1, 6};
  Pattern pat = make_pattern(g, prog);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::vector<FkResult> rs;
    for (int z = 0; z < 2; ++z) {
      RandomStream prep(seed, 1);
      std::vector<PreparedQubit> q = prepare_direct(g, prep);
      q[1].value = z;
      q[1].state = PureState::z_state(z);
      RandomStream rng(seed, 2);
      rs.push_back(run_fk(g, pat, std::move(q), ChannelModel::honest(), rng));
      CHECK(rs.back().accepted);
    }
    CHECK(rs[0].b == rs[1].b);
    for (int v : {0, 2, 3}) CHECK((rs[1].delta[v] - rs[0].delta[v] + 8) % 8 == 4);
    CHECK(rs[1].delta[1] == rs[0].delta[1]);
  }
}

TEST_CASE("transmitted angles are uniform for every role", "[fkproto][statistical]") {
  RandomStream rng(99);
  RoleSampler rs(cycle_graph(6), 2, 3);
  std::map<Role, std::vector<double>> counts;
  for (Role r : {Role::Computation, Role::Trap, Role::Dummy}) counts[r].assign(8, 0.0);
  Program prog = Program::trivial(1);
  prog.phi = {3};
  for (int i = 0; i < 8000; ++i) {
    GraphSpec g = rs.sample(rng);
    FkResult r = run_fk(g, make_pattern(g, prog), prepare_direct(g, rng), ChannelModel::honest(),
                        rng);
    for (int v = 0; v < 6; ++v) counts[g.roles[v]][r.delta[v]] += 1;
  }
  for (const auto& [role, c] : counts) {
    INFO(role_name(role));
    CHECK(uniform_chi2_pvalue(c) > kFourSigmaP);
  }
}

TEST_CASE("reference distributions", "[fkproto][oracle]") {
  GraphSpec g = with_roles(edgeless_graph(3), roles_of({'c', 't', 'c'}));
  Program prog = Program::trivial(2);
  prog.phi = {0, 4};
  Pattern pat = make_pattern(g, prog);
  auto det = deterministic_reference(g, pat);
  REQUIRE(det);
  CHECK(*det == std::vector<int>{0, 1});
  prog.phi = {2, 0};
  OutputDistribution d = reference_distribution(g, make_pattern(g, prog));
  CHECK(d[{0, 0}] == Catch::Approx(0.5));
  CHECK(d[{1, 0}] == Catch::Approx(0.5));
  CHECK_FALSE(deterministic_reference(g, make_pattern(g, prog)));
}

TEST_CASE("parameter relation", "[fkproto][compose]") {
  CHECK(solve_p_prime(6, 3, 0.4) == Catch::Approx(0.21875).epsilon(1e-12));
  CHECK(solve_p(6, 3, 0.21875) == Catch::Approx(0.4).epsilon(1e-12));
  CHECK_NOTHROW(check_parameter_relation(6, 3, 0.4, 0.21875));
  CHECK_THROWS_AS(check_parameter_relation(6, 2, 0.4, 0.21875), std::invalid_argument);
  CHECK_THROWS_AS(solve_p_prime(6, 0, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(solve_p_prime(6, 3, 0.3), std::invalid_argument);  // needs p > 0.3536
  CHECK(solve_p_prime(6, 3, 0.3536) < 1e-3);
  for (double p : {0.36, 0.4, 0.45, 0.49}) {
    const double pp = solve_p_prime(10, 5, p);
    CHECK(z_label_probability(p, pp) == Catch::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("expected gadget counts", "[fkproto][compose][oracle]") {
  CHECK(expected_accepted_gadgets(3, 3, 0.5) == Catch::Approx(7.875).epsilon(1e-12));
  CHECK(expected_accepted_gadgets(2, 5, 0.3) == Catch::Approx(9.10367380952381).epsilon(1e-12));
  CHECK(expected_accepted_gadgets(0, 4, 0.3) == Catch::Approx(4 / 0.7));
  CHECK(expected_gadget_runs(6, 3, 0.4, 0.21875) == Catch::Approx(126.0).epsilon(1e-12));
  CHECK_THROWS_AS(expected_accepted_gadgets(1, 0, 0.0), std::invalid_argument);
}

TEST_CASE("composed protocol accepts honest runs", "[fkproto][compose][statistical]") {
  RandomStream rng(31);
  RoleSampler rs(cycle_graph(6), 2, 3);
  Program prog = Program::trivial(1);
  prog.phi = {4};
  ComposeConfig cfg;
  const int n = 600;
  double sum = 0, sumsq = 0;
  for (int i = 0; i < n; ++i) {
    ComposeResult r = compose_protocol(rs, prog, cfg, ChannelModel::honest(), rng);
    REQUIRE(r.fk.accepted);
    CHECK(r.fk.outputs == std::vector<int>{1});
    CHECK(r.accepted_gadgets >= 6);
    sum += static_cast<double>(r.gadget_runs);
    sumsq += static_cast<double>(r.gadget_runs) * static_cast<double>(r.gadget_runs);
  }
  const double mean = sum / n;
  const double sd = std::sqrt((sumsq / n - mean * mean) / n);
  CHECK(std::abs(mean - 126.0) <= 4 * sd);

  RoleSampler none(edgeless_graph(3), 1, 0);
  CHECK_THROWS_AS(compose_protocol(none, Program::trivial(2), cfg, ChannelModel::honest(), rng),
                  std::invalid_argument);
}

TEST_CASE("depolarized gadget outputs: acceptance oracle", "[fkproto][compose][statistical]") {
  // Each trap flips with 2e/3 from its own qubit and from every dummy neighbour hit by X or Y.
  const double eps = 0.15, q = 2 * eps / 3;
  GraphSpec g = with_roles(cycle_graph(6), roles_of({'t', 'd', 't', 'd', 'c', 'd'}));
  const auto nb = g.neighbors();
  const auto dummies = g.vertices_with(Role::Dummy);
  const auto traps = g.vertices_with(Role::Trap);
  double exact = 0;
  for (int mask = 0; mask < (1 << (dummies.size() + traps.size())); ++mask) {
    std::map<int, int> flip;
    double w = 1;
    int bit = 0;
    for (int v : dummies) w *= ((flip[v] = (mask >> bit++) & 1)) ? q : 1 - q;
    for (int v : traps) w *= ((flip[v] = (mask >> bit++) & 1)) ? q : 1 - q;
    bool ok = true;
    for (int t : traps) {
      int par = flip[t];
      for (int u : nb[t]) par ^= flip[u];
      ok = ok && par == 0;
    }
    if (ok) exact += w;
  }
  // All six role maps are rotations of one another.
  RandomStream rng(8);
  RoleSampler rs(cycle_graph(6), 2, 3);
  ChannelModel noise({adversary::Depolarizing{eps, Stage::GadgetOutput}});
  const int n = 3000;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    acc += compose_protocol(rs, Program::trivial(1), ComposeConfig{}, noise, rng).fk.accepted;
  }
  CHECK(within_4sigma(acc, n, exact));
  CHECK(exact < 0.85);
}

TEST_CASE("json round trips", "[fkproto][serialize]") {
  GraphSpec g = with_roles(cycle_graph(6), roles_of({'t', 'd', 't', 'd', 'c', 'd'}));
  GraphSpec back = graph_from_json(graph_to_json(g));
  CHECK(back.n_vertices == 6);
  CHECK(back.edges == g.edges);
  CHECK(back.roles == g.roles);
  CHECK(graph_from_json(nlohmann::json::parse(R"({"family":"dotted_complete","n":3})"))
            .n_vertices == 6);
  CHECK_THROWS(graph_from_json(nlohmann::json::parse(R"({"vertices":2,"edges":[[0,5]]})")));

  Program prog = Program::linear_cluster({1, 2, 3});
  Program pb = program_from_json(program_to_json(prog));
  CHECK(pb.phi == prog.phi);
  CHECK(pb.x_deps == prog.x_deps);
  CHECK(pb.z_deps == prog.z_deps);
  CHECK(pb.outputs == prog.outputs);
  CHECK(program_from_json(nlohmann::json::parse(R"({"phi":[0,1]})")).outputs ==
        std::vector<int>{0, 1});

  GraphSpec line = computation_path(3);
  Pattern pat = make_pattern(line, prog);
  Pattern qb = pattern_from_json(pattern_to_json(pat));
  CHECK(qb.order == pat.order);
  CHECK(qb.phi == pat.phi);
  CHECK(qb.x_deps == pat.x_deps);
  CHECK(qb.outputs == pat.outputs);
}
