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

#include "bqc/fkproto/protocol.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "bqc/qsim/gates.hpp"
#include "bqc/qsim/measure.hpp"

namespace bqc::fkproto {

using adversary::BobView;
using adversary::Stage;
using qsim::Gate;
using qsim::PureState;
using qsim::RandomStream;

namespace {

struct Block {
  PureState state;
  std::vector<int> labels;
};

bool needs_single_block(const adversary::ChannelModel& m) {
  for (const auto& s : m.strategies()) {
    const auto* u = std::get_if<adversary::UnitaryDeviation>(&s);
    if (u && u->stage == Stage::GraphState) return true;
  }
  return false;
}

int index_of(const std::vector<int>& v, int x) {
  auto it = std::find(v.begin(), v.end(), x);
  return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

PureState rotate_for_readout(PureState s, int q, int delta_units) {
  s = qsim::apply_gate(std::move(s), Gate::rz(delta_units * std::numbers::pi / 4.0), {q});
  return qsim::apply_gate(std::move(s), Gate::h(), {q});
}

int xor_of(const std::vector<int>& deps, const std::vector<int>& s) {
  int acc = 0;
  for (int d : deps) acc ^= s[d];
  return acc;
}

}  // namespace

PreparedQubit PreparedQubit::from_label(const gadget::StateLabel& label, PureState state) {
  PreparedQubit q;
  q.state = std::move(state);
  q.z_basis = label.z_basis();
  q.value = label.z_basis() ? label.x_power : label.k();
  return q;
}

std::vector<PreparedQubit> prepare_direct(const GraphSpec& g, RandomStream& rng) {
  if (!g.has_roles()) throw std::invalid_argument("prepare_direct: graph has no roles");
  std::vector<PreparedQubit> out(g.n_vertices);
  for (int v = 0; v < g.n_vertices; ++v) {
    if (g.roles[v] == Role::Dummy) {
      out[v].z_basis = true;
      out[v].value = rng.bit();
      out[v].state = PureState::z_state(out[v].value);
    } else {
      out[v].value = static_cast<int>(rng.below(8));
      out[v].state = PureState::plus_k(out[v].value);
    }
  }
  return out;
}

FkResult run_fk(const GraphSpec& g, const Pattern& pattern, std::vector<PreparedQubit> prepared,
                const adversary::ChannelModel& adversary, RandomStream& rng) {
  g.validate();
  if (!g.has_roles()) throw std::invalid_argument("run_fk: graph has no roles");
  pattern.validate(g);
  const int n = g.n_vertices;
  if (static_cast<int>(prepared.size()) != n) {
    throw std::invalid_argument("run_fk: one prepared qubit per vertex required");
  }
  for (int v = 0; v < n; ++v) {
    if (prepared[v].z_basis != (g.roles[v] == Role::Dummy)) {
      throw std::invalid_argument("run_fk: vertex " + std::to_string(v) + " is a " +
                                  role_name(g.roles[v]) + " but received a " +
                                  (prepared[v].z_basis ? "Z-basis" : "|+_k>") + " state");
    }
    if (prepared[v].state.n_qubits() != 1) {
      throw std::invalid_argument("run_fk: prepared qubits are single qubits");
    }
  }
  const adversary::ChannelModel adv =
      adversary.restricted({Stage::GraphState, Stage::Measurement}).instantiate(n, rng);
  adv.validate(n);

  FkResult res;
  SecretRecord& sec = res.secrets;
  sec.roles = g.roles;
  sec.r.resize(n);
  sec.k_prime.resize(n);
  sec.phi.resize(n);
  sec.z.assign(n, -1);
  for (int v = 0; v < n; ++v) sec.r[v] = rng.bit();
  for (int v = 0; v < n; ++v) {
    if (g.roles[v] == Role::Dummy) {
      sec.k_prime[v] = static_cast<int>(rng.below(8));
      sec.phi[v] = static_cast<int>(rng.below(8));
      sec.z[v] = prepared[v].value;
    } else {
      sec.k_prime[v] = prepared[v].value;
      sec.phi[v] = g.roles[v] == Role::Trap ? 0 : pattern.phi[v];
    }
  }

  // Graph state, one block per component.
  std::vector<std::vector<int>> comps;
  if (needs_single_block(adv)) {
    comps.emplace_back(n);
    for (int v = 0; v < n; ++v) comps[0][v] = v;
  } else {
    comps = connected_components(g);
  }
  std::vector<Block> blocks;
  std::vector<int> block_of(n);
  for (const auto& c : comps) {
    std::vector<PureState> parts;
    for (int v : c) {
      parts.push_back(std::move(prepared[v].state));
      block_of[v] = static_cast<int>(blocks.size());
    }
    blocks.push_back({qsim::tensor(parts), c});
  }
  for (auto [u, v] : g.edges) {
    Block& b = blocks[block_of[u]];
    b.state = qsim::apply_gate(std::move(b.state), Gate::cz(),
                               {index_of(b.labels, u), index_of(b.labels, v)});
  }
  if (adv.acts_at(Stage::GraphState)) {
    for (auto& b : blocks) {
      BobView view;
      view.stage = Stage::GraphState;
      view.domain = n;
      view.labels = b.labels;
      b.state = adv.apply(Stage::GraphState, std::move(b.state), view, rng);
    }
  }

  const auto nb = g.neighbors();
  res.b.assign(n, 0);
  res.s.assign(n, 0);
  res.delta.assign(n, 0);
  for (int step = 0; step < n; ++step) {
    const int v = pattern.order[step];
    int phi = sec.phi[v];
    if (g.roles[v] == Role::Computation) {
      phi = adapt_phi(phi, xor_of(pattern.x_deps[v], res.s), xor_of(pattern.z_deps[v], res.s));
    }
    int n_z = 0;
    for (int u : nb[v]) {
      if (g.roles[u] == Role::Dummy) n_z += sec.z[u];
    }
    const int delta = compute_delta_units(sec.k_prime[v], phi, sec.r[v], n_z);
    res.delta[v] = delta;
    Block& b = blocks[block_of[v]];
    const int q = index_of(b.labels, v);
    b.state = rotate_for_readout(std::move(b.state), q, delta);
    if (adv.acts_at(Stage::Measurement)) {
      BobView view;
      view.stage = Stage::Measurement;
      view.round = step;
      view.domain = n;
      view.labels = b.labels;
      view.focus = v;
      view.messages = {delta};
      b.state = adv.apply(Stage::Measurement, std::move(b.state), view, rng);
    }
    qsim::MeasureResult m = qsim::measure_discard(std::move(b.state), q, qsim::Basis::Z, rng);
    b.state = std::move(m.state);
    b.labels.erase(b.labels.begin() + q);
    res.b[v] = m.bit;
    res.s[v] = m.bit ^ sec.r[v];
  }
  res.accepted = true;
  for (int v = 0; v < n; ++v) {
    if (g.roles[v] != Role::Trap) continue;
    res.traps.push_back({v, res.b[v], sec.r[v]});
    res.accepted = res.accepted && res.traps.back().passed();
  }
  for (int o : pattern.outputs) res.outputs.push_back(res.s[o]);
  return res;
}

OutputDistribution reference_distribution(const GraphSpec& g, const Pattern& pattern) {
  g.validate();
  if (!g.has_roles()) throw std::invalid_argument("reference_distribution: graph has no roles");
  pattern.validate(g);
  for (int o : pattern.outputs) {
    if (g.roles[o] != Role::Computation) {
      throw std::invalid_argument("reference_distribution: outputs must be computation vertices");
    }
  }
  const auto comp = g.vertices_with(Role::Computation);
  if (comp.size() > static_cast<std::size_t>(qsim::kMaxQubits)) {
    throw std::invalid_argument("reference_distribution: too many computation vertices");
  }
  std::vector<PureState> parts(comp.size(), PureState::plus_k(0));
  PureState state = comp.empty() ? PureState(0) : qsim::tensor(parts);
  for (auto [u, v] : g.edges) {
    const int iu = index_of(comp, u), iv = index_of(comp, v);
    if (iu >= 0 && iv >= 0) state = qsim::apply_gate(std::move(state), Gate::cz(), {iu, iv});
  }
  std::vector<int> steps;
  for (int v : pattern.order) {
    if (g.roles[v] == Role::Computation) steps.push_back(v);
  }
  OutputDistribution dist;
  std::vector<int> s(g.n_vertices, 0);
  std::function<void(std::size_t, PureState, std::vector<int>, double)> rec =
      [&](std::size_t i, PureState st, std::vector<int> labels, double prob) {
        if (i == steps.size()) {
          std::vector<int> out;
          for (int o : pattern.outputs) out.push_back(s[o]);
          dist[out] += prob;
          return;
        }
        const int v = steps[i];
        const int phi = adapt_phi(pattern.phi[v], xor_of(pattern.x_deps[v], s),
                                  xor_of(pattern.z_deps[v], s));
        const int q = index_of(labels, v);
        PureState rot = rotate_for_readout(std::move(st), q, phi);
        std::vector<int> rest = labels;
        rest.erase(rest.begin() + q);
        for (int bit = 0; bit < 2; ++bit) {
          qsim::Projection pr = qsim::project_discard(rot, q, qsim::Basis::Z, bit);
          if (pr.probability < 1e-15) continue;
          s[v] = bit;
          rec(i + 1, std::move(pr.state), rest, prob * pr.probability);
        }
        s[v] = 0;
      };
  rec(0, std::move(state), comp, 1.0);
  return dist;
}

std::optional<std::vector<int>> deterministic_reference(const GraphSpec& g, const Pattern& pattern,
                                                        double tol) {
  for (const auto& [out, p] : reference_distribution(g, pattern)) {
    if (p > 1.0 - tol) return out;
  }
  return std::nullopt;
}

}  // namespace bqc::fkproto
