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

#include "bqc/adversary/strategy.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

#include "bqc/qsim/gates.hpp"
#include "bqc/qsim/measure.hpp"

namespace bqc::adversary {

using qsim::PauliLetter;
using qsim::PureState;
using qsim::RandomStream;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_fk_stage(Stage s) { return s == Stage::GraphState || s == Stage::Measurement; }

// Domain of positions for gadget stages; FK stages use the caller's domain.
int stage_domain(Stage s, int fk_domain) {
  switch (s) {
    case Stage::BellPair: return 2;
    case Stage::GadgetInput: return 5;
    case Stage::GadgetOutput: return 1;
    case Stage::Transmission: return -1;
    default: return fk_domain;
  }
}

int local_index(const BobView& view, int position) {
  for (std::size_t j = 0; j < view.labels.size(); ++j) {
    if (view.labels[j] == position) return static_cast<int>(j);
  }
  return -1;
}

void check_position(const BobView& view, int position) {
  if (position < 0 || (view.domain > 0 && position >= view.domain)) {
    throw std::out_of_range("adversary: target position " + std::to_string(position) +
                            " out of range");
  }
}

// Local qubits a per-qubit channel acts on.
std::vector<int> acted_qubits(Stage stage, const PureState& state, const BobView& view) {
  std::vector<int> out;
  if (stage == Stage::Measurement) {
    int j = local_index(view, view.focus);
    if (j >= 0) out.push_back(j);
    return out;
  }
  for (int q = 0; q < state.n_qubits(); ++q) {
    // Qubits labelled -1 are not exposed at this stage.
    if (view.labels.empty() || (q < static_cast<int>(view.labels.size()) && view.labels[q] >= 0)) {
      out.push_back(q);
    }
  }
  return out;
}

PureState apply_pauli_attack(const PauliAttack& a, Stage stage, PureState state,
                             const BobView& view) {
  for (std::size_t i = 0; i < a.positions.size(); ++i) {
    const int pos = a.positions[i];
    check_position(view, pos);
    if (stage == Stage::Measurement && pos != view.focus) continue;
    int j = local_index(view, pos);
    if (j < 0) continue;
    state = qsim::apply_letter(std::move(state), a.paulis[static_cast<int>(i)], j);
  }
  return state;
}

PureState apply_unitary(const UnitaryDeviation& u, Stage stage, PureState state,
                        const BobView& view, RandomStream& rng) {
  if (stage == Stage::Measurement &&
      (u.targets.size() != 1 || u.targets.front() != view.focus)) {
    return state;
  }
  std::vector<int> local;
  for (int pos : u.targets) {
    check_position(view, pos);
    int j = local_index(view, pos);
    if (j < 0) {
      throw std::out_of_range("UnitaryDeviation: target " + std::to_string(pos) +
                              " not present at stage " + stage_name(stage));
    }
    local.push_back(j);
  }
  const int base = state.n_qubits();
  state = qsim::append_zeros(std::move(state), u.ancillas);
  for (int k = 0; k < u.ancillas; ++k) local.push_back(base + k);
  state = qsim::apply_matrix(std::move(state), u.unitary, local);
  // Trace the ancillas out by measuring and discarding them.
  for (int k = u.ancillas - 1; k >= 0; --k) {
    state = qsim::measure_discard(std::move(state), base + k, qsim::Basis::Z, rng).state;
  }
  return state;
}

PureState replace_bell_pair(const PreBellReplace& r, PureState state, RandomStream& rng) {
  if (state.n_qubits() != 2) {
    throw std::invalid_argument("PreBellReplace: expects the two-qubit Bell pair");
  }
  // Sample an eigenvector of rho_ab: equivalent to discarding its purification.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r.rho_ab);
  const auto& w = es.eigenvalues();
  double u = rng.uniform();
  int pick = 3;
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) {
    acc += std::max(0.0, w[k]);
    if (u < acc) {
      pick = k;
      break;
    }
  }
  while (pick > 0 && w[pick] <= 0.0) --pick;
  std::vector<qsim::Complex> v(4);
  for (int i = 0; i < 4; ++i) v[i] = es.eigenvectors()(i, pick);
  return PureState::from_amplitudes(std::move(v), true);
}

const PauliLetter kXyz[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};

}  // namespace

const char* stage_name(Stage s) {
  switch (s) {
    case Stage::BellPair: return "bell_pair";
    case Stage::Transmission: return "transmission";
    case Stage::GadgetInput: return "gadget_input";
    case Stage::GadgetOutput: return "gadget_output";
    case Stage::GraphState: return "graph_state";
    case Stage::Measurement: return "measurement";
  }
  return "?";
}

Stage parse_stage(const std::string& s) {
  for (Stage st : {Stage::BellPair, Stage::Transmission, Stage::GadgetInput,
                   Stage::GadgetOutput, Stage::GraphState, Stage::Measurement}) {
    if (s == stage_name(st)) return st;
  }
  throw std::invalid_argument("unknown stage '" + s + "'");
}

Eigen::Matrix2cd pauli_matrix(PauliLetter l) {
  Eigen::Matrix2cd m;
  switch (l) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, qsim::Complex(0, -1), qsim::Complex(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
    case PauliLetter::XZ: m << 0, -1, 1, 0; break;
  }
  return m;
}

std::vector<Stage> strategy_stages(const Strategy& s) {
  return std::visit(
      Overloaded{
          [](const Honest&) { return std::vector<Stage>{}; },
          [](const PauliAttack& a) { return std::vector<Stage>{a.stage}; },
          [](const RandomPauliAttack& a) { return std::vector<Stage>{a.stage}; },
          [](const PreBellReplace&) { return std::vector<Stage>{Stage::BellPair}; },
          [](const UnitaryDeviation& u) { return std::vector<Stage>{u.stage}; },
          [](const IidXZNoise& n) { return std::vector<Stage>{n.stage}; },
          [](const Depolarizing& d) { return std::vector<Stage>{d.stage}; },
          [](const Loss&) { return std::vector<Stage>{}; },
      },
      s);
}

std::string strategy_name(const Strategy& s) {
  return std::visit(Overloaded{
                        [](const Honest&) { return std::string("honest"); },
                        [](const PauliAttack&) { return std::string("pauli"); },
                        [](const RandomPauliAttack&) { return std::string("random_pauli"); },
                        [](const PreBellReplace&) { return std::string("pre_bell_replace"); },
                        [](const UnitaryDeviation&) { return std::string("unitary"); },
                        [](const IidXZNoise&) { return std::string("iid_xz"); },
                        [](const Depolarizing&) { return std::string("depolarizing"); },
                        [](const Loss&) { return std::string("loss"); },
                    },
                    s);
}

void validate_strategy(const Strategy& s, int domain) {
  auto check_pos = [&](int p) {
    if (p < 0 || (domain > 0 && p >= domain)) {
      throw std::out_of_range("adversary: target position " + std::to_string(p) +
                              " out of range [0, " + std::to_string(domain) + ")");
    }
  };
  auto check_prob = [](double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
  };
  std::visit(
      Overloaded{
          [](const Honest&) {},
          [&](const PauliAttack& a) {
            if (static_cast<int>(a.positions.size()) != a.paulis.size()) {
              throw std::invalid_argument("PauliAttack: one letter per position required");
            }
            for (int p : a.positions) check_pos(p);
          },
          [&](const RandomPauliAttack& a) {
            if (a.count < 0 || (domain > 0 && a.count > domain)) {
              throw std::out_of_range("RandomPauliAttack: count exceeds domain");
            }
            if (a.stage == Stage::Transmission) {
              throw std::invalid_argument("RandomPauliAttack: unsupported at transmission");
            }
          },
          [](const PreBellReplace& r) {
            qsim::MixedState::from_matrix(Eigen::MatrixXcd(r.rho_ab));
          },
          [&](const UnitaryDeviation& u) {
            if (u.ancillas < 0 || u.ancillas > kMaxAncillas) {
              throw std::invalid_argument("UnitaryDeviation: at most 3 ancilla qubits");
            }
            const Eigen::Index d = Eigen::Index{1}
                                   << (u.targets.size() + static_cast<std::size_t>(u.ancillas));
            if (u.unitary.rows() != d || u.unitary.cols() != d) {
              throw std::invalid_argument("UnitaryDeviation: matrix size mismatch");
            }
            if ((u.unitary.adjoint() * u.unitary - Eigen::MatrixXcd::Identity(d, d))
                    .cwiseAbs()
                    .maxCoeff() > 1e-9) {
              throw std::invalid_argument("UnitaryDeviation: matrix is not unitary");
            }
            for (int p : u.targets) check_pos(p);
          },
          [&](const IidXZNoise& n) { check_prob(n.p, "IidXZNoise p"); },
          [&](const Depolarizing& d) { check_prob(d.epsilon, "Depolarizing epsilon"); },
          [&](const Loss& l) {
            check_prob(l.p_loss, "Loss p_loss");
            if (l.p_loss >= 1.0) throw std::invalid_argument("Loss: p_loss must be < 1");
          },
      },
      s);
}

PureState apply_strategy(const Strategy& s, Stage stage, PureState state,
                         const BobView& view, RandomStream& rng) {
  auto stages = strategy_stages(s);
  if (!std::holds_alternative<Honest>(s) &&
      std::find(stages.begin(), stages.end(), stage) == stages.end()) {
    throw std::invalid_argument(std::string("apply_strategy: ") + strategy_name(s) +
                                " does not act at stage " + stage_name(stage));
  }
  return std::visit(
      Overloaded{
          [&](const Honest&) { return std::move(state); },
          [&](const PauliAttack& a) {
            return apply_pauli_attack(a, stage, std::move(state), view);
          },
          [&](const RandomPauliAttack&) -> PureState {
            throw std::logic_error("RandomPauliAttack must be instantiated before use");
          },
          [&](const PreBellReplace& r) { return replace_bell_pair(r, std::move(state), rng); },
          [&](const UnitaryDeviation& u) {
            return apply_unitary(u, stage, std::move(state), view, rng);
          },
          [&](const IidXZNoise& n) {
            for (int q : acted_qubits(stage, state, view)) {
              const bool x = rng.bernoulli(n.p);
              const bool z = rng.bernoulli(n.p);
              if (x) state = qsim::apply_gate(std::move(state), qsim::Gate::x(), {q});
              if (z) state = qsim::apply_gate(std::move(state), qsim::Gate::z(), {q});
            }
            return std::move(state);
          },
          [&](const Depolarizing& d) {
            for (int q : acted_qubits(stage, state, view)) {
              if (rng.bernoulli(d.epsilon)) {
                state = qsim::apply_letter(std::move(state), kXyz[rng.below(3)], q);
              }
            }
            return std::move(state);
          },
          [&](const Loss&) { return std::move(state); },
      },
      s);
}

ChannelModel::ChannelModel(std::vector<Strategy> strategies)
    : strategies_(std::move(strategies)) {}

bool ChannelModel::acts_at(Stage stage) const {
  for (const auto& s : strategies_) {
    auto st = strategy_stages(s);
    if (std::find(st.begin(), st.end(), stage) != st.end()) return true;
  }
  return false;
}

bool ChannelModel::is_honest() const {
  return std::all_of(strategies_.begin(), strategies_.end(),
                     [](const Strategy& s) { return std::holds_alternative<Honest>(s); });
}

PureState ChannelModel::apply(Stage stage, PureState state, const BobView& view,
                              RandomStream& rng) const {
  for (const auto& s : strategies_) {
    auto st = strategy_stages(s);
    if (std::find(st.begin(), st.end(), stage) == st.end()) continue;
    state = apply_strategy(s, stage, std::move(state), view, rng);
  }
  return state;
}

bool ChannelModel::survives(RandomStream& rng) const {
  bool ok = true;
  for (const auto& s : strategies_) {
    if (const auto* l = std::get_if<Loss>(&s)) {
      if (rng.bernoulli(l->p_loss)) ok = false;
    }
  }
  return ok;
}

ChannelModel ChannelModel::instantiate(int domain, RandomStream& rng) const {
  std::vector<Strategy> out;
  out.reserve(strategies_.size());
  for (const auto& s : strategies_) {
    const auto* r = std::get_if<RandomPauliAttack>(&s);
    if (!r) {
      out.push_back(s);
      continue;
    }
    const int dom = stage_domain(r->stage, domain);
    if (dom <= 0 || r->count > dom) {
      throw std::invalid_argument("RandomPauliAttack: count exceeds position domain");
    }
    std::vector<int> all(dom);
    for (int i = 0; i < dom; ++i) all[i] = i;
    rng.shuffle(all);
    std::vector<int> pos(all.begin(), all.begin() + r->count);
    std::sort(pos.begin(), pos.end());
    out.push_back(PauliAttack{r->stage, pos,
                              qsim::PauliString(std::vector<PauliLetter>(r->count, r->letter))});
  }
  return ChannelModel(std::move(out));
}

ChannelModel ChannelModel::restricted(std::vector<Stage> stages) const {
  std::vector<Strategy> out;
  for (const auto& s : strategies_) {
    if (std::holds_alternative<Loss>(s)) {
      out.push_back(s);
      continue;
    }
    for (Stage st : strategy_stages(s)) {
      if (std::find(stages.begin(), stages.end(), st) != stages.end()) {
        out.push_back(s);
        break;
      }
    }
  }
  return ChannelModel(std::move(out));
}

void ChannelModel::validate(int domain) const {
  for (const auto& s : strategies_) {
    auto st = strategy_stages(s);
    const int dom = st.empty() ? domain : stage_domain(st.front(), domain);
    validate_strategy(s, dom);
    if (const auto* u = std::get_if<UnitaryDeviation>(&s)) {
      if (is_fk_stage(u->stage) && u->stage == Stage::Measurement && u->targets.size() != 1) {
        throw std::invalid_argument("UnitaryDeviation at measurement acts on one target");
      }
    }
  }
}

}  // namespace bqc::adversary
