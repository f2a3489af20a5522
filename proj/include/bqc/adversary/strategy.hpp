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

#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "bqc/qsim/mixed.hpp"
#include "bqc/qsim/pauli.hpp"
#include "bqc/qsim/random.hpp"
#include "bqc/qsim/state.hpp"

namespace bqc::adversary {

/**
 * Points in a run where Bob (or the channel) can act.
 *
 * BellPair: the two-qubit pair (qubit 0 travels to Alice, qubit 1 stays).
 * Transmission: the travelling half (one logical qubit or one code block).
 * GadgetInput: Bob's five qubits after corrections, before the circuit.
 * GadgetOutput: the kept qubit of an accepted gadget.
 * GraphState: all FK qubits after the CZ layer.
 * Measurement: one FK qubit after its basis rotation, before readout.
 */
enum class Stage { BellPair, Transmission, GadgetInput, GadgetOutput, GraphState, Measurement };

const char* stage_name(Stage s);
Stage parse_stage(const std::string& s);

/**
 * Everything a strategy may look at. `labels[j]` is the position of qubit j
 * of the state handed to the strategy; positions range over [0, domain).
 */
struct BobView {
  Stage stage = Stage::BellPair;
  int round = 0;
  int domain = 0;
  std::vector<int> labels;
  int focus = -1;               ///< Position being measured (Measurement stage).
  std::vector<int> messages;    ///< Classical data received this round.
};

struct Honest {};

struct PauliAttack {
  Stage stage;
  std::vector<int> positions;
  qsim::PauliString paulis;  ///< One letter per position.
};

/** Pauli on `count` distinct positions drawn by Bob once per run. */
struct RandomPauliAttack {
  Stage stage;
  qsim::PauliLetter letter;
  int count = 1;
};

/** Replaces the Bell pair by rho_ab (qubit 0 = Alice's half). */
struct PreBellReplace {
  Eigen::Matrix4cd rho_ab;
};

/** Unitary on (targets..., ancillas...), ancillas start in |0> and are traced out. */
struct UnitaryDeviation {
  Stage stage;
  Eigen::MatrixXcd unitary;
  std::vector<int> targets;
  int ancillas = 0;
};

struct IidXZNoise {
  double p;
  Stage stage = Stage::Transmission;
};

/** With probability epsilon a uniformly random X, Y or Z on each qubit. */
struct Depolarizing {
  double epsilon;
  Stage stage = Stage::GadgetOutput;
};

struct Loss {
  double p_loss;
};

using Strategy = std::variant<Honest, PauliAttack, RandomPauliAttack, PreBellReplace,
                              UnitaryDeviation, IidXZNoise, Depolarizing, Loss>;

inline constexpr int kMaxAncillas = 3;

/** Stages a strategy acts at (empty for Honest and Loss). */
std::vector<Stage> strategy_stages(const Strategy& s);
std::string strategy_name(const Strategy& s);

/** Throws if positions fall outside [0, domain) or the strategy is malformed. */
void validate_strategy(const Strategy& s, int domain);

/**
 * Applies the strategy at `stage`. Stage must be one the strategy acts at.
 * Positions absent from view.labels are skipped; at the Measurement stage
 * only the focus position is touched.
 */
qsim::PureState apply_strategy(const Strategy& s, Stage stage, qsim::PureState state,
                               const BobView& view, qsim::RandomStream& rng);

/** A set of strategies applied in order at each stage. */
class ChannelModel {
 public:
  ChannelModel() = default;
  explicit ChannelModel(std::vector<Strategy> strategies);
  static ChannelModel honest() { return ChannelModel(); }

  const std::vector<Strategy>& strategies() const { return strategies_; }
  bool acts_at(Stage stage) const;
  bool is_honest() const;

  qsim::PureState apply(Stage stage, qsim::PureState state, const BobView& view,
                        qsim::RandomStream& rng) const;

  /** One transmission attempt under every Loss strategy. */
  bool survives(qsim::RandomStream& rng) const;

  /** Resolves random attacks over positions [0, domain) for one run. */
  ChannelModel instantiate(int domain, qsim::RandomStream& rng) const;

  /** Strategies restricted to the listed stages. */
  ChannelModel restricted(std::vector<Stage> stages) const;

  void validate(int domain) const;

 private:
  std::vector<Strategy> strategies_;
};

/** 2x2 matrix of a Pauli letter. */
Eigen::Matrix2cd pauli_matrix(qsim::PauliLetter l);

}  // namespace bqc::adversary
