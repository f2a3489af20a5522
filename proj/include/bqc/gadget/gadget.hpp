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

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "bqc/adversary/strategy.hpp"
#include "bqc/css/code.hpp"
#include "bqc/css/remote_prep.hpp"
#include "bqc/gadget/table.hpp"
#include "bqc/qsim/measure.hpp"

namespace bqc::gadget {

using Syndrome = std::array<int, 4>;  ///< (s1, s2, s4, s5).

struct GadgetSecrets {
  Bits5 c{};
  Bits5 a{};
  Bits5 r{};
  double p = 0.25;
  double p_prime = 0.5;
};

/** Pr[c_i = 0] for i = 1..5. */
std::array<double, 5> c_zero_probabilities(double p, double p_prime);

/** Draws c1..c5, then a1..a5, then r1..r5. Requires 0 < p < 1/2, 0 < p' < 1. */
GadgetSecrets sample_secrets(double p, double p_prime, qsim::RandomStream& rng);

/** H^c X^a |0>. */
qsim::PureState ideal_input(int c, int a);
std::array<qsim::PureState, 5> ideal_inputs(const Bits5& c, const Bits5& a);

/** Five inputs after T on wire 1, S on wire 5 and the CZ chain, before H and readout. */
qsim::PureState circuit_state(std::span<const qsim::PureState> inputs);

struct CircuitResult {
  Syndrome s{};
  qsim::PureState out;  ///< Wire 3.
};

/** Runs the circuit and samples the four X-basis readouts. */
CircuitResult bob_circuit(std::span<const qsim::PureState> inputs, qsim::RandomStream& rng);

/** Exact branch for readout `s`; state is wire 3 (normalized if probability > 0). */
qsim::Projection circuit_branch(std::span<const qsim::PureState> inputs, const Syndrome& s);

/** Probability of every readout, indexed by s1 s2 s4 s5 as a 4-bit number (s1 = MSB). */
std::array<double, 16> outcome_distribution(std::span<const qsim::PureState> inputs);

/** How Bob's five inputs are prepared. */
struct PrepConfig {
  enum class Route {
    LogicalLevel,        ///< One qubit per logical qubit; every stage simulated.
    EncodedPauliFrame,   ///< Code block sampled in the Pauli frame; Pauli channels only.
    EncodedStatevector,  ///< Full 2n-qubit logical Bell pair per wire.
  };
  Route route = Route::LogicalLevel;
  std::shared_ptr<const css::CssCode> code;

  static PrepConfig logical() { return {}; }
  static PrepConfig frame(css::CssCode code);
  static PrepConfig statevector(css::CssCode code);
};

struct WireRecord {
  int o = 0;
  css::PauliFrame correction;
  bool decoded_cleanly = true;
  bool logical_fault = false;  ///< Encoded routes: decoded o differs from the noiseless value.
};

struct GadgetOutcome {
  GadgetSecrets secrets;
  std::array<WireRecord, 5> wires{};
  Syndrome s{};
  bool accepted = false;
  StateLabel label;
  std::optional<qsim::PureState> bob_state;  ///< Present only when accepted.
};

/** Remote preparation of one wire at the logical level (Bell pair, Alice's readout, correction). */
qsim::PureState prepare_wire(int c, int a, int r, int round,
                             const adversary::ChannelModel& channel, qsim::RandomStream& rng,
                             WireRecord& record);

/** Completes a gadget run from given secrets. */
GadgetOutcome run_gadget_with(const GadgetSecrets& secrets, const adversary::ChannelModel& channel,
                              qsim::RandomStream& rng, const PrepConfig& prep = {});

GadgetOutcome run_gadget(double p, double p_prime, const adversary::ChannelModel& channel,
                         qsim::RandomStream& rng, const PrepConfig& prep = {});

}  // namespace bqc::gadget
