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

#include <map>
#include <optional>
#include <vector>

#include "bqc/adversary/strategy.hpp"
#include "bqc/fkproto/graph.hpp"
#include "bqc/fkproto/pattern.hpp"
#include "bqc/gadget/table.hpp"
#include "bqc/qsim/state.hpp"

namespace bqc::fkproto {

/** A qubit at Bob's side and what Alice knows about it. */
struct PreparedQubit {
  qsim::PureState state;
  bool z_basis = false;
  int value = 0;  ///< z for Z-basis states, k for |+_k>.

  static PreparedQubit from_label(const gadget::StateLabel& label, qsim::PureState state);
};

/** Alice prepares every qubit herself: dummies uniform |z>, others uniform |+_k>. */
std::vector<PreparedQubit> prepare_direct(const GraphSpec& g, qsim::RandomStream& rng);

struct SecretRecord {
  std::vector<Role> roles;
  std::vector<int> r;
  std::vector<int> k_prime;
  std::vector<int> phi;  ///< Units of pi/4 as fixed before adaptation.
  std::vector<int> z;    ///< Dummy bits, -1 elsewhere.
};

struct TrapReport {
  int vertex = 0;
  int b = 0;
  int r = 0;
  bool passed() const { return b == r; }
};

struct FkResult {
  bool accepted = false;
  std::vector<int> outputs;
  std::vector<TrapReport> traps;
  std::vector<int> b;      ///< Bob's reported outcome per vertex.
  std::vector<int> s;      ///< b xor r per vertex.
  std::vector<int> delta;  ///< Transmitted angle per vertex, units of pi/4.
  SecretRecord secrets;
};

/**
 * Runs the FK protocol on Bob's prepared qubits. Each connected component is
 * simulated as its own state (one shared state when a unitary acts on the
 * graph state). A vertex is measured by Rz(delta),
 * H, then a Z readout; the Measurement stage sits just before the readout.
 */
FkResult run_fk(const GraphSpec& g, const Pattern& pattern, std::vector<PreparedQubit> prepared,
                const adversary::ChannelModel& adversary, qsim::RandomStream& rng);

using OutputDistribution = std::map<std::vector<int>, double>;

/** Exact honest output distribution (computation vertices only). */
OutputDistribution reference_distribution(const GraphSpec& g, const Pattern& pattern);

/** The honest output when it is deterministic. */
std::optional<std::vector<int>> deterministic_reference(const GraphSpec& g, const Pattern& pattern,
                                                        double tol = 1e-9);

}  // namespace bqc::fkproto
