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

#include "bqc/qsim/random.hpp"
#include "bqc/qsim/state.hpp"

namespace bqc::qsim {

enum class Basis { Z, X };

const char* basis_name(Basis b);

struct MeasureResult {
  int bit;
  PureState state;
};

/** Branch of a deterministic projection. `state` is normalized when probability > 0. */
struct Projection {
  double probability;
  PureState state;
};

/** Born probability of outcome `bit` on qubit q. */
double outcome_probability(const PureState& state, int q, Basis basis, int bit);

/**
 * Projective measurement of qubit q. X-basis measurement is H followed by a
 * Z measurement, so the measured qubit is left in |bit>.
 */
MeasureResult measure(PureState state, int q, Basis basis, RandomStream& rng);

/** As measure, but the measured qubit is removed from the returned state. */
MeasureResult measure_discard(PureState state, int q, Basis basis,
                              RandomStream& rng);

/** Projects onto outcome `bit`; the measured qubit is kept as |bit>. */
Projection project(PureState state, int q, Basis basis, int bit);

/** Projects onto outcome `bit` and removes the qubit. */
Projection project_discard(PureState state, int q, Basis basis, int bit);

/** Removes qubit q, keeping the branch where it reads `bit` in Z (unnormalized). */
PureState remove_qubit(const PureState& state, int q, int bit);

struct BellResult {
  int x_parity;  ///< Outcome of X(q1)X(q2), 0 for +1.
  int z_parity;  ///< Outcome of Z(q1)Z(q2), 0 for +1.
  PureState state;  ///< Remainder with q1 and q2 removed.
};

/**
 * Bell measurement of (q1, q2): CNOT q1->q2, H on q1, Z-measure both.
 * |Phi+> reads (0, 0).
 */
BellResult bell_measure(PureState state, int q1, int q2, RandomStream& rng);

/** Deterministic Bell projection; remainder has q1, q2 removed. */
Projection bell_project(PureState state, int q1, int q2, int x_parity,
                        int z_parity);

}  // namespace bqc::qsim
