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

#include <span>

#include "bqc/adversary/strategy.hpp"
#include "bqc/css/code.hpp"
#include "bqc/qsim/random.hpp"
#include "bqc/qsim/state.hpp"

namespace bqc::css {

/** Logical Pauli correction X_L^x_flip Z_L^z_flip. */
struct PauliFrame {
  int x_flip = 0;
  int z_flip = 0;

  PauliFrame operator^(const PauliFrame& o) const {
    return {x_flip ^ o.x_flip, z_flip ^ o.z_flip};
  }
  bool operator==(const PauliFrame&) const = default;
};

/** Correction Alice requests: X^{a+o} Z^r for c = 0, X^r Z^{a+o} for c = 1. */
PauliFrame correction_frame(int c, int a, int r, int o);

qsim::PureState encode_logical_zero(const CssCode& code);
qsim::PureState encode_logical_one(const CssCode& code);

/** (|0_L 0_L> + |1_L 1_L>)/sqrt2; block 0 (qubits 0..n-1) travels to Alice. */
qsim::PureState logical_bell_pair(const CssCode& code);

struct TransversalResult {
  Bits raw;               ///< raw[i] is the outcome on half[i].
  qsim::PureState state;  ///< Remainder with the measured qubits removed.
};

TransversalResult transversal_measure(qsim::PureState state, std::span<const int> half,
                                      qsim::Basis basis, qsim::RandomStream& rng);

/** Applies Z_L^z then X_L^x to the block starting at qubit `offset`. */
qsim::PureState apply_frame(const CssCode& code, qsim::PureState state, PauliFrame frame,
                            int offset = 0);

/** <Z_L> or <X_L> of the block starting at `offset`. */
double logical_expectation(const CssCode& code, const qsim::PureState& state, qsim::Basis basis,
                           int offset = 0);

/**
 * Logical amplitudes (<0_L|psi>, <1_L|psi>) of an n-qubit block. Throws if the
 * block has weight outside the code space above tol.
 */
qsim::PureState extract_logical(const CssCode& code, const qsim::PureState& block,
                                double tol = 1e-9);

struct RemotePrep {
  PauliFrame frame_request;
  int o = 0;
  bool decoded_cleanly = true;
  Bits raw;
  qsim::PureState bob_state;  ///< Bob's block after the frame was applied.
};

/**
 * Statevector route: logical Bell pair, channel on Alice's block at the
 * Transmission stage, transversal readout in Z (c = 0) or X (c = 1), decode,
 * frame request, Bob applies it.
 */
RemotePrep remote_prepare(const CssCode& code, int c, int a, int r,
                          const adversary::ChannelModel& noise, qsim::RandomStream& rng);

struct FramePrep {
  PauliFrame frame_request;
  int o = 0;
  int o_true = 0;          ///< Logical outcome before channel errors.
  bool decoded_cleanly = true;
  bool logical_fault = false;
  Bits raw;
};

/** Error pattern on Alice's block: x[j], z[j] per physical qubit. */
struct PauliError {
  Bits x;
  Bits z;
};

/** Samples the Pauli channel on an n-qubit block; throws for non-Pauli strategies. */
PauliError sample_block_error(const adversary::ChannelModel& noise, int n, int round,
                              qsim::RandomStream& rng);

/**
 * Pauli-frame route for Pauli channels: the codeword is sampled uniformly
 * from the readout coset, the error pattern is added, and only the decoded
 * logical fault is tracked. The logical fault acts on Bob's qubit as X_L
 * (c = 0) or Z_L (c = 1).
 */
FramePrep remote_prepare_frame(const CssCode& code, int c, int a, int r,
                               const adversary::ChannelModel& noise, qsim::RandomStream& rng);

/** Frame route with a fixed error pattern and codeword draw (for exhaustive checks). */
FramePrep remote_prepare_frame_fixed(const CssCode& code, int c, int a, int r,
                                     const PauliError& error, int o_true, std::uint32_t coset_word);

/** Statevector route with a fixed error pattern (applied before readout). */
RemotePrep remote_prepare_fixed(const CssCode& code, int c, int a, int r, const PauliError& error,
                                qsim::RandomStream& rng);

}  // namespace bqc::css
