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

#include "bqc/css/code.hpp"
#include "bqc/css/remote_prep.hpp"
#include "bqc/gadget/gadget.hpp"

namespace bqc::gadget {

/** Physical transmissions until n bare halves arrive (each lost with probability p_loss). */
int sample_transmissions(int n, double p_loss, qsim::RandomStream& rng);

/** Transmissions of n-qubit blocks, resent whole until every qubit arrives. */
int sample_block_transmissions(int n, double p_loss, qsim::RandomStream& rng);

/** n / (1 - p_loss). */
double lossy_mean_transmissions(int n, double p_loss);
/** n / (1 - p_loss)^n. */
double block_mean_transmissions(int n, double p_loss);

struct LossyPrep {
  int attempts = 0;
  css::RemotePrep prep;  ///< raw[j] combines Alice's bit and Bob's Bell outcome for qubit j.
};

/**
 * Loss-tolerant remote preparation of one logical qubit. Alice measures bare
 * Bell halves as they arrive; Bob teleports each qubit of one block of his
 * logical Bell pair through an arrived pair, so Alice's bits act as a
 * transversal readout of that block.
 */
LossyPrep lossy_remote_prepare(const css::CssCode& code, int c, int a, int r, double p_loss,
                               qsim::RandomStream& rng);

struct LossyOutcome {
  std::array<int, 5> attempts{};
  GadgetOutcome outcome;

  int attempt_count() const;
};

LossyOutcome run_gadget_lossy(const css::CssCode& code, double p_loss, qsim::RandomStream& rng,
                              double p = 0.25, double p_prime = 0.5);

}  // namespace bqc::gadget
