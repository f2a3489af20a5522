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

#include "bqc/adversary/strategy.hpp"
#include "bqc/fkproto/pattern.hpp"
#include "bqc/fkproto/protocol.hpp"
#include "bqc/fkproto/roles.hpp"
#include "bqc/gadget/gadget.hpp"

namespace bqc::fkproto {

/** 1 - 4p^2(1 - p'): probability that an accepted gadget holds a Z-basis state. */
double z_label_probability(double p, double p_prime);

/** p' with N_D/N = 1 - 4p^2(1 - p'); throws unless 0 < p' < 1. */
double solve_p_prime(int n, int n_d, double p);
/** p with N_D/N = 1 - 4p^2(1 - p'); throws unless 0 < p < 1/2. */
double solve_p(int n, int n_d, double p_prime);
/** Throws unless the relation holds within tol. */
void check_parameter_relation(int n, int n_d, double p, double p_prime, double tol = 1e-9);

/** Mean number of accepted gadgets needed to collect n_z Z-basis and n_plus |+_k> states. */
double expected_accepted_gadgets(int n_z, int n_plus, double z_prob);
/** 16 times the above, for the parameters tied by the relation. */
double expected_gadget_runs(int n, int n_d, double p, double p_prime);

struct ComposeConfig {
  double p = 0.4;
  double p_prime = 0.21875;
  gadget::PrepConfig prep;
  long max_gadget_runs = 10'000'000;
};

struct ComposeResult {
  FkResult fk;
  GraphSpec graph;  ///< With the roles of this run.
  long gadget_runs = 0;
  long accepted_gadgets = 0;
};

/**
 * Draws roles, runs gadgets until N_D Z-basis and N - N_D |+_k> states are
 * collected (surplus accepted states are discarded), hands them to the dummy
 * and non-dummy vertices in random order, then runs FK.
 */
ComposeResult compose_protocol(const RoleSampler& roles, const Program& program,
                               const ComposeConfig& config,
                               const adversary::ChannelModel& adversary, qsim::RandomStream& rng);

}  // namespace bqc::fkproto
