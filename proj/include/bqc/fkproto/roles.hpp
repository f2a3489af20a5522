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

#include <optional>
#include <vector>

#include "bqc/fkproto/graph.hpp"
#include "bqc/qsim/random.hpp"

namespace bqc::fkproto {

/**
 * All role maps with n_t traps whose neighbours are all dummies. Without
 * n_d the dummies are exactly the trap neighbourhood; with n_d, exactly n_d
 * dummies, the extra ones anywhere outside the traps.
 */
std::vector<std::vector<Role>> feasible_role_maps(const GraphSpec& g, int n_t,
                                                  std::optional<int> n_d = {});

/** Draws role maps uniformly from feasible_role_maps without listing them. */
class RoleSampler {
 public:
  RoleSampler(GraphSpec g, int n_t, std::optional<int> n_d = {});

  /** Number of feasible role maps. */
  double count() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }
  int n_traps() const { return n_t_; }
  int n_vertices() const { return graph_.n_vertices; }
  std::optional<int> n_dummies() const { return n_d_; }
  const GraphSpec& graph() const { return graph_; }

  /** Graph with roles and a trap partition (when N - N_T is a multiple of N_T). */
  GraphSpec sample(qsim::RandomStream& rng) const;

 private:
  GraphSpec graph_;
  int n_t_;
  std::optional<int> n_d_;
  std::vector<std::vector<int>> trap_sets_;
  std::vector<double> cumulative_;
};

/** Uniformly random feasible role assignment; throws if none exists. */
GraphSpec assign_roles(const GraphSpec& g, int n_t, qsim::RandomStream& rng,
                       std::optional<int> n_d = {});

}  // namespace bqc::fkproto
