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

#include <vector>

#include "bqc/fkproto/graph.hpp"

namespace bqc::fkproto {

/**
 * A computation over "slots": the computation vertices of a role-assigned
 * graph in ascending id order. Angles are in units of pi/4. Dependencies
 * name earlier slots; an X dependency flips the sign of phi and a Z
 * dependency adds pi.
 */
struct Program {
  std::vector<int> phi;
  std::vector<std::vector<int>> x_deps;
  std::vector<std::vector<int>> z_deps;
  std::vector<int> outputs;

  int size() const { return static_cast<int>(phi.size()); }
  void validate() const;

  /** m independent X-basis measurements, all outputs. */
  static Program trivial(int m);
  /** Linear cluster: x_deps {j-1}, z_deps {j-2}, the last slot is the output. */
  static Program linear_cluster(std::vector<int> phi);
};

/** Vertex-level measurement pattern. */
struct Pattern {
  std::vector<int> order;
  std::vector<int> phi;  ///< Units of pi/4; traps 0, dummies drawn at run time.
  std::vector<std::vector<int>> x_deps;
  std::vector<std::vector<int>> z_deps;
  std::vector<int> outputs;

  /** Checks the order is a permutation, dependencies come earlier, traps have phi = 0. */
  void validate(const GraphSpec& g) const;
};

/** Places the program on the computation vertices; every vertex measured in ascending id. */
Pattern make_pattern(const GraphSpec& g, const Program& program);

/** Adapted angle (-1)^sx phi + sz pi, in units of pi/4. */
int adapt_phi(int phi_units, int sx, int sz);

/** k' + phi + 4r + 4n mod 8, in units of pi/4. */
int compute_delta_units(int k_prime, int phi_units, int r, int n_z);

/** delta = k' pi/4 + phi + r pi + n pi mod 2 pi. phi must be a multiple of pi/4. */
double compute_delta(int k_prime, double phi, int r, int n_z);

}  // namespace bqc::fkproto
