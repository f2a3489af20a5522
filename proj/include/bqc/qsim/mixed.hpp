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
#include <span>
#include <vector>

#include "bqc/qsim/state.hpp"

namespace bqc::qsim {

/** Density matrices are capped well below the pure-state cap. */
inline constexpr int kMaxMixedQubits = 10;

class MixedState {
 public:
  explicit MixedState(int n_qubits = 0);
  /** Validates Hermiticity, unit trace and positivity within kTol. */
  static MixedState from_matrix(Eigen::MatrixXcd rho);
  static MixedState from_pure(const PureState& psi);
  static MixedState maximally_mixed(int n_qubits);

  int n_qubits() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  /** Throws std::invalid_argument if an invariant fails. */
  void validate(double tol = kTol) const;

 private:
  int n_;
  Eigen::MatrixXcd rho_;
};

/** Reduced state on `keep` (sorted ascending in the result). */
MixedState partial_trace(const MixedState& state, std::span<const int> keep);

/** Reduced state of a pure state, without forming the full density matrix. */
MixedState reduced_state(const PureState& psi, std::span<const int> keep);

/** Same as above for an unnormalized, unvalidated matrix. */
Eigen::MatrixXcd reduced_matrix(const PureState& psi, std::span<const int> keep);

/** (1/2) sum of |eigenvalues| of a - b. */
double trace_distance(const MixedState& a, const MixedState& b);
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/** Probability of Z outcome 0 on qubit q. */
double z0_probability(const MixedState& state, int q);

}  // namespace bqc::qsim
