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
#include <vector>

#include "bqc/adversary/strategy.hpp"

namespace bqc::adversary {

/** Pair state rho_ab produced by a Bell-pair-stage deviation (qubit 0 = a). */
Eigen::Matrix4cd deviated_pair(const Strategy& s);

/** F(sigma) = 2 Tr_a[(sigma^T (x) I) rho_ab]. Not trace preserving in general. */
Eigen::Matrix2cd pair_map(const Eigen::Matrix4cd& rho_ab, const Eigen::Matrix2cd& sigma);

/** (1/4) sum_{o1,o2} X^o1 Z^o2 F(Z^o2 X^o1 sigma X^o1 Z^o2) Z^o2 X^o1. */
Eigen::Matrix2cd twirled_map(const Eigen::Matrix4cd& rho_ab, const Eigen::Matrix2cd& sigma);

/** |0><0|, |1><1|, |+><+|, |+i><+i|. */
std::vector<Eigen::Matrix2cd> default_probes();

struct TwirlReport {
  Eigen::Matrix4cd superop;   ///< Acts on row-major vec(sigma).
  Eigen::Matrix4d ptm;        ///< R_ij = tr(P_i T(P_j)) / 2 with P = I, X, Y, Z.
  Eigen::Matrix4d f_ptm;      ///< Same for the untwirled F.
  double tp_error = 0.0;      ///< max_j |R_0j - delta_0j|.
  double f_tp_error = 0.0;
  double off_diagonal = 0.0;  ///< Largest off-diagonal |R_ij|.

  Eigen::Matrix2cd apply(const Eigen::Matrix2cd& sigma) const;
  bool trace_preserving(double tol = 1e-9) const { return tp_error <= tol; }
  bool pauli_channel(double tol = 1e-9) const { return off_diagonal <= tol; }
};

/** Reconstructs the twirled map by tomography over `probes`. */
TwirlReport twirl_channel(const Strategy& s,
                          const std::vector<Eigen::Matrix2cd>& probes = default_probes());

}  // namespace bqc::adversary
