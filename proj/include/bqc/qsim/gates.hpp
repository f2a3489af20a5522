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
#include <initializer_list>
#include <span>
#include <string>

#include "bqc/qsim/state.hpp"

namespace bqc::qsim {

enum class GateKind { H, S, T, X, Z, CZ, Rz };

/**
 * Gate from the fixed set.
 * S = diag(1, i), T = diag(1, e^{i pi/4}), Rz(theta) = diag(1, e^{-i theta}).
 */
struct Gate {
  GateKind kind;
  double theta = 0.0;

  static Gate h() { return {GateKind::H}; }
  static Gate s() { return {GateKind::S}; }
  static Gate t() { return {GateKind::T}; }
  static Gate x() { return {GateKind::X}; }
  static Gate z() { return {GateKind::Z}; }
  static Gate cz() { return {GateKind::CZ}; }
  static Gate rz(double theta) { return {GateKind::Rz, theta}; }

  int arity() const { return kind == GateKind::CZ ? 2 : 1; }
  std::string name() const;
};

using Mat2 = Eigen::Matrix2cd;

/** 2x2 matrix of a one-qubit gate. */
Mat2 gate_matrix(const Gate& gate);

PureState apply_gate(PureState state, const Gate& gate,
                     std::span<const int> targets);
PureState apply_gate(PureState state, const Gate& gate,
                     std::initializer_list<int> targets);

/** Applies an arbitrary 2x2 matrix to qubit q. */
PureState apply_single(PureState state, const Mat2& m, int q);

/**
 * Applies a 2^k x 2^k matrix to the listed qubits; targets[0] is the most
 * significant bit of the matrix index.
 */
PureState apply_matrix(PureState state, const Eigen::MatrixXcd& m,
                       std::span<const int> targets);

}  // namespace bqc::qsim
