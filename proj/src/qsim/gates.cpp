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

#include "bqc/qsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bqc::qsim {

std::string Gate::name() const {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::T: return "T";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CZ: return "CZ";
    case GateKind::Rz: return "Rz(" + std::to_string(theta) + ")";
  }
  return "?";
}

Mat2 gate_matrix(const Gate& gate) {
  const double h = 1.0 / std::numbers::sqrt2;
  Mat2 m;
  switch (gate.kind) {
    case GateKind::H:
      m << h, h, h, -h;
      break;
    case GateKind::S:
      m << 1, 0, 0, Complex(0, 1);
      break;
    case GateKind::T:
      m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
      break;
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      break;
    case GateKind::Rz:
      m << 1, 0, 0, std::polar(1.0, -gate.theta);
      break;
    case GateKind::CZ:
      throw std::invalid_argument("gate_matrix: CZ is a two-qubit gate");
  }
  return m;
}

PureState apply_single(PureState state, const Mat2& m, int q) {
  state.check_qubit(q);
  const std::size_t bit = state.mask(q);
  auto& a = state.raw();
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i & bit) continue;
    const Complex x0 = a[i];
    const Complex x1 = a[i | bit];
    a[i] = m00 * x0 + m01 * x1;
    a[i | bit] = m10 * x0 + m11 * x1;
  }
  return state;
}

namespace {

void check_targets(const PureState& state, std::span<const int> targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    state.check_qubit(targets[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw std::invalid_argument("apply_gate: repeated target qubit");
      }
    }
  }
}

}  // namespace

PureState apply_gate(PureState state, const Gate& gate,
                     std::span<const int> targets) {
  if (static_cast<int>(targets.size()) != gate.arity()) {
    throw std::invalid_argument("apply_gate: " + gate.name() + " takes " +
                                std::to_string(gate.arity()) + " target(s)");
  }
  check_targets(state, targets);
  const int q0 = targets[0];
  switch (gate.kind) {
    case GateKind::X: {
      const std::size_t bit = state.mask(q0);
      auto& a = state.raw();
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(i & bit)) std::swap(a[i], a[i | bit]);
      }
      return state;
    }
    case GateKind::Z: {
      const std::size_t bit = state.mask(q0);
      for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & bit) state.raw()[i] = -state.raw()[i];
      }
      return state;
    }
    case GateKind::CZ: {
      const std::size_t both = state.mask(q0) | state.mask(targets[1]);
      for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((i & both) == both) state.raw()[i] = -state.raw()[i];
      }
      return state;
    }
    case GateKind::S:
    case GateKind::T:
    case GateKind::Rz: {
      const Complex ph = gate_matrix(gate)(1, 1);
      const std::size_t bit = state.mask(q0);
      for (std::size_t i = 0; i < state.dim(); ++i) {
        if (i & bit) state.raw()[i] *= ph;
      }
      return state;
    }
    case GateKind::H:
      return apply_single(std::move(state), gate_matrix(gate), q0);
  }
  return state;
}

PureState apply_gate(PureState state, const Gate& gate,
                     std::initializer_list<int> targets) {
  std::vector<int> t(targets);
  return apply_gate(std::move(state), gate, std::span<const int>(t));
}

PureState apply_matrix(PureState state, const Eigen::MatrixXcd& m,
                       std::span<const int> targets) {
  check_targets(state, targets);
  const int k = static_cast<int>(targets.size());
  const std::size_t sub = std::size_t{1} << k;
  if (static_cast<std::size_t>(m.rows()) != sub ||
      static_cast<std::size_t>(m.cols()) != sub) {
    throw std::invalid_argument("apply_matrix: matrix size does not match targets");
  }
  std::vector<std::size_t> offs(sub, 0);
  std::size_t tmask = 0;
  for (std::size_t j = 0; j < sub; ++j) {
    for (int t = 0; t < k; ++t) {
      if (j & (std::size_t{1} << (k - 1 - t))) offs[j] |= state.mask(targets[t]);
    }
  }
  for (int t = 0; t < k; ++t) tmask |= state.mask(targets[t]);
  auto& a = state.raw();
  Eigen::VectorXcd in(sub), out(sub);
  for (std::size_t base = 0; base < a.size(); ++base) {
    if (base & tmask) continue;
    for (std::size_t j = 0; j < sub; ++j) in[j] = a[base | offs[j]];
    out = m * in;
    for (std::size_t j = 0; j < sub; ++j) a[base | offs[j]] = out[j];
  }
  return state;
}

}  // namespace bqc::qsim
