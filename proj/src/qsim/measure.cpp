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

#include "bqc/qsim/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bqc/qsim/gates.hpp"

namespace bqc::qsim {

const char* basis_name(Basis b) { return b == Basis::Z ? "Z" : "X"; }

namespace {

double z_probability(const PureState& state, int q, int bit) {
  const std::size_t m = state.mask(q);
  double p = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (((i & m) != 0) == (bit != 0)) p += std::norm(state.raw()[i]);
  }
  return p;
}

PureState rotate(PureState state, int q, Basis basis) {
  if (basis == Basis::X) return apply_gate(std::move(state), Gate::h(), {q});
  return state;
}

void zero_other_branch(PureState& state, int q, int bit) {
  const std::size_t m = state.mask(q);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (((i & m) != 0) != (bit != 0)) state.raw()[i] = 0.0;
  }
}

void scale(PureState& state, double p) {
  const double f = 1.0 / std::sqrt(p);
  for (auto& a : state.raw()) a *= f;
}

int sample_bit(double p0, RandomStream& rng) {
  return rng.uniform() < p0 ? 0 : 1;
}

constexpr double kZeroBranch = 1e-300;

}  // namespace

double outcome_probability(const PureState& state, int q, Basis basis, int bit) {
  state.check_qubit(q);
  if (basis == Basis::Z) return z_probability(state, q, bit);
  return z_probability(rotate(state, q, basis), q, bit);
}

Projection project(PureState state, int q, Basis basis, int bit) {
  state.check_qubit(q);
  state = rotate(std::move(state), q, basis);
  const double p = z_probability(state, q, bit);
  zero_other_branch(state, q, bit);
  if (p > kZeroBranch) scale(state, p);
  return {p, std::move(state)};
}

PureState remove_qubit(const PureState& state, int q, int bit) {
  state.check_qubit(q);
  const int n = state.n_qubits();
  const int low_bits = n - 1 - q;
  const std::size_t low_mask = (std::size_t{1} << low_bits) - 1;
  std::vector<Complex> out(state.dim() / 2);
  for (std::size_t j = 0; j < out.size(); ++j) {
    std::size_t hi = j >> low_bits;
    std::size_t lo = j & low_mask;
    std::size_t i = (((hi << 1) | static_cast<std::size_t>(bit)) << low_bits) | lo;
    out[j] = state.raw()[i];
  }
  return PureState::from_amplitudes(std::move(out));
}

Projection project_discard(PureState state, int q, Basis basis, int bit) {
  state.check_qubit(q);
  state = rotate(std::move(state), q, basis);
  PureState rest = remove_qubit(state, q, bit);
  const double p = rest.norm_squared();
  if (p > kZeroBranch) scale(rest, p);
  return {p, std::move(rest)};
}

MeasureResult measure(PureState state, int q, Basis basis, RandomStream& rng) {
  state.check_qubit(q);
  state = rotate(std::move(state), q, basis);
  const double p0 = z_probability(state, q, 0);
  const int bit = sample_bit(p0, rng);
  const double p = bit ? 1.0 - p0 : p0;
  if (p <= kZeroBranch) throw std::runtime_error("measure: zero-norm branch selected");
  zero_other_branch(state, q, bit);
  scale(state, z_probability(state, q, bit));
  return {bit, std::move(state)};
}

MeasureResult measure_discard(PureState state, int q, Basis basis,
                              RandomStream& rng) {
  state.check_qubit(q);
  state = rotate(std::move(state), q, basis);
  const double p0 = z_probability(state, q, 0);
  const int bit = sample_bit(p0, rng);
  PureState rest = remove_qubit(state, q, bit);
  const double p = rest.norm_squared();
  if (p <= kZeroBranch) throw std::runtime_error("measure: zero-norm branch selected");
  scale(rest, p);
  return {bit, std::move(rest)};
}

namespace {

PureState bell_rotate(PureState state, int q1, int q2) {
  if (q1 == q2) throw std::invalid_argument("bell_measure: q1 == q2");
  state.check_qubit(q1);
  state.check_qubit(q2);
  state = apply_gate(std::move(state), Gate::h(), {q2});
  state = apply_gate(std::move(state), Gate::cz(), {q1, q2});
  state = apply_gate(std::move(state), Gate::h(), {q2});
  return apply_gate(std::move(state), Gate::h(), {q1});
}

}  // namespace

BellResult bell_measure(PureState state, int q1, int q2, RandomStream& rng) {
  state = bell_rotate(std::move(state), q1, q2);
  // Measure the higher index first so the lower index stays valid.
  const int hi = std::max(q1, q2);
  const int lo = std::min(q1, q2);
  MeasureResult first = measure_discard(std::move(state), hi, Basis::Z, rng);
  MeasureResult second = measure_discard(std::move(first.state), lo, Basis::Z, rng);
  const int b1 = q1 == hi ? first.bit : second.bit;
  const int b2 = q2 == hi ? first.bit : second.bit;
  return {b1, b2, std::move(second.state)};
}

Projection bell_project(PureState state, int q1, int q2, int x_parity,
                        int z_parity) {
  state = bell_rotate(std::move(state), q1, q2);
  const int hi = std::max(q1, q2);
  const int lo = std::min(q1, q2);
  const int bhi = q1 == hi ? x_parity : z_parity;
  const int blo = q1 == hi ? z_parity : x_parity;
  PureState rest = remove_qubit(remove_qubit(state, hi, bhi), lo, blo);
  const double p = rest.norm_squared();
  if (p > kZeroBranch) scale(rest, p);
  return {p, std::move(rest)};
}

}  // namespace bqc::qsim
