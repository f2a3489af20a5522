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

#include "bqc/qsim/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bqc::qsim {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("PureState: qubit count " + std::to_string(n) +
                                " outside [0, " + std::to_string(kMaxQubits) +
                                "]");
  }
}

}  // namespace

PureState::PureState(int n_qubits) : n_(n_qubits) {
  check_size(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
  amps_[0] = 1.0;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes,
                                     bool normalize) {
  std::size_t d = amplitudes.size();
  if (d == 0 || (d & (d - 1)) != 0) {
    throw std::invalid_argument("PureState: length must be a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  check_size(n);
  PureState s(0);
  s.n_ = n;
  s.amps_ = std::move(amplitudes);
  if (normalize) s.normalize();
  return s;
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
  PureState s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("PureState::basis: index");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

PureState PureState::plus_k(int k) {
  const double h = 1.0 / std::numbers::sqrt2;
  const double angle = static_cast<double>(((k % 8) + 8) % 8) *
                       std::numbers::pi / 4.0;
  return from_amplitudes({h, std::polar(h, angle)});
}

PureState PureState::z_state(int bit) { return basis(1, bit ? 1 : 0); }

double PureState::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void PureState::normalize() {
  double nrm = std::sqrt(norm_squared());
  if (nrm < 1e-300) throw std::runtime_error("PureState: zero-norm state");
  for (auto& a : amps_) a /= nrm;
}

void PureState::check_qubit(int q) const {
  if (q < 0 || q >= n_) {
    throw std::out_of_range("qubit index " + std::to_string(q) +
                            " out of range for " + std::to_string(n_) +
                            "-qubit state");
  }
}

PureState tensor(const PureState& a, const PureState& b) {
  check_size(a.n_qubits() + b.n_qubits());
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Complex ai = a.raw()[i];
    for (std::size_t j = 0; j < b.dim(); ++j) {
      out[i * b.dim() + j] = ai * b.raw()[j];
    }
  }
  return PureState::from_amplitudes(std::move(out));
}

PureState tensor(std::span<const PureState> parts) {
  PureState acc(0);
  for (const auto& p : parts) acc = tensor(acc, p);
  return acc;
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.raw()[i]) * b.raw()[i];
  return s;
}

bool states_equal_up_to_phase(const PureState& a, const PureState& b,
                              double tol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("states_equal_up_to_phase: dimension mismatch");
  }
  return std::abs(inner(a, b)) >= 1.0 - tol;
}

PureState move_qubit(const PureState& state, int from, int to) {
  state.check_qubit(from);
  state.check_qubit(to);
  if (from == to) return state;
  const int n = state.n_qubits();
  // Position map: new position of each old qubit.
  std::vector<int> pos(n);
  for (int q = 0; q < n; ++q) {
    int p = q;
    if (q == from) {
      p = to;
    } else if (from < to && q > from && q <= to) {
      p = q - 1;
    } else if (from > to && q >= to && q < from) {
      p = q + 1;
    }
    pos[q] = p;
  }
  std::vector<Complex> out(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    std::size_t j = 0;
    for (int q = 0; q < n; ++q) {
      if (i & (std::size_t{1} << (n - 1 - q))) j |= std::size_t{1} << (n - 1 - pos[q]);
    }
    out[j] = state.raw()[i];
  }
  return PureState::from_amplitudes(std::move(out));
}

PureState append_zeros(PureState state, int k) {
  if (k == 0) return state;
  return tensor(state, PureState(k));
}

}  // namespace bqc::qsim
