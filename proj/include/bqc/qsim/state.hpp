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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bqc::qsim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 16;
inline constexpr double kTol = 1e-9;

/**
 * Dense pure state on n qubits.
 *
 * Qubit 0 is the most significant bit of the basis index: in an n-qubit
 * register, qubit q corresponds to bit (n - 1 - q).
 * A zero-qubit state is a single amplitude and is used as the remainder
 * once every qubit has been measured away.
 */
class PureState {
 public:
  /** |0...0> on n qubits. */
  explicit PureState(int n_qubits = 0);

  /** Takes ownership of amplitudes; length must be a power of two. */
  static PureState from_amplitudes(std::vector<Complex> amplitudes,
                                   bool normalize = false);
  static PureState basis(int n_qubits, std::uint64_t index);
  /** (|0> + e^{i k pi/4}|1>)/sqrt2. */
  static PureState plus_k(int k);
  /** |0> or |1>. */
  static PureState z_state(int bit);

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(std::size_t i) const { return amps_.at(i); }
  double norm_squared() const;

  /** Bit mask of qubit q inside the basis index. */
  std::size_t mask(int q) const { return std::size_t{1} << (n_ - 1 - q); }

  /** Raw access used by the simulator kernels. */
  std::vector<Complex>& raw() { return amps_; }
  const std::vector<Complex>& raw() const { return amps_; }

  void normalize();
  void check_qubit(int q) const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

/** a (x) b, with a's qubits first. */
PureState tensor(const PureState& a, const PureState& b);
PureState tensor(std::span<const PureState> parts);

/** <a|b>. */
Complex inner(const PureState& a, const PureState& b);

/** |<a|b>| >= 1 - tol. Both states are assumed normalized. */
bool states_equal_up_to_phase(const PureState& a, const PureState& b,
                              double tol = kTol);

/** Moves qubit `from` to position `to`, shifting the others. */
PureState move_qubit(const PureState& state, int from, int to);

/** Appends k qubits in |0> after the existing ones. */
PureState append_zeros(PureState state, int k);

}  // namespace bqc::qsim
