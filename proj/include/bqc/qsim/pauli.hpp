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

#include <span>
#include <string>
#include <vector>

#include "bqc/qsim/state.hpp"

namespace bqc::qsim {

/** XZ is the ordered product X*Z = -iY, kept distinct from Y. */
enum class PauliLetter { I, X, Y, Z, XZ };

/** Parses "I", "X", "Y", "Z" or "XZ". */
PauliLetter parse_letter(const std::string& s);
std::string letter_name(PauliLetter l);

/**
 * Phase-tracked Pauli string i^phase * P_0 (x) P_1 (x) ...
 *
 * Products are returned with letters normalized to {I, X, Y, Z}; an input XZ
 * contributes its -i relative to Y to the phase.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<PauliLetter> letters, int phase = 0);
  /** Parses a letter sequence such as "XIZ" or "X,XZ,I". */
  static PauliString parse(const std::string& text);
  static PauliString identity(int n);

  int size() const { return static_cast<int>(letters_.size()); }
  int phase() const { return phase_; }
  PauliLetter operator[](int i) const { return letters_.at(i); }
  const std::vector<PauliLetter>& letters() const { return letters_; }

  /** X exponent of qubit i in the canonical form X^x Z^z. */
  int x_bit(int i) const;
  int z_bit(int i) const;

  bool is_identity() const;

  /** Canonical copy: letters in {I,X,Y,Z} with adjusted phase. */
  PauliString normalized() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  /** Operator equality, including phase. */
  friend bool operator==(const PauliString& a, const PauliString& b);

  std::string to_string() const;

 private:
  std::vector<PauliLetter> letters_;
  int phase_ = 0;
};

/** Applies the operator (with its phase) to the listed qubits of state. */
PureState apply_pauli(PureState state, const PauliString& p,
                      std::span<const int> qubits);

/** Applies one letter to qubit q; the XZ letter acts as X*Z. */
PureState apply_letter(PureState state, PauliLetter l, int q);

}  // namespace bqc::qsim
