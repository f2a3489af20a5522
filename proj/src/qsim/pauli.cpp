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

#include "bqc/qsim/pauli.hpp"

#include <stdexcept>

#include "bqc/qsim/gates.hpp"

namespace bqc::qsim {

namespace {

// i^ph X^x Z^z form of a single letter.
struct Xz {
  int x;
  int z;
  int ph;
};

Xz to_xz(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return {0, 0, 0};
    case PauliLetter::X: return {1, 0, 0};
    case PauliLetter::Z: return {0, 1, 0};
    case PauliLetter::XZ: return {1, 1, 0};
    case PauliLetter::Y: return {1, 1, 1};
  }
  return {0, 0, 0};
}

int mod4(int v) { return ((v % 4) + 4) % 4; }

}  // namespace

PauliLetter parse_letter(const std::string& s) {
  if (s == "I") return PauliLetter::I;
  if (s == "X") return PauliLetter::X;
  if (s == "Y") return PauliLetter::Y;
  if (s == "Z") return PauliLetter::Z;
  if (s == "XZ") return PauliLetter::XZ;
  throw std::invalid_argument("unknown Pauli letter '" + s + "'");
}

std::string letter_name(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return "I";
    case PauliLetter::X: return "X";
    case PauliLetter::Y: return "Y";
    case PauliLetter::Z: return "Z";
    case PauliLetter::XZ: return "XZ";
  }
  return "?";
}

PauliString::PauliString(std::vector<PauliLetter> letters, int phase)
    : letters_(std::move(letters)), phase_(mod4(phase)) {}

PauliString PauliString::parse(const std::string& text) {
  std::vector<PauliLetter> out;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      out.push_back(parse_letter(text.substr(start, end - start)));
      start = end + 1;
    }
  } else {
    for (char ch : text) out.push_back(parse_letter(std::string(1, ch)));
  }
  return PauliString(std::move(out));
}

PauliString PauliString::identity(int n) {
  return PauliString(std::vector<PauliLetter>(n, PauliLetter::I));
}

int PauliString::x_bit(int i) const { return to_xz(letters_.at(i)).x; }
int PauliString::z_bit(int i) const { return to_xz(letters_.at(i)).z; }

bool PauliString::is_identity() const {
  for (auto l : letters_) {
    if (l != PauliLetter::I) return false;
  }
  return true;
}

PauliString PauliString::normalized() const {
  std::vector<PauliLetter> out(letters_.size());
  int ph = phase_;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    Xz v = to_xz(letters_[i]);
    ph += v.ph;
    if (v.x && v.z) {
      out[i] = PauliLetter::Y;
      ph += 3;  // X Z = i^3 Y
    } else if (v.x) {
      out[i] = PauliLetter::X;
    } else if (v.z) {
      out[i] = PauliLetter::Z;
    } else {
      out[i] = PauliLetter::I;
    }
  }
  return PauliString(std::move(out), ph);
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PauliString: length mismatch");
  std::vector<PauliLetter> out(a.letters_.size());
  int ph = a.phase_ + b.phase_;
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    Xz u = to_xz(a.letters_[i]);
    Xz v = to_xz(b.letters_[i]);
    ph += u.ph + v.ph;
    // X^a Z^b X^c Z^d = (-1)^{bc} X^{a+c} Z^{b+d}
    if (u.z && v.x) ph += 2;
    const int x = u.x ^ v.x;
    const int z = u.z ^ v.z;
    if (x && z) {
      out[i] = PauliLetter::Y;
      ph += 3;
    } else if (x) {
      out[i] = PauliLetter::X;
    } else if (z) {
      out[i] = PauliLetter::Z;
    } else {
      out[i] = PauliLetter::I;
    }
  }
  return PauliString(std::move(out), ph);
}

bool operator==(const PauliString& a, const PauliString& b) {
  PauliString na = a.normalized();
  PauliString nb = b.normalized();
  return na.letters_ == nb.letters_ && na.phase_ == nb.phase_;
}

std::string PauliString::to_string() const {
  static const char* phases[] = {"+", "+i", "-", "-i"};
  std::string s = phases[phase_];
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) s += ",";
    s += letter_name(letters_[i]);
  }
  return s;
}

PureState apply_letter(PureState state, PauliLetter l, int q) {
  Xz v = to_xz(l);
  // X^x Z^z acts as Z first, then X.
  if (v.z) state = apply_gate(std::move(state), Gate::z(), {q});
  if (v.x) state = apply_gate(std::move(state), Gate::x(), {q});
  if (v.ph) {
    const Complex f = v.ph == 1 ? Complex(0, 1) : Complex(1, 0);
    for (auto& a : state.raw()) a *= f;
  }
  return state;
}

PureState apply_pauli(PureState state, const PauliString& p,
                      std::span<const int> qubits) {
  if (static_cast<int>(qubits.size()) != p.size()) {
    throw std::invalid_argument("apply_pauli: qubit list does not match string length");
  }
  for (int i = 0; i < p.size(); ++i) state = apply_letter(std::move(state), p[i], qubits[i]);
  if (p.phase()) {
    static const Complex f[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (auto& a : state.raw()) a *= f[p.phase()];
  }
  return state;
}

}  // namespace bqc::qsim
