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

#include <catch_amalgamated.hpp>

#include "bqc/qsim/pauli.hpp"
#include "test_util.hpp"

using namespace bqc::qsim;
using namespace bqc::test;

namespace {

const std::vector<PauliLetter> kLetters = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                           PauliLetter::Z, PauliLetter::XZ};

Eigen::Matrix2cd letter_matrix(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return Eigen::Matrix2cd::Identity();
    case PauliLetter::X: return pauli_x();
    case PauliLetter::Y: return pauli_y();
    case PauliLetter::Z: return pauli_z();
    case PauliLetter::XZ: return pauli_x() * pauli_z();
  }
  return Eigen::Matrix2cd::Identity();
}

Eigen::MatrixXcd string_matrix(const PauliString& p) {
  std::map<int, Eigen::Matrix2cd> f;
  for (int i = 0; i < p.size(); ++i) f[i] = letter_matrix(p[i]);
  static const Complex ph[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ph[p.phase()] * kron_op(p.size(), f);
}

}  // namespace

TEST_CASE("single-letter products match the matrix table", "[pauli][property]") {
  for (auto a : kLetters) {
    for (auto b : kLetters) {
      PauliString pa({a}), pb({b});
      PauliString prod = pa * pb;
      Eigen::MatrixXcd ref = letter_matrix(a) * letter_matrix(b);
      CHECK((string_matrix(prod) - ref).norm() < 1e-12);
    }
  }
}

TEST_CASE("XZ letter is distinct from Y and squares to -I", "[pauli]") {
  PauliString xz({PauliLetter::XZ});
  PauliString y({PauliLetter::Y});
  CHECK_FALSE(xz == y);
  CHECK(xz == PauliString({PauliLetter::Y}, 3));
  PauliString sq = xz * xz;
  CHECK(sq.is_identity());
  CHECK(sq.phase() == 2);
  CHECK((y * y).phase() == 0);
  CHECK((PauliString({PauliLetter::X}) * PauliString({PauliLetter::Z})) == xz);
  CHECK((PauliString({PauliLetter::Z}) * PauliString({PauliLetter::X})) ==
        PauliString({PauliLetter::XZ}, 2));
}

TEST_CASE("multiplication is associative on random strings", "[pauli][property]") {
  RandomStream rng(4);
  for (int t = 0; t < 200; ++t) {
    auto rand_string = [&] {
      std::vector<PauliLetter> l(3);
      for (auto& x : l) x = kLetters[rng.below(5)];
      return PauliString(l, static_cast<int>(rng.below(4)));
    };
    PauliString a = rand_string(), b = rand_string(), c = rand_string();
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((string_matrix(a * b) - string_matrix(a) * string_matrix(b)).norm() < 1e-12);
  }
}

TEST_CASE("apply_pauli matches matrix action", "[pauli]") {
  RandomStream rng(6);
  for (int t = 0; t < 50; ++t) {
    PureState psi = random_state(3, rng);
    std::vector<PauliLetter> l(3);
    for (auto& x : l) x = kLetters[rng.below(5)];
    PauliString p(l, static_cast<int>(rng.below(4)));
    std::vector<int> qubits = {0, 1, 2};
    PureState out = apply_pauli(psi, p, qubits);
    CHECK((to_vec(out) - string_matrix(p) * to_vec(psi)).norm() < 1e-12);
  }
  CHECK(PauliString::parse("X,XZ,I")[1] == PauliLetter::XZ);
  CHECK(PauliString::parse("XYZ").size() == 3);
  CHECK_THROWS_AS(PauliString::parse("Q"), std::invalid_argument);
}
