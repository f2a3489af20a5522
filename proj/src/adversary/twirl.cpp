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

#include "bqc/adversary/twirl.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "bqc/qsim/gates.hpp"
#include "bqc/qsim/mixed.hpp"

namespace bqc::adversary {

using qsim::Complex;

namespace {

Eigen::Vector4cd vec(const Eigen::Matrix2cd& m) {
  return Eigen::Vector4cd(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

Eigen::Matrix2cd unvec(const Eigen::Vector4cd& v) {
  Eigen::Matrix2cd m;
  m << v[0], v[1], v[2], v[3];
  return m;
}

Eigen::Vector4cd phi_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return Eigen::Vector4cd(h, 0, 0, h);
}

Eigen::Matrix4d ptm_of(const std::function<Eigen::Matrix2cd(const Eigen::Matrix2cd&)>& f) {
  const qsim::PauliLetter ls[] = {qsim::PauliLetter::I, qsim::PauliLetter::X,
                                  qsim::PauliLetter::Y, qsim::PauliLetter::Z};
  Eigen::Matrix4d r;
  for (int j = 0; j < 4; ++j) {
    Eigen::Matrix2cd out = f(pauli_matrix(ls[j]));
    for (int i = 0; i < 4; ++i) r(i, j) = 0.5 * (pauli_matrix(ls[i]) * out).trace().real();
  }
  return r;
}

double tp_error_of(const Eigen::Matrix4d& r) {
  double e = std::abs(r(0, 0) - 1.0);
  for (int j = 1; j < 4; ++j) e = std::max(e, std::abs(r(0, j)));
  return e;
}

}  // namespace

Eigen::Matrix4cd deviated_pair(const Strategy& s) {
  const Eigen::Vector4cd phi = phi_plus();
  if (std::holds_alternative<Honest>(s)) return phi * phi.adjoint();
  if (const auto* r = std::get_if<PreBellReplace>(&s)) return r->rho_ab;
  if (const auto* a = std::get_if<PauliAttack>(&s)) {
    if (a->stage != Stage::BellPair && a->stage != Stage::Transmission) {
      throw std::invalid_argument("deviated_pair: Pauli attack must act on the pair");
    }
    Eigen::Matrix4cd op = Eigen::Matrix4cd::Identity();
    for (std::size_t i = 0; i < a->positions.size(); ++i) {
      const int pos = a->positions[i];
      if (a->stage == Stage::Transmission && pos != 0) continue;
      Eigen::Matrix2cd m = pauli_matrix(a->paulis[static_cast<int>(i)]);
      Eigen::Matrix4cd k;
      for (int r0 = 0; r0 < 2; ++r0)
        for (int c0 = 0; c0 < 2; ++c0)
          for (int r1 = 0; r1 < 2; ++r1)
            for (int c1 = 0; c1 < 2; ++c1) {
              Complex va = pos == 0 ? m(r0, c0) : Complex(r0 == c0 ? 1.0 : 0.0);
              Complex vb = pos == 1 ? m(r1, c1) : Complex(r1 == c1 ? 1.0 : 0.0);
              k(2 * r0 + r1, 2 * c0 + c1) = va * vb;
            }
      op = k * op;
    }
    Eigen::Vector4cd v = op * phi;
    return v * v.adjoint();
  }
  if (const auto* u = std::get_if<UnitaryDeviation>(&s)) {
    if (u->stage != Stage::BellPair && u->stage != Stage::Transmission) {
      throw std::invalid_argument("deviated_pair: unitary must act on the pair");
    }
    validate_strategy(s, 2);
    std::vector<int> targets = u->targets;
    if (u->stage == Stage::Transmission) {
      for (int t : targets) {
        if (t != 0) throw std::invalid_argument("deviated_pair: transmission target must be 0");
      }
    }
    qsim::PureState psi = qsim::PureState::from_amplitudes(
        {phi[0], phi[1], phi[2], phi[3]});
    psi = qsim::append_zeros(std::move(psi), u->ancillas);
    for (int k = 0; k < u->ancillas; ++k) targets.push_back(2 + k);
    psi = qsim::apply_matrix(std::move(psi), u->unitary, targets);
    std::vector<int> keep = {0, 1};
    return Eigen::Matrix4cd(qsim::reduced_matrix(psi, keep));
  }
  throw std::invalid_argument("deviated_pair: " + strategy_name(s) +
                              " is not a single-pair deviation");
}

Eigen::Matrix2cd pair_map(const Eigen::Matrix4cd& rho, const Eigen::Matrix2cd& sigma) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int b = 0; b < 2; ++b) {
    for (int bp = 0; bp < 2; ++bp) {
      Complex acc{0.0, 0.0};
      for (int a = 0; a < 2; ++a) {
        for (int ap = 0; ap < 2; ++ap) acc += sigma(ap, a) * rho(2 * ap + b, 2 * a + bp);
      }
      out(b, bp) = 2.0 * acc;
    }
  }
  return out;
}

Eigen::Matrix2cd twirled_map(const Eigen::Matrix4cd& rho, const Eigen::Matrix2cd& sigma) {
  const Eigen::Matrix2cd x = pauli_matrix(qsim::PauliLetter::X);
  const Eigen::Matrix2cd z = pauli_matrix(qsim::PauliLetter::Z);
  Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
  for (int o1 = 0; o1 < 2; ++o1) {
    for (int o2 = 0; o2 < 2; ++o2) {
      Eigen::Matrix2cd p = Eigen::Matrix2cd::Identity();
      if (o1) p = x * p;
      if (o2) p = z * p;
      // p = Z^o2 X^o1, p^dagger = X^o1 Z^o2
      acc += p.adjoint() * pair_map(rho, p * sigma * p.adjoint()) * p;
    }
  }
  return acc / 4.0;
}

std::vector<Eigen::Matrix2cd> default_probes() {
  Eigen::Matrix2cd z0, z1, xp, yp;
  z0 << 1, 0, 0, 0;
  z1 << 0, 0, 0, 1;
  xp << 0.5, 0.5, 0.5, 0.5;
  yp << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;
  return {z0, z1, xp, yp};
}

Eigen::Matrix2cd TwirlReport::apply(const Eigen::Matrix2cd& sigma) const {
  return unvec(superop * vec(sigma));
}

TwirlReport twirl_channel(const Strategy& s, const std::vector<Eigen::Matrix2cd>& probes) {
  if (probes.size() != 4) throw std::invalid_argument("twirl_channel: four probes required");
  const Eigen::Matrix4cd rho = deviated_pair(s);
  Eigen::Matrix4cd in, out;
  for (int j = 0; j < 4; ++j) {
    in.col(j) = vec(probes[j]);
    out.col(j) = vec(twirled_map(rho, probes[j]));
  }
  Eigen::FullPivLU<Eigen::Matrix4cd> lu(in);
  if (!lu.isInvertible()) throw std::invalid_argument("twirl_channel: probes do not span");
  TwirlReport rep;
  rep.superop = out * lu.inverse();
  rep.ptm = ptm_of([&](const Eigen::Matrix2cd& m) { return rep.apply(m); });
  rep.f_ptm = ptm_of([&](const Eigen::Matrix2cd& m) { return pair_map(rho, m); });
  rep.tp_error = tp_error_of(rep.ptm);
  rep.f_tp_error = tp_error_of(rep.f_ptm);
  rep.off_diagonal = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) rep.off_diagonal = std::max(rep.off_diagonal, std::abs(rep.ptm(i, j)));
    }
  }
  return rep;
}

}  // namespace bqc::adversary
