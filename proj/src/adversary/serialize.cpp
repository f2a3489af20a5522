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

#include "bqc/adversary/serialize.hpp"

#include <cmath>
#include <stdexcept>

namespace bqc::adversary {

using nlohmann::json;
using qsim::Complex;

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return Complex(j[0].get<double>(), j[1].get<double>());
  throw std::invalid_argument("expected a number or [re, im]");
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXcd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix");
  const auto n = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != n) {
      throw std::invalid_argument("matrix must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Eigen::Matrix4cd plus_zero() {
  Eigen::Vector4cd v(1.0 / std::sqrt(2.0), 0, 1.0 / std::sqrt(2.0), 0);
  return v * v.adjoint();
}

qsim::PauliString letters_from_json(const json& j, std::size_t n_positions) {
  if (j.is_array()) {
    std::vector<qsim::PauliLetter> out;
    for (const auto& e : j) out.push_back(qsim::parse_letter(e.get<std::string>()));
    return qsim::PauliString(out);
  }
  const std::string s = j.get<std::string>();
  if (s.find(',') != std::string::npos || s.size() == n_positions) {
    return qsim::PauliString::parse(s);
  }
  if (n_positions == 1) return qsim::PauliString({qsim::parse_letter(s)});
  throw std::invalid_argument("letters '" + s + "' do not match " +
                              std::to_string(n_positions) + " positions");
}

Stage stage_or(const json& j, Stage fallback) {
  return j.contains("stage") ? parse_stage(j.at("stage").get<std::string>()) : fallback;
}

}  // namespace

json strategy_to_json(const Strategy& s) {
  json j;
  j["type"] = strategy_name(s);
  if (const auto* a = std::get_if<PauliAttack>(&s)) {
    j["stage"] = stage_name(a->stage);
    j["positions"] = a->positions;
    json l = json::array();
    for (auto x : a->paulis.letters()) l.push_back(qsim::letter_name(x));
    j["letters"] = l;
  } else if (const auto* r = std::get_if<RandomPauliAttack>(&s)) {
    j["stage"] = stage_name(r->stage);
    j["letter"] = qsim::letter_name(r->letter);
    j["count"] = r->count;
  } else if (const auto* b = std::get_if<PreBellReplace>(&s)) {
    j["rho"] = matrix_to_json(b->rho_ab);
  } else if (const auto* u = std::get_if<UnitaryDeviation>(&s)) {
    j["stage"] = stage_name(u->stage);
    j["targets"] = u->targets;
    j["ancillas"] = u->ancillas;
    j["matrix"] = matrix_to_json(u->unitary);
  } else if (const auto* n = std::get_if<IidXZNoise>(&s)) {
    j["stage"] = stage_name(n->stage);
    j["p"] = n->p;
  } else if (const auto* d = std::get_if<Depolarizing>(&s)) {
    j["stage"] = stage_name(d->stage);
    j["epsilon"] = d->epsilon;
  } else if (const auto* l = std::get_if<Loss>(&s)) {
    j["p_loss"] = l->p_loss;
  }
  return j;
}

Strategy strategy_from_json(const json& j) {
  if (j.is_string()) return preset_strategy(j.get<std::string>());
  const std::string type = j.at("type").get<std::string>();
  Strategy s;
  if (type == "honest") {
    s = Honest{};
  } else if (type == "pauli") {
    auto positions = j.at("positions").get<std::vector<int>>();
    s = PauliAttack{parse_stage(j.at("stage").get<std::string>()), positions,
                    letters_from_json(j.at("letters"), positions.size())};
  } else if (type == "random_pauli") {
    s = RandomPauliAttack{parse_stage(j.at("stage").get<std::string>()),
                          qsim::parse_letter(j.value("letter", std::string("X"))),
                          j.value("count", 1)};
  } else if (type == "pre_bell_replace") {
    if (j.contains("rho")) {
      s = PreBellReplace{Eigen::Matrix4cd(matrix_from_json(j.at("rho")))};
    } else if (j.contains("pure")) {
      const auto& v = j.at("pure");
      if (v.size() != 4) throw std::invalid_argument("pure state must have 4 amplitudes");
      Eigen::Vector4cd a;
      for (int i = 0; i < 4; ++i) a[i] = complex_from_json(v[i]);
      a.normalize();
      s = PreBellReplace{a * a.adjoint()};
    } else {
      const std::string name = j.value("state", std::string("plus_zero"));
      if (name != "plus_zero") throw std::invalid_argument("unknown pair state '" + name + "'");
      s = PreBellReplace{plus_zero()};
    }
  } else if (type == "unitary") {
    UnitaryDeviation u;
    u.stage = parse_stage(j.at("stage").get<std::string>());
    u.targets = j.at("targets").get<std::vector<int>>();
    u.ancillas = j.value("ancillas", 0);
    if (j.contains("rz")) {
      const double th = j.at("rz").get<double>();
      u.unitary = Eigen::MatrixXcd::Identity(2, 2);
      u.unitary(1, 1) = std::polar(1.0, -th);
    } else {
      u.unitary = matrix_from_json(j.at("matrix"));
    }
    s = u;
  } else if (type == "iid_xz") {
    s = IidXZNoise{j.at("p").get<double>(), stage_or(j, Stage::Transmission)};
  } else if (type == "depolarizing") {
    s = Depolarizing{j.at("epsilon").get<double>(), stage_or(j, Stage::GadgetOutput)};
  } else if (type == "loss") {
    s = Loss{j.at("p_loss").get<double>()};
  } else {
    throw std::invalid_argument("unknown strategy type '" + type + "'");
  }
  validate_strategy(s, 0);
  return s;
}

ChannelModel channel_from_json(const json& j) {
  std::vector<Strategy> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(strategy_from_json(e));
  } else if (!j.is_null()) {
    out.push_back(strategy_from_json(j));
  }
  return ChannelModel(std::move(out));
}

json channel_to_json(const ChannelModel& c) {
  json arr = json::array();
  for (const auto& s : c.strategies()) arr.push_back(strategy_to_json(s));
  return arr;
}

Strategy preset_strategy(const std::string& name) {
  if (name == "honest") return Honest{};
  if (name == "single_x") return RandomPauliAttack{Stage::Measurement, qsim::PauliLetter::X, 1};
  if (name == "plus_zero") return PreBellReplace{plus_zero()};
  throw std::invalid_argument("unknown adversary preset '" + name + "'");
}

}  // namespace bqc::adversary
