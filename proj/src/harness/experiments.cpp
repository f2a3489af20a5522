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

#include "bqc/harness/experiments.hpp"

#include <algorithm>
#include <boost/math/special_functions/binomial.hpp>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bqc/css/remote_prep.hpp"
#include "bqc/fkproto/compose.hpp"
#include "bqc/fkproto/protocol.hpp"
#include "bqc/gadget/lossy.hpp"
#include "bqc/adversary/twirl.hpp"
#include "bqc/qsim/gates.hpp"
#include "bqc/qsim/measure.hpp"

namespace bqc::harness {

using adversary::ChannelModel;
using adversary::Stage;
using fkproto::Role;
using qsim::Basis;
using qsim::Complex;
using qsim::Gate;
using qsim::PureState;
using qsim::RandomStream;

namespace {

std::string key_of(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

std::string bits_of(const std::vector<int>& v) {
  std::string s;
  for (int b : v) s += static_cast<char>('0' + b);
  return s;
}

css::CssCode config_code(const RunConfig& cfg) {
  if (cfg.code == "none" || cfg.code == "steane") return css::CssCode::steane();
  if (cfg.code == "trivial") return css::CssCode::trivial();
  return css::CssCode::load(cfg.code);
}

fkproto::RoleSampler config_roles(const RunConfig& cfg) {
  return fkproto::RoleSampler(config_graph(cfg), cfg.n_t, cfg.n_d);
}

}  // namespace

fkproto::Program config_program(const RunConfig& cfg, int n_c) {
  fkproto::Program prog = fkproto::Program::trivial(n_c);
  if (!cfg.phi.empty()) {
    if (static_cast<int>(cfg.phi.size()) != n_c) {
      throw std::invalid_argument("phi has " + std::to_string(cfg.phi.size()) +
                                  " angles but there are " + std::to_string(n_c) +
                                  " computation vertices");
    }
    prog.phi = cfg.phi;
  }
  return prog;
}

TrialStats run_gadget_experiment(const RunConfig& cfg, gadget::TranscriptWriter* transcripts) {
  const ChannelModel channel = config_channel(cfg);
  const gadget::PrepConfig prep = config_prep(cfg);
  std::array<long, 10> labels{};
  long accepted = 0, z = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    RandomStream rng(cfg.seed, static_cast<std::uint64_t>(t));
    gadget::GadgetOutcome g = gadget::run_gadget(*cfg.p, *cfg.p_prime, channel, rng, prep);
    if (transcripts && t < cfg.transcript_limit) {
      transcripts->write(g, cfg.seed, static_cast<std::uint64_t>(t));
    }
    if (!g.accepted) continue;
    ++accepted;
    z += g.label.z_basis();
    ++labels[g.label.index()];
  }
  TrialStats st;
  st.trials = cfg.trials;
  st.counts["accepted"] = accepted;
  st.counts["rejected"] = cfg.trials - accepted;
  st.metrics["acceptance"] = proportion(accepted, cfg.trials);
  if (accepted > 0) st.metrics["pr_z_given_accept"] = proportion(z, accepted);
  for (int i = 0; i < 10; ++i) {
    const std::string name = gadget::label_name(i);
    st.counts["label_" + name] = labels[i];
    st.metrics["label_" + name] = proportion(labels[i], cfg.trials);
  }
  st.extra["expected_pr_z_given_accept"] = fkproto::z_label_probability(*cfg.p, *cfg.p_prime);
  return st;
}

CssCheck css_single_error_check(const css::CssCode& code) {
  CssCheck out;
  const int n = code.n();
  std::vector<css::PauliError> errors;
  errors.push_back({css::Bits(n, 0), css::Bits(n, 0)});
  for (int q = 0; q < n; ++q) {
    for (int kind = 1; kind <= 3; ++kind) {
      css::PauliError e{css::Bits(n, 0), css::Bits(n, 0)};
      e.x[q] = kind & 1;
      e.z[q] = (kind >> 1) & 1;
      errors.push_back(e);
    }
  }
  for (int c = 0; c < 2; ++c) {
    const auto words = std::uint32_t{1}
                       << code.stabilizer_words(c ? Basis::X : Basis::Z).size();
    for (const auto& e : errors) {
      for (int o = 0; o < 2; ++o) {
        for (std::uint32_t w = 0; w < words; ++w) {
          css::FramePrep f = css::remote_prepare_frame_fixed(code, c, 0, 0, e, o, w);
          ++out.cases;
          out.passed += !f.logical_fault && f.o == o;
        }
      }
    }
  }
  return out;
}

TrialStats css_logical_sweep(const RunConfig& cfg) {
  const css::CssCode code = config_code(cfg);
  std::vector<double> ps = cfg.sweep;
  if (ps.empty()) ps = {0.01, 0.02, 0.05};
  TrialStats st;
  st.trials = cfg.trials;
  std::vector<double> rates;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const ChannelModel noise({adversary::IidXZNoise{ps[i], Stage::Transmission}});
    long faults = 0;
    for (long t = 0; t < cfg.trials; ++t) {
      RandomStream rng(cfg.seed, (static_cast<std::uint64_t>(i) << 40) | static_cast<std::uint64_t>(t));
      const int c = rng.bit(), a = rng.bit(), r = rng.bit();
      if (cfg.route == "frame") {
        faults += css::remote_prepare_frame(code, c, a, r, noise, rng).logical_fault;
      } else {
        css::RemotePrep rp = css::remote_prepare(code, c, a, r, noise, rng);
        faults += !qsim::states_equal_up_to_phase(css::extract_logical(code, rp.bob_state),
                                                  gadget::ideal_input(c, a));
      }
    }
    const std::string key = "logical_error@" + key_of(ps[i]);
    st.counts[key] = faults;
    st.metrics[key] = proportion(faults, cfg.trials);
    rates.push_back(st.metrics[key].estimate);
  }
  bool positive = ps.size() >= 2;
  for (double r : rates) positive = positive && r > 0;
  st.extra["slope"] = positive ? nlohmann::json(loglog_slope(ps, rates)) : nlohmann::json();
  const CssCheck chk = css_single_error_check(code);
  st.extra["single_error_cases"] = chk.cases;
  st.extra["single_error_passed"] = chk.passed;
  st.extra["code"] = code.name();
  return st;
}

TrialStats run_fk_experiment(const RunConfig& cfg, std::ostream* transcripts) {
  const fkproto::RoleSampler roles = config_roles(cfg);
  const ChannelModel adv = config_channel(cfg);
  TrialStats st;
  st.trials = cfg.trials;
  long accepted = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    RandomStream rng(cfg.seed, static_cast<std::uint64_t>(t));
    fkproto::GraphSpec g = roles.sample(rng);
    const fkproto::Pattern pat =
        fkproto::make_pattern(g, config_program(cfg, g.count(Role::Computation)));
    fkproto::FkResult r = fkproto::run_fk(g, pat, fkproto::prepare_direct(g, rng), adv, rng);
    accepted += r.accepted;
    if (r.accepted) ++st.counts["output_" + bits_of(r.outputs)];
    if (transcripts && t < cfg.transcript_limit) {
      *transcripts << nlohmann::json{{"trial", t}, {"accepted", r.accepted}, {"delta", r.delta},
                                     {"b", r.b}, {"outputs", r.outputs}}
                          .dump()
                   << '\n';
    }
  }
  st.counts["accepted"] = accepted;
  st.metrics["acceptance"] = proportion(accepted, cfg.trials);
  return st;
}

TrialStats estimate_acceptance(const RunConfig& cfg, std::ostream* transcripts) {
  if (!cfg.n_d || !cfg.p || !cfg.p_prime) throw std::invalid_argument("compose needs nd, p and pprime");
  const fkproto::RoleSampler roles = config_roles(cfg);
  const fkproto::Program prog = config_program(cfg, cfg.n - cfg.n_t - *cfg.n_d);
  fkproto::ComposeConfig cc;
  cc.p = *cfg.p;
  cc.p_prime = *cfg.p_prime;
  cc.prep = config_prep(cfg);
  const ChannelModel adv = config_channel(cfg);
  TrialStats st;
  st.trials = cfg.trials;
  long accepted = 0;
  MeanAccumulator runs;
  for (long t = 0; t < cfg.trials; ++t) {
    RandomStream rng(cfg.seed, static_cast<std::uint64_t>(t));
    fkproto::ComposeResult r = fkproto::compose_protocol(roles, prog, cc, adv, rng);
    accepted += r.fk.accepted;
    runs.add(static_cast<double>(r.gadget_runs));
    if (transcripts && t < cfg.transcript_limit) {
      *transcripts << nlohmann::json{{"trial", t},
                                     {"accepted", r.fk.accepted},
                                     {"gadget_runs", r.gadget_runs},
                                     {"delta", r.fk.delta},
                                     {"b", r.fk.b}}
                          .dump()
                   << '\n';
    }
  }
  st.counts["accepted"] = accepted;
  st.counts["rejected"] = cfg.trials - accepted;
  st.metrics["acceptance"] = proportion(accepted, cfg.trials);
  st.metrics["gadget_runs"] = runs.result();
  st.extra["expected_gadget_runs"] =
      fkproto::expected_gadget_runs(cfg.n, *cfg.n_d, cc.p, cc.p_prime);
  return st;
}

namespace {

double flip_probability(qsim::PauliLetter l, Stage stage) {
  using qsim::PauliLetter;
  if (l == PauliLetter::I) return 0.0;
  if (stage == Stage::Measurement) return l == PauliLetter::Z ? 0.0 : 1.0;
  // Before the basis rotation: Z always flips, X and Y flip half the time over the uniform k'.
  return l == PauliLetter::Z ? 1.0 : 0.5;
}

double choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(k));
}

}  // namespace

std::optional<double> trap_miss_oracle(const fkproto::RoleSampler& roles, const ChannelModel& attack,
                                       int d) {
  const auto& strategies = attack.strategies();
  bool honest = true;
  for (const auto& s : strategies) honest = honest && std::holds_alternative<adversary::Honest>(s);
  if (honest) return 0.0;
  if (strategies.size() != 1) return std::nullopt;
  const auto* rp = std::get_if<adversary::RandomPauliAttack>(&strategies[0]);
  if (!rp || (rp->stage != Stage::Measurement && rp->stage != Stage::GraphState)) return std::nullopt;

  const fkproto::GraphSpec& g = roles.graph();
  const int n = g.n_vertices, n_t = roles.n_traps();
  int n_d = roles.n_dummies().value_or(0);
  if (!g.edges.empty()) {
    if (roles.count() > 1e5) return std::nullopt;
    const auto nb = g.neighbors();
    const auto maps = fkproto::feasible_role_maps(g, n_t, roles.n_dummies());
    if (maps.empty()) return std::nullopt;
    n_d = static_cast<int>(std::count(maps[0].begin(), maps[0].end(), Role::Dummy));
    for (const auto& m : maps) {
      if (std::count(m.begin(), m.end(), Role::Dummy) != n_d) return std::nullopt;
      for (int v = 0; v < n; ++v) {
        if (m[v] == Role::Dummy) continue;
        for (int u : nb[v]) {
          if (m[u] != Role::Dummy) return std::nullopt;
        }
      }
    }
  }
  const int n_c = n - n_t - n_d;
  const int m = rp->count;
  const double f = flip_probability(rp->letter, rp->stage);
  const double total = choose(n, m);
  double p = 0.0;
  for (int t = 0; t <= std::min(m, n_t); ++t) {
    for (int c = 0; c <= std::min(m - t, n_c); ++c) {
      const double w = choose(n_t, t) * choose(n_c, c) * choose(n_d, m - t - c) / total;
      if (w == 0.0) continue;
      double tail = 0.0;
      for (int j = d; j <= c; ++j) tail += choose(c, j) * std::pow(f, j) * std::pow(1 - f, c - j);
      p += w * std::pow(1 - f, t) * tail;
    }
  }
  return p;
}

nlohmann::json PIncorrectReport::to_json() const {
  nlohmann::json j = {{"p_incorrect", p_incorrect.to_json()}, {"bound", bound}, {"bound_ok", bound_ok}};
  j["oracle"] = oracle ? nlohmann::json(*oracle) : nlohmann::json();
  j["oracle_ok"] = oracle_ok ? nlohmann::json(*oracle_ok) : nlohmann::json();
  return j;
}

namespace {

int majority(const std::vector<int>& v) {
  int ones = 0;
  for (int b : v) ones += b;
  return 2 * ones > static_cast<int>(v.size()) ? 1 : 0;
}

}  // namespace

PIncorrectReport measure_p_incorrect(const fkproto::RoleSampler& roles,
                                     const fkproto::Program& program, const ChannelModel& attack,
                                     int d, long trials, std::uint64_t seed,
                                     std::ostream* transcripts) {
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (d > 1 && static_cast<int>(program.outputs.size()) != 2 * d - 1) {
    throw std::invalid_argument("majority decoding at d = " + std::to_string(d) + " needs " +
                                std::to_string(2 * d - 1) + " outputs");
  }
  std::map<std::vector<Role>, std::vector<int>> refs;
  long accepted = 0, wrong = 0;
  for (long t = 0; t < trials; ++t) {
    RandomStream rng(seed, static_cast<std::uint64_t>(t));
    fkproto::GraphSpec g = roles.sample(rng);
    const fkproto::Pattern pat = fkproto::make_pattern(g, program);
    auto it = refs.find(g.roles);
    if (it == refs.end()) {
      auto ref = fkproto::deterministic_reference(g, pat);
      if (!ref) {
        throw std::invalid_argument("p_incorrect needs a program with a deterministic output");
      }
      it = refs.emplace(g.roles, *ref).first;
    }
    fkproto::FkResult r = fkproto::run_fk(g, pat, fkproto::prepare_direct(g, rng), attack, rng);
    const bool differs =
        d == 1 ? r.outputs != it->second : majority(r.outputs) != majority(it->second);
    accepted += r.accepted;
    wrong += r.accepted && differs;
    if (transcripts && t < 10000) {
      *transcripts << nlohmann::json{{"trial", t}, {"accepted", r.accepted}, {"incorrect", r.accepted && differs},
                                     {"delta", r.delta}, {"b", r.b}}
                          .dump()
                   << '\n';
    }
  }
  PIncorrectReport rep;
  rep.stats.trials = trials;
  rep.stats.counts["accepted"] = accepted;
  rep.stats.counts["accepted_incorrect"] = wrong;
  rep.stats.metrics["acceptance"] = proportion(accepted, trials);
  rep.p_incorrect = proportion(wrong, trials);
  rep.stats.metrics["p_incorrect"] = rep.p_incorrect;
  const double ratio = static_cast<double>(roles.n_traps()) / roles.n_vertices();
  rep.bound = std::pow(1.0 - ratio, d);
  rep.bound_ok = below_bound(rep.p_incorrect, rep.bound);
  bool simple = static_cast<int>(program.outputs.size()) == program.size();
  for (int j = 0; j < program.size(); ++j) {
    simple = simple && program.x_deps[j].empty() && program.z_deps[j].empty();
  }
  if (simple) rep.oracle = trap_miss_oracle(roles, attack, d);
  if (rep.oracle) rep.oracle_ok = within_sigma(rep.p_incorrect, *rep.oracle);
  rep.stats.extra = rep.to_json();
  return rep;
}

PIncorrectReport estimate_p_incorrect(const RunConfig& cfg, std::ostream* transcripts) {
  if (3 * cfg.n_t != cfg.n) throw std::invalid_argument("verify requires 3 nt = n");
  const fkproto::RoleSampler roles = config_roles(cfg);
  if (!cfg.n_d) throw std::invalid_argument("verify needs nd");
  const fkproto::Program prog = config_program(cfg, cfg.n - cfg.n_t - *cfg.n_d);
  return measure_p_incorrect(roles, prog, config_channel(cfg), cfg.d, cfg.trials, cfg.seed,
                             transcripts);
}

SecretClass all_secrets() {
  return {"all", [](const gadget::GadgetSecrets&) { return true; }};
}

SecretClass wire_basis_class(int wire, int c) {
  if (wire < 0 || wire > 4 || (c != 0 && c != 1)) throw std::invalid_argument("bad wire class");
  return {"c" + std::to_string(wire + 1) + "=" + std::to_string(c),
          [wire, c](const gadget::GadgetSecrets& s) { return s.c[wire] == c; }};
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

namespace {

Eigen::VectorXcd as_vector(const PureState& s) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) v[static_cast<Eigen::Index>(i)] = s.raw()[i];
  return v;
}

}  // namespace

Eigen::MatrixXcd averaged_input_state(double p, double p_prime, const SecretClass& cls,
                                      long samples, std::uint64_t seed) {
  const ChannelModel honest;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(32, 32);
  for (long t = 0; t < samples; ++t) {
    RandomStream rng(seed, static_cast<std::uint64_t>(t));
    gadget::GadgetSecrets s;
    int tries = 0;
    do {
      if (++tries > 100000) throw std::runtime_error("secret class '" + cls.name + "' is empty");
      s = gadget::sample_secrets(p, p_prime, rng);
    } while (!cls.contains(s));
    std::vector<PureState> wires;
    for (int j = 0; j < 5; ++j) {
      gadget::WireRecord rec;
      wires.push_back(gadget::prepare_wire(s.c[j], s.a[j], s.r[j], j, honest, rng, rec));
    }
    const Eigen::VectorXcd v = as_vector(qsim::tensor(wires));
    acc += v * v.adjoint();
  }
  return acc / static_cast<double>(samples);
}

Eigen::MatrixXcd exact_average_input(double p, double p_prime) {
  const auto pc0 = gadget::c_zero_probabilities(p, p_prime);
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(32, 32);
  for (int cm = 0; cm < 32; ++cm) {
    gadget::Bits5 c{};
    double w = 1.0;
    for (int j = 0; j < 5; ++j) {
      c[j] = (cm >> (4 - j)) & 1;
      w *= c[j] ? 1.0 - pc0[j] : pc0[j];
    }
    for (int am = 0; am < 32; ++am) {
      gadget::Bits5 a{};
      for (int j = 0; j < 5; ++j) a[j] = (am >> (4 - j)) & 1;
      auto in = gadget::ideal_inputs(c, a);
      const Eigen::VectorXcd v = as_vector(qsim::tensor(in));
      acc += (w / 32.0) * v * v.adjoint();
    }
  }
  return acc;
}

nlohmann::json BlindnessReport::to_json() const {
  nlohmann::json j;
  j["samples"] = samples;
  j["distance_to_mixed"] = distance_to_mixed;
  j["exact_distance_to_mixed"] = exact_distance_to_mixed;
  j["classes"] = classes;
  j["class_distance_to_mixed"] = class_distance_to_mixed;
  j["pairwise"] = pairwise;
  nlohmann::json t = nlohmann::json::array();
  for (const auto& x : transcripts) {
    t.push_back({{"a", x.a}, {"b", x.b}, {"samples_a", x.samples_a}, {"samples_b", x.samples_b},
                 {"chi_square", x.chi.to_json()}, {"indistinguishable", x.chi.passes()}});
  }
  j["transcripts"] = t;
  j["gadget_runs"] = gadget_runs;
  return j;
}

BlindnessReport blindness_audit(double p, double p_prime, long samples,
                                const std::vector<SecretClass>& classes,
                                const std::vector<std::string>& label_classes, std::uint64_t seed) {
  BlindnessReport rep;
  rep.samples = samples;
  const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(32, 32) / 32.0;
  rep.distance_to_mixed =
      trace_distance(averaged_input_state(p, p_prime, all_secrets(), samples, seed), mixed);
  rep.exact_distance_to_mixed = trace_distance(exact_average_input(p, p_prime), mixed);

  std::vector<Eigen::MatrixXcd> avg;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    rep.classes.push_back(classes[i].name);
    avg.push_back(averaged_input_state(p, p_prime, classes[i], samples, seed + 1 + i));
    rep.class_distance_to_mixed.push_back(trace_distance(avg.back(), mixed));
  }
  rep.pairwise.assign(classes.size(), std::vector<double>(classes.size(), 0.0));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      rep.pairwise[i][j] = rep.pairwise[j][i] = trace_distance(avg[i], avg[j]);
    }
  }

  if (label_classes.empty()) return rep;
  std::set<std::string> known;
  for (int i = 0; i < 10; ++i) known.insert(gadget::label_name(i));
  std::map<std::string, std::map<std::string, long>> hist;
  std::map<std::string, long> filled;
  for (const auto& name : label_classes) {
    if (!known.count(name)) throw std::invalid_argument("unknown label class '" + name + "'");
    hist[name];
    filled[name] = 0;
  }
  const ChannelModel honest;
  const long cap = 200'000'000;
  auto done = [&] {
    for (const auto& [k, v] : filled) {
      if (v < samples) return false;
    }
    return true;
  };
  while (!done()) {
    if (rep.gadget_runs >= cap) throw std::runtime_error("blindness_audit: run budget exhausted");
    RandomStream rng(seed, (std::uint64_t{1} << 40) | static_cast<std::uint64_t>(rep.gadget_runs));
    ++rep.gadget_runs;
    gadget::GadgetOutcome g = gadget::run_gadget(p, p_prime, honest, rng);
    if (!g.accepted) continue;
    auto it = filled.find(g.label.name());
    if (it == filled.end() || it->second >= samples) continue;
    std::string key;
    for (const auto& w : g.wires) {
      key += static_cast<char>('0' + w.correction.x_flip);
      key += static_cast<char>('0' + w.correction.z_flip);
    }
    ++hist[it->first][key];
    ++it->second;
  }
  for (std::size_t i = 0; i < label_classes.size(); ++i) {
    for (std::size_t j = i + 1; j < label_classes.size(); ++j) {
      TranscriptTest t;
      t.a = label_classes[i];
      t.b = label_classes[j];
      t.samples_a = filled[t.a];
      t.samples_b = filled[t.b];
      t.chi = two_sample_chi_square(hist[t.a], hist[t.b]);
      rep.transcripts.push_back(t);
    }
  }
  return rep;
}

namespace {

Eigen::Matrix2cd pauli_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd pauli_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd xz_power(int x, int z) {
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  return (x ? pauli_x() : id) * (z ? pauli_z() : id);
}

Eigen::Vector2cd basis_vector(int c, int bit) {
  const double h = 1.0 / std::sqrt(2.0);
  if (c == 0) return bit ? Eigen::Vector2cd(0, 1) : Eigen::Vector2cd(1, 0);
  return bit ? Eigen::Vector2cd(h, -h) : Eigen::Vector2cd(h, h);
}

/** (<e| (x) I) rho (|e> (x) I) with e on the leading factor of dimension e.size(). */
Eigen::Matrix2cd contract_leading(const Eigen::MatrixXcd& rho, const Eigen::VectorXcd& e) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index k = 0; k < e.size(); ++k) {
        for (Eigen::Index l = 0; l < e.size(); ++l) {
          acc += std::conj(e[k]) * e[l] * rho(2 * k + i, 2 * l + j);
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

struct Exact {
  Eigen::Matrix2cd average = Eigen::Matrix2cd::Zero();
  double branch_distance = 0.0;
};

void add_branch(Exact& ex, const Eigen::Matrix2cd& out, double weight, const Eigen::Matrix2cd& target) {
  ex.average += weight * out;
  const double prob = out.trace().real();
  if (prob > 1e-12) {
    ex.branch_distance = std::max(ex.branch_distance, trace_distance(out / prob, target));
  }
}

Exact exact_p2(const Eigen::Matrix4cd& rho, int c, int a) {
  Exact ex;
  const Eigen::Vector2cd av = basis_vector(c, a);
  const Eigen::Matrix2cd target = av * av.adjoint();
  for (int o = 0; o < 2; ++o) {
    const Eigen::Matrix2cd b = contract_leading(rho, basis_vector(c, o));
    for (int r = 0; r < 2; ++r) {
      const css::PauliFrame f = css::correction_frame(c, a, r, o);
      const Eigen::Matrix2cd k = xz_power(f.x_flip, f.z_flip);
      add_branch(ex, k * b * k.adjoint(), 0.5, target);
    }
  }
  return ex;
}

Exact exact_p2t(const Eigen::Matrix4cd& rho, int c, int a) {
  Exact ex;
  const Eigen::Vector2cd av = basis_vector(c, a);
  const Eigen::Matrix2cd target = av * av.adjoint();
  const double h = 1.0 / std::sqrt(2.0);
  const Eigen::Vector4cd phi(h, 0, 0, h);
  for (int o1 = 0; o1 < 2; ++o1) {
    for (int o2 = 0; o2 < 2; ++o2) {
      const Eigen::Matrix2cd pad = xz_power(0, o2) * xz_power(o1, 0);
      const Eigen::Vector2cd in = pad * av;
      Eigen::MatrixXcd full(8, 8);
      const Eigen::Matrix2cd in_rho = in * in.adjoint();
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) full.block(4 * i, 4 * j, 4, 4) = in_rho(i, j) * rho;
      }
      for (int x = 0; x < 2; ++x) {
        for (int z = 0; z < 2; ++z) {
          // |beta_xz> = (I (x) X^z Z^x)|Phi+>; Bob holds X^z Z^x (pad |A>).
          const Eigen::Matrix2cd m = xz_power(z, x);
          Eigen::Vector4cd beta = Eigen::Vector4cd::Zero();
          for (int q0 = 0; q0 < 2; ++q0) {
            for (int q1 = 0; q1 < 2; ++q1) {
              for (int q1p = 0; q1p < 2; ++q1p) beta[2 * q0 + q1] += m(q1, q1p) * phi[2 * q0 + q1p];
            }
          }
          const Eigen::Matrix2cd b = contract_leading(full, beta);
          const Eigen::Matrix2cd k = pad.adjoint() * m.adjoint();
          add_branch(ex, k * b * k.adjoint(), 0.25, target);
        }
      }
    }
  }
  return ex;
}

PureState apply_if(PureState s, bool on, Gate g) {
  return on ? qsim::apply_gate(std::move(s), g, {0}) : s;
}

bool consistent(const Estimate& a, const Estimate& b) {
  const double pooled = (static_cast<double>(a.successes + b.successes)) /
                        static_cast<double>(a.trials + b.trials);
  const double se = std::sqrt(pooled * (1 - pooled) *
                              (1.0 / static_cast<double>(a.trials) + 1.0 / static_cast<double>(b.trials)));
  return std::abs(a.estimate - b.estimate) <= kSigmas * se + 1e-12;
}

adversary::BobView pair_view(Stage stage) {
  adversary::BobView v;
  v.stage = stage;
  v.domain = stage == Stage::BellPair ? 2 : 1;
  v.labels = stage == Stage::BellPair ? std::vector<int>{0, 1} : std::vector<int>{0, -1};
  return v;
}

}  // namespace

double TeleportReport::max_branch_distance() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max({m, c.p2_branch_distance, c.p2t_branch_distance});
  return m;
}

bool TeleportReport::statistics_ok() const {
  bool ok = !cases.empty();
  for (const auto& c : cases) ok = ok && c.stats_ok;
  return ok;
}

nlohmann::json TeleportReport::to_json() const {
  nlohmann::json j;
  j["strategy"] = strategy;
  j["twirl_tp_error"] = tp_error;
  j["max_branch_distance"] = max_branch_distance();
  j["statistics_ok"] = statistics_ok();
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    cs.push_back({{"target", c.target},
                  {"p2_branch_distance", c.p2_branch_distance},
                  {"p2t_branch_distance", c.p2t_branch_distance},
                  {"p2_to_twirl", c.p2_to_twirl},
                  {"p2t_to_twirl", c.p2t_to_twirl},
                  {"oracle_same", c.oracle_same},
                  {"oracle_other", c.oracle_other},
                  {"p2_same", c.p2_same.to_json()},
                  {"p2t_same", c.p2t_same.to_json()},
                  {"p2_other", c.p2_other.to_json()},
                  {"p2t_other", c.p2t_other.to_json()},
                  {"p2_correction_x", c.p2_bits[0].to_json()},
                  {"p2_correction_z", c.p2_bits[1].to_json()},
                  {"p2t_correction_x", c.p2t_bits[0].to_json()},
                  {"p2t_correction_z", c.p2t_bits[1].to_json()},
                  {"stats_ok", c.stats_ok}});
  }
  j["cases"] = cs;
  return j;
}

TeleportReport teleport_equivalence(const adversary::Strategy& deviation, long trials,
                                    std::uint64_t seed) {
  TeleportReport rep;
  rep.strategy = adversary::strategy_name(deviation);
  const Eigen::Matrix4cd rho = adversary::deviated_pair(deviation);
  const adversary::TwirlReport tw = adversary::twirl_channel(deviation);
  rep.tp_error = tw.tp_error;
  const ChannelModel channel({deviation});
  const std::pair<int, int> targets[] = {{1, 0}, {1, 1}, {0, 0}, {0, 1}};
  const char* names[] = {"+", "-", "0", "1"};
  for (int ci = 0; ci < 4; ++ci) {
    const auto [c, a] = targets[ci];
    TeleportCase tc;
    tc.target = names[ci];
    const Eigen::Vector2cd av = basis_vector(c, a);
    const Eigen::Matrix2cd t_out = tw.apply(av * av.adjoint());
    const Eigen::Vector2cd other0 = basis_vector(1 - c, 0);
    tc.oracle_same = (av.adjoint() * t_out * av)(0, 0).real();
    tc.oracle_other = (other0.adjoint() * t_out * other0)(0, 0).real();
    const Exact e2 = exact_p2(rho, c, a), e2t = exact_p2t(rho, c, a);
    tc.p2_branch_distance = e2.branch_distance;
    tc.p2t_branch_distance = e2t.branch_distance;
    tc.p2_to_twirl = trace_distance(e2.average, t_out);
    tc.p2t_to_twirl = trace_distance(e2t.average, t_out);

    const Basis same = c ? Basis::X : Basis::Z, other = c ? Basis::Z : Basis::X;
    long s2 = 0, s2t = 0, o2 = 0, o2t = 0;
    std::array<long, 2> b2{}, b2t{};
    for (long t = 0; t < trials; ++t) {
      const std::uint64_t idx = (static_cast<std::uint64_t>(ci) << 41) | static_cast<std::uint64_t>(t);
      {
        RandomStream rng(seed, idx);
        const int r = rng.bit();
        gadget::WireRecord rec;
        PureState bob = gadget::prepare_wire(c, a, r, 0, channel, rng, rec);
        s2 += qsim::measure(bob, 0, same, rng).bit == a;
        o2 += qsim::measure(bob, 0, other, rng).bit == 0;
        b2[0] += rec.correction.x_flip;
        b2[1] += rec.correction.z_flip;
      }
      {
        RandomStream rng(seed, idx | (std::uint64_t{1} << 40));
        PureState pair = PureState::from_amplitudes({1.0, 0.0, 0.0, 1.0}, true);
        for (Stage st : {Stage::BellPair, Stage::Transmission}) {
          if (channel.acts_at(st)) pair = channel.apply(st, std::move(pair), pair_view(st), rng);
        }
        const int p1 = rng.bit(), p2 = rng.bit();
        PureState in = c ? PureState::plus_k(4 * a) : PureState::z_state(a);
        in = apply_if(std::move(in), p1, Gate::x());
        in = apply_if(std::move(in), p2, Gate::z());
        qsim::BellResult bell = qsim::bell_measure(qsim::tensor(in, pair), 0, 1, rng);
        PureState bob = std::move(bell.state);
        bob = apply_if(std::move(bob), bell.z_parity, Gate::x());
        bob = apply_if(std::move(bob), bell.x_parity, Gate::z());
        bob = apply_if(std::move(bob), p2, Gate::z());
        bob = apply_if(std::move(bob), p1, Gate::x());
        s2t += qsim::measure(bob, 0, same, rng).bit == a;
        o2t += qsim::measure(bob, 0, other, rng).bit == 0;
        b2t[0] += bell.z_parity ^ p1;
        b2t[1] += bell.x_parity ^ p2;
      }
    }
    tc.p2_same = proportion(s2, trials);
    tc.p2t_same = proportion(s2t, trials);
    tc.p2_other = proportion(o2, trials);
    tc.p2t_other = proportion(o2t, trials);
    for (int k = 0; k < 2; ++k) {
      tc.p2_bits[k] = proportion(b2[k], trials);
      tc.p2t_bits[k] = proportion(b2t[k], trials);
    }
    tc.stats_ok = within_sigma(tc.p2_same, tc.oracle_same) &&
                  within_sigma(tc.p2t_same, tc.oracle_same) &&
                  within_sigma(tc.p2_other, tc.oracle_other) &&
                  within_sigma(tc.p2t_other, tc.oracle_other) && consistent(tc.p2_same, tc.p2t_same) &&
                  consistent(tc.p2_other, tc.p2t_other);
    rep.cases.push_back(tc);
  }
  return rep;
}

TrialStats loss_experiment(const RunConfig& cfg) {
  const css::CssCode code = config_code(cfg);
  const int n = code.n();
  TrialStats st;
  st.trials = cfg.trials;
  MeanAccumulator attempts, block;
  long correct = 0;
  for (long t = 0; t < cfg.trials; ++t) {
    RandomStream rng(cfg.seed, static_cast<std::uint64_t>(t));
    const int c = rng.bit(), a = rng.bit(), r = rng.bit();
    gadget::LossyPrep lp = gadget::lossy_remote_prepare(code, c, a, r, cfg.p_loss, rng);
    attempts.add(lp.attempts);
    correct += qsim::states_equal_up_to_phase(css::extract_logical(code, lp.prep.bob_state),
                                              gadget::ideal_input(c, a));
    RandomStream brng(cfg.seed, (std::uint64_t{1} << 40) | static_cast<std::uint64_t>(t));
    block.add(gadget::sample_block_transmissions(n, cfg.p_loss, brng));
  }
  st.counts["correct"] = correct;
  st.metrics["transmissions"] = attempts.result();
  st.metrics["correct"] = proportion(correct, cfg.trials);
  st.metrics["block_transmissions"] = block.result();
  std::vector<double> ns, means;
  for (int k = 1; k <= n; ++k) {
    MeanAccumulator acc;
    for (long t = 0; t < cfg.trials; ++t) {
      RandomStream rng(cfg.seed, (static_cast<std::uint64_t>(k + 1) << 40) | static_cast<std::uint64_t>(t));
      acc.add(gadget::sample_transmissions(k, cfg.p_loss, rng));
    }
    st.metrics["transmissions_n" + std::to_string(k)] = acc.result();
    ns.push_back(k);
    means.push_back(acc.result().estimate);
  }
  st.extra["code"] = code.name();
  st.extra["n"] = n;
  st.extra["linear_expectation"] = gadget::lossy_mean_transmissions(n, cfg.p_loss);
  st.extra["exponential_baseline"] = gadget::block_mean_transmissions(n, cfg.p_loss);
  // Literal l / p_loss; agrees with n / (1 - p_loss) only at p_loss = 1/2.
  st.extra["literal_l_over_p_loss"] =
      cfg.p_loss > 0 ? nlohmann::json(n / cfg.p_loss) : nlohmann::json();
  st.extra["loglog_slope_in_n"] = loglog_slope(ns, means);
  return st;
}

}  // namespace bqc::harness
