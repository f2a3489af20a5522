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

#include "bqc/gadget/gadget.hpp"

#include <stdexcept>
#include <string>

#include "bqc/qsim/gates.hpp"

namespace bqc::gadget {

using adversary::BobView;
using adversary::ChannelModel;
using adversary::Stage;
using qsim::Basis;
using qsim::Gate;
using qsim::PureState;
using qsim::RandomStream;

namespace {

constexpr std::array<int, 4> kMeasured = {0, 1, 3, 4};

void check_inputs(std::span<const PureState> inputs) {
  if (inputs.size() != 5) throw std::invalid_argument("gadget circuit takes five inputs");
  for (const auto& s : inputs) {
    if (s.n_qubits() != 1) throw std::invalid_argument("gadget circuit inputs are single qubits");
  }
}

PureState entangle(PureState s) {
  s = qsim::apply_gate(std::move(s), Gate::t(), {0});
  s = qsim::apply_gate(std::move(s), Gate::s(), {4});
  for (int q = 0; q < 4; ++q) s = qsim::apply_gate(std::move(s), Gate::cz(), {q, q + 1});
  return s;
}

CircuitResult readout(PureState s, RandomStream& rng) {
  CircuitResult res;
  for (int i = 3; i >= 0; --i) {
    qsim::MeasureResult m = qsim::measure_discard(std::move(s), kMeasured[i], Basis::X, rng);
    res.s[i] = m.bit;
    s = std::move(m.state);
  }
  res.out = std::move(s);
  return res;
}

BobView view(Stage stage, int round, int domain, std::vector<int> labels,
             std::vector<int> messages = {}) {
  BobView v;
  v.stage = stage;
  v.round = round;
  v.domain = domain;
  v.labels = std::move(labels);
  v.messages = std::move(messages);
  return v;
}

bool is_zero(const Syndrome& s) { return s == Syndrome{0, 0, 0, 0}; }

}  // namespace

std::array<double, 5> c_zero_probabilities(double p, double p_prime) {
  const double q1 = (1.0 - 2.0 * p) / (1.0 - p);
  return {q1, p, p_prime, p, q1};
}

GadgetSecrets sample_secrets(double p, double p_prime, RandomStream& rng) {
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("sample_secrets: p must lie in (0, 1/2)");
  if (!(p_prime > 0.0 && p_prime < 1.0)) {
    throw std::invalid_argument("sample_secrets: p' must lie in (0, 1)");
  }
  GadgetSecrets s;
  s.p = p;
  s.p_prime = p_prime;
  const auto q = c_zero_probabilities(p, p_prime);
  for (int i = 0; i < 5; ++i) s.c[i] = rng.bernoulli(q[i]) ? 0 : 1;
  for (int i = 0; i < 5; ++i) s.a[i] = rng.bit();
  for (int i = 0; i < 5; ++i) s.r[i] = rng.bit();
  return s;
}

PureState ideal_input(int c, int a) {
  PureState s = PureState::z_state(a);
  return c ? qsim::apply_gate(std::move(s), Gate::h(), {0}) : s;
}

std::array<PureState, 5> ideal_inputs(const Bits5& c, const Bits5& a) {
  std::array<PureState, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = ideal_input(c[i], a[i]);
  return out;
}

PureState circuit_state(std::span<const PureState> inputs) {
  check_inputs(inputs);
  return entangle(qsim::tensor(inputs));
}

CircuitResult bob_circuit(std::span<const PureState> inputs, RandomStream& rng) {
  return readout(circuit_state(inputs), rng);
}

qsim::Projection circuit_branch(std::span<const PureState> inputs, const Syndrome& s) {
  PureState st = circuit_state(inputs);
  double prob = 1.0;
  for (int i = 3; i >= 0; --i) {
    qsim::Projection pr = qsim::project_discard(std::move(st), kMeasured[i], Basis::X, s[i]);
    prob *= pr.probability;
    st = std::move(pr.state);
    if (prob <= 0.0) return {0.0, PureState(1)};
  }
  return {prob, std::move(st)};
}

std::array<double, 16> outcome_distribution(std::span<const PureState> inputs) {
  PureState st = circuit_state(inputs);
  for (int q : kMeasured) st = qsim::apply_gate(std::move(st), Gate::h(), {q});
  std::array<double, 16> dist{};
  for (std::size_t i = 0; i < st.dim(); ++i) {
    // Index bits: wire 0 is bit 4, wire 4 is bit 0; drop wire 3's bit 2.
    const std::size_t key = ((i >> 3) << 2) | (i & 3);
    dist[key] += std::norm(st.amplitude(i));
  }
  return dist;
}

PrepConfig PrepConfig::frame(css::CssCode code) {
  return {Route::EncodedPauliFrame, std::make_shared<const css::CssCode>(std::move(code))};
}

PrepConfig PrepConfig::statevector(css::CssCode code) {
  return {Route::EncodedStatevector, std::make_shared<const css::CssCode>(std::move(code))};
}

PureState prepare_wire(int c, int a, int r, int round, const ChannelModel& channel,
                       RandomStream& rng, WireRecord& record) {
  PureState pair = PureState::from_amplitudes({1.0, 0.0, 0.0, 1.0}, true);
  if (channel.acts_at(Stage::BellPair)) {
    pair = channel.apply(Stage::BellPair, std::move(pair), view(Stage::BellPair, round, 2, {0, 1}),
                         rng);
  }
  if (channel.acts_at(Stage::Transmission)) {
    pair = channel.apply(Stage::Transmission, std::move(pair),
                         view(Stage::Transmission, round, 1, {0, -1}), rng);
  }
  qsim::MeasureResult m = qsim::measure_discard(std::move(pair), 0, c ? Basis::X : Basis::Z, rng);
  record.o = m.bit;
  record.correction = css::correction_frame(c, a, r, m.bit);
  PureState bob = std::move(m.state);
  if (record.correction.z_flip) bob = qsim::apply_gate(std::move(bob), Gate::z(), {0});
  if (record.correction.x_flip) bob = qsim::apply_gate(std::move(bob), Gate::x(), {0});
  return bob;
}

namespace {

PureState prepare_encoded(const PrepConfig& prep, int c, int a, int r, const ChannelModel& channel,
                          RandomStream& rng, WireRecord& record) {
  if (!prep.code) throw std::invalid_argument("encoded preparation requires a code");
  if (channel.acts_at(Stage::BellPair)) {
    throw std::invalid_argument("encoded preparation does not support Bell-pair deviations");
  }
  const ChannelModel noise = channel.restricted({Stage::Transmission});
  if (prep.route == PrepConfig::Route::EncodedPauliFrame) {
    css::FramePrep f = css::remote_prepare_frame(*prep.code, c, a, r, noise, rng);
    record.o = f.o;
    record.correction = f.frame_request;
    record.decoded_cleanly = f.decoded_cleanly;
    record.logical_fault = f.logical_fault;
    PureState s = ideal_input(c, a);
    if (f.logical_fault) s = qsim::apply_gate(std::move(s), c ? Gate::z() : Gate::x(), {0});
    return s;
  }
  css::RemotePrep rp = css::remote_prepare(*prep.code, c, a, r, noise, rng);
  record.o = rp.o;
  record.correction = rp.frame_request;
  record.decoded_cleanly = rp.decoded_cleanly;
  PureState s = css::extract_logical(*prep.code, rp.bob_state);
  record.logical_fault = !qsim::states_equal_up_to_phase(s, ideal_input(c, a));
  return s;
}

}  // namespace

GadgetOutcome run_gadget_with(const GadgetSecrets& secrets, const ChannelModel& channel,
                              RandomStream& rng, const PrepConfig& prep) {
  GadgetOutcome out;
  out.secrets = secrets;
  std::array<PureState, 5> inputs;
  for (int i = 0; i < 5; ++i) {
    const int c = secrets.c[i], a = secrets.a[i], r = secrets.r[i];
    inputs[i] = prep.route == PrepConfig::Route::LogicalLevel
                    ? prepare_wire(c, a, r, i, channel, rng, out.wires[i])
                    : prepare_encoded(prep, c, a, r, channel, rng, out.wires[i]);
  }
  PureState five = qsim::tensor(inputs);
  if (channel.acts_at(Stage::GadgetInput)) {
    std::vector<int> msgs;
    for (const auto& w : out.wires) {
      msgs.push_back(w.correction.x_flip);
      msgs.push_back(w.correction.z_flip);
    }
    five = channel.apply(Stage::GadgetInput, std::move(five),
                         view(Stage::GadgetInput, 0, 5, {0, 1, 2, 3, 4}, msgs), rng);
  }
  CircuitResult res = readout(entangle(std::move(five)), rng);
  out.s = res.s;
  out.accepted = is_zero(res.s);
  out.label = table_lookup(secrets.c, secrets.a);
  if (out.accepted) {
    PureState b = std::move(res.out);
    if (channel.acts_at(Stage::GadgetOutput)) {
      b = channel.apply(Stage::GadgetOutput, std::move(b), view(Stage::GadgetOutput, 0, 1, {0}),
                        rng);
    }
    out.bob_state = std::move(b);
  }
  return out;
}

GadgetOutcome run_gadget(double p, double p_prime, const ChannelModel& channel, RandomStream& rng,
                         const PrepConfig& prep) {
  GadgetSecrets s = sample_secrets(p, p_prime, rng);
  return run_gadget_with(s, channel, rng, prep);
}

}  // namespace bqc::gadget
