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

#include "bqc/gadget/lossy.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bqc/qsim/measure.hpp"

namespace bqc::gadget {

using qsim::Basis;
using qsim::PureState;
using qsim::RandomStream;

namespace {

void check_loss(double p_loss) {
  if (!(p_loss >= 0.0 && p_loss < 1.0)) {
    throw std::invalid_argument("loss probability must lie in [0, 1)");
  }
}

}  // namespace

int sample_transmissions(int n, double p_loss, RandomStream& rng) {
  check_loss(p_loss);
  int sent = 0;
  for (int arrived = 0; arrived < n;) {
    ++sent;
    if (!rng.bernoulli(p_loss)) ++arrived;
  }
  return sent;
}

int sample_block_transmissions(int n, double p_loss, RandomStream& rng) {
  check_loss(p_loss);
  int sent = 0;
  for (;;) {
    bool all = true;
    for (int j = 0; j < n; ++j) all = !rng.bernoulli(p_loss) && all;
    sent += n;
    if (all) return sent;
  }
}

double lossy_mean_transmissions(int n, double p_loss) { return n / (1.0 - p_loss); }

double block_mean_transmissions(int n, double p_loss) {
  return n / std::pow(1.0 - p_loss, n);
}

LossyPrep lossy_remote_prepare(const css::CssCode& code, int c, int a, int r, double p_loss,
                               RandomStream& rng) {
  check_loss(p_loss);
  const int n = code.n();
  const Basis basis = c ? Basis::X : Basis::Z;
  PureState state = css::logical_bell_pair(code);
  LossyPrep out;
  out.prep.raw.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    do {
      ++out.attempts;
    } while (rng.bernoulli(p_loss));
    // Alice reads her half of the arrived pair; Bob's half collapses to H^c |m>.
    PureState pair = PureState::from_amplitudes({1.0, 0.0, 0.0, 1.0}, true);
    qsim::MeasureResult m = qsim::measure_discard(std::move(pair), 0, basis, rng);
    state = qsim::tensor(state, m.state);
    // Block A's next qubit is always at index 0.
    const int last = state.n_qubits() - 1;
    qsim::BellResult b = qsim::bell_measure(std::move(state), 0, last, rng);
    state = std::move(b.state);
    out.prep.raw[j] = static_cast<std::uint8_t>(m.bit ^ (c ? b.x_parity : b.z_parity));
  }
  css::DecodeResult d = code.decode(out.prep.raw, basis);
  out.prep.o = d.logical;
  out.prep.decoded_cleanly = d.corrected;
  out.prep.frame_request = css::correction_frame(c, a, r, d.logical);
  out.prep.bob_state = css::apply_frame(code, std::move(state), out.prep.frame_request);
  return out;
}

int LossyOutcome::attempt_count() const {
  return std::accumulate(attempts.begin(), attempts.end(), 0);
}

LossyOutcome run_gadget_lossy(const css::CssCode& code, double p_loss, RandomStream& rng,
                              double p, double p_prime) {
  LossyOutcome out;
  GadgetSecrets sec = sample_secrets(p, p_prime, rng);
  std::array<PureState, 5> inputs;
  for (int i = 0; i < 5; ++i) {
    LossyPrep lp = lossy_remote_prepare(code, sec.c[i], sec.a[i], sec.r[i], p_loss, rng);
    out.attempts[i] = lp.attempts;
    out.outcome.wires[i].o = lp.prep.o;
    out.outcome.wires[i].correction = lp.prep.frame_request;
    out.outcome.wires[i].decoded_cleanly = lp.prep.decoded_cleanly;
    inputs[i] = css::extract_logical(code, lp.prep.bob_state);
  }
  CircuitResult res = bob_circuit(inputs, rng);
  out.outcome.secrets = sec;
  out.outcome.s = res.s;
  out.outcome.accepted = res.s == Syndrome{0, 0, 0, 0};
  out.outcome.label = table_lookup(sec.c, sec.a);
  if (out.outcome.accepted) out.outcome.bob_state = std::move(res.out);
  return out;
}

}  // namespace bqc::gadget
