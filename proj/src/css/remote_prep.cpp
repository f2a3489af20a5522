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

#include "bqc/css/remote_prep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "bqc/qsim/gates.hpp"
#include "bqc/qsim/measure.hpp"
#include "bqc/qsim/pauli.hpp"

namespace bqc::css {

using qsim::Basis;
using qsim::Complex;
using qsim::PureState;
using qsim::RandomStream;

namespace {

constexpr int kMaxEncodeLength = 8;

std::size_t block_index(const Bits& word) {
  std::size_t idx = 0;
  const int n = static_cast<int>(word.size());
  for (int j = 0; j < n; ++j) {
    if (word[j]) idx |= std::size_t{1} << (n - 1 - j);
  }
  return idx;
}

// All words of rowspace(gens) xor (bit ? logical : 0).
std::vector<Bits> coset_words(const BitMatrix& gens, const Bits& logical, int bit, int n) {
  std::vector<Bits> out;
  const std::uint32_t combos = std::uint32_t{1} << gens.size();
  for (std::uint32_t m = 0; m < combos; ++m) {
    Bits w(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (m >> g & 1) {
        for (int j = 0; j < n; ++j) w[j] ^= gens[g][j];
      }
    }
    if (bit) {
      for (int j = 0; j < n; ++j) w[j] ^= logical[j];
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PureState encode_bit(const CssCode& code, int bit) {
  if (code.n() > kMaxEncodeLength) {
    throw std::invalid_argument("encode_logical_zero: code length exceeds 8");
  }
  auto words = coset_words(code.hx(), code.logical_x(), bit, code.n());
  std::vector<Complex> amps(std::size_t{1} << code.n(), Complex{0.0, 0.0});
  const double a = 1.0 / std::sqrt(static_cast<double>(words.size()));
  for (const auto& w : words) amps[block_index(w)] = a;
  return PureState::from_amplitudes(std::move(amps));
}

std::size_t support_mask(const Bits& support, int n, int offset, int total) {
  std::size_t m = 0;
  for (int j = 0; j < n; ++j) {
    if (support[j]) m |= std::size_t{1} << (total - 1 - (offset + j));
  }
  return m;
}

void check_bits(int c, int a, int r) {
  if ((c | a | r) & ~1) throw std::invalid_argument("remote_prepare: bits must be 0 or 1");
}

}  // namespace

PauliFrame correction_frame(int c, int a, int r, int o) {
  if (c == 0) return {a ^ o, r};
  return {r, a ^ o};
}

PureState encode_logical_zero(const CssCode& code) { return encode_bit(code, 0); }
PureState encode_logical_one(const CssCode& code) { return encode_bit(code, 1); }

PureState logical_bell_pair(const CssCode& code) {
  if (2 * code.n() > qsim::kMaxQubits) {
    throw std::invalid_argument("logical_bell_pair: 2n exceeds the simulator cap");
  }
  PureState zero = encode_logical_zero(code);
  PureState one = encode_logical_one(code);
  PureState a = qsim::tensor(zero, zero);
  PureState b = qsim::tensor(one, one);
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < a.dim(); ++i) a.raw()[i] = h * (a.raw()[i] + b.raw()[i]);
  return a;
}

TransversalResult transversal_measure(PureState state, std::span<const int> half, Basis basis,
                                      RandomStream& rng) {
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < half.size(); ++i) {
    state.check_qubit(half[i]);
    order.emplace_back(half[i], i);
  }
  std::sort(order.begin(), order.end(), [](auto& x, auto& y) { return x.first > y.first; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i].first == order[i - 1].first) {
      throw std::invalid_argument("transversal_measure: repeated qubit");
    }
  }
  Bits raw(half.size(), 0);
  for (const auto& [q, i] : order) {
    qsim::MeasureResult m = qsim::measure_discard(std::move(state), q, basis, rng);
    raw[i] = static_cast<std::uint8_t>(m.bit);
    state = std::move(m.state);
  }
  return {std::move(raw), std::move(state)};
}

PureState apply_frame(const CssCode& code, PureState state, PauliFrame frame, int offset) {
  const int n = code.n();
  if (offset < 0 || offset + n > state.n_qubits()) {
    throw std::out_of_range("apply_frame: block outside the state");
  }
  for (int j = 0; j < n; ++j) {
    if (frame.z_flip && code.logical_z()[j]) {
      state = qsim::apply_gate(std::move(state), qsim::Gate::z(), {offset + j});
    }
  }
  for (int j = 0; j < n; ++j) {
    if (frame.x_flip && code.logical_x()[j]) {
      state = qsim::apply_gate(std::move(state), qsim::Gate::x(), {offset + j});
    }
  }
  return state;
}

double logical_expectation(const CssCode& code, const PureState& state, Basis basis, int offset) {
  const int total = state.n_qubits();
  if (offset < 0 || offset + code.n() > total) {
    throw std::out_of_range("logical_expectation: block outside the state");
  }
  double e = 0.0;
  if (basis == Basis::Z) {
    const std::size_t m = support_mask(code.logical_z(), code.n(), offset, total);
    for (std::size_t i = 0; i < state.dim(); ++i) {
      const double w = std::norm(state.raw()[i]);
      e += (std::popcount(i & m) & 1) ? -w : w;
    }
  } else {
    const std::size_t m = support_mask(code.logical_x(), code.n(), offset, total);
    for (std::size_t i = 0; i < state.dim(); ++i) {
      e += (std::conj(state.raw()[i ^ m]) * state.raw()[i]).real();
    }
  }
  return e;
}

PureState extract_logical(const CssCode& code, const PureState& block, double tol) {
  if (block.n_qubits() != code.n()) {
    throw std::invalid_argument("extract_logical: block size differs from code length");
  }
  const Complex a0 = qsim::inner(encode_logical_zero(code), block);
  const Complex a1 = qsim::inner(encode_logical_one(code), block);
  const double w = std::norm(a0) + std::norm(a1);
  if (w < 1.0 - tol) throw std::runtime_error("extract_logical: block leaves the code space");
  return PureState::from_amplitudes({a0, a1}, true);
}

RemotePrep remote_prepare_fixed(const CssCode& code, int c, int a, int r, const PauliError& error,
                                RandomStream& rng) {
  check_bits(c, a, r);
  const int n = code.n();
  PureState state = logical_bell_pair(code);
  for (int j = 0; j < n; ++j) {
    if (error.z[j]) state = qsim::apply_gate(std::move(state), qsim::Gate::z(), {j});
    if (error.x[j]) state = qsim::apply_gate(std::move(state), qsim::Gate::x(), {j});
  }
  std::vector<int> half(n);
  for (int j = 0; j < n; ++j) half[j] = j;
  const Basis basis = c ? Basis::X : Basis::Z;
  TransversalResult t = transversal_measure(std::move(state), half, basis, rng);
  DecodeResult d = code.decode(t.raw, basis);
  RemotePrep out;
  out.o = d.logical;
  out.decoded_cleanly = d.corrected;
  out.raw = std::move(t.raw);
  out.frame_request = correction_frame(c, a, r, d.logical);
  out.bob_state = apply_frame(code, std::move(t.state), out.frame_request);
  return out;
}

RemotePrep remote_prepare(const CssCode& code, int c, int a, int r,
                          const adversary::ChannelModel& noise, RandomStream& rng) {
  check_bits(c, a, r);
  const int n = code.n();
  PureState state = logical_bell_pair(code);
  adversary::BobView view;
  view.stage = adversary::Stage::Transmission;
  view.domain = n;
  view.labels.assign(2 * n, -1);
  for (int j = 0; j < n; ++j) view.labels[j] = j;
  state = noise.apply(adversary::Stage::Transmission, std::move(state), view, rng);
  std::vector<int> half(n);
  for (int j = 0; j < n; ++j) half[j] = j;
  const Basis basis = c ? Basis::X : Basis::Z;
  TransversalResult t = transversal_measure(std::move(state), half, basis, rng);
  DecodeResult d = code.decode(t.raw, basis);
  RemotePrep out;
  out.o = d.logical;
  out.decoded_cleanly = d.corrected;
  out.raw = std::move(t.raw);
  out.frame_request = correction_frame(c, a, r, d.logical);
  out.bob_state = apply_frame(code, std::move(t.state), out.frame_request);
  return out;
}

PauliError sample_block_error(const adversary::ChannelModel& noise, int n, int round,
                              RandomStream& rng) {
  using namespace adversary;
  PauliError e{Bits(n, 0), Bits(n, 0)};
  for (const auto& s : noise.strategies()) {
    auto stages = strategy_stages(s);
    if (std::find(stages.begin(), stages.end(), Stage::Transmission) == stages.end()) continue;
    if (const auto* iid = std::get_if<IidXZNoise>(&s)) {
      for (int j = 0; j < n; ++j) {
        e.x[j] ^= rng.bernoulli(iid->p) ? 1 : 0;
        e.z[j] ^= rng.bernoulli(iid->p) ? 1 : 0;
      }
    } else if (const auto* dep = std::get_if<Depolarizing>(&s)) {
      for (int j = 0; j < n; ++j) {
        if (!rng.bernoulli(dep->epsilon)) continue;
        switch (rng.below(3)) {
          case 0: e.x[j] ^= 1; break;
          case 1: e.x[j] ^= 1; e.z[j] ^= 1; break;
          default: e.z[j] ^= 1; break;
        }
      }
    } else if (const auto* pa = std::get_if<PauliAttack>(&s)) {
      for (std::size_t i = 0; i < pa->positions.size(); ++i) {
        const int pos = pa->positions[i];
        if (pos < 0 || pos >= n) throw std::out_of_range("PauliAttack: position outside block");
        e.x[pos] ^= pa->paulis.x_bit(static_cast<int>(i));
        e.z[pos] ^= pa->paulis.z_bit(static_cast<int>(i));
      }
    } else {
      throw std::invalid_argument("frame route supports only Pauli channels, got " +
                                  strategy_name(s));
    }
  }
  (void)round;
  return e;
}

FramePrep remote_prepare_frame_fixed(const CssCode& code, int c, int a, int r,
                                     const PauliError& error, int o_true,
                                     std::uint32_t coset_word) {
  check_bits(c, a, r);
  const int n = code.n();
  const Basis basis = c ? Basis::X : Basis::Z;
  const BitMatrix& gens = code.stabilizer_words(basis);
  Bits raw(n, 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (coset_word >> g & 1) {
      for (int j = 0; j < n; ++j) raw[j] ^= gens[g][j];
    }
  }
  // Readout words of logical value 1 carry logical_x (Z basis) or logical_z (X basis).
  const Bits& lw = basis == Basis::Z ? code.logical_x() : code.logical_z();
  if (o_true) {
    for (int j = 0; j < n; ++j) raw[j] ^= lw[j];
  }
  const Bits& flips = basis == Basis::Z ? error.x : error.z;
  for (int j = 0; j < n; ++j) raw[j] ^= flips[j];
  DecodeResult d = code.decode(raw, basis);
  FramePrep out;
  out.o = d.logical;
  out.o_true = o_true;
  out.decoded_cleanly = d.corrected;
  out.logical_fault = d.logical != o_true;
  out.raw = std::move(raw);
  out.frame_request = correction_frame(c, a, r, d.logical);
  return out;
}

FramePrep remote_prepare_frame(const CssCode& code, int c, int a, int r,
                               const adversary::ChannelModel& noise, RandomStream& rng) {
  PauliError e = sample_block_error(noise, code.n(), 0, rng);
  const int o_true = rng.bit();
  const Basis basis = c ? Basis::X : Basis::Z;
  const std::uint32_t word =
      static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << code.stabilizer_words(basis).size()));
  return remote_prepare_frame_fixed(code, c, a, r, e, o_true, word);
}

}  // namespace bqc::css
