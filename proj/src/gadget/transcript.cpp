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

#include "bqc/gadget/transcript.hpp"

#include <stdexcept>

namespace bqc::gadget {

nlohmann::json alice_record(const GadgetOutcome& g, std::uint64_t seed, std::uint64_t trial) {
  return {{"seed", seed},
          {"trial", trial},
          {"c", g.secrets.c},
          {"a", g.secrets.a},
          {"r", g.secrets.r},
          {"s", g.s},
          {"accepted", g.accepted},
          {"label", g.label.name()}};
}

nlohmann::json bob_record(const GadgetOutcome& g) {
  nlohmann::json corr = nlohmann::json::array();
  for (const auto& w : g.wires) corr.push_back({w.correction.x_flip, w.correction.z_flip});
  return {{"s", g.s}, {"corrections_received", corr}};
}

TranscriptWriter::TranscriptWriter(const std::string& alice_path, const std::string& bob_path)
    : alice_(alice_path), bob_(bob_path) {
  if (!alice_ || !bob_) throw std::runtime_error("cannot open transcript files");
}

void TranscriptWriter::write(const GadgetOutcome& g, std::uint64_t seed, std::uint64_t trial) {
  alice_ << alice_record(g, seed, trial).dump() << '\n';
  bob_ << bob_record(g).dump() << '\n';
}

}  // namespace bqc::gadget
