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

#include <cstdint>
#include <fstream>
#include <json.hpp>
#include <string>

#include "bqc/gadget/gadget.hpp"

namespace bqc::gadget {

/** Alice-side record: {seed, trial, c, a, r, s, accepted, label}. */
nlohmann::json alice_record(const GadgetOutcome& g, std::uint64_t seed, std::uint64_t trial);

/** Bob-side record: {s, corrections_received}, one [x, z] pair per wire. */
nlohmann::json bob_record(const GadgetOutcome& g);

/** Writes the two JSON-lines files. */
class TranscriptWriter {
 public:
  TranscriptWriter(const std::string& alice_path, const std::string& bob_path);

  void write(const GadgetOutcome& g, std::uint64_t seed, std::uint64_t trial);

 private:
  std::ofstream alice_;
  std::ofstream bob_;
};

}  // namespace bqc::gadget
