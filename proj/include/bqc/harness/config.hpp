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
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bqc/adversary/strategy.hpp"
#include "bqc/fkproto/graph.hpp"
#include "bqc/gadget/gadget.hpp"

namespace bqc::harness {

enum class Experiment { Gadget, Css, Fk, Compose, Verify, Blindness, Teleport, Loss };

const char* experiment_name(Experiment e);
Experiment parse_experiment(const std::string& s);

struct RunConfig {
  Experiment experiment = Experiment::Compose;
  /** Family name sized by n, "family:k" (e.g. "dotted_complete:3"), or a graph object. */
  nlohmann::json graph = "cycle";
  int n = 6;
  int n_t = 2;
  std::optional<int> n_d;
  std::optional<double> p;
  std::optional<double> p_prime;
  bool p_prime_solved = false;
  std::string code = "none";  ///< none, steane, trivial or a code file.
  std::string route = "frame";
  nlohmann::json adversary = "honest";
  long trials = 1000;
  std::uint64_t seed = 1;
  int d = 1;
  std::vector<int> phi;        ///< Program angles in units of pi/4; zeros when empty.
  double p_loss = 0.5;
  std::vector<double> sweep;   ///< css: noise levels.
  std::vector<std::string> classes = {"Z0", "Plus3"};
  long transcript_limit = 10000;
};

/** True when the experiment runs gadgets and so needs (p, p'). */
bool uses_gadgets(Experiment e);

/**
 * Fills defaults and enforces N_D/N = 1 - 4p^2(1 - p') whenever N_D and p
 * are both known, solving for p' when it is missing. Throws
 * std::invalid_argument on any violation.
 */
void finalize_config(RunConfig& cfg);

/** Parses and finalizes. Unknown keys are rejected. */
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& cfg);

fkproto::GraphSpec config_graph(const RunConfig& cfg);
adversary::ChannelModel config_channel(const RunConfig& cfg);
gadget::PrepConfig config_prep(const RunConfig& cfg);

}  // namespace bqc::harness
