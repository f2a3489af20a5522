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

#include <json.hpp>
#include <string>

#include "bqc/adversary/strategy.hpp"

namespace bqc::adversary {

/**
 * JSON form of a strategy, e.g.
 *   {"type": "pauli", "stage": "measurement", "positions": [0, 2], "letters": "XZ"}
 * Types: honest, pauli, random_pauli, pre_bell_replace, unitary, iid_xz,
 * depolarizing, loss.
 */
nlohmann::json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const nlohmann::json& j);

/** Accepts a single strategy object or an array of them. */
ChannelModel channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const ChannelModel& c);

/**
 * Named strategies for the command line: honest, single_x (X before readout
 * on one random vertex), plus_zero (Bell pair replaced by |+0>).
 */
Strategy preset_strategy(const std::string& name);

}  // namespace bqc::adversary
