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

#include "bqc/fkproto/graph.hpp"
#include "bqc/fkproto/pattern.hpp"

namespace bqc::fkproto {

/**
 * {"vertices": N, "edges": [[u, v], ...], "roles": ["trap", ...]}; roles optional.
 * A "family" key ("cycle", "path", "edgeless", "dotted_complete") with "n"
 * builds a standard graph instead of listing edges.
 */
nlohmann::json graph_to_json(const GraphSpec& g);
GraphSpec graph_from_json(const nlohmann::json& j);

/** {"order": [...], "phi": [...], "x_deps": [[...]], "z_deps": [[...]], "outputs": [...]}, phi in units of pi/4. */
nlohmann::json pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const nlohmann::json& j);

/** {"phi": [...], "x_deps": [[...]], "z_deps": [[...]], "outputs": [...]} over computation slots. */
nlohmann::json program_to_json(const Program& p);
Program program_from_json(const nlohmann::json& j);

}  // namespace bqc::fkproto
