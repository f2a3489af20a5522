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

#include <string>
#include <utility>
#include <vector>

namespace bqc::fkproto {

enum class Role { Computation, Trap, Dummy };

const char* role_name(Role r);
Role parse_role(const std::string& s);

inline constexpr int kMaxFkVertices = 16;

/** Undirected simple graph with an optional role per vertex. */
struct GraphSpec {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Role> roles;                  ///< Empty until assigned.
  std::vector<std::vector<int>> partition;  ///< One trap per set, when recorded.

  bool has_roles() const { return !roles.empty(); }
  int count(Role r) const;
  int n_traps() const { return count(Role::Trap); }
  int n_dummies() const { return count(Role::Dummy); }
  std::vector<int> vertices_with(Role r) const;
  std::vector<std::vector<int>> neighbors() const;
  /** Every neighbour of every trap is a dummy. */
  bool traps_isolated() const;
  /** Throws on bad edges or, when roles are set, on a role-count or isolation violation. */
  void validate() const;
};

/** K_n with each edge subdivided by an extra vertex (ids n.. in edge order). */
GraphSpec build_dotted_complete(int n);
GraphSpec cycle_graph(int n);
GraphSpec path_graph(int n);
GraphSpec edgeless_graph(int n);

/** Connected components, each sorted, ordered by smallest vertex. */
std::vector<std::vector<int>> connected_components(const GraphSpec& g);

}  // namespace bqc::fkproto
