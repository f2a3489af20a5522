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

#include "bqc/fkproto/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bqc::fkproto {

const char* role_name(Role r) {
  switch (r) {
    case Role::Computation: return "computation";
    case Role::Trap: return "trap";
    case Role::Dummy: return "dummy";
  }
  return "?";
}

Role parse_role(const std::string& s) {
  if (s == "computation" || s == "c") return Role::Computation;
  if (s == "trap" || s == "t") return Role::Trap;
  if (s == "dummy" || s == "d") return Role::Dummy;
  throw std::invalid_argument("unknown role '" + s + "'");
}

int GraphSpec::count(Role r) const {
  return static_cast<int>(std::count(roles.begin(), roles.end(), r));
}

std::vector<int> GraphSpec::vertices_with(Role r) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(roles.size()); ++v) {
    if (roles[v] == r) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<int>> GraphSpec::neighbors() const {
  std::vector<std::vector<int>> nb(n_vertices);
  for (auto [u, v] : edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  for (auto& l : nb) std::sort(l.begin(), l.end());
  return nb;
}

bool GraphSpec::traps_isolated() const {
  for (auto [u, v] : edges) {
    if (roles[u] == Role::Trap && roles[v] != Role::Dummy) return false;
    if (roles[v] == Role::Trap && roles[u] != Role::Dummy) return false;
  }
  return true;
}

void GraphSpec::validate() const {
  if (n_vertices < 1 || n_vertices > kMaxFkVertices) {
    throw std::invalid_argument("graph: vertex count must lie in [1, 16]");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices) {
      throw std::out_of_range("graph: edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("graph: self loop");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw std::invalid_argument("graph: duplicate edge");
    }
  }
  if (has_roles()) {
    if (static_cast<int>(roles.size()) != n_vertices) {
      throw std::invalid_argument("graph: one role per vertex required");
    }
    if (!traps_isolated()) throw std::invalid_argument("graph: trap with a non-dummy neighbour");
  }
}

GraphSpec build_dotted_complete(int n) {
  if (n < 2) throw std::invalid_argument("dotted-complete graph needs n >= 2");
  const int total = n + n * (n - 1) / 2;
  if (n > 4) {
    throw std::invalid_argument("dotted-complete graph with n = " + std::to_string(n) + " has " +
                                std::to_string(total) + " vertices; at most n = 4 is supported");
  }
  GraphSpec g;
  g.n_vertices = total;
  int next = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.edges.push_back({i, next});
      g.edges.push_back({next, j});
      ++next;
    }
  }
  return g;
}

GraphSpec cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  GraphSpec g = path_graph(n);
  g.edges.push_back({n - 1, 0});
  return g;
}

GraphSpec path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  GraphSpec g;
  g.n_vertices = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  return g;
}

GraphSpec edgeless_graph(int n) {
  if (n < 1) throw std::invalid_argument("graph needs n >= 1");
  GraphSpec g;
  g.n_vertices = n;
  return g;
}

std::vector<std::vector<int>> connected_components(const GraphSpec& g) {
  std::vector<int> parent(g.n_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges) parent[find(u)] = find(v);
  std::vector<std::vector<int>> out;
  std::vector<int> index(g.n_vertices, -1);
  for (int v = 0; v < g.n_vertices; ++v) {
    const int root = find(v);
    if (index[root] < 0) {
      index[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index[root]].push_back(v);
  }
  return out;
}

}  // namespace bqc::fkproto
