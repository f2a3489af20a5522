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

#include "bqc/fkproto/serialize.hpp"

#include <stdexcept>

namespace bqc::fkproto {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> deps_or_empty(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) return std::vector<std::vector<int>>(n);
  auto d = j.at(key).get<std::vector<std::vector<int>>>();
  if (d.size() != n) throw std::invalid_argument(std::string(key) + ": one list per entry");
  return d;
}

}  // namespace

json graph_to_json(const GraphSpec& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  json j = {{"vertices", g.n_vertices}, {"edges", edges}};
  if (g.has_roles()) {
    json roles = json::array();
    for (Role r : g.roles) roles.push_back(role_name(r));
    j["roles"] = roles;
  }
  return j;
}

GraphSpec graph_from_json(const json& j) {
  GraphSpec g;
  if (j.contains("family")) {
    const std::string f = j.at("family").get<std::string>();
    const int n = j.at("n").get<int>();
    if (f == "cycle") {
      g = cycle_graph(n);
    } else if (f == "path") {
      g = path_graph(n);
    } else if (f == "edgeless") {
      g = edgeless_graph(n);
    } else if (f == "dotted_complete") {
      g = build_dotted_complete(n);
    } else {
      throw std::invalid_argument("unknown graph family '" + f + "'");
    }
  } else {
    g.n_vertices = j.at("vertices").get<int>();
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges are [u, v] pairs");
      g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }
  if (j.contains("roles")) {
    for (const auto& r : j.at("roles")) g.roles.push_back(parse_role(r.get<std::string>()));
  }
  g.validate();
  return g;
}

json pattern_to_json(const Pattern& p) {
  return {{"order", p.order},   {"phi", p.phi},         {"x_deps", p.x_deps},
          {"z_deps", p.z_deps}, {"outputs", p.outputs}};
}

Pattern pattern_from_json(const json& j) {
  Pattern p;
  p.phi = j.at("phi").get<std::vector<int>>();
  const std::size_t n = p.phi.size();
  if (j.contains("order")) {
    p.order = j.at("order").get<std::vector<int>>();
  } else {
    for (std::size_t v = 0; v < n; ++v) p.order.push_back(static_cast<int>(v));
  }
  p.x_deps = deps_or_empty(j, "x_deps", n);
  p.z_deps = deps_or_empty(j, "z_deps", n);
  p.outputs = j.value("outputs", std::vector<int>{});
  return p;
}

json program_to_json(const Program& p) {
  return {{"phi", p.phi}, {"x_deps", p.x_deps}, {"z_deps", p.z_deps}, {"outputs", p.outputs}};
}

Program program_from_json(const json& j) {
  Program p;
  p.phi = j.at("phi").get<std::vector<int>>();
  const std::size_t n = p.phi.size();
  p.x_deps = deps_or_empty(j, "x_deps", n);
  p.z_deps = deps_or_empty(j, "z_deps", n);
  if (j.contains("outputs")) {
    p.outputs = j.at("outputs").get<std::vector<int>>();
  } else {
    for (std::size_t s = 0; s < n; ++s) p.outputs.push_back(static_cast<int>(s));
  }
  p.validate();
  return p;
}

}  // namespace bqc::fkproto
