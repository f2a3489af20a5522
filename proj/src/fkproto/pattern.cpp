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

#include "bqc/fkproto/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bqc::fkproto {

namespace {

int mod8(int v) { return ((v % 8) + 8) % 8; }

}  // namespace

void Program::validate() const {
  const int m = size();
  if (static_cast<int>(x_deps.size()) != m || static_cast<int>(z_deps.size()) != m) {
    throw std::invalid_argument("program: one dependency list per slot");
  }
  for (int j = 0; j < m; ++j) {
    for (const auto* deps : {&x_deps[j], &z_deps[j]}) {
      for (int d : *deps) {
        if (d < 0 || d >= j) throw std::invalid_argument("program: dependency on a later slot");
      }
    }
  }
  for (int o : outputs) {
    if (o < 0 || o >= m) throw std::out_of_range("program: output slot out of range");
  }
}

Program Program::trivial(int m) {
  Program p;
  p.phi.assign(m, 0);
  p.x_deps.assign(m, {});
  p.z_deps.assign(m, {});
  for (int j = 0; j < m; ++j) p.outputs.push_back(j);
  return p;
}

Program Program::linear_cluster(std::vector<int> phi) {
  Program p;
  const int m = static_cast<int>(phi.size());
  if (m < 1) throw std::invalid_argument("linear cluster needs at least one slot");
  p.phi = std::move(phi);
  p.x_deps.assign(m, {});
  p.z_deps.assign(m, {});
  for (int j = 1; j < m; ++j) p.x_deps[j] = {j - 1};
  for (int j = 2; j < m; ++j) p.z_deps[j] = {j - 2};
  p.outputs = {m - 1};
  return p;
}

void Pattern::validate(const GraphSpec& g) const {
  const int n = g.n_vertices;
  if (static_cast<int>(order.size()) != n || static_cast<int>(phi.size()) != n ||
      static_cast<int>(x_deps.size()) != n || static_cast<int>(z_deps.size()) != n) {
    throw std::invalid_argument("pattern: sizes must match the vertex count");
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0) {
      throw std::invalid_argument("pattern: order is not a permutation");
    }
    pos[v] = i;
  }
  for (int v = 0; v < n; ++v) {
    for (const auto* deps : {&x_deps[v], &z_deps[v]}) {
      for (int d : *deps) {
        if (d < 0 || d >= n || pos[d] >= pos[v]) {
          throw std::invalid_argument("pattern: dependency not measured earlier");
        }
      }
    }
    if (g.has_roles() && g.roles[v] == Role::Trap &&
        (mod8(phi[v]) != 0 || !x_deps[v].empty() || !z_deps[v].empty())) {
      throw std::invalid_argument("pattern: trap vertices take phi = 0");
    }
  }
  for (int o : outputs) {
    if (o < 0 || o >= n) throw std::out_of_range("pattern: output vertex out of range");
  }
}

Pattern make_pattern(const GraphSpec& g, const Program& program) {
  if (!g.has_roles()) throw std::invalid_argument("make_pattern: graph has no roles");
  program.validate();
  const auto comp = g.vertices_with(Role::Computation);
  if (static_cast<int>(comp.size()) != program.size()) {
    throw std::invalid_argument("make_pattern: program has " + std::to_string(program.size()) +
                                " slots but the graph has " + std::to_string(comp.size()) +
                                " computation vertices");
  }
  const int n = g.n_vertices;
  Pattern p;
  p.order.resize(n);
  for (int v = 0; v < n; ++v) p.order[v] = v;
  p.phi.assign(n, 0);
  p.x_deps.assign(n, {});
  p.z_deps.assign(n, {});
  for (int j = 0; j < program.size(); ++j) {
    const int v = comp[j];
    p.phi[v] = mod8(program.phi[j]);
    for (int d : program.x_deps[j]) p.x_deps[v].push_back(comp[d]);
    for (int d : program.z_deps[j]) p.z_deps[v].push_back(comp[d]);
  }
  for (int o : program.outputs) p.outputs.push_back(comp[o]);
  p.validate(g);
  return p;
}

int adapt_phi(int phi_units, int sx, int sz) {
  return mod8((sx ? -phi_units : phi_units) + 4 * sz);
}

int compute_delta_units(int k_prime, int phi_units, int r, int n_z) {
  return mod8(k_prime + phi_units + 4 * r + 4 * n_z);
}

double compute_delta(int k_prime, double phi, int r, int n_z) {
  const double units = phi * 4.0 / std::numbers::pi;
  const double rounded = std::round(units);
  if (std::abs(units - rounded) > 1e-9) {
    throw std::invalid_argument("compute_delta: phi must be a multiple of pi/4");
  }
  return compute_delta_units(k_prime, static_cast<int>(rounded), r, n_z) * std::numbers::pi / 4.0;
}

}  // namespace bqc::fkproto
