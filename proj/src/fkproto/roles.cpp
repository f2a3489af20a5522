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

#include "bqc/fkproto/roles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bqc::fkproto {

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent n_t-subsets of the graph.
std::vector<std::vector<int>> independent_sets(const GraphSpec& g, int n_t) {
  const auto nb = g.neighbors();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<int> blocked(g.n_vertices, 0);
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == n_t) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < g.n_vertices; ++v) {
      if (blocked[v]) continue;
      cur.push_back(v);
      for (int u : nb[v]) ++blocked[u];
      rec(v + 1);
      for (int u : nb[v]) --blocked[u];
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct Split {
  std::vector<int> required;  // trap neighbourhood
  std::vector<int> free;      // neither trap nor required
};

Split split_for(const GraphSpec& g, const std::vector<std::vector<int>>& nb,
                const std::vector<int>& traps) {
  std::vector<int> mark(g.n_vertices, 0);
  for (int t : traps) mark[t] = 2;
  for (int t : traps) {
    for (int u : nb[t]) {
      if (mark[u] == 0) mark[u] = 1;
    }
  }
  Split s;
  for (int v = 0; v < g.n_vertices; ++v) {
    if (mark[v] == 1) s.required.push_back(v);
    if (mark[v] == 0) s.free.push_back(v);
  }
  return s;
}

void check_counts(const GraphSpec& g, int n_t, std::optional<int> n_d) {
  g.validate();
  if (n_t < 0 || n_t > g.n_vertices) throw std::invalid_argument("assign_roles: bad trap count");
  if (n_d && (*n_d < 0 || *n_d + n_t > g.n_vertices)) {
    throw std::invalid_argument("assign_roles: bad dummy count");
  }
}

}  // namespace

std::vector<std::vector<Role>> feasible_role_maps(const GraphSpec& g, int n_t,
                                                  std::optional<int> n_d) {
  check_counts(g, n_t, n_d);
  const auto nb = g.neighbors();
  std::vector<std::vector<Role>> out;
  for (const auto& traps : independent_sets(g, n_t)) {
    Split s = split_for(g, nb, traps);
    std::vector<Role> base(g.n_vertices, Role::Computation);
    for (int t : traps) base[t] = Role::Trap;
    for (int d : s.required) base[d] = Role::Dummy;
    const int extra = n_d ? *n_d - static_cast<int>(s.required.size()) : 0;
    if (extra < 0 || extra > static_cast<int>(s.free.size())) continue;
    // Every extra-dummy subset of the free vertices.
    std::vector<int> pick(s.free.size(), 0);
    std::fill(pick.end() - extra, pick.end(), 1);
    do {
      std::vector<Role> m = base;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if (pick[i]) m[s.free[i]] = Role::Dummy;
      }
      out.push_back(std::move(m));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

RoleSampler::RoleSampler(GraphSpec g, int n_t, std::optional<int> n_d)
    : graph_(std::move(g)), n_t_(n_t), n_d_(n_d) {
  check_counts(graph_, n_t, n_d);
  graph_.roles.clear();
  graph_.partition.clear();
  const auto nb = graph_.neighbors();
  double acc = 0.0;
  for (auto& traps : independent_sets(graph_, n_t)) {
    Split s = split_for(graph_, nb, traps);
    const double w = n_d ? binomial(static_cast<int>(s.free.size()),
                                    *n_d - static_cast<int>(s.required.size()))
                         : 1.0;
    if (w <= 0.0) continue;
    acc += w;
    trap_sets_.push_back(std::move(traps));
    cumulative_.push_back(acc);
  }
  if (trap_sets_.empty()) {
    throw std::invalid_argument("assign_roles: no feasible assignment with " +
                                std::to_string(n_t) + " isolated traps");
  }
}

GraphSpec RoleSampler::sample(qsim::RandomStream& rng) const {
  const double u = rng.uniform() * cumulative_.back();
  std::size_t idx = std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin();
  idx = std::min(idx, trap_sets_.size() - 1);
  const auto& traps = trap_sets_[idx];
  GraphSpec g = graph_;
  Split s = split_for(g, g.neighbors(), traps);
  g.roles.assign(g.n_vertices, Role::Computation);
  for (int t : traps) g.roles[t] = Role::Trap;
  for (int d : s.required) g.roles[d] = Role::Dummy;
  if (n_d_) {
    rng.shuffle(s.free);
    const int extra = *n_d_ - static_cast<int>(s.required.size());
    for (int i = 0; i < extra; ++i) g.roles[s.free[i]] = Role::Dummy;
  }
  const int n = g.n_vertices;
  if (n_t_ > 0 && (n - n_t_) % n_t_ == 0) {
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
      if (g.roles[v] != Role::Trap) others.push_back(v);
    }
    rng.shuffle(others);
    const int per = (n - n_t_) / n_t_;
    for (int i = 0; i < n_t_; ++i) {
      std::vector<int> set = {traps[i]};
      set.insert(set.end(), others.begin() + i * per, others.begin() + (i + 1) * per);
      std::sort(set.begin(), set.end());
      g.partition.push_back(std::move(set));
    }
  }
  return g;
}

GraphSpec assign_roles(const GraphSpec& g, int n_t, qsim::RandomStream& rng,
                       std::optional<int> n_d) {
  return RoleSampler(g, n_t, n_d).sample(rng);
}

}  // namespace bqc::fkproto
