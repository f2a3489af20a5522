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

#include "bqc/fkproto/compose.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bqc::fkproto {

using adversary::Stage;

double z_label_probability(double p, double p_prime) { return 1.0 - 4.0 * p * p * (1.0 - p_prime); }

namespace {

void check_counts(int n, int n_d) {
  if (n < 1 || n_d < 0 || n_d > n) throw std::invalid_argument("need 0 <= N_D <= N and N >= 1");
}

}  // namespace

double solve_p_prime(int n, int n_d, double p) {
  check_counts(n, n_d);
  if (!(p > 0.0 && p < 0.5)) throw std::invalid_argument("p must lie in (0, 1/2)");
  const double frac = static_cast<double>(n_d) / n;
  const double pp = 1.0 - (1.0 - frac) / (4.0 * p * p);
  if (!(pp > 0.0 && pp < 1.0)) {
    throw std::invalid_argument("no p' in (0, 1) gives N_D/N = " + std::to_string(frac) +
                                " at p = " + std::to_string(p));
  }
  return pp;
}

double solve_p(int n, int n_d, double p_prime) {
  check_counts(n, n_d);
  if (!(p_prime > 0.0 && p_prime < 1.0)) throw std::invalid_argument("p' must lie in (0, 1)");
  const double frac = static_cast<double>(n_d) / n;
  const double p = std::sqrt((1.0 - frac) / (4.0 * (1.0 - p_prime)));
  if (!(p > 0.0 && p < 0.5)) {
    throw std::invalid_argument("no p in (0, 1/2) gives N_D/N = " + std::to_string(frac) +
                                " at p' = " + std::to_string(p_prime));
  }
  return p;
}

void check_parameter_relation(int n, int n_d, double p, double p_prime, double tol) {
  check_counts(n, n_d);
  const double lhs = static_cast<double>(n_d) / n;
  const double rhs = z_label_probability(p, p_prime);
  if (std::abs(lhs - rhs) > tol) {
    throw std::invalid_argument("parameter relation violated: N_D/N = " + std::to_string(lhs) +
                                " but 1 - 4p^2(1 - p') = " + std::to_string(rhs));
  }
}

double expected_accepted_gadgets(int n_z, int n_plus, double z_prob) {
  if (n_z < 0 || n_plus < 0) throw std::invalid_argument("counts must be non-negative");
  if ((n_z > 0 && z_prob <= 0.0) || (n_plus > 0 && z_prob >= 1.0)) {
    throw std::invalid_argument("requested state type is never produced");
  }
  // e[i][j]: mean draws still needed with i Z-basis and j |+_k> states missing.
  std::vector<std::vector<double>> e(n_z + 1, std::vector<double>(n_plus + 1, 0.0));
  for (int i = 0; i <= n_z; ++i) {
    for (int j = 0; j <= n_plus; ++j) {
      if (i == 0 && j == 0) continue;
      if (i == 0) {
        e[i][j] = j / (1.0 - z_prob);
      } else if (j == 0) {
        e[i][j] = i / z_prob;
      } else {
        e[i][j] = 1.0 + z_prob * e[i - 1][j] + (1.0 - z_prob) * e[i][j - 1];
      }
    }
  }
  return e[n_z][n_plus];
}

double expected_gadget_runs(int n, int n_d, double p, double p_prime) {
  check_parameter_relation(n, n_d, p, p_prime);
  return 16.0 * expected_accepted_gadgets(n_d, n - n_d, z_label_probability(p, p_prime));
}

ComposeResult compose_protocol(const RoleSampler& roles, const Program& program,
                               const ComposeConfig& config,
                               const adversary::ChannelModel& adversary, qsim::RandomStream& rng) {
  const int n = roles.n_vertices();
  const adversary::ChannelModel adv = adversary.instantiate(n, rng);
  ComposeResult res;
  res.graph = roles.sample(rng);
  const int n_d = res.graph.n_dummies();
  check_parameter_relation(n, n_d, config.p, config.p_prime);
  const Pattern pattern = make_pattern(res.graph, program);

  const adversary::ChannelModel gadget_channel = adv.restricted(
      {Stage::BellPair, Stage::Transmission, Stage::GadgetInput, Stage::GadgetOutput});
  std::vector<PreparedQubit> zs, pluses;
  while (static_cast<int>(zs.size()) < n_d || static_cast<int>(pluses.size()) < n - n_d) {
    if (res.gadget_runs >= config.max_gadget_runs) {
      throw std::runtime_error("compose_protocol: gadget budget exhausted");
    }
    ++res.gadget_runs;
    gadget::GadgetOutcome g =
        gadget::run_gadget(config.p, config.p_prime, gadget_channel, rng, config.prep);
    if (!g.accepted) continue;
    ++res.accepted_gadgets;
    auto& pool = g.label.z_basis() ? zs : pluses;
    const int want = g.label.z_basis() ? n_d : n - n_d;
    if (static_cast<int>(pool.size()) < want) {
      pool.push_back(PreparedQubit::from_label(g.label, std::move(*g.bob_state)));
    }
  }
  rng.shuffle(zs);
  rng.shuffle(pluses);
  std::vector<PreparedQubit> prepared(n);
  std::size_t iz = 0, ip = 0;
  for (int v = 0; v < n; ++v) {
    prepared[v] = res.graph.roles[v] == Role::Dummy ? std::move(zs[iz++]) : std::move(pluses[ip++]);
  }
  res.fk = run_fk(res.graph, pattern, std::move(prepared), adv, rng);
  return res;
}

}  // namespace bqc::fkproto
