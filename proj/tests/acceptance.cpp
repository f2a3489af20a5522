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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include "bqc/adversary/serialize.hpp"
#include "bqc/css/code.hpp"
#include "bqc/fkproto/compose.hpp"
#include "bqc/gadget/gadget.hpp"
#include "bqc/harness/config.hpp"
#include "bqc/harness/experiments.hpp"
#include "bqc/harness/stats.hpp"

using namespace bqc;
using namespace bqc::harness;
using adversary::Stage;
using gadget::Bits5;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void info(const std::string& what) {
  std::printf("       %s\n", what.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Bits5 bits5(int v) {
  Bits5 b{};
  for (int i = 0; i < 5; ++i) b[i] = (v >> (4 - i)) & 1;
  return b;
}

RunConfig make(Experiment e, nlohmann::json extra = nlohmann::json::object()) {
  extra["experiment"] = experiment_name(e);
  return config_from_json(extra);
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  int defined = 0, empty = 0, matched = 0;
  for (int cv = 0; cv < 32; ++cv) {
    for (int av = 0; av < 32; ++av) {
      const Bits5 c = bits5(cv), a = bits5(av);
      const auto inputs = gadget::ideal_inputs(c, a);
      const qsim::Projection pr = gadget::circuit_branch(inputs, {0, 0, 0, 0});
      if (pr.probability < 1e-12) {
        ++empty;
        continue;
      }
      ++defined;
      if (qsim::states_equal_up_to_phase(pr.state, gadget::table_lookup(c, a).state(), 1e-9)) {
        ++matched;
      }
    }
  }
  const double secs = seconds_since(t0);
  report(1, matched == defined && defined > 0 && secs < 10.0,
         fmt("table lookup matches s=0000 branch on %d/%d defined cells (%d cells have "
             "Pr[s=0000]=0), %.2f s",
             matched, defined, empty, secs));
}

void criterion2() {
  int off = 0;
  double worst = 0.0;
  for (int cv = 0; cv < 32; ++cv) {
    for (int av = 0; av < 32; ++av) {
      const auto inputs = gadget::ideal_inputs(bits5(cv), bits5(av));
      const double p0 = gadget::outcome_distribution(inputs)[0];
      worst = std::max(worst, std::abs(p0 - 1.0 / 16));
      if (std::abs(p0 - 1.0 / 16) > 1e-12) ++off;
    }
  }
  report(2, off == 0,
         fmt("Pr[s=0000] = 1/16 exactly for every (c, a): %d/1024 cells differ, max |dev| = %.4f",
             off, worst));
  // Same check after averaging the a bits that give one prepared state.
  double label_worst = 0.0;
  for (int cv = 0; cv < 32; ++cv) {
    std::map<int, std::pair<int, std::array<double, 16>>> by_label;
    for (int av = 0; av < 32; ++av) {
      const Bits5 c = bits5(cv), a = bits5(av);
      auto& [count, acc] = by_label[gadget::table_lookup(c, a).index()];
      const auto dist = gadget::outcome_distribution(gadget::ideal_inputs(c, a));
      ++count;
      for (int s = 0; s < 16; ++s) acc[s] += dist[s];
    }
    for (const auto& [label, entry] : by_label) {
      for (int s = 0; s < 16; ++s) {
        label_worst = std::max(label_worst, std::abs(entry.second[s] / entry.first - 1.0 / 16));
      }
    }
  }
  info(fmt("per (c, prepared state) average: max |Pr[s] - 1/16| = %.2e over all 16 s", label_worst));
}

void criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = make(Experiment::Gadget, {{"trials", 1000000}, {"seed", 2026}});
  const TrialStats st = run_gadget_experiment(cfg);
  const double secs = seconds_since(t0);
  bool ok = secs < 120.0;
  int good = 0;
  for (int i = 0; i < 10; ++i) {
    const std::string name = gadget::label_name(i);
    const Estimate& e = st.metrics.at("label_" + name);
    const double target = i < 2 ? 0.875 / 32 : 0.125 / 128;
    const bool hit = within_sigma(e, target);
    good += hit;
    ok = ok && hit;
    info(fmt("%-6s %.6f (target %.6f, se %.1e)%s", name.c_str(), e.estimate, target, e.std_error,
             hit ? "" : "  outside 4 sigma"));
  }
  report(3, ok,
         fmt("label frequencies over 10^6 gadget runs at p=1/4, p'=1/2: %d/10 within 4 sigma, %.1f s",
             good, secs));
}

void criterion4() {
  int cases = 0;
  double worst = 0.0;
  for (int n = 3; n <= 16; ++n) {
    for (int nd = 1; nd <= n - 2; ++nd) {
      for (double p : {0.1, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.49}) {
        const double frac = static_cast<double>(nd) / n;
        const double pp = 1.0 - (1.0 - frac) / (4.0 * p * p);
        if (!(pp > 0.0 && pp < 1.0)) continue;
        const RunConfig cfg = make(Experiment::Compose, {{"n", n}, {"nt", 1}, {"nd", nd}, {"p", p}});
        if (!cfg.p_prime_solved || !cfg.p_prime) {
          worst = 1.0;
          continue;
        }
        worst = std::max(worst, std::abs(frac - (1.0 - 4.0 * p * p * (1.0 - *cfg.p_prime))));
        ++cases;
      }
    }
  }
  report(4, cases > 0 && worst <= 1e-12,
         fmt("solved p' satisfies N_D/N = 1 - 4p^2(1-p') on %d feasible (N, N_D, p), max err %.1e",
             cases, worst));
}

void criterion5() {
  const CssCheck chk = css_single_error_check(css::CssCode::steane());
  const TrialStats st = css_logical_sweep(make(Experiment::Css, {{"trials", 100000}, {"seed", 5}}));
  const double slope = st.extra.at("slope").get<double>();
  for (const auto& [k, e] : st.metrics) info(fmt("%s = %.5f", k.c_str(), e.estimate));
  report(5, chk.passed == chk.cases && std::abs(slope - 2.0) <= 0.3,
         fmt("Steane weight<=1 correction %ld/%ld cases, log-log slope %.3f (target 2.0 +- 0.3)",
             chk.passed, chk.cases, slope));
}

void criterion6() {
  const TrialStats st =
      estimate_acceptance(make(Experiment::Compose, {{"trials", 10000}, {"seed", 6}}));
  const long acc = st.counts.at("accepted");
  report(6, acc == 10000, fmt("honest noiseless composed runs on the 6-cycle, N_T=2: %ld/10000 accepted", acc));
}

void criterion7() {
  const nlohmann::json noise = {{"type", "iid_xz"}, {"p", 0.02}};
  const Estimate bare = estimate_acceptance(make(Experiment::Compose, {{"adversary", noise},
                                                                       {"trials", 100000},
                                                                       {"seed", 71}}))
                            .metrics.at("acceptance");
  const Estimate enc = estimate_acceptance(make(Experiment::Compose, {{"adversary", noise},
                                                                      {"code", "steane"},
                                                                      {"trials", 100000},
                                                                      {"seed", 72}}))
                           .metrics.at("acceptance");
  report(7, enc.estimate > bare.estimate && separated(bare, enc),
         fmt("acceptance at iid X/Z p=0.02: unencoded %.4f +- %.4f, Steane %.4f +- %.4f (4 sigma)",
             bare.estimate, kSigmas * bare.std_error, enc.estimate, kSigmas * enc.std_error));
}

void criterion8() {
  struct Attack {
    const char* stage;
    const char* letter;
    int count;
  };
  const Attack attacks[] = {{"measurement", "X", 1}, {"measurement", "X", 2}, {"measurement", "X", 3},
                            {"measurement", "X", 4}, {"measurement", "Y", 1}, {"measurement", "Y", 2},
                            {"measurement", "Z", 1}, {"graph_state", "Z", 1}, {"graph_state", "Z", 2},
                            {"graph_state", "X", 1}, {"graph_state", "X", 2}, {"graph_state", "Y", 1}};
  int n = 0, ok = 0;
  for (const Attack& a : attacks) {
    RunConfig cfg = make(Experiment::Verify, {{"trials", 100000}, {"seed", 800 + n}});
    cfg.adversary = {{"type", "random_pauli"}, {"stage", a.stage}, {"letter", a.letter}, {"count", a.count}};
    const PIncorrectReport r = estimate_p_incorrect(cfg);
    const bool pass = r.bound_ok && r.oracle && r.oracle_ok && *r.oracle_ok;
    ok += pass;
    ++n;
    info(fmt("%-11s %s x%d: p_incorrect %.5f (oracle %.5f, bound %.4f)%s", a.stage, a.letter, a.count,
             r.p_incorrect.estimate, r.oracle ? *r.oracle : -1.0, r.bound, pass ? "" : "  mismatch"));
  }
  report(8, n >= 10 && ok == n,
         fmt("%d/%d Pauli attacks on the 6-cycle (N_T=2) below (2/3)^1 + 4 sigma and on the trap-miss oracle",
             ok, n));
}

void criterion9() {
  const BlindnessReport r = blindness_audit(0.25, 0.5, 10000, {all_secrets()}, {"Z0", "Plus3"}, 9);
  const TranscriptTest& t = r.transcripts.at(0);
  const bool state_ok = r.distance_to_mixed < 0.02;
  report(9, state_ok && t.chi.passes(),
         fmt("10^4-sample trace distance to I/32 = %.4f (target < 0.02); transcripts %s vs %s "
             "chi2 p = %.3f over %ld/%ld accepted runs",
             r.distance_to_mixed, t.a.c_str(), t.b.c_str(), t.chi.p_value, t.samples_a, t.samples_b));
  const BlindnessReport big = blindness_audit(0.25, 0.5, 100000, {all_secrets()}, {}, 19);
  info(fmt("10^5-sample distance %.4f, exact average distance %.1e", big.distance_to_mixed,
           r.exact_distance_to_mixed));
}

void criterion10() {
  const TeleportReport honest = teleport_equivalence(adversary::Honest{}, 10000, 10);
  const TeleportReport pz = teleport_equivalence(adversary::preset_strategy("plus_zero"), 10000, 11);
  const double tp = std::max(honest.tp_error, pz.tp_error);
  report(10, honest.max_branch_distance() < 1e-9 && pz.statistics_ok() && tp <= 1e-9,
         fmt("honest P2 vs P2' branch distance %.1e; |+0> replacement statistics %s; twirl TP error %.1e",
             honest.max_branch_distance(), pz.statistics_ok() ? "consistent" : "inconsistent", tp));
}

void criterion11() {
  const TrialStats st = loss_experiment(make(Experiment::Loss, {{"trials", 10000}, {"seed", 11}}));
  const Estimate& e = st.metrics.at("transmissions");
  report(11, within_sigma(e, 14.0) && st.metrics.at("correct").estimate == 1.0,
         fmt("lossy preparation at n=7, transmittance 1/2: mean %.3f +- %.3f transmissions (target 14), "
             "exponential baseline %.0f",
             e.estimate, kSigmas * e.std_error, st.extra.at("exponential_baseline").get<double>()));
  info(fmt("literal l/p_loss expression = %.3f, reported only",
           st.extra.at("literal_l_over_p_loss").get<double>()));
}

}  // namespace

int main() {
  void (*const checks[])() = {criterion1, criterion2, criterion3, criterion4,
                              criterion5, criterion6, criterion7, criterion8,
                              criterion9, criterion10, criterion11};
  for (int i = 0; i < 11; ++i) {
    try {
      checks[i]();
    } catch (const std::exception& e) {
      report(i + 1, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
