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

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bqc/adversary/strategy.hpp"
#include "bqc/css/code.hpp"
#include "bqc/fkproto/pattern.hpp"
#include "bqc/fkproto/roles.hpp"
#include "bqc/gadget/gadget.hpp"
#include "bqc/gadget/transcript.hpp"
#include "bqc/harness/config.hpp"
#include "bqc/harness/stats.hpp"

namespace bqc::harness {

/** Trivial program over n_c slots with the configured angles. */
fkproto::Program config_program(const RunConfig& cfg, int n_c);

/** Gadget runs: acceptance, Pr[Z | accept] and per-label frequencies. */
TrialStats run_gadget_experiment(const RunConfig& cfg, gadget::TranscriptWriter* transcripts = nullptr);

struct CssCheck {
  long cases = 0;
  long passed = 0;
};

/** Every weight-0 and weight-1 Pauli error, both readout bases, all codewords of the coset. */
CssCheck css_single_error_check(const css::CssCode& code);

/** Logical fault rate of remote preparation under i.i.d. X/Z flips, per noise level. */
TrialStats css_logical_sweep(const RunConfig& cfg);

/** FK with Alice preparing every qubit: acceptance and output counts. */
TrialStats run_fk_experiment(const RunConfig& cfg, std::ostream* transcripts = nullptr);

/** Composed protocol: acceptance and gadget cost. */
TrialStats estimate_acceptance(const RunConfig& cfg, std::ostream* transcripts = nullptr);

/**
 * Probability that FK accepts a wrong output, for a trivial program with
 * outputs decoded by majority when d > 1 (2d - 1 outputs). A uniformly
 * random m-subset Pauli attack flips each hit vertex's readout with
 * probability f; the count is hypergeometric over the role classes.
 * Requires every non-dummy vertex to have only dummy neighbours in every
 * feasible role map; returns nullopt otherwise or for other attacks.
 */
std::optional<double> trap_miss_oracle(const fkproto::RoleSampler& roles,
                                       const adversary::ChannelModel& attack, int d);

struct PIncorrectReport {
  TrialStats stats;
  Estimate p_incorrect;
  double bound = 1.0;  ///< (1 - N_T/N)^d.
  bool bound_ok = false;
  std::optional<double> oracle;
  std::optional<bool> oracle_ok;

  nlohmann::json to_json() const;
};

/** No 3 N_T = N precondition. Incorrect means accepted with output unlike the honest reference. */
PIncorrectReport measure_p_incorrect(const fkproto::RoleSampler& roles,
                                     const fkproto::Program& program,
                                     const adversary::ChannelModel& attack, int d, long trials,
                                     std::uint64_t seed, std::ostream* transcripts = nullptr);

/** Requires 3 N_T = N. */
PIncorrectReport estimate_p_incorrect(const RunConfig& cfg, std::ostream* transcripts = nullptr);

/** A set of gadget secrets (c, a, r). */
struct SecretClass {
  std::string name;
  std::function<bool(const gadget::GadgetSecrets&)> contains;
};

SecretClass all_secrets();
/** Secrets with c[wire] == c. */
SecretClass wire_basis_class(int wire, int c);

struct TranscriptTest {
  std::string a, b;
  long samples_a = 0, samples_b = 0;
  ChiSquare chi;
};

struct BlindnessReport {
  long samples = 0;
  double distance_to_mixed = 0.0;        ///< Sampled average over all secrets vs I/32.
  double exact_distance_to_mixed = 0.0;  ///< Exact average over the secret distribution.
  std::vector<std::string> classes;
  std::vector<double> class_distance_to_mixed;
  std::vector<std::vector<double>> pairwise;
  std::vector<TranscriptTest> transcripts;  ///< Label classes, accepted runs.
  long gadget_runs = 0;

  nlohmann::json to_json() const;
};

/** 0.5 ||a - b||_1 for Hermitian matrices. */
double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/** Bob's five received qubits before the circuit, averaged over `samples` secrets in the class. */
Eigen::MatrixXcd averaged_input_state(double p, double p_prime, const SecretClass& cls,
                                      long samples, std::uint64_t seed);
/** Exact average over Alice's secret distribution. */
Eigen::MatrixXcd exact_average_input(double p, double p_prime);

/**
 * State part over `classes` (samples per class); transcript part compares
 * the correction bits of accepted runs ending in each pair of the named labels.
 */
BlindnessReport blindness_audit(double p, double p_prime, long samples,
                                const std::vector<SecretClass>& classes,
                                const std::vector<std::string>& label_classes, std::uint64_t seed);

struct TeleportCase {
  std::string target;              ///< "+", "-", "0" or "1".
  double p2_branch_distance = 0.0;  ///< Largest branch distance to |A><A|.
  double p2t_branch_distance = 0.0;
  double p2_to_twirl = 0.0;         ///< Exact averaged output vs the twirled map.
  double p2t_to_twirl = 0.0;
  double oracle_same = 0.0;         ///< <A|T(A)|A>.
  double oracle_other = 0.0;        ///< Outcome 0 in the complementary basis.
  Estimate p2_same, p2t_same, p2_other, p2t_other;
  std::array<Estimate, 2> p2_bits, p2t_bits;  ///< Correction x and z bits.
  bool stats_ok = false;
};

struct TeleportReport {
  std::string strategy;
  double tp_error = 0.0;
  std::vector<TeleportCase> cases;

  double max_branch_distance() const;
  bool statistics_ok() const;
  nlohmann::json to_json() const;
};

/**
 * Measure-half preparation (P2) against prepare-and-teleport through the
 * same pair (P2'), for |A> in {|+>, |->, |0>, |1>}.
 */
TeleportReport teleport_equivalence(const adversary::Strategy& deviation, long trials,
                                    std::uint64_t seed);

/** Loss-tolerant preparation: transmissions per logical qubit and correctness. */
TrialStats loss_experiment(const RunConfig& cfg);

}  // namespace bqc::harness
