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
#include <map>
#include <string>
#include <vector>

namespace bqc::harness {

inline constexpr double kSigmas = 4.0;
/** Two-sided normal tail beyond 4 sigma. */
inline constexpr double kFourSigmaPValue = 6.334248366623996e-05;

/** A probability or mean with its uncertainty. */
struct Estimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  long trials = 0;
  long successes = -1;  ///< -1 for means.

  bool is_proportion() const { return successes >= 0; }
  nlohmann::json to_json() const;
};

/** Normal-approximation interval widened by 1/(2n), clipped to [0, 1]. */
Estimate proportion(long successes, long trials);
Estimate mean_estimate(double sum, double sum_sq, long trials);

class MeanAccumulator {
 public:
  void add(double x);
  long count() const { return n_; }
  Estimate result() const { return mean_estimate(sum_, sum_sq_, n_); }

 private:
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
  long n_ = 0;
};

/**
 * |estimate - target| <= k sigma. Proportions use the binomial sigma at the
 * target, means use their standard error.
 */
bool within_sigma(const Estimate& e, double target, double k = kSigmas);
/** estimate <= bound + k * std_error. */
bool below_bound(const Estimate& e, double bound, double k = kSigmas);
/** The k-sigma intervals of a and b are disjoint. */
bool separated(const Estimate& a, const Estimate& b, double k = kSigmas);
/** Each step up is within k combined standard errors. */
bool non_increasing(const std::vector<Estimate>& seq, double k = kSigmas);

struct ChiSquare {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;

  bool passes(double alpha = kFourSigmaPValue) const { return p_value >= alpha; }
  nlohmann::json to_json() const;
};

/**
 * Two-sample test of homogeneity. Cells with pooled count below
 * min_pooled are merged into one.
 */
ChiSquare two_sample_chi_square(const std::map<std::string, long>& a,
                                const std::map<std::string, long>& b, double min_pooled = 10.0);
/** Goodness of fit against probabilities summing to one. */
ChiSquare goodness_of_fit(const std::vector<long>& counts, const std::vector<double>& probs);

/** Least-squares slope of log y against log x. */
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/** Outcome counts plus named estimates of one experiment. */
struct TrialStats {
  long trials = 0;
  std::map<std::string, long> counts;
  std::map<std::string, Estimate> metrics;
  nlohmann::json extra = nlohmann::json::object();

  nlohmann::json to_json() const;
  /** name,estimate,stderr,ci_lo,ci_hi,trials per metric. */
  std::string to_csv() const;
};

}  // namespace bqc::harness
