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

#include "bqc/harness/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bqc::harness {

nlohmann::json Estimate::to_json() const {
  nlohmann::json j = {{"estimate", estimate},
                      {"stderr", std_error},
                      {"ci95", {ci_lo, ci_hi}},
                      {"trials", trials}};
  if (is_proportion()) j["count"] = successes;
  return j;
}

Estimate proportion(long successes, long trials) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw std::invalid_argument("proportion: need 0 <= successes <= trials, trials > 0");
  }
  Estimate e;
  e.trials = trials;
  e.successes = successes;
  const double n = static_cast<double>(trials);
  e.estimate = static_cast<double>(successes) / n;
  e.std_error = std::sqrt(e.estimate * (1.0 - e.estimate) / n);
  const double half = 1.959963984540054 * e.std_error + 0.5 / n;
  e.ci_lo = std::max(0.0, e.estimate - half);
  e.ci_hi = std::min(1.0, e.estimate + half);
  return e;
}

Estimate mean_estimate(double sum, double sum_sq, long trials) {
  if (trials <= 0) throw std::invalid_argument("mean_estimate: no samples");
  Estimate e;
  e.trials = trials;
  const double n = static_cast<double>(trials);
  e.estimate = sum / n;
  const double var = trials > 1 ? std::max(0.0, (sum_sq - n * e.estimate * e.estimate) / (n - 1))
                                : 0.0;
  e.std_error = std::sqrt(var / n);
  e.ci_lo = e.estimate - 1.959963984540054 * e.std_error;
  e.ci_hi = e.estimate + 1.959963984540054 * e.std_error;
  return e;
}

void MeanAccumulator::add(double x) {
  sum_ += x;
  sum_sq_ += x * x;
  ++n_;
}

bool within_sigma(const Estimate& e, double target, double k) {
  double sigma = e.std_error;
  if (e.is_proportion()) sigma = std::sqrt(target * (1.0 - target) / static_cast<double>(e.trials));
  return std::abs(e.estimate - target) <= k * sigma + 1e-12;
}

bool below_bound(const Estimate& e, double bound, double k) {
  return e.estimate <= bound + k * e.std_error + 1e-12;
}

bool separated(const Estimate& a, const Estimate& b, double k) {
  return a.estimate + k * a.std_error < b.estimate - k * b.std_error ||
         b.estimate + k * b.std_error < a.estimate - k * a.std_error;
}

bool non_increasing(const std::vector<Estimate>& seq, double k) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const double se = std::hypot(seq[i].std_error, seq[i - 1].std_error);
    if (seq[i].estimate > seq[i - 1].estimate + k * se + 1e-12) return false;
  }
  return true;
}

nlohmann::json ChiSquare::to_json() const {
  return {{"statistic", statistic}, {"dof", dof}, {"p_value", p_value}};
}

namespace {

ChiSquare finish(double stat, double dof) {
  ChiSquare c;
  c.statistic = stat;
  c.dof = dof;
  if (dof < 1) return c;
  if (!std::isfinite(stat)) {
    c.p_value = 0.0;
    return c;
  }
  boost::math::chi_squared dist(dof);
  c.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  return c;
}

}  // namespace

ChiSquare two_sample_chi_square(const std::map<std::string, long>& a,
                                const std::map<std::string, long>& b, double min_pooled) {
  std::map<std::string, std::pair<double, double>> cells;
  for (const auto& [k, v] : a) cells[k].first += static_cast<double>(v);
  for (const auto& [k, v] : b) cells[k].second += static_cast<double>(v);
  std::vector<std::pair<double, double>> kept;
  std::pair<double, double> rest{0.0, 0.0};
  for (const auto& [k, v] : cells) {
    if (v.first + v.second >= min_pooled) {
      kept.push_back(v);
    } else {
      rest.first += v.first;
      rest.second += v.second;
    }
  }
  if (rest.first + rest.second > 0) kept.push_back(rest);
  double na = 0, nb = 0;
  for (auto [x, y] : kept) {
    na += x;
    nb += y;
  }
  if (na == 0 || nb == 0) throw std::invalid_argument("two_sample_chi_square: empty sample");
  double stat = 0;
  for (auto [x, y] : kept) {
    const double pooled = (x + y) / (na + nb);
    const double ea = pooled * na, eb = pooled * nb;
    if (pooled > 0) stat += (x - ea) * (x - ea) / ea + (y - eb) * (y - eb) / eb;
  }
  return finish(stat, static_cast<double>(kept.size()) - 1.0);
}

ChiSquare goodness_of_fit(const std::vector<long>& counts, const std::vector<double>& probs) {
  if (counts.size() != probs.size() || counts.empty()) {
    throw std::invalid_argument("goodness_of_fit: size mismatch");
  }
  double n = 0;
  for (long c : counts) n += static_cast<double>(c);
  double stat = 0;
  int cells = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (probs[i] <= 0) {
      if (counts[i] > 0) return finish(std::numeric_limits<double>::infinity(), 1);
      continue;
    }
    const double e = n * probs[i];
    stat += (static_cast<double>(counts[i]) - e) * (static_cast<double>(counts[i]) - e) / e;
    ++cells;
  }
  return finish(stat, cells - 1.0);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need two points");
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("loglog_slope: values must be positive");
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

nlohmann::json TrialStats::to_json() const {
  nlohmann::json j;
  j["trials"] = trials;
  j["counts"] = counts;
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [k, e] : metrics) m[k] = e.to_json();
  j["metrics"] = m;
  if (!extra.empty()) j["extra"] = extra;
  return j;
}

std::string TrialStats::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "metric,estimate,stderr,ci_lo,ci_hi,trials\n";
  for (const auto& [k, e] : metrics) {
    out << k << ',' << e.estimate << ',' << e.std_error << ',' << e.ci_lo << ',' << e.ci_hi << ','
        << e.trials << '\n';
  }
  return out.str();
}

}  // namespace bqc::harness
