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

#include <cstdint>
#include <random>
#include <vector>

namespace bqc::qsim {

/**
 * Seeded random stream.
 *
 * A stream is identified by (seed, index); trial i of an experiment uses
 * index i, so results do not depend on how trials are scheduled. All
 * conversions to doubles and integers are done here rather than through
 * std distributions, whose output is implementation-defined.
 */
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t index = 0);

  std::uint64_t next_u64();

  /** Uniform double in [0, 1) with 53 random bits. */
  double uniform();

  /** Returns true with probability p. */
  bool bernoulli(double p);

  /** Fair bit. */
  int bit();

  /** Uniform integer in [0, n). Requires n > 0. */
  std::uint64_t below(std::uint64_t n);

  /** Child stream seeded from the next draw of this one. */
  RandomStream fork();

  /** Fisher-Yates shuffle driven by this stream. */
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/** SplitMix64 finalizer. */
std::uint64_t mix64(std::uint64_t x);

}  // namespace bqc::qsim
