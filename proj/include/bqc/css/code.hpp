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
#include <span>
#include <string>
#include <vector>

#include "bqc/qsim/measure.hpp"
#include "bqc/qsim/state.hpp"

namespace bqc::css {

using Bits = std::vector<std::uint8_t>;
using BitMatrix = std::vector<Bits>;
using qsim::Basis;

/** Result of classical decoding of one transmitted block. */
struct DecodeResult {
  int logical = 0;
  /** False when the syndrome's minimum-weight leader exceeds the correctable radius or is not unique. */
  bool corrected = true;
  Bits correction;
};

/**
 * CSS code with one logical qubit.
 *
 * hx rows are X-type checks, hz rows Z-type checks. Z-basis readout is
 * checked with hz and read out on logical_z; X-basis readout uses hx and
 * logical_x.
 */
class CssCode {
 public:
  static CssCode steane();
  /** One physical qubit, no checks: the unencoded baseline. */
  static CssCode trivial();
  static CssCode from_matrices(BitMatrix hx, BitMatrix hz, Bits logical_x, Bits logical_z,
                               std::string name = "custom");
  /**
   * Plain-text format: sections "[hx]", "[hz]", "[logical_x]", "[logical_z]",
   * each followed by rows of 0/1 digits (spaces optional); '#' starts a comment.
   */
  static CssCode parse(const std::string& text, std::string name = "custom");
  static CssCode load(const std::string& path);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int distance() const { return distance_; }
  int correctable() const { return (distance_ - 1) / 2; }
  const BitMatrix& hx() const { return hx_; }
  const BitMatrix& hz() const { return hz_; }
  const Bits& logical_x() const { return lx_; }
  const Bits& logical_z() const { return lz_; }

  /** Check matrix and logical support used for readout in `basis`. */
  const BitMatrix& checks_for(Basis basis) const { return basis == Basis::Z ? hz_ : hx_; }
  const Bits& logical_for(Basis basis) const { return basis == Basis::Z ? lz_ : lx_; }
  /** Generators of the readout codewords in `basis` (excluding the logical). */
  const BitMatrix& stabilizer_words(Basis basis) const { return basis == Basis::Z ? hx_ : hz_; }

  std::uint32_t syndrome(std::span<const std::uint8_t> raw, Basis basis) const;
  DecodeResult decode(std::span<const std::uint8_t> raw, Basis basis) const;

 private:
  struct Leader {
    std::uint32_t pattern = 0;
    int weight = -1;
    bool unique = true;
  };

  void validate_and_build();

  std::string name_;
  int n_ = 0;
  BitMatrix hx_, hz_;
  Bits lx_, lz_;
  int distance_ = 1;
  std::vector<Leader> table_z_, table_x_;
};

DecodeResult decode_classical(const CssCode& code, std::span<const std::uint8_t> raw,
                              Basis basis);

/** GF(2) rank. */
int gf2_rank(BitMatrix m);

int parity(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace bqc::css
