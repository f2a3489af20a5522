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

#include <array>
#include <string>

#include "bqc/qsim/state.hpp"

namespace bqc::gadget {

using Bits5 = std::array<int, 5>;

enum class LabelKind { Z0, Z1, Plus };

/**
 * State prepared by an accepted gadget, as known to Alice.
 *
 * The table gives X^x_power Z^z_power applied to a base state (|0> for rows
 * 1-4, |+_base_k> for rows 5-8). kind() and k() give the resolved state.
 */
struct StateLabel {
  int row = 1;
  bool plus_base = false;
  int base_k = 0;
  int x_power = 0;
  int z_power = 0;

  LabelKind kind() const;
  /** Resolved k of |+_k>; only meaningful for Plus labels. */
  int k() const;
  bool z_basis() const { return !plus_base; }
  /** 0 for Z0, 1 for Z1, 2 + k for Plus(k). */
  int index() const;
  std::string name() const;
  qsim::PureState state() const;

  bool operator==(const StateLabel&) const = default;
};

/** Row 1..8 of the table for a c pattern. */
int table_row(const Bits5& c);

StateLabel table_lookup(const Bits5& c, const Bits5& a);

/** Name of a resolved label index (0..9). */
std::string label_name(int index);

}  // namespace bqc::gadget
