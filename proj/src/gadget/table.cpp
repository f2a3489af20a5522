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

#include "bqc/gadget/table.hpp"

#include <stdexcept>

namespace bqc::gadget {

LabelKind StateLabel::kind() const {
  if (plus_base) return LabelKind::Plus;
  return x_power ? LabelKind::Z1 : LabelKind::Z0;
}

int StateLabel::k() const {
  // X |+_k> ~ |+_{-k}> and Z |+_k> = |+_{k+4}>.
  const int kz = (base_k + 4 * z_power) % 8;
  return x_power ? (8 - kz) % 8 : kz;
}

int StateLabel::index() const { return plus_base ? 2 + k() : x_power; }

std::string StateLabel::name() const { return label_name(index()); }

qsim::PureState StateLabel::state() const {
  return plus_base ? qsim::PureState::plus_k(k()) : qsim::PureState::z_state(x_power);
}

std::string label_name(int index) {
  if (index == 0) return "Z0";
  if (index == 1) return "Z1";
  if (index >= 2 && index < 10) return "Plus" + std::to_string(index - 2);
  throw std::out_of_range("label_name: index " + std::to_string(index));
}

int table_row(const Bits5& c) {
  for (int v : c) {
    if (v != 0 && v != 1) throw std::invalid_argument("table_row: c must be bits");
  }
  if (c[2] == 0) return 1;
  if (c[1] == 0) {
    if (c[3] == 0) return 5;
    return c[4] == 0 ? 3 : 6;
  }
  if (c[0] == 0) return 2;
  if (c[3] == 0) return 7;
  return c[4] == 0 ? 4 : 8;
}

StateLabel table_lookup(const Bits5& c, const Bits5& a) {
  const auto [a1, a2, a3, a4, a5] = a;
  StateLabel l;
  l.row = table_row(c);
  switch (l.row) {
    case 1: l.x_power = a3; break;
    case 2: l.x_power = a1 ^ a2; break;
    case 3:
    case 4: l.x_power = a4 ^ a5; break;
    case 5:
      l.plus_base = true;
      l.base_k = 0;
      l.z_power = a2 ^ a3 ^ a4;
      break;
    case 6:
      l.plus_base = true;
      l.base_k = 2;
      l.z_power = a2 ^ a3 ^ a4 ^ a5;
      break;
    case 7:
      l.plus_base = true;
      l.base_k = 1;
      l.x_power = a2;
      l.z_power = a1 ^ a3 ^ a4;
      break;
    default:
      l.plus_base = true;
      l.base_k = 3;
      l.x_power = a2;
      l.z_power = a1 ^ a2 ^ a3 ^ a4 ^ a5;
      break;
  }
  return l;
}

}  // namespace bqc::gadget
