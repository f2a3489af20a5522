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

#include "bqc/css/code.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bqc::css {

namespace {

constexpr int kMaxCodeLength = 16;

std::uint32_t pack(std::span<const std::uint8_t> bits) {
  std::uint32_t v = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j]) v |= std::uint32_t{1} << j;
  }
  return v;
}

std::uint32_t syndrome_of(const BitMatrix& checks, std::uint32_t word) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (std::popcount(pack(checks[i]) & word) & 1) s |= std::uint32_t{1} << i;
  }
  return s;
}

int dot(std::uint32_t a, std::uint32_t b) { return std::popcount(a & b) & 1; }

}  // namespace

int parity(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) throw std::invalid_argument("parity: length mismatch");
  int p = 0;
  for (std::size_t i = 0; i < a.size(); ++i) p ^= (a[i] & b[i]) & 1;
  return p;
}

int gf2_rank(BitMatrix m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && !m[piv][c]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != static_cast<std::size_t>(rank) && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

CssCode CssCode::steane() {
  BitMatrix h = {{1, 0, 1, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}};
  Bits l(7, 1);
  return from_matrices(h, h, l, l, "steane");
}

CssCode CssCode::trivial() { return from_matrices({}, {}, {1}, {1}, "trivial"); }

CssCode CssCode::from_matrices(BitMatrix hx, BitMatrix hz, Bits logical_x, Bits logical_z,
                               std::string name) {
  CssCode c;
  c.name_ = std::move(name);
  c.n_ = static_cast<int>(logical_x.size());
  c.hx_ = std::move(hx);
  c.hz_ = std::move(hz);
  c.lx_ = std::move(logical_x);
  c.lz_ = std::move(logical_z);
  c.validate_and_build();
  return c;
}

void CssCode::validate_and_build() {
  if (n_ < 1 || n_ > kMaxCodeLength) {
    throw std::invalid_argument("CssCode: length must be in [1, 16]");
  }
  auto check_rows = [&](const BitMatrix& m, const char* what) {
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != n_) {
        throw std::invalid_argument(std::string("CssCode: ") + what + " row length mismatch");
      }
      for (auto b : row) {
        if (b > 1) throw std::invalid_argument("CssCode: entries must be 0 or 1");
      }
    }
  };
  check_rows(hx_, "hx");
  check_rows(hz_, "hz");
  check_rows({lx_, lz_}, "logical");
  for (const auto& a : hx_) {
    for (const auto& b : hz_) {
      if (parity(a, b)) throw std::invalid_argument("CssCode: hx * hz^T != 0");
    }
  }
  for (const auto& row : hz_) {
    if (parity(row, lx_)) throw std::invalid_argument("CssCode: logical_x violates a Z check");
  }
  for (const auto& row : hx_) {
    if (parity(row, lz_)) throw std::invalid_argument("CssCode: logical_z violates an X check");
  }
  if (!parity(lx_, lz_)) {
    throw std::invalid_argument("CssCode: logical_x and logical_z must anticommute");
  }
  if (n_ - gf2_rank(hx_) - gf2_rank(hz_) != 1) {
    throw std::invalid_argument("CssCode: checks must leave exactly one logical qubit");
  }

  const std::uint32_t total = std::uint32_t{1} << n_;
  const std::uint32_t lxp = pack(lx_), lzp = pack(lz_);
  distance_ = n_;
  for (std::uint32_t e = 1; e < total; ++e) {
    const int w = std::popcount(e);
    if (w >= distance_) continue;
    if ((syndrome_of(hz_, e) == 0 && dot(e, lzp)) || (syndrome_of(hx_, e) == 0 && dot(e, lxp))) {
      distance_ = w;
    }
  }

  auto build = [&](const BitMatrix& checks, std::vector<Leader>& table) {
    table.assign(std::size_t{1} << checks.size(), Leader{});
    for (std::uint32_t e = 0; e < total; ++e) {
      Leader& l = table[syndrome_of(checks, e)];
      const int w = std::popcount(e);
      if (l.weight < 0 || w < l.weight) {
        l = Leader{e, w, true};
      } else if (w == l.weight) {
        l.unique = false;  // keep the lower-index pattern
      }
    }
  };
  build(hz_, table_z_);
  build(hx_, table_x_);
}

std::uint32_t CssCode::syndrome(std::span<const std::uint8_t> raw, Basis basis) const {
  if (static_cast<int>(raw.size()) != n_) {
    throw std::invalid_argument("CssCode::syndrome: expected " + std::to_string(n_) + " bits");
  }
  return syndrome_of(checks_for(basis), pack(raw));
}

DecodeResult CssCode::decode(std::span<const std::uint8_t> raw, Basis basis) const {
  const std::uint32_t s = syndrome(raw, basis);
  const Leader& l = (basis == Basis::Z ? table_z_ : table_x_)[s];
  DecodeResult r;
  r.correction.assign(n_, 0);
  for (int j = 0; j < n_; ++j) r.correction[j] = (l.pattern >> j) & 1;
  r.corrected = l.unique && l.weight <= correctable();
  const std::uint32_t word = pack(raw) ^ l.pattern;
  r.logical = dot(word, pack(logical_for(basis)));
  return r;
}

DecodeResult decode_classical(const CssCode& code, std::span<const std::uint8_t> raw,
                              Basis basis) {
  return code.decode(raw, basis);
}

CssCode CssCode::parse(const std::string& text, std::string name) {
  std::istringstream in(text);
  std::string line, section;
  BitMatrix hx, hz, lx, lz;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string compact;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    }
    if (compact.empty()) continue;
    if (compact.front() == '[') {
      if (compact.back() != ']') throw std::invalid_argument("CssCode::parse: bad section header");
      section = compact.substr(1, compact.size() - 2);
      if (section != "hx" && section != "hz" && section != "logical_x" && section != "logical_z") {
        throw std::invalid_argument("CssCode::parse: unknown section '" + section + "'");
      }
      continue;
    }
    Bits row;
    for (char ch : compact) {
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument("CssCode::parse: unexpected character '" +
                                    std::string(1, ch) + "'");
      }
      row.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    if (section == "hx") {
      hx.push_back(row);
    } else if (section == "hz") {
      hz.push_back(row);
    } else if (section == "logical_x") {
      lx.push_back(row);
    } else if (section == "logical_z") {
      lz.push_back(row);
    } else {
      throw std::invalid_argument("CssCode::parse: row before any section");
    }
  }
  if (lx.size() != 1 || lz.size() != 1) {
    throw std::invalid_argument("CssCode::parse: exactly one logical_x and one logical_z row");
  }
  return from_matrices(hx, hz, lx[0], lz[0], std::move(name));
}

CssCode CssCode::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("CssCode::load: cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

}  // namespace bqc::css
