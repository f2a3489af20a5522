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

#include "bqc/qsim/mixed.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bqc::qsim {

namespace {

void check_mixed_size(int n) {
  if (n < 0 || n > kMaxMixedQubits) {
    throw std::invalid_argument("MixedState: qubit count " + std::to_string(n) +
                                " outside [0, " +
                                std::to_string(kMaxMixedQubits) + "]");
  }
}

std::vector<int> sorted_keep(std::span<const int> keep, int n) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> k(keep.begin(), keep.end());
  std::sort(k.begin(), k.end());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0 || k[i] >= n) throw std::out_of_range("partial_trace: qubit index");
    if (i > 0 && k[i] == k[i - 1]) {
      throw std::invalid_argument("partial_trace: repeated qubit");
    }
  }
  return k;
}

// Splits a full index into (kept index, traced index).
struct Splitter {
  int n;
  std::vector<int> keep;
  std::vector<int> traced;

  Splitter(int n_, std::vector<int> k) : n(n_), keep(std::move(k)) {
    for (int q = 0; q < n; ++q) {
      if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
    }
  }

  std::size_t compose(std::size_t ki, std::size_t ti) const {
    std::size_t idx = 0;
    const int nk = static_cast<int>(keep.size());
    const int nt = static_cast<int>(traced.size());
    for (int j = 0; j < nk; ++j) {
      if (ki & (std::size_t{1} << (nk - 1 - j))) idx |= std::size_t{1} << (n - 1 - keep[j]);
    }
    for (int j = 0; j < nt; ++j) {
      if (ti & (std::size_t{1} << (nt - 1 - j))) idx |= std::size_t{1} << (n - 1 - traced[j]);
    }
    return idx;
  }
};

}  // namespace

MixedState::MixedState(int n_qubits) : n_(n_qubits) {
  check_mixed_size(n_qubits);
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  rho_ = Eigen::MatrixXcd::Zero(d, d);
  rho_(0, 0) = 1.0;
}

MixedState MixedState::from_matrix(Eigen::MatrixXcd rho) {
  const Eigen::Index d = rho.rows();
  if (d != rho.cols() || d == 0 || (d & (d - 1)) != 0) {
    throw std::invalid_argument("MixedState: matrix must be square with power-of-two size");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  check_mixed_size(n);
  MixedState s(0);
  s.n_ = n;
  s.rho_ = std::move(rho);
  s.validate();
  return s;
}

MixedState MixedState::from_pure(const PureState& psi) {
  check_mixed_size(psi.n_qubits());
  Eigen::Map<const Eigen::VectorXcd> v(psi.raw().data(),
                                       static_cast<Eigen::Index>(psi.dim()));
  return from_matrix(v * v.adjoint());
}

MixedState MixedState::maximally_mixed(int n_qubits) {
  check_mixed_size(n_qubits);
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return from_matrix(Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d));
}

void MixedState::validate(double tol) const {
  const Complex tr = rho_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    throw std::invalid_argument("MixedState: trace " + std::to_string(tr.real()) +
                                " differs from 1");
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("MixedState: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw std::invalid_argument("MixedState: negative eigenvalue");
  }
}

MixedState partial_trace(const MixedState& state, std::span<const int> keep) {
  const int n = state.n_qubits();
  Splitter sp(n, sorted_keep(keep, n));
  const std::size_t dk = std::size_t{1} << sp.keep.size();
  const std::size_t dt = std::size_t{1} << sp.traced.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dk, dk);
  const auto& rho = state.matrix();
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t j = 0; j < dk; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t t = 0; t < dt; ++t) s += rho(sp.compose(i, t), sp.compose(j, t));
      out(i, j) = s;
    }
  }
  return MixedState::from_matrix(std::move(out));
}

Eigen::MatrixXcd reduced_matrix(const PureState& psi, std::span<const int> keep) {
  const int n = psi.n_qubits();
  Splitter sp(n, sorted_keep(keep, n));
  const std::size_t dk = std::size_t{1} << sp.keep.size();
  const std::size_t dt = std::size_t{1} << sp.traced.size();
  if (sp.keep.size() > static_cast<std::size_t>(kMaxMixedQubits)) {
    throw std::invalid_argument("reduced_state: too many kept qubits");
  }
  Eigen::MatrixXcd m(dk, dt);
  for (std::size_t i = 0; i < dk; ++i) {
    for (std::size_t t = 0; t < dt; ++t) m(i, t) = psi.raw()[sp.compose(i, t)];
  }
  return m * m.adjoint();
}

MixedState reduced_state(const PureState& psi, std::span<const int> keep) {
  return MixedState::from_matrix(reduced_matrix(psi, keep));
}

double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::MatrixXcd d = a - b;
  d = (d + d.adjoint()).eval() / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(d, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const MixedState& a, const MixedState& b) {
  return trace_distance(a.matrix(), b.matrix());
}

double z0_probability(const MixedState& state, int q) {
  const int n = state.n_qubits();
  if (q < 0 || q >= n) throw std::out_of_range("z0_probability: qubit index");
  const std::size_t m = std::size_t{1} << (n - 1 - q);
  double p = 0.0;
  for (Eigen::Index i = 0; i < state.matrix().rows(); ++i) {
    if (!(static_cast<std::size_t>(i) & m)) p += state.matrix()(i, i).real();
  }
  return p;
}

}  // namespace bqc::qsim
