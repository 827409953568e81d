// Copyright 2026 The daqsim developers
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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "daqsim/tensor.hpp"

namespace daqsim {

// Compilation of an inhomogeneous all-to-all two-body ZZ evolution into
// homogeneous analog blocks sandwiched by X rotations. Qubit pair indices are
// 1-based at this API boundary, matching the usual presentation; they are
// converted to 0-based exactly once, when schedules are built.

/// Target of the compilation: exp(i t_F sum_{j<k} g_jk Z_j Z_k).
struct CouplingSpec {
  std::size_t n_qubits = 0;
  std::vector<double> couplings;  // g_beta, rad/s, length N(N-1)/2, pair-ascending
  double base_coupling = 0.0;     // g, rad/s
  double total_time = 0.0;        // t_F, seconds

  void validate() const {
    if (n_qubits < 2) throw std::invalid_argument("CouplingSpec: need >= 2 qubits");
    if (couplings.size() != n_qubits * (n_qubits - 1) / 2)
      throw std::invalid_argument("CouplingSpec: couplings length != N(N-1)/2");
    if (base_coupling == 0.0)
      throw std::invalid_argument("CouplingSpec: base coupling must be nonzero");
    if (!(total_time > 0.0))
      throw std::invalid_argument("CouplingSpec: total time must be > 0");
  }
};

/// +-1 matrix M_{alpha beta} over vectorized qubit pairs.
struct SignMatrix {
  std::size_t n_qubits = 0;
  std::vector<double> entries;  // row-major, dim = N(N-1)/2

  std::size_t dim() const { return n_qubits * (n_qubits - 1) / 2; }
  double operator()(std::size_t a, std::size_t b) const {
    return entries[a * dim() + b];
  }
};

struct AnalogBlock {
  std::size_t n = 0, m = 0;  // 1-based qubit pair, n < m
  double time = 0.0;         // signed seconds
  int sign = +1;             // -1 flags a negative-time block
};

/// Ordered analog blocks; each is sandwiched by X on its two qubits.
struct AnalogSchedule {
  std::size_t n_qubits = 0;
  std::vector<AnalogBlock> blocks;  // ascending alpha
  double condition_estimate = 0.0;  // |M| * |M^-1| (max-norm based)
};

/// alpha = N(n-1) - n(n+1)/2 + m for 1 <= n < m <= N (1-based result).
inline std::size_t vec_index(std::size_t n, std::size_t m, std::size_t N) {
  if (n < 1 || m <= n || m > N)
    throw std::invalid_argument("vec_index: need 1 <= n < m <= N");
  return N * (n - 1) - n * (n + 1) / 2 + m;
}

/// All pairs (n, m), n < m, in ascending vec_index order (1-based).
inline std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t N) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(N * (N - 1) / 2);
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t m = n + 1; m <= N; ++m) out.emplace_back(n, m);
  return out;
}

/// M_{alpha beta} = (-1)^{delta_nj + delta_nk + delta_mj + delta_mk}.
inline SignMatrix build_sign_matrix(std::size_t N) {
  if (N < 2) throw std::invalid_argument("build_sign_matrix: need N >= 2");
  auto ps = pair_list(N);
  SignMatrix M;
  M.n_qubits = N;
  const std::size_t d = ps.size();
  M.entries.assign(d * d, 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    const auto [n, m] = ps[a];
    for (std::size_t b = 0; b < d; ++b) {
      const auto [j, k] = ps[b];
      const int e = int(n == j) + int(n == k) + int(m == j) + int(m == k);
      M.entries[a * d + b] = (e % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return M;
}

namespace detail {

/// LU solve with partial pivoting on a small dense system; returns false if
/// effectively singular. Also estimates the max-norm condition number.
inline bool lu_solve(std::vector<double> a, std::size_t n, std::vector<double>& x,
                     double* condition = nullptr) {
  std::vector<std::size_t> piv(n);
  double norm_a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a[i * n + j]);
    norm_a = std::max(norm_a, row);
  }
  std::vector<double> lu = a;
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(lu[r * n + c]) > std::abs(lu[best * n + c])) best = r;
    if (std::abs(lu[best * n + c]) < 1e-12) return false;
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu[c * n + j], lu[best * n + j]);
      std::swap(piv[c], piv[best]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = lu[r * n + c] / lu[c * n + c];
      lu[r * n + c] = f;
      for (std::size_t j = c + 1; j < n; ++j) lu[r * n + j] -= f * lu[c * n + j];
    }
  }
  auto solve_one = [&](const std::vector<double>& rhs, std::vector<double>& out) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      double v = rhs[piv[i]];
      for (std::size_t j = 0; j < i; ++j) v -= lu[i * n + j] * y[j];
      y[i] = v;
    }
    out.assign(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
      double v = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) v -= lu[ii * n + j] * out[j];
      out[ii] = v / lu[ii * n + ii];
    }
  };
  std::vector<double> rhs = x;
  solve_one(rhs, x);
  if (condition) {
    double norm_inv = 0.0;
    std::vector<double> e(n, 0.0), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      e.assign(n, 0.0);
      e[j] = 1.0;
      solve_one(e, col);
      for (std::size_t i = 0; i < n; ++i) norm_inv = std::max(norm_inv, std::abs(col[i]) * n);
    }
    *condition = norm_a * norm_inv / double(n);
  }
  return true;
}

}  // namespace detail

/// t_alpha = (M^-1)_{alpha beta} g_beta t_F / g. N = 4 is rejected: the sign
/// matrix is singular there.
inline AnalogSchedule solve_block_times(const CouplingSpec& spec) {
  spec.validate();
  const std::size_t N = spec.n_qubits;
  if (N == 4)
    throw std::invalid_argument(
        "solve_block_times: N = 4 is unsupported, the sign matrix is singular");
  SignMatrix M = build_sign_matrix(N);
  const std::size_t d = M.dim();
  std::vector<double> rhs(d);
  for (std::size_t b = 0; b < d; ++b)
    rhs[b] = spec.couplings[b] * spec.total_time / spec.base_coupling;
  std::vector<double> t = rhs;
  double condition = 0.0;
  if (!detail::lu_solve(M.entries, d, t, &condition))
    throw std::runtime_error("solve_block_times: sign matrix numerically singular");
  // residual check
  double resid = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    double v = 0.0;
    for (std::size_t b = 0; b < d; ++b) v += M(a, b) * t[b];
    resid = std::max(resid, std::abs(v - rhs[a]));
  }
  const double scale = std::max(1.0, std::abs(spec.total_time));
  if (resid > 1e-8 * scale)
    throw std::runtime_error("solve_block_times: solve residual too large");

  AnalogSchedule sched;
  sched.n_qubits = N;
  sched.condition_estimate = condition;
  auto ps = pair_list(N);
  sched.blocks.reserve(d);
  for (std::size_t a = 0; a < d; ++a) {
    AnalogBlock blk;
    blk.n = ps[a].first;
    blk.m = ps[a].second;
    blk.time = t[a];
    blk.sign = t[a] < 0.0 ? -1 : +1;
    sched.blocks.push_back(blk);
  }
  return sched;
}

/// Product over blocks of X_n X_m exp(i t_alpha H_0) X_n X_m with
/// H_0 = g sum Z_j Z_k. Dense, for verification; the engine applies blocks
/// diagonally.
inline ComplexMatrix reconstruct_unitary(const AnalogSchedule& sched, double g) {
  const std::size_t N = sched.n_qubits;
  const std::size_t dim = std::size_t(1) << N;
  // diagonal of H_0 / g as +-1 sums
  std::vector<double> h0(dim, 0.0);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t k = j + 1; k < N; ++k)
      for (std::size_t i = 0; i < dim; ++i) {
        const double zj = (i >> (N - 1 - j)) & 1 ? -1.0 : 1.0;
        const double zk = (i >> (N - 1 - k)) & 1 ? -1.0 : 1.0;
        h0[i] += zj * zk;
      }
  ComplexMatrix u = ComplexMatrix::identity(dim);
  for (const auto& blk : sched.blocks) {
    const std::size_t bn = std::size_t(1) << (N - blk.n);      // 1-based -> bit
    const std::size_t bm = std::size_t(1) << (N - blk.m);
    const std::size_t mask = bn | bm;
    ComplexMatrix step(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      // X_n X_m exp(i t g h0) X_n X_m acts diagonally in the flipped basis
      const std::size_t f = i ^ mask;
      step(i, i) = std::exp(cplx(0.0, blk.time * g * h0[f]));
    }
    u = step * u;
  }
  return u;
}

/// Dense exp(i t_F H_ZZ) for verification against reconstruct_unitary.
inline ComplexMatrix target_unitary(const CouplingSpec& spec) {
  spec.validate();
  const std::size_t N = spec.n_qubits;
  const std::size_t dim = std::size_t(1) << N;
  auto ps = pair_list(N);
  ComplexMatrix u(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    double phase = 0.0;
    for (std::size_t a = 0; a < ps.size(); ++a) {
      const double zj = (i >> (N - ps[a].first)) & 1 ? -1.0 : 1.0;
      const double zk = (i >> (N - ps[a].second)) & 1 ? -1.0 : 1.0;
      phase += spec.couplings[a] * zj * zk;
    }
    u(i, i) = std::exp(cplx(0.0, spec.total_time * phase));
  }
  return u;
}

}  // namespace daqsim
