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
#include <vector>

#include "daqsim/tensor.hpp"

namespace daqsim {

// Qubit 0 is the leftmost tensor factor throughout: basis index bit
// (n_qubits-1-q) belongs to qubit q, so Z on qubit 0 is Z (x) I (x) ... (x) I.

/// Pure state of n qubits.
struct StateVector {
  std::size_t n_qubits = 0;
  std::vector<cplx> amplitudes;

  explicit StateVector(std::size_t n)
      : n_qubits(n), amplitudes(std::size_t(1) << n, cplx(0.0, 0.0)) {}

  std::size_t dim() const { return amplitudes.size(); }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }
};

/// Mixed state of n qubits.
struct DensityMatrix {
  std::size_t n_qubits = 0;
  ComplexMatrix matrix;

  explicit DensityMatrix(std::size_t n)
      : n_qubits(n),
        matrix(std::size_t(1) << n, std::size_t(1) << n) {}

  static DensityMatrix from_state(const StateVector& psi) {
    DensityMatrix rho(psi.n_qubits);
    const std::size_t d = psi.dim();
    for (std::size_t i = 0; i < d; ++i) {
      if (psi.amplitudes[i] == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < d; ++j)
        rho.matrix(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    }
    return rho;
  }

  std::size_t dim() const { return matrix.rows(); }
};

/// (|0...0> + |1...1>)/sqrt(2)
inline StateVector make_ghz(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_ghz: need at least 2 qubits");
  StateVector psi(n);
  const double r = 1.0 / std::sqrt(2.0);
  psi.amplitudes.front() = r;
  psi.amplitudes.back() = r;
  return psi;
}

/// Equal superposition of all single-excitation basis states.
inline StateVector make_w(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_w: need at least 2 qubits");
  StateVector psi(n);
  const double r = 1.0 / std::sqrt(double(n));
  for (std::size_t q = 0; q < n; ++q)
    psi.amplitudes[std::size_t(1) << (n - 1 - q)] = r;
  return psi;
}

/// sin(beta)|W_N> + cos(beta)|GHZ_N>; W and GHZ are orthogonal so the result
/// is normalized for any real beta.
inline StateVector make_initial(double beta, std::size_t n) {
  StateVector w = make_w(n);
  StateVector g = make_ghz(n);
  StateVector psi(n);
  const double sw = std::sin(beta), cg = std::cos(beta);
  for (std::size_t i = 0; i < psi.dim(); ++i)
    psi.amplitudes[i] = sw * w.amplitudes[i] + cg * g.amplitudes[i];
  return psi;
}

/// Uhlmann fidelity F = [tr sqrt(sqrt(rho) sigma sqrt(rho))]^2. The trace of
/// the PSD square root is taken as the sum of clamped eigenvalue roots.
inline double fidelity(const DensityMatrix& ideal, const DensityMatrix& noisy) {
  if (ideal.dim() != noisy.dim())
    throw std::invalid_argument("fidelity: dimension mismatch");
  ComplexMatrix s = mat_sqrt_psd(ideal.matrix);
  ComplexMatrix inner = s * noisy.matrix * s;
  auto eig = herm_eig(inner);
  double tr = 0.0;
  for (double l : eig.eigenvalues) tr += std::sqrt(std::max(l, 0.0));
  return tr * tr;
}

/// tr(Z_0 rho) with Z_0 = Z (x) I (x) ... (x) I.
inline double expect_z0(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const std::size_t half = d / 2;
  double v = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    v += (i < half ? 1.0 : -1.0) * rho.matrix(i, i).real();
  return v;
}

}  // namespace daqsim
