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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace daqsim {

using cplx = std::complex<double>;

/// Numerical tolerances shared across the library.
struct Tolerances {
  double hermiticity = 1e-10;
  double unitarity = 1e-9;
  double reconstruction = 1e-9;
  double psd_clamp = 1e-10;   // eigenvalues above -psd_clamp are clamped to 0
  double psd_reject = 1e-6;   // eigenvalues below -psd_reject are an error
};

inline const Tolerances& tolerances() {
  static const Tolerances tol{};
  return tol;
}

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  ComplexMatrix operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_)
      throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const cplx a = (*this)(i, k);
        if (a == cplx(0.0, 0.0)) continue;
        const cplx* rrow = rhs.data_.data() + k * rhs.cols_;
        cplx* orow = out.data_.data() + i * rhs.cols_;
        for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += a * rrow[j];
      }
    }
    return out;
  }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const {
    check_same_shape(rhs);
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
  }

  ComplexMatrix operator-(const ComplexMatrix& rhs) const {
    check_same_shape(rhs);
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
  }

  ComplexMatrix operator*(cplx s) const {
    ComplexMatrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j)
        if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
          return false;
    return true;
  }

  bool is_diagonal(double tol = 0.0) const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && std::abs((*this)(i, j)) > tol) return false;
    return true;
  }

 private:
  void check_same_shape(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
      throw std::invalid_argument("matrix op: shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

/// Kronecker product; dimensions multiply.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx av = a(ia, ja);
      if (av == cplx(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
    }
  return out;
}

namespace pauli {
inline ComplexMatrix id2() { return ComplexMatrix::identity(2); }
inline ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}
inline ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}
inline ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
/// (Z + X)/sqrt(2): the Hadamard viewed as a Hermitian rotation axis.
inline ComplexMatrix hadamard_axis() {
  return (z() + x()) * cplx(1.0 / std::sqrt(2.0), 0.0);
}
}  // namespace pauli

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns
};

/// Hermitian eigendecomposition by cyclic Jacobi with complex rotations.
/// Rejects non-Hermitian input. Good to ~1e-13 residual for n <= 64.
inline EigenDecomposition herm_eig(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("herm_eig: matrix not square");
  double scale = m.max_abs();
  if (scale == 0.0) scale = 1.0;
  if (!m.is_hermitian(tolerances().hermiticity * std::max(1.0, scale)))
    throw std::invalid_argument("herm_eig: matrix not Hermitian within tolerance");

  ComplexMatrix a = m;
  // symmetrize to kill roundoff-level asymmetry
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
    a(i, i) = cplx(a(i, i).real(), 0.0);
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double tol = 1e-15 * scale;
  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= tol) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= tol) continue;
        const cplx phase = apq / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t_sign = tau >= 0.0 ? 1.0 : -1.0;
        const double t = t_sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx spq = s * phase;         // R(p,q) = s e^{i phi}
        const cplx sqp = -s * std::conj(phase);
        // A <- R^dag A R ; update rows/cols p and q
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp + sqp * akq;
          a(k, q) = spq * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk + std::conj(sqp) * aqk;
          a(q, k) = std::conj(spq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cplx(a(p, p).real(), 0.0);
        a(q, q) = cplx(a(q, q).real(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + sqp * vkq;
          v(k, q) = spq * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<double> evals(n);
  for (std::size_t i = 0; i < n; ++i) evals[i] = a(i, i).real();
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return evals[i] < evals[j]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = evals[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

/// Rebuild V f(diag) V^dag from a decomposition and a spectral map.
template <typename F>
inline ComplexMatrix spectral_map(const EigenDecomposition& eig, F&& f) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx fk = f(eig.eigenvalues[k]);
    if (fk == cplx(0.0, 0.0)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.eigenvectors(i, k) * fk;
      if (vik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += vik * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-psd_clamp, 0) are clamped to zero; below -psd_reject is an error.
inline ComplexMatrix mat_sqrt_psd(const ComplexMatrix& m) {
  auto eig = herm_eig(m);
  const double lo = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.front();
  if (lo < -tolerances().psd_reject)
    throw std::invalid_argument("mat_sqrt_psd: input not PSD (min eigenvalue " +
                                std::to_string(lo) + ")");
  return spectral_map(eig, [](double l) {
    return cplx(std::sqrt(std::max(l, 0.0)), 0.0);
  });
}

/// V diag(exp(scale*lambda)) V^dag for Hermitian h. A diagonal input takes the
/// elementwise fast path (all ZZ Hamiltonians are diagonal).
inline ComplexMatrix expm_herm(const ComplexMatrix& h, cplx scale) {
  if (h.rows() != h.cols()) throw std::invalid_argument("expm_herm: not square");
  if (h.is_diagonal()) {
    ComplexMatrix out(h.rows(), h.cols());
    for (std::size_t i = 0; i < h.rows(); ++i)
      out(i, i) = std::exp(scale * h(i, i).real());
    return out;
  }
  auto eig = herm_eig(h);
  return spectral_map(eig, [scale](double l) { return std::exp(scale * l); });
}

/// Frobenius distance min over a global phase chosen from tr(B^dag A).
inline double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  cplx t = (b.adjoint() * a).trace();
  cplx phase = std::abs(t) > 1e-14 ? t / std::abs(t) : cplx(1.0, 0.0);
  return (a - b * phase).frobenius_norm();
}

}  // namespace daqsim
