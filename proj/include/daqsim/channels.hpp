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

#include "daqsim/states.hpp"
#include "daqsim/tensor.hpp"

namespace daqsim {

/// Operator-sum representation of a single-qubit channel.
struct KrausChannel {
  std::vector<ComplexMatrix> operators;  // 2x2 each
  std::string label;
};

/// Thermal relaxation parameters. p_ground = 0.35 is used exactly as given;
/// note this puts more population in the excited state than the ground state.
struct DecoherenceConfig {
  double t1 = 50e-6;      // relaxation time, seconds
  double p_ground = 0.35; // thermal population of the ground state

  void validate() const {
    if (!(t1 > 0.0)) throw std::invalid_argument("DecoherenceConfig: t1 must be > 0");
    if (p_ground < 0.0 || p_ground > 1.0)
      throw std::invalid_argument("DecoherenceConfig: p_ground must be in [0,1]");
  }
};

/// E0 = sqrt(1-p) I, E1 = sqrt(p) X.
inline KrausChannel bit_flip(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("bit_flip: probability outside [0,1]");
  KrausChannel ch;
  ch.label = "bit-flip";
  ch.operators.push_back(pauli::id2() * cplx(std::sqrt(1.0 - p), 0.0));
  ch.operators.push_back(pauli::x() * cplx(std::sqrt(p), 0.0));
  return ch;
}

/// Generalized amplitude damping with stationary state diag(p_ground, 1-p_ground).
inline KrausChannel gad(double p_ground, double gamma) {
  if (p_ground < 0.0 || p_ground > 1.0 || gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("gad: arguments outside [0,1]");
  const double sp = std::sqrt(p_ground), sq = std::sqrt(1.0 - p_ground);
  const double sg = std::sqrt(gamma), s1g = std::sqrt(1.0 - gamma);
  KrausChannel ch;
  ch.label = "generalized-amplitude-damping";
  ComplexMatrix e0(2, 2);
  e0(0, 0) = sp;
  e0(1, 1) = sp * s1g;
  ComplexMatrix e1(2, 2);
  e1(0, 1) = sp * sg;
  ComplexMatrix e2(2, 2);
  e2(0, 0) = sq * s1g;
  e2(1, 1) = sq;
  ComplexMatrix e3(2, 2);
  e3(1, 0) = sq * sg;
  ch.operators = {e0, e1, e2, e3};
  return ch;
}

/// gamma = 1 - exp(-dt/T1)
inline double gamma_from_time(double dt, const DecoherenceConfig& cfg) {
  if (dt < 0.0) throw std::invalid_argument("gamma_from_time: negative duration");
  cfg.validate();
  return 1.0 - std::exp(-dt / cfg.t1);
}

/// rho -> sum_k (I (x) E_k (x) I) rho (...)^dag on one qubit, lifted by
/// identity padding at application time.
inline DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                                   std::size_t qubit) {
  if (qubit >= rho.n_qubits)
    throw std::invalid_argument("apply_channel: qubit index out of range");
  const std::size_t d = rho.dim();
  const std::size_t bit = std::size_t(1) << (rho.n_qubits - 1 - qubit);
  DensityMatrix out(rho.n_qubits);
  ComplexMatrix tmp(d, d);
  for (const auto& e : ch.operators) {
    // tmp = (E on qubit) * rho
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t i0 = i & ~bit, i1 = i | bit;
      const cplx a = (i & bit) ? e(1, 0) : e(0, 0);
      const cplx b = (i & bit) ? e(1, 1) : e(0, 1);
      for (std::size_t j = 0; j < d; ++j)
        tmp(i, j) = a * rho.matrix(i0, j) + b * rho.matrix(i1, j);
    }
    // out += tmp * (E on qubit)^dag
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t j0 = j & ~bit, j1 = j | bit;
      const cplx a = std::conj((j & bit) ? e(1, 0) : e(0, 0));
      const cplx b = std::conj((j & bit) ? e(1, 1) : e(0, 1));
      for (std::size_t i = 0; i < d; ++i)
        out.matrix(i, j) += tmp(i, j0) * a + tmp(i, j1) * b;
    }
  }
  return out;
}

struct CptpReport {
  bool pass = false;
  double max_deviation = 0.0;
};

/// Checks the completeness relation sum_k E_k^dag E_k = I.
inline CptpReport validate_cptp(const KrausChannel& ch, double tol = 1e-9) {
  ComplexMatrix s(2, 2);
  for (const auto& e : ch.operators) s = s + e.adjoint() * e;
  s = s - ComplexMatrix::identity(2);
  CptpReport rep;
  rep.max_deviation = s.max_abs();
  rep.pass = rep.max_deviation < tol;
  return rep;
}

}  // namespace daqsim
