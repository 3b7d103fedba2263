// Copyright 2026 The sqcircuit Authors
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

#include <span>

#include "sqc/types.hpp"

namespace sqc {

/// Hermitian matrix in GHz (h = 1). Construction validates Hermiticity to
/// 1e-12 relative to the matrix norm and stores the exactly symmetrized form.
class HermitianOperator {
 public:
  explicit HermitianOperator(CMatrix entries);

  static HermitianOperator zero(Index dimension);
  static HermitianOperator identity(Index dimension);
  static HermitianOperator from_real(const RMatrix& entries);
  static HermitianOperator diagonal(const RVector& entries);

  [[nodiscard]] const CMatrix& matrix() const { return entries_; }
  [[nodiscard]] Index dimension() const { return entries_.rows(); }
  /// Frobenius norm; an upper bound on the spectral norm.
  [[nodiscard]] double norm() const { return entries_.norm(); }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator*(double scale) const;
  friend HermitianOperator operator*(double scale, const HermitianOperator& op) {
    return op * scale;
  }

 private:
  CMatrix entries_;
};

/// Normalized pure state. The norm must equal one within 1e-12.
class QuantumState {
 public:
  explicit QuantumState(CVector amplitudes);

  /// Normalizes a nonzero vector instead of rejecting it.
  static QuantumState normalized(const CVector& amplitudes);
  static QuantumState basis(Index dimension, Index k);

  [[nodiscard]] const CVector& amplitudes() const { return amplitudes_; }
  [[nodiscard]] Index dimension() const { return amplitudes_.size(); }
  [[nodiscard]] double probability(Index k) const { return std::norm(amplitudes_(k)); }
  [[nodiscard]] Complex overlap(const QuantumState& other) const {
    return amplitudes_.dot(other.amplitudes_);
  }

 private:
  CVector amplitudes_;
};

struct DensityTolerance {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double positivity = 1e-10;

  /// Tolerances guaranteed by the Lindblad integrators.
  static constexpr DensityTolerance evolved() { return {1e-10, 1e-8, 1e-7}; }
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix entries, DensityTolerance tolerance = {});

  static DensityMatrix pure(const QuantumState& state);

  [[nodiscard]] const CMatrix& matrix() const { return entries_; }
  [[nodiscard]] Index dimension() const { return entries_.rows(); }
  [[nodiscard]] double population(Index k) const { return entries_(k, k).real(); }
  [[nodiscard]] Complex trace() const { return entries_.trace(); }

 private:
  CMatrix entries_;
};

/// Eigenvalues ascending (GHz) with column-orthonormal eigenvectors.
struct EigenDecomposition {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

/// Dense Hermitian eigendecomposition. Throws NumericalError when the
/// residual ||H v - lambda v|| exceeds 1e-10 ||H|| or orthonormality fails.
EigenDecomposition hermitian_eigen(const HermitianOperator& h);

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Embeds a single-subsystem operator into a tensor-product space.
CMatrix embed(const CMatrix& op, std::span<const Index> dimensions, std::size_t site);

/// Expectation value <psi|A|psi>.
Complex expectation(const CMatrix& op, const QuantumState& state);

namespace pauli {
// Basis {|0>, |1>}: sigma_z = |0><0| - |1><1|, sigma_x = |0><1| + |1><0|.
CMatrix identity();
CMatrix x();
CMatrix y();
CMatrix z();
/// |0><1|; lowers |1> to |0>.
CMatrix lowering();
/// |1><0|.
CMatrix raising();
}  // namespace pauli

}  // namespace sqc
