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

#include "sqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace sqc {
namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << ": matrix is " << m.rows() << "x" << m.cols() << ", expected square";
    throw ValidationError(os.str());
  }
  if (m.rows() < 1) throw ValidationError(std::string(what) + ": empty matrix");
  if (m.rows() > kMaxDimension) {
    std::ostringstream os;
    os << what << ": dimension " << m.rows() << " exceeds cap " << kMaxDimension;
    throw ValidationError(os.str());
  }
}

double hermiticity_defect(const CMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(CMatrix entries) : entries_(std::move(entries)) {
  require_square(entries_, "HermitianOperator");
  if (!entries_.allFinite()) throw ValidationError("HermitianOperator: non-finite entry");
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(entries_);
  if (defect > 1e-12 * scale) {
    std::ostringstream os;
    os << "HermitianOperator: |H - H^dagger| = " << defect << " exceeds tolerance "
       << 1e-12 * scale;
    throw ValidationError(os.str());
  }
  entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
}

HermitianOperator HermitianOperator::zero(Index dimension) {
  return HermitianOperator(CMatrix::Zero(dimension, dimension));
}

HermitianOperator HermitianOperator::identity(Index dimension) {
  return HermitianOperator(CMatrix::Identity(dimension, dimension));
}

HermitianOperator HermitianOperator::from_real(const RMatrix& entries) {
  return HermitianOperator(entries.cast<Complex>());
}

HermitianOperator HermitianOperator::diagonal(const RVector& entries) {
  return HermitianOperator(CMatrix(entries.cast<Complex>().asDiagonal()));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  if (other.dimension() != dimension()) throw ValidationError("operator+: dimension mismatch");
  return HermitianOperator(entries_ + other.entries_);
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  if (other.dimension() != dimension()) throw ValidationError("operator-: dimension mismatch");
  return HermitianOperator(entries_ - other.entries_);
}

HermitianOperator HermitianOperator::operator*(double scale) const {
  return HermitianOperator(entries_ * scale);
}

QuantumState::QuantumState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 1) throw ValidationError("QuantumState: empty amplitude vector");
  if (!amplitudes_.allFinite()) throw ValidationError("QuantumState: non-finite amplitude");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "QuantumState: norm " << norm << " differs from 1 by more than 1e-12";
    throw ValidationError(os.str());
  }
}

QuantumState QuantumState::normalized(const CVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw ValidationError("QuantumState::normalized: zero vector");
  return QuantumState(amplitudes / norm);
}

QuantumState QuantumState::basis(Index dimension, Index k) {
  if (k < 0 || k >= dimension) throw ValidationError("QuantumState::basis: index out of range");
  CVector v = CVector::Zero(dimension);
  v(k) = 1.0;
  return QuantumState(std::move(v));
}

DensityMatrix::DensityMatrix(CMatrix entries, DensityTolerance tolerance)
    : entries_(std::move(entries)) {
  require_square(entries_, "DensityMatrix");
  if (!entries_.allFinite()) throw ValidationError("DensityMatrix: non-finite entry");
  const double defect = hermiticity_defect(entries_);
  if (defect > tolerance.hermiticity) {
    std::ostringstream os;
    os << "DensityMatrix: Hermiticity defect " << defect;
    throw ValidationError(os.str());
  }
  entries_ = (0.5 * (entries_ + entries_.adjoint())).eval();
  const double trace_error = std::abs(entries_.trace() - Complex(1.0, 0.0));
  if (trace_error > tolerance.trace) {
    std::ostringstream os;
    os << "DensityMatrix: trace differs from 1 by " << trace_error;
    throw ValidationError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("DensityMatrix: eigensolver failed");
  const double lowest = solver.eigenvalues()(0);
  if (lowest < -tolerance.positivity) {
    std::ostringstream os;
    os << "DensityMatrix: negative eigenvalue " << lowest;
    throw ValidationError(os.str());
  }
}

DensityMatrix DensityMatrix::pure(const QuantumState& state) {
  const CVector& v = state.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

EigenDecomposition hermitian_eigen(const HermitianOperator& h) {
  const CMatrix& m = h.matrix();
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigen: eigensolver did not converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};

  const double scale = std::max(h.norm(), std::numeric_limits<double>::min());
  const CMatrix residual =
      m * out.eigenvectors - out.eigenvectors * out.eigenvalues.cast<Complex>().asDiagonal();
  const double worst = residual.colwise().norm().maxCoeff();
  if (worst > 1e-10 * scale && worst > 1e-300) {
    std::ostringstream os;
    os << "hermitian_eigen: residual " << worst << " exceeds 1e-10 * ||H|| = " << 1e-10 * scale;
    throw NumericalError(os.str());
  }
  const Index n = m.rows();
  const double gram_error =
      (out.eigenvectors.adjoint() * out.eigenvectors - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (gram_error > 1e-10) {
    std::ostringstream os;
    os << "hermitian_eigen: eigenvectors not orthonormal (Gram error " << gram_error << ")";
    throw NumericalError(os.str());
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dimension() * b.dimension() > kMaxDimension) {
    throw ValidationError("tensor_product: product dimension exceeds cap");
  }
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

CMatrix embed(const CMatrix& op, std::span<const Index> dimensions, std::size_t site) {
  if (site >= dimensions.size()) throw ValidationError("embed: site out of range");
  if (op.rows() != dimensions[site] || op.cols() != dimensions[site]) {
    throw ValidationError("embed: operator does not match subsystem dimension");
  }
  CMatrix out = CMatrix::Identity(1, 1);
  for (std::size_t i = 0; i < dimensions.size(); ++i) {
    out = kron(out, i == site ? op : CMatrix::Identity(dimensions[i], dimensions[i]));
  }
  return out;
}

Complex expectation(const CMatrix& op, const QuantumState& state) {
  const CVector& v = state.amplitudes();
  if (op.rows() != v.size() || op.cols() != v.size()) {
    throw ValidationError("expectation: dimension mismatch");
  }
  return v.dot(op * v);
}

namespace pauli {

CMatrix identity() { return CMatrix::Identity(2, 2); }

CMatrix x() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMatrix y() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

CMatrix z() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

CMatrix lowering() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

CMatrix raising() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(1, 0) = 1.0;
  return m;
}

}  // namespace pauli
}  // namespace sqc
