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

#include "sqc/symmetric_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include <lapacke.h>

namespace sqc {
namespace {

void check_info(lapack_int info, const char* routine) {
  if (info == 0) return;
  std::ostringstream os;
  if (info < 0) {
    os << routine << ": illegal argument " << -info;
    throw ValidationError(os.str());
  }
  os << routine << ": failed to converge (info = " << info << ")";
  throw NumericalError(os.str());
}

void check_tridiagonal(const RVector& diagonal, const RVector& off_diagonal) {
  if (diagonal.size() < 1) throw ValidationError("tridiagonal: empty diagonal");
  if (off_diagonal.size() != diagonal.size() - 1) {
    throw ValidationError("tridiagonal: off-diagonal must have n-1 entries");
  }
}

SymmetricEigenpairs run_stevr(const RVector& diagonal, const RVector& off_diagonal, char range,
                              double vl, double vu, lapack_int il, lapack_int iu,
                              bool want_vectors) {
  check_tridiagonal(diagonal, off_diagonal);
  const auto n = static_cast<lapack_int>(diagonal.size());
  RVector d = diagonal;
  // dstevr reads n entries of e.
  RVector e(n);
  e.head(n - 1) = off_diagonal;
  e(n - 1) = 0.0;

  lapack_int capacity = n;
  if (range == 'I') capacity = iu - il + 1;
  if (range == 'V') {
    capacity = static_cast<lapack_int>(tridiagonal_count_below(diagonal, off_diagonal, vu)) + 2;
    capacity = std::min(capacity, n);
  }
  RVector w(n);
  RMatrix z;
  if (want_vectors) z.resize(n, std::max<lapack_int>(capacity, 1));
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(std::max<lapack_int>(capacity, 1)));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', range, n, d.data(), e.data(), vl, vu, il, iu,
      0.0, &found, w.data(), want_vectors ? z.data() : nullptr, n, isuppz.data());
  check_info(info, "dstevr");

  SymmetricEigenpairs out;
  out.values = w.head(found);
  if (want_vectors) out.vectors = z.leftCols(found);
  return out;
}

}  // namespace

SymmetricEigenpairs lowest_symmetric(RMatrix matrix, Index count, bool want_vectors) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 1) {
    throw ValidationError("lowest_symmetric: matrix must be square and non-empty");
  }
  const auto n = static_cast<lapack_int>(matrix.rows());
  if (count < 1 || count > n) throw ValidationError("lowest_symmetric: count out of range");
  const auto m = static_cast<lapack_int>(count);
  // Vectors are always computed so the result can be checked against the
  // input; some optimized LAPACK builds return wrong pairs without an error.
  const RMatrix original = matrix;
  RVector w(n);
  RMatrix z(n, m);
  std::vector<lapack_int> isuppz(2 * static_cast<std::size_t>(m));
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, matrix.data(), n, 0.0,
                                         0.0, 1, m, 0.0, &found, w.data(), z.data(), n,
                                         isuppz.data());
  check_info(info, "dsyevr");
  if (found != m) throw NumericalError("dsyevr: returned fewer eigenpairs than requested");

  const RMatrix image = original.selfadjointView<Eigen::Lower>() * z;
  const double scale = std::max(1.0, original.triangularView<Eigen::Lower>().toDenseMatrix().norm());
  const double residual = (image - z * w.head(m).asDiagonal()).colwise().norm().maxCoeff();
  const double gram = (z.transpose() * z - RMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10 * scale) || !(gram <= 1e-10)) {
    std::ostringstream os;
    os << "dsyevr: eigenpair check failed (residual " << residual << ", orthogonality " << gram
       << ", n = " << n << "). The LAPACK/BLAS build in use is unreliable on this machine; "
       << "with OpenBLAS, try OPENBLAS_CORETYPE=Haswell";
    throw NumericalError(os.str());
  }
  SymmetricEigenpairs out;
  out.values = w.head(m);
  if (want_vectors) out.vectors = std::move(z);
  return out;
}

SymmetricEigenpairs tridiagonal_lowest(const RVector& diagonal, const RVector& off_diagonal,
                                       Index count, bool want_vectors) {
  if (count < 1 || count > diagonal.size()) {
    throw ValidationError("tridiagonal_lowest: count out of range");
  }
  auto out = run_stevr(diagonal, off_diagonal, 'I', 0.0, 0.0, 1, static_cast<lapack_int>(count),
                       want_vectors);
  if (out.values.size() != count) {
    throw NumericalError("dstevr: returned fewer eigenpairs than requested");
  }
  return out;
}

SymmetricEigenpairs tridiagonal_index_range(const RVector& diagonal, const RVector& off_diagonal,
                                            Index first, Index last, bool want_vectors) {
  if (first < 0 || last <= first || last > diagonal.size()) {
    throw ValidationError("tridiagonal_index_range: bad index range");
  }
  auto out = run_stevr(diagonal, off_diagonal, 'I', 0.0, 0.0, static_cast<lapack_int>(first + 1),
                       static_cast<lapack_int>(last), want_vectors);
  if (out.values.size() != last - first) {
    throw NumericalError("dstevr: returned fewer eigenpairs than requested");
  }
  return out;
}

SymmetricEigenpairs tridiagonal_below(const RVector& diagonal, const RVector& off_diagonal,
                                      double upper, bool want_vectors) {
  check_tridiagonal(diagonal, off_diagonal);
  const double off_max = off_diagonal.size() > 0 ? off_diagonal.cwiseAbs().maxCoeff() : 0.0;
  const double lower_bound = diagonal.minCoeff() - 2.0 * off_max - 1.0;
  if (!(upper > lower_bound)) return {RVector(0), RMatrix(diagonal.size(), 0)};
  if (tridiagonal_count_below(diagonal, off_diagonal, upper) == 0) {
    return {RVector(0), RMatrix(diagonal.size(), 0)};
  }
  return run_stevr(diagonal, off_diagonal, 'V', lower_bound, upper, 0, 0, want_vectors);
}

Index tridiagonal_count_below(const RVector& diagonal, const RVector& off_diagonal, double x) {
  check_tridiagonal(diagonal, off_diagonal);
  // Negative pivots of the LDL^T factorization of T - x I.
  const double tiny = std::numeric_limits<double>::min();
  Index count = 0;
  double pivot = diagonal(0) - x;
  if (pivot < 0.0) ++count;
  for (Index i = 1; i < diagonal.size(); ++i) {
    if (std::abs(pivot) < tiny) pivot = -tiny;
    const double e = off_diagonal(i - 1);
    pivot = diagonal(i) - x - e * e / pivot;
    if (pivot < 0.0) ++count;
  }
  return count;
}

}  // namespace sqc
