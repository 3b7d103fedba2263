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

#include "sqc/types.hpp"

namespace sqc {

/// Selected eigenpairs of a real symmetric problem, eigenvalues ascending.
/// `vectors` is empty when eigenvectors were not requested.
struct SymmetricEigenpairs {
  RVector values;
  RMatrix vectors;
};

/// Lowest `count` eigenpairs of a dense real symmetric matrix (lower
/// triangle referenced). The matrix is consumed as LAPACK workspace.
SymmetricEigenpairs lowest_symmetric(RMatrix matrix, Index count, bool want_vectors);

/// Lowest `count` eigenpairs of the symmetric tridiagonal matrix with the
/// given diagonal and off-diagonal.
SymmetricEigenpairs tridiagonal_lowest(const RVector& diagonal, const RVector& off_diagonal,
                                       Index count, bool want_vectors);

/// Eigenpairs with zero-based ascending indices [first, last).
SymmetricEigenpairs tridiagonal_index_range(const RVector& diagonal, const RVector& off_diagonal,
                                            Index first, Index last, bool want_vectors);

/// All eigenpairs of a symmetric tridiagonal matrix with eigenvalue < upper.
SymmetricEigenpairs tridiagonal_below(const RVector& diagonal, const RVector& off_diagonal,
                                      double upper, bool want_vectors);

/// Sturm count: number of eigenvalues strictly below x.
Index tridiagonal_count_below(const RVector& diagonal, const RVector& off_diagonal, double x);

}  // namespace sqc
