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

#include <functional>

#include "sqc/types.hpp"

namespace sqc {

enum class Boundary {
  kHardWall,  // psi = 0 at both ends; tridiagonal stencil
  kPeriodic,  // psi(lo) = psi(hi); dense solve, points <= kMaxDimension
};

/// Eigenpairs of H = Ec n^2 + U(phi), n = -i d/dphi, discretized with the
/// three-point central difference on a uniform phase grid.
struct GridLevels {
  RVector phi;       // grid nodes (interior nodes for hard walls)
  double step = 0.0;
  RVector energies;  // GHz, ascending
  RMatrix states;    // columns normalized so that sum |psi_j|^2 = 1
};

using Potential1D = std::function<double(double)>;

GridLevels solve_levels_1d(const Potential1D& potential, double lo, double hi, double ec,
                           Index points, Index levels, Boundary boundary = Boundary::kHardWall,
                           bool want_states = true);

/// Doubles the grid from `points` until the lowest `levels` energies move by
/// at most `tolerance` GHz between refinements; throws NumericalError when
/// `max_points` is reached first. Returns the finest solution.
GridLevels solve_levels_1d_converged(const Potential1D& potential, double lo, double hi,
                                     double ec, Index points, Index levels,
                                     double tolerance = 1e-6, Index max_points = 1 << 20,
                                     Boundary boundary = Boundary::kHardWall);

}  // namespace sqc
