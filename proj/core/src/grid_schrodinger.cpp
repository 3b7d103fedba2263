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

#include "sqc/grid_schrodinger.hpp"

#include <cmath>
#include <sstream>

#include "sqc/symmetric_solvers.hpp"

namespace sqc {

GridLevels solve_levels_1d(const Potential1D& potential, double lo, double hi, double ec,
                           Index points, Index levels, Boundary boundary, bool want_states) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw ValidationError("solve_levels_1d: need finite lo < hi");
  }
  if (!(ec > 0.0)) throw ValidationError("solve_levels_1d: Ec must be > 0");
  if (points < 128) throw ValidationError("solve_levels_1d: need at least 128 grid points");
  if (levels < 1 || levels > points) throw ValidationError("solve_levels_1d: bad level count");

  GridLevels out;
  out.phi.resize(points);
  if (boundary == Boundary::kHardWall) {
    out.step = (hi - lo) / static_cast<double>(points + 1);
    for (Index j = 0; j < points; ++j) out.phi(j) = lo + static_cast<double>(j + 1) * out.step;
  } else {
    if (points > kMaxDimension) {
      throw ValidationError("solve_levels_1d: periodic grid exceeds the dense dimension cap");
    }
    out.step = (hi - lo) / static_cast<double>(points);
    for (Index j = 0; j < points; ++j) out.phi(j) = lo + static_cast<double>(j) * out.step;
  }

  const double hop = ec / (out.step * out.step);
  RVector diagonal(points);
  for (Index j = 0; j < points; ++j) {
    const double u = potential(out.phi(j));
    if (!std::isfinite(u)) throw ValidationError("solve_levels_1d: potential is not finite");
    diagonal(j) = u + 2.0 * hop;
  }

  SymmetricEigenpairs eig;
  if (boundary == Boundary::kHardWall) {
    eig = tridiagonal_lowest(diagonal, RVector::Constant(points - 1, -hop), levels, want_states);
  } else {
    RMatrix h = RMatrix::Zero(points, points);
    h.diagonal() = diagonal;
    for (Index j = 0; j < points; ++j) {
      const Index next = (j + 1) % points;
      h(j, next) -= hop;
      h(next, j) -= hop;
    }
    eig = lowest_symmetric(std::move(h), levels, want_states);
  }
  out.energies = std::move(eig.values);
  out.states = std::move(eig.vectors);
  return out;
}

GridLevels solve_levels_1d_converged(const Potential1D& potential, double lo, double hi,
                                     double ec, Index points, Index levels, double tolerance,
                                     Index max_points, Boundary boundary) {
  auto coarse = solve_levels_1d(potential, lo, hi, ec, points, levels, boundary, false);
  Index n = points;
  double change = 0.0;
  while (true) {
    // Hard walls keep the end points when refining: n interior -> 2n + 1.
    const Index next = boundary == Boundary::kHardWall ? 2 * n + 1 : 2 * n;
    if (next > max_points) break;
    auto fine = solve_levels_1d(potential, lo, hi, ec, next, levels, boundary, false);
    change = (fine.energies - coarse.energies).cwiseAbs().maxCoeff();
    n = next;
    if (change <= tolerance) {
      return solve_levels_1d(potential, lo, hi, ec, n, levels, boundary, true);
    }
    coarse = std::move(fine);
  }
  std::ostringstream os;
  os << "solve_levels_1d: energies still moved by " << change << " GHz at " << n
     << " grid points (tolerance " << tolerance << ")";
  throw NumericalError(os.str());
}

}  // namespace sqc
