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

#include "sqc/phase_qubit.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "sqc/parallel.hpp"
#include "sqc/symmetric_solvers.hpp"

namespace sqc {
namespace {

constexpr double kInWellProbability = 0.99;

struct WellGrid {
  WellGeometry geometry;
  double step = 0.0;
  RVector phi;
  RVector diagonal;
  RVector off_diagonal;
};

WellGrid build_grid(const PhaseQubitParams& p, int refine) {
  WellGrid g;
  g.geometry = well_geometry(p);
  const auto& w = g.geometry;
  const double sigma = std::pow(2.0 * p.ec / p.ej, 0.25) / std::pow(1.0 - p.s * p.s, 0.125);
  const double p_max = std::sqrt((w.u_barrier - w.u_min) / p.ec);
  // sigma / 250 keeps the low levels within 1e-5 of the level spacing
  // under step halving; the momentum bound resolves the levels near the top.
  const double target = std::min(sigma / 250.0, kTwoPi / (20.0 * p_max)) / refine;
  const double width = w.right_max - w.left_max;
  const auto n = std::max<Index>(128, static_cast<Index>(std::ceil(width / target)) - 1);
  g.step = width / static_cast<double>(n + 1);
  const double hop = p.ec / (g.step * g.step);
  g.phi.resize(n);
  g.diagonal.resize(n);
  for (Index j = 0; j < n; ++j) {
    g.phi(j) = w.left_max + static_cast<double>(j + 1) * g.step;
    g.diagonal(j) = washboard_potential(g.phi(j), p) - w.u_min + 2.0 * hop;
  }
  g.off_diagonal = RVector::Constant(n - 1, -hop);
  return g;
}

// Keeps the columns whose energy is below the barrier and whose weight on
// [well_left, right_max] reaches the in-well threshold.
RVector bound_subset(const WellGrid& g, const SymmetricEigenpairs& eig) {
  const double barrier = g.geometry.u_barrier - g.geometry.u_min;
  std::vector<double> kept;
  for (Index k = 0; k < eig.values.size(); ++k) {
    if (!(eig.values(k) < barrier)) continue;
    double inside = 0.0;
    double total = 0.0;
    for (Index j = 0; j < g.phi.size(); ++j) {
      const double w = eig.vectors(j, k) * eig.vectors(j, k);
      total += w;
      if (g.phi(j) >= g.geometry.well_left) inside += w;
    }
    if (inside >= kInWellProbability * total) kept.push_back(eig.values(k));
  }
  return Eigen::Map<RVector>(kept.data(), static_cast<Index>(kept.size()));
}

}  // namespace

void PhaseQubitParams::validate() const {
  std::ostringstream os;
  if (!(ej > 0.0) || !std::isfinite(ej)) os << "Ej must be > 0; ";
  if (!(ec > 0.0) || !std::isfinite(ec)) os << "Ec must be > 0; ";
  if (!(s >= 0.0 && s < 1.0)) os << "s must lie in [0, 1); ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("PhaseQubitParams: " + msg);
}

std::optional<std::string> PhaseQubitParams::warning() const {
  if (ej / ec < 1.0e3) {
    std::ostringstream os;
    os << "Ej/Ec = " << ej / ec << " is below 1e3; the well holds very few levels";
    return os.str();
  }
  return std::nullopt;
}

double washboard_potential(double phi, const PhaseQubitParams& p) {
  return -p.ej * (std::cos(phi) + p.s * phi);
}

WellGeometry well_geometry(const PhaseQubitParams& p) {
  p.validate();
  WellGeometry w;
  const double a = std::asin(p.s);
  w.phi_min = a;
  w.u_min = washboard_potential(a, p);
  w.left_max = -kPi - a;
  w.right_max = kPi - a;
  w.u_barrier = washboard_potential(w.right_max, p);
  // U rises monotonically from the minimum to the left maximum.
  auto f = [&](double phi) { return washboard_potential(phi, p) - w.u_barrier; };
  if (f(w.left_max) <= 0.0) {
    w.well_left = w.left_max;
  } else {
    std::uintmax_t iterations = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(
        f, w.left_max, w.phi_min, boost::math::tools::eps_tolerance<double>(52), iterations);
    w.well_left = 0.5 * (lo + hi);
  }
  return w;
}

Index well_grid_points(const PhaseQubitParams& p) { return build_grid(p, 1).phi.size(); }

WellLevels well_levels(const PhaseQubitParams& p, Index levels, int refine) {
  if (levels < 1) throw ValidationError("well_levels: need at least one level");
  if (refine < 1) throw ValidationError("well_levels: refine must be >= 1");
  const auto g = build_grid(p, refine);
  const auto eig = tridiagonal_lowest(g.diagonal, g.off_diagonal,
                                      std::min<Index>(levels, g.phi.size()), true);
  WellLevels out;
  out.grid_points = g.phi.size();
  out.energies = bound_subset(g, eig);
  out.truncated = out.energies.size() < levels;
  return out;
}

Index count_bound_states(const PhaseQubitParams& p) {
  const auto g = build_grid(p, 1);
  const double barrier = g.geometry.u_barrier - g.geometry.u_min;
  const Index below = tridiagonal_count_below(g.diagonal, g.off_diagonal, barrier);
  if (below == 0) return 0;
  // Leakage past the left turning point only shrinks with depth, so states
  // are examined from the barrier downward until a bound one is reached.
  Index batch = std::min<Index>(below, 8);
  while (true) {
    const Index first = below - batch;
    const auto eig = tridiagonal_index_range(g.diagonal, g.off_diagonal, first, below, true);
    const RVector bound = bound_subset(g, eig);
    const bool deepest_bound = bound.size() > 0 && bound(0) == eig.values(0);
    if (deepest_bound || batch == below) return first + bound.size();
    batch = std::min(below, 2 * batch);
  }
}

ReadoutTransitions readout_transitions(const PhaseQubitParams& p) {
  const auto levels = well_levels(p, 3);
  if (levels.truncated) {
    std::ostringstream os;
    os << "readout_transitions: only " << levels.energies.size() << " bound states at s = " << p.s;
    throw ValidationError(os.str());
  }
  return {levels.energies(1) - levels.energies(0), levels.energies(2) - levels.energies(1)};
}

SpectrumTable phase_spectrum_vs_s(const PhaseQubitParams& p, std::span<const double> s_grid,
                                  Index levels, int threads) {
  p.validate();
  SpectrumTable table;
  table.control_name = "s";
  table.control = Eigen::Map<const RVector>(s_grid.data(), static_cast<Index>(s_grid.size()));
  table.levels = RMatrix::Constant(table.control.size(), levels,
                                   std::numeric_limits<double>::quiet_NaN());
  parallel_for(s_grid.size(), threads, [&](std::size_t i) {
    PhaseQubitParams point = p;
    point.s = s_grid[i];
    const auto w = well_levels(point, levels);
    const auto row = static_cast<Index>(i);
    table.levels.row(row).head(w.energies.size()) = w.energies.transpose();
  });
  return table;
}

}  // namespace sqc
