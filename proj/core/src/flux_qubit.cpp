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

#include "sqc/flux_qubit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>

#include <boost/math/tools/roots.hpp>

#include "sqc/parallel.hpp"
#include "sqc/symmetric_solvers.hpp"

namespace sqc {
namespace {

double wrap_phase(double phi) {
  double r = std::remainder(phi, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double refine_root(const std::function<double(double)>& f, double a, double b) {
  const double fa = f(a);
  const double fb = f(b);
  if (fb == 0.0) return b;
  if (fa == 0.0) return a;
  std::uintmax_t iterations = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(52);
  auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iterations);
  return 0.5 * (lo + hi);
}

}  // namespace

void RfSquidParams::validate() const {
  std::ostringstream os;
  if (!(ej > 0.0) || !std::isfinite(ej)) os << "Ej must be > 0; ";
  if (!(ec > 0.0) || !std::isfinite(ec)) os << "Ec must be > 0; ";
  if (!(inductive_scale > 0.0) || !std::isfinite(inductive_scale)) {
    os << "inductive scale must be > 0; ";
  }
  if (!std::isfinite(phi_ext)) os << "phi_ext must be finite; ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("RfSquidParams: " + msg);
}

double rf_squid_potential(double phi, const RfSquidParams& p) {
  const double d = phi - p.phi_ext;
  return -p.ej * std::cos(phi) + p.inductive_scale * d * d;
}

double rf_squid_potential_derivative(double phi, const RfSquidParams& p) {
  return p.ej * std::sin(phi) + 2.0 * p.inductive_scale * (phi - p.phi_ext);
}

std::vector<double> rf_squid_minima(const RfSquidParams& p) {
  p.validate();
  // |2 L (phi - phi_ext)| = |Ej sin(phi)| <= Ej bounds every stationary point.
  const double reach = p.ej / (2.0 * p.inductive_scale) + 0.5;
  const double lo = p.phi_ext - reach;
  const double hi = p.phi_ext + reach;
  const auto samples = static_cast<Index>(std::max(4096.0, std::ceil((hi - lo) / 1e-3)));
  const double step = (hi - lo) / static_cast<double>(samples);
  auto derivative = [&](double phi) { return rf_squid_potential_derivative(phi, p); };

  std::vector<double> minima;
  double a = lo;
  double fa = derivative(a);
  for (Index k = 1; k <= samples; ++k) {
    const double b = lo + static_cast<double>(k) * step;
    const double fb = derivative(b);
    // A falling-to-rising sign change of U' brackets a minimum in (a, b].
    if (fa < 0.0 && fb >= 0.0) minima.push_back(refine_root(derivative, a, b));
    a = b;
    fa = fb;
  }
  return minima;
}

FluxoidRecord classify_fluxoid(const RfSquidParams& p, double phi_star) {
  p.validate();
  const double slope = rf_squid_potential_derivative(phi_star, p);
  if (!(std::abs(slope) <= 1e-8 * p.ej)) {
    std::ostringstream os;
    os << "classify_fluxoid: phi* = " << phi_star << " is not stationary (|U'| = "
       << std::abs(slope) << ")";
    throw ValidationError(os.str());
  }
  const double junction = wrap_phase(-phi_star);
  const double induced = -p.ej * std::sin(phi_star) / (2.0 * p.inductive_scale);
  const double fluxoid = (junction + p.phi_ext + induced) / kTwoPi;
  FluxoidRecord out;
  out.phi_star = phi_star;
  out.m = static_cast<int>(std::lround(fluxoid));
  out.residual = std::abs(fluxoid - out.m);
  return out;
}

std::pair<double, double> rf_squid_domain(const RfSquidParams& p) {
  p.validate();
  // Beyond this half-width the inductive term exceeds every well by many
  // plasma quanta, so hard walls there do not perturb the low levels.
  const double quanta = 40.0 * std::sqrt(p.ec * (p.ej + p.inductive_scale)) + 40.0 * p.ec;
  const double half_width = std::sqrt((2.0 * p.ej + quanta) / p.inductive_scale) + kPi;
  return {p.phi_ext - half_width, p.phi_ext + half_width};
}

GridLevels rf_squid_levels(const RfSquidParams& p, Index levels, Index points) {
  const auto [lo, hi] = rf_squid_domain(p);
  return solve_levels_1d([&](double phi) { return rf_squid_potential(phi, p); }, lo, hi, p.ec,
                         points, levels);
}

// ---------------------------------------------------------------------------

void ThreeJunctionParams::validate() const {
  std::ostringstream os;
  if (!(ej > 0.0) || !std::isfinite(ej)) os << "Ej must be > 0; ";
  if (!(ec > 0.0) || !std::isfinite(ec)) os << "Ec must be > 0; ";
  if (!(alpha > 0.5 && alpha < 1.0)) os << "alpha must lie in (0.5, 1); ";
  if (!std::isfinite(f)) os << "f must be finite; ";
  if (grid_points < 32 || grid_points % 2 != 0) os << "grid points must be even and >= 32; ";
  if (static_cast<Index>(grid_points) * grid_points > kMaxDimension) {
    os << "grid exceeds the dense dimension cap; ";
  }
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("ThreeJunctionParams: " + msg);
}

double three_junction_potential(double phi1, double phi2, const ThreeJunctionParams& p) {
  return p.ej * (2.0 + p.alpha - std::cos(phi1) - std::cos(phi2) -
                 p.alpha * std::cos(kTwoPi * p.f + phi1 - phi2));
}

std::vector<ThreeJunctionMinimum> three_junction_minima(const ThreeJunctionParams& p) {
  p.validate();
  const int n = 96;
  const double h = kTwoPi / n;
  RMatrix u(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) u(i, j) = three_junction_potential(-kPi + i * h, -kPi + j * h, p);
  }

  auto gradient = [&](double a, double b) {
    const double theta = kTwoPi * p.f + a - b;
    return Eigen::Vector2d(p.ej * (std::sin(a) + p.alpha * std::sin(theta)),
                           p.ej * (std::sin(b) - p.alpha * std::sin(theta)));
  };
  auto hessian = [&](double a, double b) {
    const double c = p.alpha * std::cos(kTwoPi * p.f + a - b);
    Eigen::Matrix2d m;
    m << std::cos(a) + c, -c, -c, std::cos(b) + c;
    return Eigen::Matrix2d(p.ej * m);
  };

  std::vector<ThreeJunctionMinimum> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di != 0 || dj != 0) && u((i + di + n) % n, (j + dj + n) % n) < u(i, j)) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;

      Eigen::Vector2d x(-kPi + i * h, -kPi + j * h);
      for (int it = 0; it < 100; ++it) {
        const Eigen::Vector2d g = gradient(x(0), x(1));
        if (g.norm() <= 1e-13 * p.ej) break;
        const Eigen::Matrix2d hs = hessian(x(0), x(1));
        Eigen::Vector2d dx = -g / p.ej;
        if (hs.determinant() > 0.0 && hs(0, 0) > 0.0) dx = -hs.ldlt().solve(g);
        double step = 1.0;
        const double u0 = three_junction_potential(x(0), x(1), p);
        while (step > 1e-8 &&
               three_junction_potential(x(0) + step * dx(0), x(1) + step * dx(1), p) >
                   u0 + 1e-15 * p.ej) {
          step *= 0.5;
        }
        x += step * dx;
      }
      const Eigen::Matrix2d hs = hessian(x(0), x(1));
      if (!(hs.determinant() > 0.0 && hs(0, 0) > 0.0)) continue;
      const ThreeJunctionMinimum m{wrap_phase(x(0)), wrap_phase(x(1)),
                                   three_junction_potential(x(0), x(1), p)};
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const auto& o) {
        return std::abs(wrap_phase(o.phi1 - m.phi1)) < 1e-6 &&
               std::abs(wrap_phase(o.phi2 - m.phi2)) < 1e-6;
      });
      if (!duplicate) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return out;
}

namespace {

RMatrix kinetic_matrix(int n, KineticStencil stencil) {
  const double h = kTwoPi / n;
  RMatrix k = RMatrix::Zero(n, n);
  if (stencil == KineticStencil::kCentralDifference) {
    for (int j = 0; j < n; ++j) {
      k(j, j) = 2.0 / (h * h);
      k(j, (j + 1) % n) = -1.0 / (h * h);
      k(j, (j + n - 1) % n) = -1.0 / (h * h);
    }
    return k;
  }
  // -d^2/dphi^2 for the trigonometric interpolant on an even periodic grid.
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      if (j == l) {
        k(j, l) = kPi * kPi / (3.0 * h * h) + 1.0 / 6.0;
      } else {
        const int d = j - l;
        const double s = std::sin(0.5 * h * d);
        k(j, l) = ((d % 2 == 0) ? 1.0 : -1.0) / (2.0 * s * s);
      }
    }
  }
  return k;
}

// Orbits of (i, j) -> (-j, -i) on the periodic grid, with the symmetric and
// antisymmetric combinations as block bases.
struct SymmetryBlocks {
  struct Orbit {
    std::array<Index, 2> sites;
    bool fixed;
  };
  std::vector<Orbit> orbits;
  std::vector<Index> even;  // orbit indices
  std::vector<Index> odd;
};

SymmetryBlocks symmetry_blocks(int n) {
  SymmetryBlocks b;
  auto mirror = [n](int i) { return (n - i) % n; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Index x = static_cast<Index>(i) * n + j;
      const Index y = static_cast<Index>(mirror(j)) * n + mirror(i);
      if (y < x) continue;
      const Index id = static_cast<Index>(b.orbits.size());
      b.orbits.push_back({{x, y}, x == y});
      b.even.push_back(id);
      if (x != y) b.odd.push_back(id);
    }
  }
  return b;
}

struct GridHamiltonian {
  int n;
  double ec;
  RMatrix kinetic;
  RVector potential;  // index i * n + j

  double element(Index x, Index y) const {
    const Index i1 = x / n, j1 = x % n, i2 = y / n, j2 = y % n;
    double v = 0.0;
    if (j1 == j2) v += ec * kinetic(i1, i2);
    if (i1 == i2) v += ec * kinetic(j1, j2);
    if (x == y) v += potential(x);
    return v;
  }
};

GridHamiltonian grid_hamiltonian(const ThreeJunctionParams& p) {
  const int n = p.grid_points;
  const double h = kTwoPi / n;
  GridHamiltonian g{n, p.ec, kinetic_matrix(n, p.kinetic), RVector(static_cast<Index>(n) * n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g.potential(static_cast<Index>(i) * n + j) =
          three_junction_potential(-kPi + i * h, -kPi + j * h, p);
    }
  }
  return g;
}

RMatrix block_matrix(const GridHamiltonian& g, const SymmetryBlocks& b,
                     const std::vector<Index>& members, double sign) {
  const Index m = static_cast<Index>(members.size());
  RMatrix out(m, m);
  const double r = std::sqrt(0.5);
  for (Index a = 0; a < m; ++a) {
    const auto& oa = b.orbits[members[a]];
    for (Index c = 0; c <= a; ++c) {
      const auto& oc = b.orbits[members[c]];
      double v;
      if (oa.fixed && oc.fixed) {
        v = g.element(oa.sites[0], oc.sites[0]);
      } else if (oa.fixed) {
        v = r * (g.element(oa.sites[0], oc.sites[0]) + sign * g.element(oa.sites[0], oc.sites[1]));
      } else if (oc.fixed) {
        v = r * (g.element(oa.sites[0], oc.sites[0]) + sign * g.element(oa.sites[1], oc.sites[0]));
      } else {
        // H commutes with the mirror, so the four-term sum collapses to two.
        v = g.element(oa.sites[0], oc.sites[0]) + sign * g.element(oa.sites[0], oc.sites[1]);
      }
      out(a, c) = v;
    }
  }
  return out;
}

}  // namespace

FluxLevels solve_three_junction(const ThreeJunctionParams& p, Index levels,
                                bool want_ground_state) {
  p.validate();
  if (levels < 1 || levels > 6) throw ValidationError("solve_three_junction: levels must be 1..6");
  const int n = p.grid_points;
  const auto g = grid_hamiltonian(p);
  const auto blocks = symmetry_blocks(n);

  struct BlockResult {
    SymmetricEigenpairs eig;
    const std::vector<Index>* members;
    double sign;
  };
  std::array<BlockResult, 2> results{
      BlockResult{{}, &blocks.even, 1.0},
      BlockResult{{}, &blocks.odd, -1.0},
  };
  for (auto& r : results) {
    const Index size = static_cast<Index>(r.members->size());
    r.eig = lowest_symmetric(block_matrix(g, blocks, *r.members, r.sign), std::min(levels, size),
                             want_ground_state);
  }

  std::vector<std::pair<double, int>> merged;
  for (int b = 0; b < 2; ++b) {
    for (Index k = 0; k < results[b].eig.values.size(); ++k) {
      merged.emplace_back(results[b].eig.values(k), b);
    }
  }
  std::sort(merged.begin(), merged.end());

  FluxLevels out;
  out.energies.resize(levels);
  for (Index k = 0; k < levels; ++k) out.energies(k) = merged[static_cast<std::size_t>(k)].first;
  out.phi.resize(n);
  for (int i = 0; i < n; ++i) out.phi(i) = -kPi + i * (kTwoPi / n);

  if (want_ground_state) {
    const auto& r = results[merged.front().second];
    const RVector v = r.eig.vectors.col(0);
    out.ground_state = RVector::Zero(static_cast<Index>(n) * n);
    const double c = std::sqrt(0.5);
    for (std::size_t a = 0; a < r.members->size(); ++a) {
      const auto& orbit = blocks.orbits[(*r.members)[a]];
      const double amp = v(static_cast<Index>(a));
      if (orbit.fixed) {
        out.ground_state(orbit.sites[0]) = amp;
      } else {
        out.ground_state(orbit.sites[0]) = c * amp;
        out.ground_state(orbit.sites[1]) = r.sign * c * amp;
      }
    }
  }
  return out;
}

double three_junction_grid_change(const ThreeJunctionParams& p, Index levels,
                                  int reference_points) {
  ThreeJunctionParams ref = p;
  ref.grid_points = reference_points;
  const auto a = solve_three_junction(p, levels);
  const auto b = solve_three_junction(ref, levels);
  return (a.energies - b.energies).cwiseAbs().maxCoeff();
}

double persistent_current(const RVector& state, const ThreeJunctionParams& p) {
  p.validate();
  const int n = p.grid_points;
  if (state.size() != static_cast<Index>(n) * n) {
    throw ValidationError("persistent_current: state does not match the grid");
  }
  const double h = kTwoPi / n;
  double current = 0.0;
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double w = state(static_cast<Index>(i) * n + j);
      const double prob = w * w;
      norm += prob;
      current += prob * p.alpha * std::sin(kTwoPi * p.f + (i - j) * h);
    }
  }
  return current / norm;
}

FluxSweep flux_sweep(const ThreeJunctionParams& p, std::span<const double> f_grid, Index levels,
                     int threads) {
  p.validate();
  FluxSweep out;
  out.table.control_name = "f";
  out.table.control = Eigen::Map<const RVector>(f_grid.data(), static_cast<Index>(f_grid.size()));
  out.table.levels.resize(out.table.control.size(), levels);
  out.ground_current.resize(out.table.control.size());
  parallel_for(f_grid.size(), threads, [&](std::size_t i) {
    ThreeJunctionParams point = p;
    point.f = f_grid[i];
    const auto sol = solve_three_junction(point, levels, true);
    out.table.levels.row(static_cast<Index>(i)) = sol.energies.transpose();
    out.ground_current(static_cast<Index>(i)) = persistent_current(sol.ground_state, point);
  });
  return out;
}

SpectrumTable flux_spectrum_vs_f(const ThreeJunctionParams& p, std::span<const double> f_grid,
                                 Index levels, int threads) {
  p.validate();
  SpectrumTable table;
  table.control_name = "f";
  table.control = Eigen::Map<const RVector>(f_grid.data(), static_cast<Index>(f_grid.size()));
  table.levels.resize(table.control.size(), levels);
  parallel_for(f_grid.size(), threads, [&](std::size_t i) {
    ThreeJunctionParams point = p;
    point.f = f_grid[i];
    table.levels.row(static_cast<Index>(i)) = solve_three_junction(point, levels).energies.transpose();
  });
  return table;
}

}  // namespace sqc
