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
#include <vector>

#include "sqc/grid_schrodinger.hpp"
#include "sqc/spectrum.hpp"

namespace sqc {

// ---------------------------------------------------------------------------
// One-junction (rf-SQUID) flux qubit:
//   U(phi) = -Ej cos(phi) + inductive_scale * (phi - phi_ext)^2
// with inductive_scale = (Phi0 / 2 pi)^2 / 2L in GHz and phi_ext = 2 pi Phi_ext / Phi0.
// ---------------------------------------------------------------------------

struct RfSquidParams {
  double ej = 1.0;
  double ec = 1.0;
  double inductive_scale = 1.0;
  double phi_ext = 0.0;

  void validate() const;
};

double rf_squid_potential(double phi, const RfSquidParams& p);
double rf_squid_potential_derivative(double phi, const RfSquidParams& p);

/// Local minima of the rf-SQUID potential, ascending in phi.
std::vector<double> rf_squid_minima(const RfSquidParams& p);

/// Fluxoid quantization check at a stationary point. The junction phase drop
/// is the principal value of -phi_star and the induced flux is generated by
/// the loop current Ej sin(phi_star); then
///   (junction + phi_ext + phi_induced) / 2 pi = m + residual.
struct FluxoidRecord {
  double phi_star = 0.0;
  int m = 0;
  double residual = 0.0;
};

/// Throws ValidationError when |U'(phi_star)| > 1e-8 Ej.
FluxoidRecord classify_fluxoid(const RfSquidParams& p, double phi_star);

/// Phase interval that contains every state of interest for the rf-SQUID.
std::pair<double, double> rf_squid_domain(const RfSquidParams& p);

GridLevels rf_squid_levels(const RfSquidParams& p, Index levels, Index points = 4096);

// ---------------------------------------------------------------------------
// Three-junction flux qubit on the periodic torus [-pi, pi)^2:
//   H = Ec (n1^2 + n2^2) + Ej [2 + alpha - cos phi1 - cos phi2
//                              - alpha cos(2 pi f + phi1 - phi2)]
// The smaller junction's capacitance is folded into a single Ec.
// ---------------------------------------------------------------------------

enum class KineticStencil {
  kSpectral,           // Fourier-grid second derivative, exact for |n| < N/2
  kCentralDifference,  // three-point periodic stencil
};

struct ThreeJunctionParams {
  double ej = 40.0;
  double ec = 1.0;
  double alpha = 0.8;
  double f = 0.5;
  int grid_points = 48;
  KineticStencil kinetic = KineticStencil::kSpectral;

  void validate() const;
};

double three_junction_potential(double phi1, double phi2, const ThreeJunctionParams& p);

struct ThreeJunctionMinimum {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double energy = 0.0;
};

/// Distinct local minima on the torus, ascending in energy.
std::vector<ThreeJunctionMinimum> three_junction_minima(const ThreeJunctionParams& p);

struct FluxLevels {
  RVector energies;      // GHz, ascending
  RVector ground_state;  // real amplitudes on the grid, index i1 * N + i2
  RVector phi;           // 1D grid nodes shared by both axes
};

/// Lowest `levels` (1..6) eigenvalues of the discretized three-junction
/// Hamiltonian. The exchange-inversion symmetry (phi1, phi2) -> (-phi2, -phi1)
/// splits the grid into two blocks that are diagonalized separately.
FluxLevels solve_three_junction(const ThreeJunctionParams& p, Index levels,
                                bool want_ground_state = false);

/// Largest change of the lowest `levels` energies between the configured
/// grid and `reference_points`.
double three_junction_grid_change(const ThreeJunctionParams& p, Index levels,
                                  int reference_points);

/// Ground-normalized circulating current <dH/d(2 pi f)> / Ej on the grid.
/// Positive values denote the counterclockwise state.
double persistent_current(const RVector& state, const ThreeJunctionParams& p);

struct FluxSweep {
  SpectrumTable table;
  RVector ground_current;
};

SpectrumTable flux_spectrum_vs_f(const ThreeJunctionParams& p, std::span<const double> f_grid,
                                 Index levels, int threads = 1);

/// Same sweep, also recording the ground-state persistent current.
FluxSweep flux_sweep(const ThreeJunctionParams& p, std::span<const double> f_grid, Index levels,
                     int threads = 1);

}  // namespace sqc
