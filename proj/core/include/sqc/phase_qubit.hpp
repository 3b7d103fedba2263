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

#include <optional>
#include <span>
#include <string>

#include "sqc/spectrum.hpp"
#include "sqc/types.hpp"

namespace sqc {

/// Current-biased junction with H = Ec n^2 - Ej (cos(phi) + s phi),
/// s = I / Ic.
struct PhaseQubitParams {
  double ej = 1.0e5;
  double ec = 1.0;
  double s = 0.0;

  void validate() const;
  /// Set when Ej/Ec < 1e3, where the well holds only a handful of levels.
  [[nodiscard]] std::optional<std::string> warning() const;
};

double washboard_potential(double phi, const PhaseQubitParams& p);

/// The metastable well around arcsin(s). Barrier maxima sit at pi - a and
/// -pi - a (a = arcsin s); the right one is lower and sets the well depth.
struct WellGeometry {
  double phi_min = 0.0;
  double u_min = 0.0;
  double left_max = 0.0;
  double right_max = 0.0;
  double u_barrier = 0.0;
  /// Left classical turning point at the barrier energy; the well is
  /// [well_left, right_max].
  double well_left = 0.0;
};

WellGeometry well_geometry(const PhaseQubitParams& p);

struct WellLevels {
  RVector energies;  // GHz above the well minimum, ascending
  bool truncated = false;  // fewer bound states than requested
  Index grid_points = 0;
};

/// Hard-wall grid on [left_max, right_max] with a step that resolves both the
/// harmonic length and the fastest classical momentum in the well.
Index well_grid_points(const PhaseQubitParams& p);

/// Lowest `levels` bound states. A state is bound when it lies below the
/// barrier and keeps at least 99% of its probability inside the well.
/// `refine` divides the default grid step.
WellLevels well_levels(const PhaseQubitParams& p, Index levels, int refine = 1);

Index count_bound_states(const PhaseQubitParams& p);

struct ReadoutTransitions {
  double nu01 = 0.0;
  double nu12 = 0.0;
};

/// (E1 - E0) and (E2 - E1); throws ValidationError with fewer than three
/// bound states.
ReadoutTransitions readout_transitions(const PhaseQubitParams& p);

/// Bound levels above the well minimum versus s. Missing levels are NaN.
SpectrumTable phase_spectrum_vs_s(const PhaseQubitParams& p, std::span<const double> s_grid,
                                  Index levels, int threads = 1);

}  // namespace sqc
