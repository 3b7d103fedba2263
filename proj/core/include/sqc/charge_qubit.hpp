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

#include "sqc/linalg.hpp"
#include "sqc/spectrum.hpp"

namespace sqc {

/// Cooper-pair box H = Ec (n - ng)^2 - Ej cos(phi) truncated to
/// n in {-N, ..., N}. Energies in GHz, ng in units of 2e.
struct CpbParams {
  double ec = 1.0;
  double ej = 0.0;
  double ng = 0.0;
  int charge_cutoff = 10;

  /// SQUID-tuned box: Ej = |2 Ej0 cos(pi flux_ratio)|. The sign of the
  /// signed coupling is a basis redefinition (n -> phase shift by pi) and
  /// does not change the spectrum.
  static CpbParams with_squid(double ec, double ej0, double flux_ratio, double ng,
                              int charge_cutoff = 10);

  void validate() const;
  [[nodiscard]] Index dimension() const { return 2 * charge_cutoff + 1; }
};

HermitianOperator cpb_hamiltonian(const CpbParams& p);

/// Diagonal charge operator n over the same truncated basis.
HermitianOperator cpb_charge_operator(const CpbParams& p);

/// Two-state reduction H = eps sigma_z - (Ej/2) sigma_x, eps = Ec (ng - 1/2),
/// in the basis {|0>, |1>} of zero and one extra Cooper pair.
HermitianOperator reduced_two_level(const CpbParams& p);

/// Signed SQUID coupling 2 Ej0 cos(pi flux_ratio).
double tunable_ej(double ej0, double flux_ratio);

/// cos(pi x), exact at multiples of 1/2 and 1/3.
double cos_pi(double x);

/// `levels` lowest eigenvalues of cpb_hamiltonian for each ng in the grid.
SpectrumTable spectrum_vs_ng(const CpbParams& p, std::span<const double> ng_grid, int levels,
                             int threads = 1);

}  // namespace sqc
