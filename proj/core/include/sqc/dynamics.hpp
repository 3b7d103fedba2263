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

#include "sqc/linalg.hpp"

namespace sqc {

/// Unitary propagation psi(t) = exp(-i 2 pi H t) psi0 with H in GHz, t in ns.
/// Exact, through the eigendecomposition of H.
QuantumState evolve_unitary(const HermitianOperator& h, const QuantumState& psi0, double t_ns);

/// Dissipator term rate * (L rho L^+ - {L^+ L, rho} / 2); rate in 1/ns.
struct LindbladChannel {
  CMatrix jump;
  double rate = 0.0;
};

/// Monochromatic control term amplitude * cos(2 pi frequency t + phase) * op.
struct DriveTerm {
  CMatrix op;  // Hermitian
  double amplitude = 0.0;
  double frequency = 0.0;
  double phase = 0.0;
};

/// H(t) = base + sum of drive terms.
struct DrivenHamiltonian {
  HermitianOperator base;
  std::vector<DriveTerm> drives;

  [[nodiscard]] Index dimension() const { return base.dimension(); }
  [[nodiscard]] CMatrix at(double t_ns) const;
  /// Upper bound on ||H(t)|| over all t.
  [[nodiscard]] double norm_bound() const;
};

/// Fixed-step RK4 settings. The step starts at min(max_step_ns, 1/(50 S))
/// with S the generator scale, and is halved until two successive runs agree
/// to `halving_tolerance` at every output time.
struct IntegratorOptions {
  double max_step_ns = 0.0;  // 0 = automatic
  double halving_tolerance = 1e-9;
  int max_refinements = 14;
};

/// Lindblad evolution by step-halving-verified RK4. Returns one density
/// matrix per entry of `t_grid` (ascending, first entry is the start time).
std::vector<DensityMatrix> evolve_lindblad(const HermitianOperator& h,
                                           std::span<const LindbladChannel> channels,
                                           const DensityMatrix& rho0,
                                           std::span<const double> t_grid,
                                           const IntegratorOptions& options = {});

std::vector<DensityMatrix> evolve_lindblad(const DrivenHamiltonian& h,
                                           std::span<const LindbladChannel> channels,
                                           const DensityMatrix& rho0,
                                           std::span<const double> t_grid,
                                           const IntegratorOptions& options = {});

/// Schrodinger evolution of several state columns under a driven
/// Hamiltonian. Element k of the result holds the columns at t_grid[k].
std::vector<CMatrix> evolve_driven(const DrivenHamiltonian& h, const CMatrix& initial_columns,
                                   std::span<const double> t_grid,
                                   const IntegratorOptions& options = {});

/// Liouvillian superoperator acting on column-stacked vec(rho).
CMatrix lindblad_generator(const HermitianOperator& h, std::span<const LindbladChannel> channels);

/// Lindblad evolution for time-independent generators through the matrix
/// exponential of the Liouvillian.
std::vector<DensityMatrix> evolve_lindblad_exact(const HermitianOperator& h,
                                                 std::span<const LindbladChannel> channels,
                                                 const DensityMatrix& rho0,
                                                 std::span<const double> t_grid);

}  // namespace sqc
