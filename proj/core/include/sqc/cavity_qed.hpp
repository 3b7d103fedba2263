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

#include "sqc/dynamics.hpp"
#include "sqc/experiments.hpp"

namespace sqc {

/// Qubit coupled to one resonator mode in the exchange (rotating-wave) form
///   H = (nu01/2) sz x I + nu_c a^+a + g (s+ a + s- a^+)
/// on the basis |q, n>, index q (N+1) + n, with q = 0 the ground state and
/// sz = diag(-1, +1) in this module.
struct JaynesCummingsParams {
  double nu01 = 5.0;    // GHz
  double nu_c = 5.0;    // GHz
  double g = 0.1;       // GHz
  int photon_cutoff = 5;
  double kappa = 0.0;   // cavity energy decay rate, 1/us
  std::optional<DecoherenceParams> qubit;

  void validate() const;
  [[nodiscard]] Index dimension() const { return 2 * (photon_cutoff + 1); }
};

HermitianOperator jc_hamiltonian(const JaynesCummingsParams& p);

/// q + n, the number of excitations shared by qubit and photon.
HermitianOperator excitation_number(const JaynesCummingsParams& p);

/// Cavity annihilation operator on the joint space.
CMatrix cavity_lowering(const JaynesCummingsParams& p);

/// Starts in |excited, 0 photons> and records the qubit excited-state
/// population. Unitary when kappa = 0 and no qubit decoherence is set.
ExperimentResult vacuum_rabi(const JaynesCummingsParams& p, std::span<const double> t_grid,
                             const IntegratorOptions& options = {});

struct StrongCouplingReport {
  bool strong = false;
  bool marginal = false;       // the inequality holds with equality
  double rabi_period_ns = 0.0;  // 1/(2g): one full exchange at the vacuum Rabi rate 2g
  double qubit_t2_ns = 0.0;     // infinite without qubit decoherence
  double photon_lifetime_ns = 0.0;
  double margin = 0.0;
  std::string summary;
};

/// True iff margin / (2 g) <= min(T2, 1/kappa). Equality within 1e-12
/// relative counts as true and is flagged marginal.
StrongCouplingReport strong_coupling_check(const JaynesCummingsParams& p, double margin = 10.0);

}  // namespace sqc
