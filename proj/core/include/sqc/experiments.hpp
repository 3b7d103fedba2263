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
#include <vector>

#include "sqc/coupled_qubits.hpp"
#include "sqc/dynamics.hpp"

namespace sqc {

/// Phenomenological coherence times in microseconds.
struct DecoherenceParams {
  double t1_us = 1.0;
  double t2_us = 1.0;

  void validate() const;
  /// 1/T1 in 1/ns.
  [[nodiscard]] double relaxation_rate() const;
  /// 1/T_phi = 1/T2 - 1/(2 T1) in 1/ns.
  [[nodiscard]] double pure_dephasing_rate() const;
  /// sigma^- = |0><1| at 1/T1 and sigma_z at 1/(2 T_phi), for a two-level
  /// system with |1> the excited state.
  [[nodiscard]] std::vector<LindbladChannel> channels() const;
  /// The same channels with the qubit written in an arbitrary orthonormal
  /// basis: columns (ground, excited) of `frame`.
  [[nodiscard]] std::vector<LindbladChannel> channels(const CMatrix& frame) const;
};

struct FittedMetrics {
  std::optional<double> nu01;        // GHz
  std::optional<double> detuning;    // GHz
  std::optional<double> t1_us;
  std::optional<double> t2_us;
  std::optional<double> visibility;  // max - min of the population trace
  std::optional<double> q;           // pi T2 nu01
};

struct ExperimentResult {
  RVector time_ns;
  RVector population;  // excited-state population
  FittedMetrics fitted;
};

/// Raised when a least-squares fit has nothing to resolve.
class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Rabi oscillations of a driven two-level system starting in its ground
/// state. The drive amplitude cos(2 pi frequency t + phase) couples the two
/// eigenstates of `qubit` with unit matrix element. Unitary when `dec` is
/// empty, Lindblad otherwise.
ExperimentResult rabi(const HermitianOperator& qubit, const DrivePulse& drive,
                      const std::optional<DecoherenceParams>& dec, std::span<const double> t_grid,
                      const IntegratorOptions& options = {});

/// Ramsey sequence with ideal instantaneous pi/2 pulses around a free
/// Lindblad evolution of length tau, in the frame rotating at the drive
/// frequency nu01 - detuning. Fits c + a exp(-tau/T2) cos(2 pi delta tau).
ExperimentResult ramsey(double nu01, double detuning, const DecoherenceParams& dec,
                        std::span<const double> delay_grid, const IntegratorOptions& options = {});

/// Free decay of |1>, with an exponential fit for T1.
ExperimentResult t1_decay(const DecoherenceParams& dec, std::span<const double> t_grid,
                          const IntegratorOptions& options = {});

/// Q = pi T2 nu01 with T2 in microseconds and nu01 in GHz.
double quality_factor(double t2_us, double nu01);

struct DecayFit {
  double amplitude = 0.0;
  double time_ns = 0.0;
  double offset = 0.0;
};

/// Least-squares fit of y = amplitude exp(-t / time) + offset.
DecayFit fit_exponential_decay(std::span<const double> t, std::span<const double> y);

struct FringeFit {
  double offset = 0.0;
  double amplitude = 0.0;
  double t2_ns = 0.0;
  double detuning = 0.0;  // GHz, >= 0
};

/// Least-squares fit of y = offset + amplitude exp(-t / T2) cos(2 pi detuning t),
/// seeded from the periodogram peak. Throws FitError on flat traces.
FringeFit fit_ramsey_fringe(std::span<const double> t, std::span<const double> y);

}  // namespace sqc
