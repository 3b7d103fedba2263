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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "sqc/types.hpp"

namespace sqc {

/// Independent symmetric telegraph fluctuators. Fluctuator i flips sign at
/// rate gamma_i (1/ns) and contributes coupling_i * s_i(t) GHz to the qubit
/// splitting, so its autocorrelation is coupling_i^2 exp(-2 gamma_i |tau|).
struct FluctuatorEnsemble {
  std::vector<double> rates;
  std::vector<double> couplings;
  std::uint64_t seed = 0;

  /// Rates log-uniform on [gamma_min, gamma_max], one per equal-width
  /// stratum of log(gamma), with a seeded position inside each stratum.
  static FluctuatorEnsemble log_uniform(std::size_t count, double gamma_min, double gamma_max,
                                        double coupling, std::uint64_t seed);

  void validate() const;
  [[nodiscard]] std::size_t size() const { return rates.size(); }
  [[nodiscard]] double max_rate() const;
};

/// Random stream owned by (seed, trajectory, fluctuator). Doubles are built
/// from the top 53 bits of mt19937_64, so draws are identical on every
/// platform and independent of how trajectories are scheduled.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t trajectory, std::uint64_t fluctuator);
  /// Uniform on [0, 1).
  double uniform();
  /// Exponential waiting time with the given rate.
  double exponential(double rate);

 private:
  std::mt19937_64 engine_;
};

/// xi(t) = sum_i coupling_i s_i(t) sampled on an ascending time grid. Switching
/// events are drawn in continuous time. Rejects grids with a step larger
/// than 0.1 / gamma_max.
RVector rtn_trajectory(const FluctuatorEnsemble& ensemble, std::span<const double> t_grid,
                       std::uint64_t trajectory = 0);

/// Number of sign flips of each fluctuator during [0, duration].
std::vector<std::size_t> rtn_switch_counts(const FluctuatorEnsemble& ensemble, double duration,
                                           std::uint64_t trajectory = 0);

/// |< exp(-i 2 pi int_0^t xi) >| over `trajectories` noise realizations, with
/// the phase integral evaluated exactly between switching events. The
/// constant nu01 precession drops out of the magnitude.
RVector dephasing_under_rtn(double nu01, const FluctuatorEnsemble& ensemble,
                            std::size_t trajectories, std::span<const double> t_grid,
                            int threads = 1);

struct PowerSpectrum {
  RVector frequency;  // GHz
  RVector density;    // one-sided, GHz^2 / GHz
};

/// Welch estimate with Hann windows and 50% overlap,
/// S(f_k) = 2 |X_k|^2 dt / sum w^2 (DC and Nyquist bins not doubled).
PowerSpectrum welch_psd(std::span<const double> samples, double dt, std::size_t segment_length);

/// Welch spectrum averaged over `trajectories` realizations of the ensemble
/// sampled every `dt` ns for `samples` points.
PowerSpectrum rtn_psd(const FluctuatorEnsemble& ensemble, std::size_t trajectories,
                      std::size_t samples, double dt, std::size_t segment_length,
                      int threads = 1);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Least-squares line through (log f, log S) for f in [f_lo, f_hi].
SlopeFit fit_loglog_slope(const PowerSpectrum& psd, double f_lo, double f_hi);

/// Motional-narrowing dephasing rate (2 pi v)^2 / (2 gamma) of a weak, fast
/// fluctuator, in 1/ns.
double motional_narrowing_rate(double coupling, double rate);

}  // namespace sqc
