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

#include "sqc/noise.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <unsupported/Eigen/FFT>

#include "sqc/parallel.hpp"

namespace sqc {
namespace {

// Trajectory index reserved for drawing the ensemble's own rates.
constexpr std::uint64_t kEnsembleStream = ~std::uint64_t{0};

// Trajectories per reduction block. Blocks are summed in index order, so the
// floating-point result does not depend on the worker count.
constexpr std::size_t kBlock = 32;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_time_grid(std::span<const double> grid, double max_step, const char* what) {
  if (grid.empty()) throw ValidationError(std::string(what) + ": empty time grid");
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double dt = grid[k] - grid[k - 1];
    if (!(dt >= 0.0)) throw ValidationError(std::string(what) + ": time grid must ascend");
    if (dt > max_step * (1.0 + 1e-12)) {
      std::ostringstream os;
      os << what << ": grid step " << dt << " ns exceeds 0.1/gamma_max = " << max_step << " ns";
      throw ValidationError(os.str());
    }
  }
}

// Each stream draws the stationary initial sign first, then the waiting
// times between flips.
double initial_sign(StreamRng& rng) { return rng.uniform() < 0.5 ? 1.0 : -1.0; }

template <class Visit>
void for_each_flip(StreamRng& rng, double rate, double t0, double t_end, Visit&& visit) {
  for (double t = t0 + rng.exponential(rate); t <= t_end; t += rng.exponential(rate)) visit(t);
}

// Phase integral int_{t0}^{t_k} xi dt at each grid time for one realization.
void accumulate_phase(const FluctuatorEnsemble& e, std::span<const double> grid,
                      std::uint64_t trajectory, RVector& phase) {
  phase.setZero(static_cast<Index>(grid.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    StreamRng rng(e.seed, trajectory, i);
    double state = initial_sign(rng);
    double integral = 0.0;
    double last = grid.front();
    std::size_t k = 0;
    auto flush_until = [&](double t) {
      while (k < grid.size() && grid[k] < t) {
        phase(static_cast<Index>(k)) += e.couplings[i] * (integral + state * (grid[k] - last));
        ++k;
      }
    };
    auto on_flip = [&](double t) {
      flush_until(t);
      integral += state * (t - last);
      last = t;
      state = -state;
    };
    for_each_flip(rng, e.rates[i], grid.front(), grid.back(), on_flip);
    flush_until(std::numeric_limits<double>::infinity());
  }
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t trajectory, std::uint64_t fluctuator) {
  std::uint64_t key = splitmix64(seed);
  key = splitmix64(key ^ splitmix64(trajectory + 0x632be59bd9b4e019ULL));
  key = splitmix64(key ^ splitmix64(fluctuator + 0x8cb92ba72f3d8dd7ULL));
  engine_.seed(key);
}

double StreamRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double StreamRng::exponential(double rate) { return -std::log1p(-uniform()) / rate; }

FluctuatorEnsemble FluctuatorEnsemble::log_uniform(std::size_t count, double gamma_min,
                                                   double gamma_max, double coupling,
                                                   std::uint64_t seed) {
  if (count < 1) throw ValidationError("FluctuatorEnsemble: count must be >= 1");
  if (!(gamma_min > 0.0) || !(gamma_max > gamma_min) || !std::isfinite(gamma_max)) {
    throw ValidationError("FluctuatorEnsemble: need 0 < gamma_min < gamma_max");
  }
  FluctuatorEnsemble e;
  e.seed = seed;
  e.rates.resize(count);
  e.couplings.assign(count, coupling);
  const double decades = std::log(gamma_max / gamma_min);
  for (std::size_t i = 0; i < count; ++i) {
    StreamRng rng(seed, kEnsembleStream, i);
    const double u = (static_cast<double>(i) + rng.uniform()) / static_cast<double>(count);
    e.rates[i] = gamma_min * std::exp(decades * u);
  }
  e.validate();
  return e;
}

void FluctuatorEnsemble::validate() const {
  std::ostringstream os;
  if (rates.empty()) os << "need at least one fluctuator; ";
  if (rates.size() != couplings.size()) os << "rates and couplings differ in length; ";
  for (double r : rates) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      os << "switching rates must be > 0; ";
      break;
    }
  }
  for (double v : couplings) {
    if (!std::isfinite(v)) {
      os << "couplings must be finite; ";
      break;
    }
  }
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("FluctuatorEnsemble: " + msg);
}

double FluctuatorEnsemble::max_rate() const {
  return *std::max_element(rates.begin(), rates.end());
}

RVector rtn_trajectory(const FluctuatorEnsemble& ensemble, std::span<const double> t_grid,
                       std::uint64_t trajectory) {
  ensemble.validate();
  check_time_grid(t_grid, 0.1 / ensemble.max_rate(), "rtn_trajectory");
  // Jumps land in a difference array at the first sample after each flip.
  RVector jumps = RVector::Zero(static_cast<Index>(t_grid.size()));
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    StreamRng rng(ensemble.seed, trajectory, i);
    const double v = ensemble.couplings[i];
    double state = initial_sign(rng);
    std::size_t k = 0;
    auto on_flip = [&](double t) {
      while (k < t_grid.size() && t_grid[k] < t) ++k;
      if (k < t_grid.size()) jumps(static_cast<Index>(k)) -= 2.0 * state * v;
      state = -state;
    };
    jumps(0) += state * v;
    for_each_flip(rng, ensemble.rates[i], t_grid.front(), t_grid.back(), on_flip);
  }
  for (Index k = 1; k < jumps.size(); ++k) jumps(k) += jumps(k - 1);
  return jumps;
}

std::vector<std::size_t> rtn_switch_counts(const FluctuatorEnsemble& ensemble, double duration,
                                           std::uint64_t trajectory) {
  ensemble.validate();
  if (!(duration >= 0.0)) throw ValidationError("rtn_switch_counts: duration must be >= 0");
  std::vector<std::size_t> counts(ensemble.size(), 0);
  for (std::size_t i = 0; i < ensemble.size(); ++i) {
    StreamRng rng(ensemble.seed, trajectory, i);
    initial_sign(rng);
    for_each_flip(rng, ensemble.rates[i], 0.0, duration, [&](double) { ++counts[i]; });
  }
  return counts;
}

RVector dephasing_under_rtn(double nu01, const FluctuatorEnsemble& ensemble,
                            std::size_t trajectories, std::span<const double> t_grid,
                            int threads) {
  if (!(nu01 > 0.0)) throw ValidationError("dephasing_under_rtn: nu01 must be > 0");
  if (trajectories < 100) throw ValidationError("dephasing_under_rtn: need >= 100 trajectories");
  ensemble.validate();
  check_time_grid(t_grid, std::numeric_limits<double>::infinity(), "dephasing_under_rtn");

  const Index n = static_cast<Index>(t_grid.size());
  const std::size_t blocks = (trajectories + kBlock - 1) / kBlock;
  std::vector<CVector> partial(blocks, CVector::Zero(n));
  parallel_for(blocks, threads, [&](std::size_t b) {
    RVector phase;
    const std::size_t end = std::min(trajectories, (b + 1) * kBlock);
    for (std::size_t m = b * kBlock; m < end; ++m) {
      accumulate_phase(ensemble, t_grid, m, phase);
      for (Index k = 0; k < n; ++k) partial[b](k) += std::polar(1.0, -kTwoPi * phase(k));
    }
  });
  CVector total = CVector::Zero(n);
  for (const auto& p : partial) total += p;
  return (total / static_cast<double>(trajectories)).cwiseAbs();
}

PowerSpectrum welch_psd(std::span<const double> samples, double dt, std::size_t segment_length) {
  if (!(dt > 0.0)) throw ValidationError("welch_psd: dt must be > 0");
  if (segment_length < 8 || segment_length % 2 != 0) {
    throw ValidationError("welch_psd: segment length must be even and >= 8");
  }
  if (samples.size() < segment_length) {
    throw ValidationError("welch_psd: record shorter than one segment");
  }
  const std::size_t hop = segment_length / 2;
  const std::size_t segments = 1 + (samples.size() - segment_length) / hop;
  std::vector<double> window(segment_length);
  double power = 0.0;
  for (std::size_t j = 0; j < segment_length; ++j) {
    window[j] = 0.5 - 0.5 * std::cos(kTwoPi * static_cast<double>(j) /
                                     static_cast<double>(segment_length));
    power += window[j] * window[j];
  }

  const std::size_t bins = segment_length / 2 + 1;
  PowerSpectrum out;
  out.frequency.resize(static_cast<Index>(bins));
  out.density = RVector::Zero(static_cast<Index>(bins));
  for (std::size_t k = 0; k < bins; ++k) {
    out.frequency(static_cast<Index>(k)) =
        static_cast<double>(k) / (static_cast<double>(segment_length) * dt);
  }

  Eigen::FFT<double> fft;
  std::vector<double> buffer(segment_length);
  std::vector<std::complex<double>> spectrum;
  for (std::size_t s = 0; s < segments; ++s) {
    for (std::size_t j = 0; j < segment_length; ++j) buffer[j] = window[j] * samples[s * hop + j];
    fft.fwd(spectrum, buffer);
    for (std::size_t k = 0; k < bins; ++k) {
      const double scale = (k == 0 || k == bins - 1) ? 1.0 : 2.0;
      out.density(static_cast<Index>(k)) += scale * std::norm(spectrum[k]);
    }
  }
  out.density *= dt / (power * static_cast<double>(segments));
  return out;
}

PowerSpectrum rtn_psd(const FluctuatorEnsemble& ensemble, std::size_t trajectories,
                      std::size_t samples, double dt, std::size_t segment_length, int threads) {
  ensemble.validate();
  if (trajectories < 1) throw ValidationError("rtn_psd: need at least one trajectory");
  if (!(dt > 0.0)) throw ValidationError("rtn_psd: dt must be > 0");
  std::vector<double> grid(samples);
  for (std::size_t j = 0; j < samples; ++j) grid[j] = static_cast<double>(j) * dt;

  const std::size_t blocks = (trajectories + kBlock - 1) / kBlock;
  std::vector<RVector> partial(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::size_t end = std::min(trajectories, (b + 1) * kBlock);
    for (std::size_t m = b * kBlock; m < end; ++m) {
      const RVector xi = rtn_trajectory(ensemble, grid, m);
      auto psd = welch_psd(std::span<const double>(xi.data(), samples), dt, segment_length);
      if (partial[b].size() == 0) {
        partial[b] = std::move(psd.density);
      } else {
        partial[b] += psd.density;
      }
    }
  });
  const Index bins = static_cast<Index>(segment_length / 2 + 1);
  PowerSpectrum out;
  out.frequency = RVector::LinSpaced(bins, 0.0, static_cast<double>(bins - 1)) /
                  (static_cast<double>(segment_length) * dt);
  out.density = RVector::Zero(bins);
  for (const auto& p : partial) out.density += p;
  out.density /= static_cast<double>(trajectories);
  return out;
}

SlopeFit fit_loglog_slope(const PowerSpectrum& psd, double f_lo, double f_hi) {
  if (!(f_lo > 0.0) || !(f_hi > f_lo)) throw ValidationError("fit_loglog_slope: need 0 < f_lo < f_hi");
  std::vector<double> x, y;
  for (Index k = 0; k < psd.frequency.size(); ++k) {
    const double f = psd.frequency(k);
    if (f >= f_lo && f <= f_hi && psd.density(k) > 0.0) {
      x.push_back(std::log(f));
      y.push_back(std::log(psd.density(k)));
    }
  }
  if (x.size() < 2) throw ValidationError("fit_loglog_slope: fewer than two bins in range");
  Eigen::MatrixXd a(static_cast<Index>(x.size()), 2);
  Eigen::VectorXd b(static_cast<Index>(y.size()));
  for (std::size_t k = 0; k < x.size(); ++k) {
    a(static_cast<Index>(k), 0) = x[k];
    a(static_cast<Index>(k), 1) = 1.0;
    b(static_cast<Index>(k)) = y[k];
  }
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
  return {c(0), c(1), x.size()};
}

double motional_narrowing_rate(double coupling, double rate) {
  if (!(rate > 0.0)) throw ValidationError("motional_narrowing_rate: rate must be > 0");
  const double w = kTwoPi * coupling;
  return w * w / (2.0 * rate);
}

}  // namespace sqc
