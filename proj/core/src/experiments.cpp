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

#include "sqc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace sqc {
namespace {

void check_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw ValidationError(std::string(what) + ": empty time grid");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(grid[k]) || grid[k] < 0.0 || (k > 0 && grid[k] < grid[k - 1])) {
      throw ValidationError(std::string(what) + ": time grid must be finite, >= 0 and ascending");
    }
  }
}

// Integrators expect the preparation time as the first grid entry.
std::vector<double> from_zero(std::span<const double> grid, bool& prepended) {
  std::vector<double> out;
  prepended = grid.front() > 0.0;
  if (prepended) out.push_back(0.0);
  out.insert(out.end(), grid.begin(), grid.end());
  return out;
}

double visibility(const RVector& population) {
  return population.maxCoeff() - population.minCoeff();
}

template <class Model>
struct ResidualFunctor {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  Model model;
  std::span<const double> t;
  std::span<const double> y;
  Index params;

  [[nodiscard]] int inputs() const { return static_cast<int>(params); }
  [[nodiscard]] int values() const { return static_cast<int>(t.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& r) const {
    for (std::size_t k = 0; k < t.size(); ++k) {
      r(static_cast<Index>(k)) = model(x, t[k]) - y[k];
    }
    return 0;
  }
};

// Returns the residual sum of squares; x is updated in place.
template <class Model>
double least_squares(const Model& model, std::span<const double> t, std::span<const double> y,
                     Eigen::VectorXd& x) {
  ResidualFunctor<Model> f{model, t, y, x.size()};
  Eigen::NumericalDiff<ResidualFunctor<Model>> numeric(f);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<ResidualFunctor<Model>>> lm(numeric);
  lm.parameters.maxfev = 4000;
  lm.parameters.xtol = 1e-14;
  lm.parameters.ftol = 1e-14;
  lm.minimize(x);
  Eigen::VectorXd r(static_cast<Index>(t.size()));
  f(x, r);
  return r.squaredNorm();
}

void check_fit_input(std::span<const double> t, std::span<const double> y, std::size_t minimum,
                     const char* what) {
  if (t.size() != y.size()) throw ValidationError(std::string(what) + ": size mismatch");
  if (t.size() < minimum) throw ValidationError(std::string(what) + ": too few samples");
}

}  // namespace

void DecoherenceParams::validate() const {
  std::ostringstream os;
  if (!(t1_us > 0.0) || !std::isfinite(t1_us)) os << "T1 must be > 0; ";
  if (!(t2_us > 0.0) || !(t2_us <= 2.0 * t1_us)) os << "T2 must lie in (0, 2 T1]; ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("DecoherenceParams: " + msg);
}

double DecoherenceParams::relaxation_rate() const {
  validate();
  return 1.0 / (t1_us * kNsPerUs);
}

double DecoherenceParams::pure_dephasing_rate() const {
  validate();
  const double rate = 1.0 / (t2_us * kNsPerUs) - 0.5 / (t1_us * kNsPerUs);
  return std::max(0.0, rate);
}

std::vector<LindbladChannel> DecoherenceParams::channels() const {
  return channels(CMatrix::Identity(2, 2));
}

std::vector<LindbladChannel> DecoherenceParams::channels(const CMatrix& frame) const {
  if (frame.rows() != 2 || frame.cols() != 2) {
    throw ValidationError("DecoherenceParams: frame must be 2x2");
  }
  const CMatrix lower = frame * pauli::lowering() * frame.adjoint();
  const CMatrix z = frame * pauli::z() * frame.adjoint();
  return {{lower, relaxation_rate()}, {z, 0.5 * pure_dephasing_rate()}};
}

ExperimentResult rabi(const HermitianOperator& qubit, const DrivePulse& drive,
                      const std::optional<DecoherenceParams>& dec, std::span<const double> t_grid,
                      const IntegratorOptions& options) {
  if (qubit.dimension() != 2) throw ValidationError("rabi: qubit must be two-level");
  drive.validate();
  check_grid(t_grid, "rabi");
  if (dec) dec->validate();

  const auto eig = hermitian_eigen(qubit);
  const CMatrix& frame = eig.eigenvectors;
  const CVector ground = frame.col(0);
  const CVector excited = frame.col(1);

  DrivenHamiltonian h{qubit, {}};
  h.drives.push_back({frame * pauli::x() * frame.adjoint(), drive.amplitude, drive.frequency,
                      drive.phase});

  bool prepended = false;
  const auto grid = from_zero(t_grid, prepended);
  const std::size_t skip = prepended ? 1 : 0;

  ExperimentResult out;
  out.time_ns = Eigen::Map<const RVector>(t_grid.data(), static_cast<Index>(t_grid.size()));
  out.population.resize(out.time_ns.size());
  if (!dec) {
    const auto states = evolve_driven(h, ground, grid, options);
    for (std::size_t k = skip; k < states.size(); ++k) {
      out.population(static_cast<Index>(k - skip)) = std::norm(excited.dot(states[k].col(0)));
    }
  } else {
    const auto channels = dec->channels(frame);
    const auto rho0 = DensityMatrix(ground * ground.adjoint());
    const auto states = evolve_lindblad(h, channels, rho0, grid, options);
    for (std::size_t k = skip; k < states.size(); ++k) {
      out.population(static_cast<Index>(k - skip)) =
          excited.dot(states[k].matrix() * excited).real();
    }
  }
  out.fitted.nu01 = eig.eigenvalues(1) - eig.eigenvalues(0);
  out.fitted.visibility = visibility(out.population);
  return out;
}

ExperimentResult ramsey(double nu01, double detuning, const DecoherenceParams& dec,
                        std::span<const double> delay_grid, const IntegratorOptions& options) {
  if (!(nu01 > 0.0) || !std::isfinite(nu01)) throw ValidationError("ramsey: nu01 must be > 0");
  if (!std::isfinite(detuning) || !(std::abs(detuning) < nu01)) {
    throw ValidationError("ramsey: |detuning| must be below nu01");
  }
  dec.validate();
  check_grid(delay_grid, "ramsey");

  // Rotating frame: |1> sits `detuning` above |0>.
  const auto h = HermitianOperator(-0.5 * detuning * pauli::z());
  const Complex i(0.0, 1.0);
  const CMatrix half_pi =
      std::sqrt(0.5) * (pauli::identity() - i * pauli::x());  // exp(-i pi/4 sigma_x)
  CMatrix start = CMatrix::Zero(2, 2);
  start(0, 0) = 1.0;
  const auto rho0 = DensityMatrix(half_pi * start * half_pi.adjoint());

  bool prepended = false;
  const auto grid = from_zero(delay_grid, prepended);
  const std::size_t skip = prepended ? 1 : 0;
  const auto channels = dec.channels();
  const auto states = evolve_lindblad(h, channels, rho0, grid, options);

  ExperimentResult out;
  out.time_ns = Eigen::Map<const RVector>(delay_grid.data(), static_cast<Index>(delay_grid.size()));
  out.population.resize(out.time_ns.size());
  for (std::size_t k = skip; k < states.size(); ++k) {
    const CMatrix rho = half_pi * states[k].matrix() * half_pi.adjoint();
    out.population(static_cast<Index>(k - skip)) = rho(1, 1).real();
  }

  const std::vector<double> t(out.time_ns.data(), out.time_ns.data() + out.time_ns.size());
  const std::vector<double> y(out.population.data(), out.population.data() + out.population.size());
  const auto fit = fit_ramsey_fringe(t, y);
  out.fitted.nu01 = nu01;
  out.fitted.detuning = fit.detuning;
  out.fitted.t2_us = fit.t2_ns / kNsPerUs;
  out.fitted.visibility = visibility(out.population);
  out.fitted.q = quality_factor(*out.fitted.t2_us, nu01);
  return out;
}

ExperimentResult t1_decay(const DecoherenceParams& dec, std::span<const double> t_grid,
                          const IntegratorOptions& options) {
  dec.validate();
  check_grid(t_grid, "t1_decay");
  CMatrix excited = CMatrix::Zero(2, 2);
  excited(1, 1) = 1.0;

  bool prepended = false;
  const auto grid = from_zero(t_grid, prepended);
  const std::size_t skip = prepended ? 1 : 0;
  const auto channels = dec.channels();
  const auto states =
      evolve_lindblad(HermitianOperator::zero(2), channels, DensityMatrix(excited), grid, options);

  ExperimentResult out;
  out.time_ns = Eigen::Map<const RVector>(t_grid.data(), static_cast<Index>(t_grid.size()));
  out.population.resize(out.time_ns.size());
  for (std::size_t k = skip; k < states.size(); ++k) {
    out.population(static_cast<Index>(k - skip)) = states[k].population(1);
  }
  out.fitted.visibility = visibility(out.population);
  if (t_grid.size() >= 3) {
    const auto fit = fit_exponential_decay(t_grid, std::span<const double>(out.population.data(),
                                                                          t_grid.size()));
    out.fitted.t1_us = fit.time_ns / kNsPerUs;
  }
  return out;
}

double quality_factor(double t2_us, double nu01) {
  if (!(t2_us > 0.0) || !(nu01 > 0.0)) {
    throw ValidationError("quality_factor: T2 and nu01 must be > 0");
  }
  return kPi * t2_us * kNsPerUs * nu01;
}

DecayFit fit_exponential_decay(std::span<const double> t, std::span<const double> y) {
  check_fit_input(t, y, 3, "fit_exponential_decay");
  const double span = t.back() - t.front();
  const double y0 = y.front();
  const double y1 = y.back();
  if (!(span > 0.0) || std::abs(y0 - y1) < 1e-12) {
    throw FitError("fit_exponential_decay: trace does not decay");
  }
  // Initial time constant from the first 1/e crossing.
  double tau = span;
  const double level = y1 + (y0 - y1) / std::exp(1.0);
  for (std::size_t k = 1; k < t.size(); ++k) {
    if ((y[k] - level) * (y0 - level) <= 0.0) {
      tau = std::max(t[k] - t.front(), span / static_cast<double>(t.size()));
      break;
    }
  }
  auto model = [](const Eigen::VectorXd& x, double time) {
    return x(0) * std::exp(-time / x(1)) + x(2);
  };
  Eigen::VectorXd x(3);
  x << (y0 - y1) * std::exp(t.front() / tau), tau, y1;
  least_squares(model, t, y, x);
  if (!x.allFinite() || !(x(1) > 0.0)) throw FitError("fit_exponential_decay: fit diverged");
  return {x(0), x(1), x(2)};
}

FringeFit fit_ramsey_fringe(std::span<const double> t, std::span<const double> y) {
  check_fit_input(t, y, 5, "fit_ramsey_fringe");
  const double span = t.back() - t.front();
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  if (!(span > 0.0) || *hi - *lo < 1e-9) {
    throw FitError("fit_ramsey_fringe: trace is flat; detuning and T2 are not identifiable");
  }
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());

  // Periodogram peak over [0, Nyquist] at a quarter of the natural resolution.
  double min_dt = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (t[k] > t[k - 1]) min_dt = std::min(min_dt, t[k] - t[k - 1]);
  }
  const double df = 0.25 / span;
  const auto bins = static_cast<int>(std::ceil(0.5 / min_dt / df));
  double best_f = 0.0;
  double best_power = -1.0;
  for (int b = 0; b <= bins; ++b) {
    const double f = b * df;
    Complex acc = 0.0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      acc += (y[k] - mean) * std::polar(1.0, -kTwoPi * f * t[k]);
    }
    if (std::norm(acc) > best_power) {
      best_power = std::norm(acc);
      best_f = f;
    }
  }

  auto model = [](const Eigen::VectorXd& x, double time) {
    return x(0) + x(1) * std::exp(-time / x(2)) * std::cos(kTwoPi * x(3) * time);
  };
  Eigen::VectorXd best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (double scale : {0.3, 1.0, 3.0}) {
    Eigen::VectorXd x(4);
    x << mean, y.front() - mean, scale * span, best_f;
    const double cost = least_squares(model, t, y, x);
    if (x.allFinite() && x(2) > 0.0 && cost < best_cost) {
      best_cost = cost;
      best = x;
    }
  }
  if (best.size() == 0) throw FitError("fit_ramsey_fringe: fit diverged");
  return {best(0), best(1), best(2), std::abs(best(3))};
}

}  // namespace sqc
