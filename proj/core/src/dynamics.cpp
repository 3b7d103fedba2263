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

#include "sqc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace sqc {
namespace {

// Liouvillians up to this Hilbert dimension are integrated in vectorized
// form; larger ones use the matrix form of the master equation.
constexpr Index kSuperoperatorLimit = 12;
constexpr double kMaxTotalSteps = 2.0e8;

void check_grid(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw ValidationError(std::string(what) + ": empty time grid");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!std::isfinite(grid[k])) throw ValidationError(std::string(what) + ": non-finite time");
    if (k > 0 && grid[k] < grid[k - 1]) {
      throw ValidationError(std::string(what) + ": time grid must be ascending");
    }
  }
}

void check_channels(std::span<const LindbladChannel> channels, Index dim, const char* what) {
  for (const auto& c : channels) {
    if (c.jump.rows() != dim || c.jump.cols() != dim) {
      throw ValidationError(std::string(what) + ": jump operator dimension mismatch");
    }
    if (!(c.rate >= 0.0) || !std::isfinite(c.rate)) {
      throw ValidationError(std::string(what) + ": channel rates must be finite and >= 0");
    }
  }
}

double dissipative_scale(std::span<const LindbladChannel> channels) {
  double s = 0.0;
  for (const auto& c : channels) s += c.rate * (c.jump.adjoint() * c.jump).norm();
  return s;
}

double initial_step(double frequency_scale, double rate_scale, std::span<const double> grid,
                    const IntegratorOptions& options) {
  const double span = grid.back() - grid.front();
  double h = span > 0.0 ? span : 1.0;
  const double scale = frequency_scale + rate_scale / kTwoPi;
  if (scale > 0.0) h = std::min(h, 1.0 / (50.0 * scale));
  if (options.max_step_ns > 0.0) h = std::min(h, options.max_step_ns);
  return h;
}

// Classic RK4 with the step shrunk per interval so output times are hit exactly.
template <class Derivative>
std::vector<CMatrix> rk4_on_grid(Derivative& f, const CMatrix& y0, std::span<const double> grid,
                                 double h_max) {
  double total_steps = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    total_steps += std::ceil((grid[k] - grid[k - 1]) / h_max);
  }
  if (total_steps > kMaxTotalSteps) {
    std::ostringstream os;
    os << "RK4: step " << h_max << " ns would need " << total_steps << " steps";
    throw NumericalError(os.str());
  }

  std::vector<CMatrix> out;
  out.reserve(grid.size());
  out.push_back(y0);
  CMatrix y = y0;
  CMatrix k1(y.rows(), y.cols()), k2(y.rows(), y.cols()), k3(y.rows(), y.cols()),
      k4(y.rows(), y.cols()), tmp(y.rows(), y.cols());
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double t0 = grid[k - 1];
    const double dt = grid[k] - t0;
    if (dt > 0.0) {
      const auto steps = static_cast<long>(std::max(1.0, std::ceil(dt / h_max - 1e-12)));
      const double h = dt / static_cast<double>(steps);
      for (long s = 0; s < steps; ++s) {
        const double t = t0 + static_cast<double>(s) * h;
        f(t, y, k1);
        tmp = y + (0.5 * h) * k1;
        f(t + 0.5 * h, tmp, k2);
        tmp = y + (0.5 * h) * k2;
        f(t + 0.5 * h, tmp, k3);
        tmp = y + h * k3;
        f(t + h, tmp, k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
    }
    out.push_back(y);
  }
  return out;
}

template <class Derivative>
std::vector<CMatrix> integrate_verified(Derivative& f, const CMatrix& y0,
                                        std::span<const double> grid, double h0,
                                        const IntegratorOptions& options) {
  if (grid.size() == 1) return {y0};
  double h = h0;
  auto coarse = rk4_on_grid(f, y0, grid, h);
  double first_bad_time = grid.front();
  double worst = 0.0;
  for (int r = 0; r < options.max_refinements; ++r) {
    h *= 0.5;
    auto fine = rk4_on_grid(f, y0, grid, h);
    worst = 0.0;
    first_bad_time = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double diff = (fine[k] - coarse[k]).cwiseAbs().maxCoeff();
      worst = std::max(worst, diff);
      if (diff > options.halving_tolerance && std::isnan(first_bad_time)) first_bad_time = grid[k];
    }
    if (!std::isfinite(worst)) break;
    if (worst <= options.halving_tolerance) return fine;
    coarse = std::move(fine);
  }
  std::ostringstream os;
  os << "RK4 step halving did not reach tolerance " << options.halving_tolerance
     << " (last difference " << worst << "); first violated at t = " << first_bad_time << " ns";
  throw NumericalError(os.str());
}

struct SchrodingerRhs {
  const DrivenHamiltonian* h;
  CMatrix work;

  void operator()(double t, const CMatrix& y, CMatrix& dy) {
    dy.noalias() = h->base.matrix() * y;
    for (const auto& d : h->drives) {
      const double c = d.amplitude * std::cos(kTwoPi * d.frequency * t + d.phase);
      if (c != 0.0) {
        work.noalias() = d.op * y;
        dy += c * work;
      }
    }
    dy *= Complex(0.0, -kTwoPi);
  }
};

// d vec(rho)/dt = (L0 + sum_k c_k(t) L_k) vec(rho).
struct VectorizedLindbladRhs {
  CMatrix static_part;
  std::vector<CMatrix> drive_parts;
  std::vector<DriveTerm> drives;
  CMatrix work;

  void operator()(double t, const CMatrix& y, CMatrix& dy) {
    dy.noalias() = static_part * y;
    for (std::size_t k = 0; k < drives.size(); ++k) {
      const auto& d = drives[k];
      const double c = d.amplitude * std::cos(kTwoPi * d.frequency * t + d.phase);
      if (c != 0.0) {
        work.noalias() = drive_parts[k] * y;
        dy += c * work;
      }
    }
  }
};

struct MatrixLindbladRhs {
  const DrivenHamiltonian* h;
  std::vector<CMatrix> jumps;
  std::vector<CMatrix> jumps_adjoint;
  std::vector<CMatrix> decay;  // L^+ L
  std::vector<double> rates;
  CMatrix hmat, work, work2;

  void operator()(double t, const CMatrix& rho, CMatrix& drho) {
    hmat = h->at(t);
    work.noalias() = hmat * rho;
    drho = Complex(0.0, -kTwoPi) * work;
    work.noalias() = rho * hmat;
    drho += Complex(0.0, kTwoPi) * work;
    for (std::size_t k = 0; k < jumps.size(); ++k) {
      if (rates[k] == 0.0) continue;
      work.noalias() = jumps[k] * rho;
      work2.noalias() = work * jumps_adjoint[k];
      drho += rates[k] * work2;
      work.noalias() = decay[k] * rho;
      drho -= (0.5 * rates[k]) * work;
      work.noalias() = rho * decay[k];
      drho -= (0.5 * rates[k]) * work;
    }
  }
};

CMatrix commutator_superoperator(const CMatrix& op) {
  const Index d = op.rows();
  const CMatrix id = CMatrix::Identity(d, d);
  return Complex(0.0, -kTwoPi) * (kron(id, op) - kron(op.transpose(), id));
}

CMatrix dissipator_superoperator(std::span<const LindbladChannel> channels, Index d) {
  const CMatrix id = CMatrix::Identity(d, d);
  CMatrix out = CMatrix::Zero(d * d, d * d);
  for (const auto& c : channels) {
    if (c.rate == 0.0) continue;
    const CMatrix decay = c.jump.adjoint() * c.jump;
    out += c.rate * (kron(c.jump.conjugate(), c.jump) - 0.5 * kron(id, decay) -
                     0.5 * kron(decay.transpose(), id));
  }
  return out;
}

CMatrix vectorize(const CMatrix& rho) {
  return Eigen::Map<const CMatrix>(rho.data(), rho.size(), 1);
}

CMatrix unvectorize(const CMatrix& v, Index d) { return Eigen::Map<const CMatrix>(v.data(), d, d); }

std::vector<DensityMatrix> to_density_matrices(const std::vector<CMatrix>& states,
                                               std::span<const double> grid, Index d,
                                               bool vectorized) {
  std::vector<DensityMatrix> out;
  out.reserve(states.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    try {
      out.emplace_back(vectorized ? unvectorize(states[k], d) : states[k],
                       DensityTolerance::evolved());
    } catch (const ValidationError& e) {
      std::ostringstream os;
      os << "Lindblad evolution left the physical state space at t = " << grid[k]
         << " ns: " << e.what();
      throw NumericalError(os.str());
    }
  }
  return out;
}

}  // namespace

CMatrix DrivenHamiltonian::at(double t_ns) const {
  CMatrix m = base.matrix();
  for (const auto& d : drives) {
    m += d.amplitude * std::cos(kTwoPi * d.frequency * t_ns + d.phase) * d.op;
  }
  return m;
}

double DrivenHamiltonian::norm_bound() const {
  double n = base.norm();
  for (const auto& d : drives) n += std::abs(d.amplitude) * d.op.norm();
  return n;
}

QuantumState evolve_unitary(const HermitianOperator& h, const QuantumState& psi0, double t_ns) {
  if (h.dimension() != psi0.dimension()) {
    throw ValidationError("evolve_unitary: Hamiltonian and state dimensions differ");
  }
  if (!(t_ns >= 0.0) || !std::isfinite(t_ns)) {
    throw ValidationError("evolve_unitary: time must be finite and >= 0");
  }
  const auto eig = hermitian_eigen(h);
  const CVector phases = (eig.eigenvalues * (-kTwoPi * t_ns))
                             .unaryExpr([](double a) { return std::polar(1.0, a); });
  CVector coeffs = eig.eigenvectors.adjoint() * psi0.amplitudes();
  coeffs = coeffs.cwiseProduct(phases);
  CVector out = eig.eigenvectors * coeffs;
  // Remove the O(1e-15) norm drift from the two basis changes.
  return QuantumState(out / out.norm());
}

std::vector<CMatrix> evolve_driven(const DrivenHamiltonian& h, const CMatrix& initial_columns,
                                   std::span<const double> t_grid,
                                   const IntegratorOptions& options) {
  check_grid(t_grid, "evolve_driven");
  if (initial_columns.rows() != h.dimension()) {
    throw ValidationError("evolve_driven: state dimension mismatch");
  }
  for (const auto& d : h.drives) {
    if (d.op.rows() != h.dimension() || d.op.cols() != h.dimension()) {
      throw ValidationError("evolve_driven: drive operator dimension mismatch");
    }
  }
  SchrodingerRhs rhs{&h, CMatrix(initial_columns.rows(), initial_columns.cols())};
  const double h0 = initial_step(h.norm_bound(), 0.0, t_grid, options);
  return integrate_verified(rhs, initial_columns, t_grid, h0, options);
}

CMatrix lindblad_generator(const HermitianOperator& h, std::span<const LindbladChannel> channels) {
  check_channels(channels, h.dimension(), "lindblad_generator");
  return commutator_superoperator(h.matrix()) + dissipator_superoperator(channels, h.dimension());
}

std::vector<DensityMatrix> evolve_lindblad(const HermitianOperator& h,
                                           std::span<const LindbladChannel> channels,
                                           const DensityMatrix& rho0,
                                           std::span<const double> t_grid,
                                           const IntegratorOptions& options) {
  return evolve_lindblad(DrivenHamiltonian{h, {}}, channels, rho0, t_grid, options);
}

std::vector<DensityMatrix> evolve_lindblad(const DrivenHamiltonian& h,
                                           std::span<const LindbladChannel> channels,
                                           const DensityMatrix& rho0,
                                           std::span<const double> t_grid,
                                           const IntegratorOptions& options) {
  check_grid(t_grid, "evolve_lindblad");
  const Index d = h.dimension();
  if (rho0.dimension() != d) throw ValidationError("evolve_lindblad: state dimension mismatch");
  check_channels(channels, d, "evolve_lindblad");
  for (const auto& drive : h.drives) {
    if (drive.op.rows() != d || drive.op.cols() != d) {
      throw ValidationError("evolve_lindblad: drive operator dimension mismatch");
    }
  }
  const double h0 = initial_step(h.norm_bound(), dissipative_scale(channels), t_grid, options);

  if (d <= kSuperoperatorLimit) {
    VectorizedLindbladRhs rhs;
    rhs.static_part =
        commutator_superoperator(h.base.matrix()) + dissipator_superoperator(channels, d);
    for (const auto& drive : h.drives) {
      rhs.drive_parts.push_back(commutator_superoperator(drive.op));
      rhs.drives.push_back(drive);
    }
    rhs.work.resize(d * d, 1);
    const auto states = integrate_verified(rhs, vectorize(rho0.matrix()), t_grid, h0, options);
    return to_density_matrices(states, t_grid, d, true);
  }

  MatrixLindbladRhs rhs;
  rhs.h = &h;
  for (const auto& c : channels) {
    rhs.jumps.push_back(c.jump);
    rhs.jumps_adjoint.push_back(c.jump.adjoint());
    rhs.decay.push_back(c.jump.adjoint() * c.jump);
    rhs.rates.push_back(c.rate);
  }
  rhs.work.resize(d, d);
  rhs.work2.resize(d, d);
  const auto states = integrate_verified(rhs, rho0.matrix(), t_grid, h0, options);
  return to_density_matrices(states, t_grid, d, false);
}

std::vector<DensityMatrix> evolve_lindblad_exact(const HermitianOperator& h,
                                                 std::span<const LindbladChannel> channels,
                                                 const DensityMatrix& rho0,
                                                 std::span<const double> t_grid) {
  check_grid(t_grid, "evolve_lindblad_exact");
  const Index d = h.dimension();
  if (rho0.dimension() != d) throw ValidationError("evolve_lindblad_exact: dimension mismatch");
  if (d > 64) throw ValidationError("evolve_lindblad_exact: dimension too large for expm route");
  const CMatrix generator = lindblad_generator(h, channels);

  std::vector<CMatrix> states;
  states.reserve(t_grid.size());
  CMatrix v = vectorize(rho0.matrix());
  states.push_back(v);
  double cached_dt = -1.0;
  CMatrix propagator;
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    const double dt = t_grid[k] - t_grid[k - 1];
    if (dt != cached_dt) {
      propagator = (generator * dt).exp();
      cached_dt = dt;
    }
    v = propagator * v;
    states.push_back(v);
  }
  return to_density_matrices(states, t_grid, d, true);
}

}  // namespace sqc
