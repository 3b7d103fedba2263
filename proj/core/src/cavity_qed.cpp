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

#include "sqc/cavity_qed.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace sqc {
namespace {

CMatrix qubit_op(const JaynesCummingsParams& p, const CMatrix& op) {
  return kron(op, CMatrix::Identity(p.photon_cutoff + 1, p.photon_cutoff + 1));
}

CMatrix annihilation(int cutoff) {
  CMatrix a = CMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

// Ladder operators with q = 0 the ground state.
CMatrix qubit_raising() {
  CMatrix s = CMatrix::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

CMatrix qubit_z() {
  CMatrix z = CMatrix::Zero(2, 2);
  z(0, 0) = -1.0;
  z(1, 1) = 1.0;
  return z;
}

}  // namespace

void JaynesCummingsParams::validate() const {
  std::ostringstream os;
  if (!(nu01 > 0.0) || !std::isfinite(nu01)) os << "nu01 must be > 0; ";
  if (!(nu_c > 0.0) || !std::isfinite(nu_c)) os << "cavity frequency must be > 0; ";
  if (!(g >= 0.0) || !std::isfinite(g)) os << "g must be >= 0; ";
  if (photon_cutoff < 2) os << "photon cutoff must be >= 2; ";
  if (2 * (static_cast<Index>(photon_cutoff) + 1) > kMaxDimension) {
    os << "photon cutoff exceeds the dimension cap; ";
  }
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) os << "kappa must be >= 0; ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("JaynesCummingsParams: " + msg);
  if (qubit) qubit->validate();
}

CMatrix cavity_lowering(const JaynesCummingsParams& p) {
  p.validate();
  return kron(pauli::identity(), annihilation(p.photon_cutoff));
}

HermitianOperator jc_hamiltonian(const JaynesCummingsParams& p) {
  p.validate();
  const CMatrix a = cavity_lowering(p);
  const CMatrix up = qubit_op(p, qubit_raising());
  const CMatrix exchange = up * a;
  return HermitianOperator(0.5 * p.nu01 * qubit_op(p, qubit_z()) + p.nu_c * (a.adjoint() * a) +
                           p.g * (exchange + exchange.adjoint()));
}

HermitianOperator excitation_number(const JaynesCummingsParams& p) {
  p.validate();
  const CMatrix a = cavity_lowering(p);
  const CMatrix up = qubit_op(p, qubit_raising());
  return HermitianOperator(up * up.adjoint() + a.adjoint() * a);
}

ExperimentResult vacuum_rabi(const JaynesCummingsParams& p, std::span<const double> t_grid,
                             const IntegratorOptions& options) {
  p.validate();
  if (t_grid.empty()) throw ValidationError("vacuum_rabi: empty time grid");
  const auto h = jc_hamiltonian(p);
  const Index n1 = p.photon_cutoff + 1;
  const auto start = QuantumState::basis(p.dimension(), n1);  // |excited, 0>

  ExperimentResult out;
  out.time_ns = Eigen::Map<const RVector>(t_grid.data(), static_cast<Index>(t_grid.size()));
  out.population.resize(out.time_ns.size());

  std::vector<LindbladChannel> channels;
  if (p.kappa > 0.0) channels.push_back({cavity_lowering(p), p.kappa / kNsPerUs});
  if (p.qubit) {
    for (auto& c : p.qubit->channels()) {
      // Two-level channels use |1> as the excited state; here q = 1 is
      // excited too, but sz is flipped, which the dissipator does not see.
      channels.push_back({qubit_op(p, c.jump), c.rate});
    }
  }

  if (channels.empty()) {
    // Closed system: exact propagation from the eigendecomposition.
    for (Index k = 0; k < out.time_ns.size(); ++k) {
      const auto psi = evolve_unitary(h, start, out.time_ns(k));
      out.population(k) = psi.amplitudes().segment(n1, n1).squaredNorm();
    }
  } else {
    std::vector<double> grid;
    const bool prepended = t_grid.front() > 0.0;
    if (prepended) grid.push_back(0.0);
    grid.insert(grid.end(), t_grid.begin(), t_grid.end());
    const auto states = evolve_lindblad(h, channels, DensityMatrix::pure(start), grid, options);
    const std::size_t skip = prepended ? 1 : 0;
    for (std::size_t k = skip; k < states.size(); ++k) {
      double excited = 0.0;
      for (Index n = 0; n < n1; ++n) excited += states[k].population(n1 + n);
      out.population(static_cast<Index>(k - skip)) = excited;
    }
  }
  out.fitted.visibility = out.population.maxCoeff() - out.population.minCoeff();
  return out;
}

StrongCouplingReport strong_coupling_check(const JaynesCummingsParams& p, double margin) {
  p.validate();
  if (!(margin >= 1.0) || !std::isfinite(margin)) {
    throw ValidationError("strong_coupling_check: margin must be >= 1");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  StrongCouplingReport r;
  r.margin = margin;
  r.rabi_period_ns = p.g > 0.0 ? 1.0 / (2.0 * p.g) : inf;
  r.qubit_t2_ns = p.qubit ? p.qubit->t2_us * kNsPerUs : inf;
  r.photon_lifetime_ns = p.kappa > 0.0 ? kNsPerUs / p.kappa : inf;
  const double lhs = r.rabi_period_ns * margin;
  const double rhs = std::min(r.qubit_t2_ns, r.photon_lifetime_ns);
  if (std::isfinite(lhs)) {
    const double gap = rhs - lhs;
    r.marginal = std::isfinite(rhs) && std::abs(gap) <= 1e-12 * std::max(lhs, rhs);
    r.strong = gap > 0.0 || r.marginal;
  }
  std::ostringstream os;
  os << "rabi period " << r.rabi_period_ns << " ns x margin " << margin << " vs qubit T2 "
     << r.qubit_t2_ns << " ns, photon lifetime " << r.photon_lifetime_ns << " ns: "
     << (r.strong ? "strong" : "not strong") << (r.marginal ? " (marginal)" : "");
  r.summary = os.str();
  return r;
}

}  // namespace sqc
