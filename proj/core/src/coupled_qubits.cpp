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

#include "sqc/coupled_qubits.hpp"

#include <cmath>
#include <sstream>

namespace sqc {
namespace {

const std::array<Index, 2> kPairDims{2, 2};

CMatrix site_op(const CMatrix& op, int qubit) {
  return embed(op, kPairDims, static_cast<std::size_t>(qubit - 1));
}

void check_target(int target) {
  if (target != 1 && target != 2) throw ValidationError("drive target must be qubit 1 or 2");
}

}  // namespace

void CoupledParams::validate() const {
  std::ostringstream os;
  if (!(ej1_star > 0.0) || !std::isfinite(ej1_star)) os << "Ej1* must be > 0; ";
  if (!(ej2_star > 0.0) || !std::isfinite(ej2_star)) os << "Ej2* must be > 0; ";
  if (!std::isfinite(chi)) os << "chi must be finite; ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("CoupledParams: " + msg);
}

void DrivePulse::validate() const {
  std::ostringstream os;
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) os << "amplitude must be >= 0; ";
  if (!(frequency >= 0.0) || !std::isfinite(frequency)) os << "frequency must be >= 0; ";
  if (!(duration >= 0.0) || !std::isfinite(duration)) os << "duration must be >= 0; ";
  if (!std::isfinite(phase)) os << "phase must be finite; ";
  if (target != 1 && target != 2) os << "target must be 1 or 2; ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("DrivePulse: " + msg);
}

HermitianOperator coupled_hamiltonian(const CoupledParams& p) {
  p.validate();
  const CMatrix x1 = site_op(pauli::x(), 1);
  const CMatrix x2 = site_op(pauli::x(), 2);
  return HermitianOperator(-p.ej1_star * x1 - p.ej2_star * x2 + p.chi * (x1 * x2));
}

CMatrix product_eigenbasis() {
  const double r = std::sqrt(0.5);
  CVector plus(2), minus(2);
  plus << r, -r;
  minus << r, r;
  const std::array<const CVector*, 2> single{&plus, &minus};
  CMatrix basis(4, 4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) basis.col(2 * a + b) = kron(*single[a], *single[b]);
  }
  return basis;
}

Eigen::Vector4d coupled_energies(const CoupledParams& p) {
  p.validate();
  const double e1 = p.ej1_star, e2 = p.ej2_star, x = p.chi;
  return {e1 + e2 + x, e1 - e2 - x, -e1 + e2 - x, -e1 - e2 + x};
}

std::vector<Transition> transition_table(const CoupledParams& p, int target) {
  check_target(target);
  const auto energies = coupled_energies(p);
  const CMatrix basis = product_eigenbasis();
  const CMatrix drive = basis.adjoint() * site_op(pauli::z(), target) * basis;
  std::vector<Transition> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      const double element = std::abs(drive(b, a));
      if (element < 1e-12) continue;
      out.push_back({a, b, std::abs(energies(a) - energies(b)), element});
    }
  }
  return out;
}

double pi_pulse_duration(double amplitude) {
  if (!(amplitude > 0.0)) throw ValidationError("pi_pulse_duration: amplitude must be > 0");
  return 1.0 / (2.0 * amplitude);
}

DrivePulse cnot_pulse(const CoupledParams& p, double amplitude, bool mirrored) {
  p.validate();
  DrivePulse pulse;
  pulse.amplitude = amplitude;
  pulse.frequency = 2.0 * std::abs(p.ej2_star + (mirrored ? p.chi : -p.chi));
  pulse.duration = pi_pulse_duration(amplitude);
  pulse.target = 2;
  return pulse;
}

TruthTable simulate_cnot(const CoupledParams& p, const DrivePulse& pulse,
                         const IntegratorOptions& options) {
  p.validate();
  pulse.validate();

  // Conditional transitions of the target: control |-> first, then |+>.
  const auto energies = coupled_energies(p);
  const int control_stride = pulse.target == 2 ? 2 : 1;
  const int target_stride = pulse.target == 2 ? 1 : 2;
  auto label = [&](int control, int target) { return control * control_stride + target * target_stride; };
  const double f_minus = std::abs(energies(label(1, 0)) - energies(label(1, 1)));
  const double f_plus = std::abs(energies(label(0, 0)) - energies(label(0, 1)));
  const double d_minus = std::abs(pulse.frequency - f_minus);
  const double d_plus = std::abs(pulse.frequency - f_plus);

  TruthTable table;
  table.mirrored = d_plus < d_minus;
  table.off_resonant = std::min(d_minus, d_plus) > 10.0 * pulse.amplitude;

  DrivenHamiltonian h{coupled_hamiltonian(p), {}};
  h.drives.push_back({site_op(pauli::z(), pulse.target), pulse.amplitude, pulse.frequency,
                      pulse.phase});
  const CMatrix basis = product_eigenbasis();
  const std::array<double, 2> grid{0.0, pulse.duration};
  const auto states = evolve_driven(h, basis, grid, options);
  const CMatrix amplitudes = basis.adjoint() * states.back();

  std::array<int, 4> expected{};
  const int flipped_control = table.mirrored ? 0 : 1;
  for (int c = 0; c < 2; ++c) {
    for (int t = 0; t < 2; ++t) {
      expected[label(c, t)] = c == flipped_control ? label(c, 1 - t) : label(c, t);
    }
  }
  double score = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) table.populations(i, j) = std::norm(amplitudes(j, i));
    score += table.populations(i, expected[i]);
  }
  table.fidelity = score / 4.0;
  return table;
}

HermitianOperator capacitive_hamiltonian(const HermitianOperator& h1, const HermitianOperator& h2,
                                         double chi_c) {
  if (h1.dimension() != 2 || h2.dimension() != 2) {
    throw ValidationError("capacitive_hamiltonian: both qubits must be two-level");
  }
  if (!std::isfinite(chi_c)) throw ValidationError("capacitive_hamiltonian: chi_c must be finite");
  const CMatrix id = pauli::identity();
  return HermitianOperator(kron(h1.matrix(), id) + kron(id, h2.matrix()) +
                           chi_c * kron(pauli::z(), pauli::z()));
}

}  // namespace sqc
