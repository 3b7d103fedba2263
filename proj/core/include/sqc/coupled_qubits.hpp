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

#include <array>
#include <string_view>
#include <vector>

#include "sqc/dynamics.hpp"
#include "sqc/linalg.hpp"

namespace sqc {

/// Inductively coupled charge-qubit pair
///   H = -Ej1* sx(1) - Ej2* sx(2) + chi sx(1) sx(2)
/// in the product charge basis |q1 q2>, index 2 q1 + q2.
/// Single-qubit eigenstates follow sx|+-> = -+|+->, i.e.
/// |+> = (|0> - |1>)/sqrt 2 and |-> = (|0> + |1>)/sqrt 2.
struct CoupledParams {
  double ej1_star = 10.0;
  double ej2_star = 7.0;
  double chi = 1.0;

  void validate() const;
};

/// Labels of the product eigenbasis in the order used throughout.
inline constexpr std::array<std::string_view, 4> kProductLabels{"++", "+-", "-+", "--"};

HermitianOperator coupled_hamiltonian(const CoupledParams& p);

/// Columns |++>, |+->, |-+>, |--> in the charge basis. Independent of chi.
CMatrix product_eigenbasis();

/// E1*+E2*+chi, E1*-E2*-chi, -E1*+E2*-chi, -E1*-E2*+chi in label order.
Eigen::Vector4d coupled_energies(const CoupledParams& p);

struct Transition {
  int from = 0;  // label index, lower label first
  int to = 0;
  double frequency = 0.0;      // GHz
  double matrix_element = 0.0;  // |<to| sz(target) |from>|
};

/// Transitions driven by sz on `target` (1 or 2), i.e. all label pairs with a
/// nonzero matrix element.
std::vector<Transition> transition_table(const CoupledParams& p, int target = 2);

/// Rectangular microwave pulse amplitude cos(2 pi frequency t + phase) sz(target).
struct DrivePulse {
  double amplitude = 0.0;  // GHz
  double frequency = 0.0;  // GHz
  double phase = 0.0;
  double duration = 0.0;  // ns
  int target = 2;

  void validate() const;
};

/// Rotating-wave pi-pulse length for a unit matrix element: the drive
/// A cos(2 pi nu t) sx has co-rotating part (A/2) sx, which inverts the
/// populations after 1/(2A).
double pi_pulse_duration(double amplitude);

/// Resonant pi pulse on qubit 2. The default addresses 2|E2* - chi|, which
/// flips the target when the control is |->; `mirrored` addresses
/// 2|E2* + chi| and flips it when the control is |+>.
DrivePulse cnot_pulse(const CoupledParams& p, double amplitude, bool mirrored = false);

struct TruthTable {
  /// Row i: populations after the pulse starting from label i.
  Eigen::Matrix4d populations = Eigen::Matrix4d::Zero();
  double fidelity = 0.0;
  bool mirrored = false;      // which conditional mapping was scored
  bool off_resonant = false;  // detuned from both transitions by > 10 A
};

/// Integrates the full time-dependent Schrodinger equation (no rotating-wave
/// approximation) from each product eigenstate. Fidelity is the mean
/// population of the intended target state; the mapping is the one whose
/// transition lies closer to the pulse frequency.
TruthTable simulate_cnot(const CoupledParams& p, const DrivePulse& pulse,
                         const IntegratorOptions& options = {});

/// H1 x I + I x H2 + chi_c sz x sz for two-level h1 and h2.
HermitianOperator capacitive_hamiltonian(const HermitianOperator& h1, const HermitianOperator& h2,
                                         double chi_c);

}  // namespace sqc
