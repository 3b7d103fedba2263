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

#include "sqc/cavity_qed.hpp"
#include "sqc/charge_qubit.hpp"
#include "sqc/cli/config.hpp"
#include "sqc/coupled_qubits.hpp"
#include "sqc/dynamics.hpp"
#include "sqc/experiments.hpp"
#include "sqc/flux_qubit.hpp"
#include "sqc/noise.hpp"
#include "sqc/phase_qubit.hpp"

namespace sqc::cli {

// Builders from resolved blocks to library parameter records. Each one calls
// the record's own validation.
CpbParams to_cpb(const Block& b);
ThreeJunctionParams to_flux3(const Block& b);
RfSquidParams to_rfsquid(const Block& b);
PhaseQubitParams to_phase(const Block& b);
CoupledParams to_coupled(const Block& b);
JaynesCummingsParams to_jc(const Block& b);
std::optional<DecoherenceParams> to_decoherence(const Block& b);
FluctuatorEnsemble to_ensemble(const Block& b, std::uint64_t seed);
IntegratorOptions to_integrator(const Block& precision);

}  // namespace sqc::cli
