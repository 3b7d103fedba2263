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

#include "sqc/cli/circuits.hpp"

#include <fmt/format.h>

namespace sqc::cli {

CpbParams to_cpb(const Block& b) {
  CpbParams p;
  const int cutoff = static_cast<int>(b.integer("charge_cutoff"));
  if (b.has("ej0")) {
    p = CpbParams::with_squid(b.real("ec"), b.real("ej0"), b.real("flux_ratio"), b.real("ng"), cutoff);
  } else {
    p.ec = b.real("ec");
    p.ej = b.real("ej");
    p.ng = b.real("ng");
    p.charge_cutoff = cutoff;
  }
  p.validate();
  if (b.integer("levels") < 1 || b.integer("levels") > p.dimension()) {
    throw ValidationError(fmt::format("[cpb] levels must be in [1, {}]", p.dimension()));
  }
  return p;
}

ThreeJunctionParams to_flux3(const Block& b) {
  ThreeJunctionParams p;
  p.ej = b.real("ej");
  p.ec = b.real("ec");
  p.alpha = b.real("alpha");
  p.f = b.real("f");
  p.grid_points = static_cast<int>(b.integer("grid_points"));
  p.kinetic = b.text("stencil") == "central" ? KineticStencil::kCentralDifference
                                             : KineticStencil::kSpectral;
  p.validate();
  if (b.integer("levels") < 1 || b.integer("levels") > 64) {
    throw ValidationError("[flux3] levels must be in [1, 64]");
  }
  return p;
}

RfSquidParams to_rfsquid(const Block& b) {
  RfSquidParams p;
  p.ej = b.real("ej");
  p.ec = b.real("ec");
  p.inductive_scale = b.real("inductive_scale");
  p.phi_ext = b.real("phi_ext");
  p.validate();
  if (b.integer("levels") < 1) throw ValidationError("[rfsquid] levels must be >= 1");
  if (b.integer("points") < 64 || b.integer("points") > kMaxDimension) {
    throw ValidationError(fmt::format("[rfsquid] points must be in [64, {}]", kMaxDimension));
  }
  return p;
}

PhaseQubitParams to_phase(const Block& b) {
  PhaseQubitParams p;
  p.ej = b.real("ej");
  p.ec = b.real("ec");
  p.s = b.real("s");
  p.validate();
  if (b.integer("levels") < 3) {
    throw ValidationError("[phase] levels must be >= 3 to resolve the 1-2 transition");
  }
  return p;
}

CoupledParams to_coupled(const Block& b) {
  CoupledParams p;
  p.ej1_star = b.real("ej1_star");
  p.ej2_star = b.real("ej2_star");
  p.chi = b.real("chi");
  p.validate();
  if (!(b.real("amplitude") > 0.0)) throw ValidationError("[coupled] amplitude must be > 0");
  if (b.has("duration") && !(b.real("duration") > 0.0)) {
    throw ValidationError("[coupled] duration must be > 0");
  }
  return p;
}

JaynesCummingsParams to_jc(const Block& b) {
  JaynesCummingsParams p;
  p.nu01 = b.real("nu01");
  p.nu_c = b.real("nu_c");
  p.g = b.real("g");
  p.photon_cutoff = static_cast<int>(b.integer("photon_cutoff"));
  p.kappa = b.real("kappa");
  p.qubit = to_decoherence(b);
  p.validate();
  if (!(b.real("margin") > 0.0)) throw ValidationError("[jc] margin must be > 0");
  return p;
}

std::optional<DecoherenceParams> to_decoherence(const Block& b) {
  if (!b.has("t1_us")) return std::nullopt;
  DecoherenceParams d{b.real("t1_us"), b.real("t2_us")};
  d.validate();
  return d;
}

FluctuatorEnsemble to_ensemble(const Block& b, std::uint64_t seed) {
  if (b.integer("count") < 1) throw ValidationError("[noise] count must be >= 1");
  auto e = FluctuatorEnsemble::log_uniform(static_cast<std::size_t>(b.integer("count")),
                                           b.real("gamma_min"), b.real("gamma_max"),
                                           b.real("coupling"), seed);
  e.validate();
  if (b.integer("trajectories") < 1) throw ValidationError("[noise] trajectories must be >= 1");
  if (b.integer("segment") < 16 || b.integer("samples") < b.integer("segment")) {
    throw ValidationError("[noise] need 16 <= segment <= samples");
  }
  if (b.has("dt") && !(b.real("dt") > 0.0)) throw ValidationError("[noise] dt must be > 0");
  if (b.has("f_lo") && !(b.real("f_lo") > 0.0 && b.real("f_hi") > b.real("f_lo"))) {
    throw ValidationError("[noise] need 0 < f_lo < f_hi");
  }
  return e;
}

IntegratorOptions to_integrator(const Block& precision) {
  IntegratorOptions o;
  o.halving_tolerance = precision.real("halving_tolerance");
  o.max_step_ns = precision.real("max_step_ns");
  if (!(o.halving_tolerance > 0.0)) {
    throw ValidationError("[precision] halving_tolerance must be > 0");
  }
  if (!(o.max_step_ns >= 0.0)) throw ValidationError("[precision] max_step_ns must be >= 0");
  return o;
}

}  // namespace sqc::cli
