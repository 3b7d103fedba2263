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

#include "sqc/charge_qubit.hpp"

#include <cmath>
#include <sstream>

#include "sqc/parallel.hpp"
#include "sqc/symmetric_solvers.hpp"

namespace sqc {
namespace {

RMatrix cpb_real_matrix(const CpbParams& p) {
  const Index dim = p.dimension();
  RMatrix h = RMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const double n = static_cast<double>(i - p.charge_cutoff);
    h(i, i) = p.ec * (n - p.ng) * (n - p.ng);
    if (i + 1 < dim) {
      // cos(phi) = (|n><n+1| + |n+1><n|) / 2
      h(i, i + 1) = -0.5 * p.ej;
      h(i + 1, i) = -0.5 * p.ej;
    }
  }
  return h;
}

}  // namespace

CpbParams CpbParams::with_squid(double ec, double ej0, double flux_ratio, double ng,
                                int charge_cutoff) {
  if (!(ej0 >= 0.0)) throw ValidationError("CpbParams::with_squid: Ej0 must be >= 0");
  return CpbParams{ec, std::abs(tunable_ej(ej0, flux_ratio)), ng, charge_cutoff};
}

void CpbParams::validate() const {
  std::ostringstream os;
  if (!(ec > 0.0) || !std::isfinite(ec)) os << "Ec must be > 0; ";
  if (!(ej >= 0.0) || !std::isfinite(ej)) os << "Ej must be >= 0; ";
  if (!std::isfinite(ng)) os << "ng must be finite; ";
  if (charge_cutoff < 2) os << "charge cutoff must be >= 2; ";
  if (2 * static_cast<Index>(charge_cutoff) + 1 > kMaxDimension) os << "charge cutoff too large; ";
  const auto msg = os.str();
  if (!msg.empty()) throw ValidationError("CpbParams: " + msg);
}

HermitianOperator cpb_hamiltonian(const CpbParams& p) {
  p.validate();
  return HermitianOperator::from_real(cpb_real_matrix(p));
}

HermitianOperator cpb_charge_operator(const CpbParams& p) {
  p.validate();
  RVector n(p.dimension());
  for (Index i = 0; i < n.size(); ++i) n(i) = static_cast<double>(i - p.charge_cutoff);
  return HermitianOperator::diagonal(n);
}

HermitianOperator reduced_two_level(const CpbParams& p) {
  p.validate();
  const double eps = p.ec * (p.ng - 0.5);
  return HermitianOperator(eps * pauli::z() - 0.5 * p.ej * pauli::x());
}

double cos_pi(double x) {
  // Reduce to r in [0, 1] using cos(pi x) = cos(pi |x mod 2|) symmetry.
  double r = std::abs(std::fmod(x, 2.0));
  if (r > 1.0) r = 2.0 - r;
  if (r == 0.0) return 1.0;
  if (r == 0.5) return 0.0;
  if (r == 1.0) return -1.0;
  if (r == 1.0 / 3.0) return 0.5;
  if (r == 2.0 / 3.0) return -0.5;
  if (r < 0.5) return std::sin(kPi * (0.5 - r));
  return -std::sin(kPi * (r - 0.5));
}

double tunable_ej(double ej0, double flux_ratio) {
  if (!(ej0 >= 0.0)) throw ValidationError("tunable_ej: Ej0 must be >= 0");
  if (!std::isfinite(flux_ratio)) throw ValidationError("tunable_ej: flux ratio must be finite");
  return 2.0 * ej0 * cos_pi(flux_ratio);
}

SpectrumTable spectrum_vs_ng(const CpbParams& p, std::span<const double> ng_grid, int levels,
                             int threads) {
  p.validate();
  if (levels < 1 || levels > 2 * p.charge_cutoff) {
    std::ostringstream os;
    os << "spectrum_vs_ng: requested " << levels << " levels but cutoff N = " << p.charge_cutoff
       << " allows at most " << 2 * p.charge_cutoff;
    throw ValidationError(os.str());
  }
  for (double ng : ng_grid) {
    if (!(ng >= 0.0 && ng <= 1.0)) throw ValidationError("spectrum_vs_ng: ng grid must lie in [0, 1]");
  }
  SpectrumTable table;
  table.control_name = "ng";
  table.control = Eigen::Map<const RVector>(ng_grid.data(), static_cast<Index>(ng_grid.size()));
  table.levels.resize(table.control.size(), levels);
  parallel_for(ng_grid.size(), threads, [&](std::size_t i) {
    CpbParams point = p;
    point.ng = ng_grid[i];
    auto eig = lowest_symmetric(cpb_real_matrix(point), levels, false);
    table.levels.row(static_cast<Index>(i)) = eig.values.transpose();
  });
  return table;
}

}  // namespace sqc
