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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every sub-check is printed with its measured value.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sqc/cavity_qed.hpp"
#include "sqc/charge_qubit.hpp"
#include "sqc/cli/config.hpp"
#include "sqc/cli/run.hpp"
#include "sqc/coupled_qubits.hpp"
#include "sqc/experiments.hpp"
#include "sqc/flux_qubit.hpp"
#include "sqc/noise.hpp"
#include "sqc/phase_qubit.hpp"

namespace {

using namespace sqc;
constexpr double kPi = std::numbers::pi;
constexpr int kAutoThreads = 0;

class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    lines_.push_back(std::string(ok ? "    ok   " : "    FAIL ") + what);
  }
  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] const std::vector<std::string>& lines() const { return lines_; }

 private:
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = n == 1 ? a : a + (b - a) * k / (n - 1);
  return out;
}

RVector cpb_levels(double ec, double ej, double ng, int k) {
  return hermitian_eigen(cpb_hamiltonian(CpbParams{ec, ej, ng, 10})).eigenvalues.head(k);
}

void charge_spectrum(Criterion& c) {
  const auto e = cpb_levels(5.0, 1.0, 0.5, 3);
  const double gap = e(1) - e(0);
  c.check(std::abs(gap - 1.0) <= 0.02, fmt("gap at ng = 0.5 is %.6f GHz, Ej = 1 (2%% band)", gap));

  double periodic = 0.0, symmetric = 0.0;
  for (double ng : linspace(0.0, 1.0, 41)) {
    const auto base = cpb_levels(5.0, 1.0, ng, 5);
    periodic = std::max(periodic, (base - cpb_levels(5.0, 1.0, ng + 1.0, 5)).cwiseAbs().maxCoeff());
    symmetric = std::max(symmetric, (base - cpb_levels(5.0, 1.0, 1.0 - ng, 5)).cwiseAbs().maxCoeff());
  }
  c.check(periodic <= 1e-9, fmt("period-1 deviation %.2e (<= 1e-9)", periodic));
  c.check(symmetric <= 1e-9, fmt("ng -> 1 - ng deviation %.2e (<= 1e-9)", symmetric));

  const auto ratio = [](double ec) {
    const auto l = cpb_levels(ec, 1.0, 0.5, 3);
    return (l(2) - l(1)) / (l(1) - l(0));
  };
  const double charge = ratio(5.0);
  const double mixed = ratio(1.0);
  c.check(charge > 5.0, fmt("separation ratio at Ec/Ej = 5 is %.4f (> 5)", charge));
  c.check(mixed < charge, fmt("separation ratio at Ec/Ej = 1 is %.4f (< %.4f)", mixed, charge));

  // The sweep path used by the CLI agrees with the dense solve.
  const auto grid = linspace(0.0, 1.0, 101);
  const auto table = spectrum_vs_ng(CpbParams{5.0, 1.0, 0.0, 10}, grid, 5);
  double sweep_dev = 0.0;
  for (Index i = 0; i < table.points(); ++i) {
    sweep_dev = std::max(sweep_dev, (RVector(table.levels.row(i).transpose()) -
                                     cpb_levels(5.0, 1.0, grid[static_cast<std::size_t>(i)], 5))
                                        .cwiseAbs()
                                        .maxCoeff());
  }
  c.check(sweep_dev <= 1e-9, fmt("101-point sweep vs dense solve %.2e", sweep_dev));
}

void tunable_coupling(Criterion& c) {
  const double eps = std::numeric_limits<double>::epsilon();
  for (double ej0 : {1.0, 3.7, 25.0}) {
    const double a = tunable_ej(ej0, 0.0);
    const double b = tunable_ej(ej0, 0.5);
    const double d = tunable_ej(ej0, 1.0 / 3.0);
    const bool ok = std::abs(a - 2.0 * ej0) <= 2.0 * eps * ej0 && std::abs(b) <= 2.0 * eps * ej0 &&
                    std::abs(d - ej0) <= 2.0 * eps * ej0;
    c.check(ok, fmt("Ej0 = %.1f: Ej(0) = %.17g, Ej(1/2) = %.3g, Ej(1/3) = %.17g", ej0, a, b, d));
  }
}

void flux_spectrum(Criterion& c) {
  const ThreeJunctionParams p;  // Ej/Ec = 40, alpha = 0.8, 48 x 48 grid
  std::vector<double> f(201);
  for (int i = 0; i < 201; ++i) f[static_cast<std::size_t>(i)] = 0.5 + 0.001 * (i - 100);
  const auto sweep = flux_sweep(p, f, 2, kAutoThreads);
  const auto& t = sweep.table;

  double asym = 0.0;
  for (int i = 0; i < 201; ++i) {
    asym = std::max(asym, (t.levels.row(i) - t.levels.row(200 - i)).cwiseAbs().maxCoeff());
  }
  c.check(asym <= 1e-8, fmt("max |E(0.5 - d) - E(0.5 + d)| = %.2e (<= 1e-8)", asym));

  Index best = 0;
  for (Index i = 0; i < t.points(); ++i) {
    if (t.levels(i, 1) - t.levels(i, 0) < t.levels(best, 1) - t.levels(best, 0)) best = i;
  }
  c.check(best == 100, fmt("minimum gap at f = %.3f (%.6f GHz)", f[static_cast<std::size_t>(best)],
                           t.levels(best, 1) - t.levels(best, 0)));

  const auto& cur = sweep.ground_current;
  bool signs = true;
  for (int i = 0; i < 100; ++i) signs = signs && cur(i) > 0.0 && cur(200 - i) < 0.0;
  c.check(std::abs(cur(100)) <= 1e-8 && signs,
          fmt("ground current %.2e at f = 0.5, %.4f at 0.499, %.4f at 0.501", cur(100), cur(99), cur(101)));

  const double delta = t.levels(100, 1) - t.levels(100, 0);
  double num = 0.0, den = 0.0;
  for (int i = 90; i <= 110; ++i) {
    const double x = f[static_cast<std::size_t>(i)] - 0.5;
    const double gap = t.levels(i, 1) - t.levels(i, 0);
    num += x * x * (gap * gap - delta * delta);
    den += x * x * x * x;
  }
  const double slope2 = num / den;
  double residual = 0.0;
  for (int i = 90; i <= 110; ++i) {
    const double x = f[static_cast<std::size_t>(i)] - 0.5;
    const double gap = t.levels(i, 1) - t.levels(i, 0);
    residual = std::max(residual, std::abs(std::sqrt(delta * delta + slope2 * x * x) - gap) / gap);
  }
  c.check(residual <= 0.02, fmt("two-level fit on [0.49, 0.51]: Delta = %.6f GHz, eps' = %.3f GHz, "
                                "max residual %.2e (<= 2%%)", delta, std::sqrt(slope2), residual));
}

void phase_qubit(Criterion& c) {
  Index previous = std::numeric_limits<Index>::max();
  bool monotone = true, ordered = true, harmonic = true;
  std::string counts;
  double worst_harmonic = 0.0;
  for (int k = 0; k <= 9; ++k) {
    const PhaseQubitParams p{1e5, 1.0, 0.1 * k};
    const Index count = count_bound_states(p);
    counts += (k ? " " : "") + std::to_string(count);
    monotone = monotone && count <= previous;
    previous = count;
    const auto r = readout_transitions(p);
    ordered = ordered && r.nu12 < r.nu01;
    if (count >= 5) {
      const double ref = std::pow(1.0 - p.s * p.s, 0.25) * std::sqrt(2.0 * p.ec * p.ej);
      const double dev = std::abs(r.nu01 / ref - 1.0);
      worst_harmonic = std::max(worst_harmonic, dev);
      harmonic = harmonic && dev <= 0.03;
    }
  }
  c.check(monotone, "bound states at s = 0..0.9: " + counts);
  c.check(harmonic, fmt("worst |nu01 / ((1 - s^2)^(1/4) sqrt(2 Ec Ej)) - 1| = %.4f (<= 3%%)", worst_harmonic));
  c.check(ordered, "nu12 < nu01 at every bias");
}

void cnot(Criterion& c) {
  const CoupledParams p{10.0, 7.0, 1.0};
  auto analytic = coupled_energies(p);
  std::vector<double> expected{analytic.data(), analytic.data() + 4};
  std::sort(expected.begin(), expected.end());
  const auto eig = hermitian_eigen(coupled_hamiltonian(p));
  double dev = 0.0;
  for (int k = 0; k < 4; ++k) dev = std::max(dev, std::abs(eig.eigenvalues(k) - expected[static_cast<std::size_t>(k)]));
  c.check(dev <= 1e-12, fmt("eigenvalues {%.0f, %.0f, %.0f, %.0f}, max deviation %.1e", expected[0],
                            expected[1], expected[2], expected[3], dev));

  double worst = 0.0;
  for (double chi : {0.0, 0.5, 2.0}) {
    const auto other = hermitian_eigen(coupled_hamiltonian({10.0, 7.0, chi}));
    for (int k = 0; k < 4; ++k) {
      worst = std::max(worst, std::abs(std::abs(eig.eigenvectors.col(k).dot(other.eigenvectors.col(k))) - 1.0));
    }
  }
  c.check(worst <= 1e-10, fmt("eigenvector overlap across chi: |1 - |<v|v'>|| <= %.1e", worst));

  const auto pulse = cnot_pulse(p, 0.2);
  const auto table = simulate_cnot(p, pulse);
  c.check(table.fidelity >= 0.99, fmt("fidelity %.6f at A = 0.2 GHz, %.2f ns, %.0f GHz", table.fidelity,
                                      pulse.duration, pulse.frequency));
  const CoupledParams free{10.0, 7.0, 0.0};
  const double uncoupled = simulate_cnot(free, cnot_pulse(free, 0.2)).fidelity;
  c.check(uncoupled <= 0.8, fmt("fidelity %.4f with chi = 0 (<= 0.8)", uncoupled));
}

void open_system(Criterion& c) {
  const auto grid = linspace(0.0, 3000.0, 301);
  const auto decay = t1_decay({1.0, 1.0}, grid);
  double rel = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    rel = std::max(rel, std::abs(decay.population(static_cast<Index>(k)) / std::exp(-grid[k] / 1000.0) - 1.0));
  }
  c.check(rel <= 1e-6, fmt("T1 decay vs exp(-t/T1): max relative error %.2e", rel));

  const double t_phi = 30.0;
  const std::vector<LindbladChannel> dephase{{pauli::z(), 1.0 / (2.0 * t_phi)}};
  const auto plus = DensityMatrix::pure(QuantumState::normalized(CVector::Ones(2)));
  const auto tg = linspace(0.0, 90.0, 31);
  const auto states = evolve_lindblad(HermitianOperator::zero(2), dephase, plus, tg);
  double rel_phi = 0.0;
  for (std::size_t k = 0; k < tg.size(); ++k) {
    const double coh = 2.0 * std::abs(states[k].matrix()(0, 1));
    rel_phi = std::max(rel_phi, std::abs(coh / std::exp(-tg[k] / t_phi) - 1.0));
  }
  c.check(rel_phi <= 1e-6, fmt("pure dephasing vs exp(-t/Tphi): max relative error %.2e", rel_phi));

  CMatrix h(3, 3);
  h << 1.0, Complex(0.2, -0.1), 0.0, Complex(0.2, 0.1), -0.5, 0.3, 0.0, 0.3, 0.25;
  const HermitianOperator hop(h);
  const auto psi = QuantumState::normalized(CVector::LinSpaced(3, 1.0, 2.0));
  const std::vector<LindbladChannel> none{{CMatrix::Zero(3, 3), 0.0}};
  const auto tz = linspace(0.0, 4.0, 21);
  const auto zr = evolve_lindblad(hop, none, DensityMatrix::pure(psi), tz);
  double unitary_dev = 0.0;
  for (std::size_t k = 0; k < tz.size(); ++k) {
    const CVector v = evolve_unitary(hop, psi, tz[k]).amplitudes();
    unitary_dev = std::max(unitary_dev, (zr[k].matrix() - v * v.adjoint()).cwiseAbs().maxCoeff());
  }
  c.check(unitary_dev <= 1e-8, fmt("zero-rate Lindblad vs unitary: %.2e", unitary_dev));

  c.check(std::abs(*decay.fitted.t1_us - 1.0) <= 0.05, fmt("fitted T1 %.5f us (configured 1)", *decay.fitted.t1_us));
  const auto r = ramsey(10.0, 0.01, {2.0, 1.0}, linspace(0.0, 3000.0, 601));
  c.check(std::abs(*r.fitted.t2_us - 1.0) <= 0.05, fmt("fitted T2 %.5f us (configured 1)", *r.fitted.t2_us));
}

void box_metrics(Criterion& c) {
  const double q1 = quality_factor(1.0, 20.0);
  const double q2 = quality_factor(10.0, 10.0);
  c.check(q1 == kPi * 1.0 * 1000.0 * 20.0 && std::abs(q1 / 6.28e4 - 1.0) < 1e-3,
          fmt("Q(1 us, 20 GHz) = %.1f", q1));
  c.check(q2 == kPi * 10.0 * 1000.0 * 10.0 && std::abs(q2 / 3.14e5 - 1.0) < 1e-3,
          fmt("Q(10 us, 10 GHz) = %.1f", q2));
  DrivePulse d;
  d.amplitude = 0.05;
  d.frequency = 10.0;
  const auto r = rabi(HermitianOperator(-5.0 * pauli::z()), d, std::nullopt, linspace(0.0, 40.0, 401));
  c.check(std::abs(*r.fitted.visibility - 1.0) <= 5e-3, fmt("decoherence-free Rabi visibility %.6f", *r.fitted.visibility));
}

void one_over_f(Criterion& c) {
  const auto e = FluctuatorEnsemble::log_uniform(20, 1e-4, 1.0, 0.001, 2024);
  const double f_lo = 10.0 * 1e-4 / kPi;
  const double f_hi = 1000.0 * 1e-4 / kPi;
  const auto psd = rtn_psd(e, 1000, 196608, 0.1, 131072, kAutoThreads);
  const auto fit = fit_loglog_slope(psd, f_lo, f_hi);
  c.check(std::abs(fit.slope + 1.0) <= 0.15,
          fmt("slope %.4f over [%.2e, %.2e] GHz, 1000 trajectories, %zu bins", fit.slope, f_lo, f_hi, fit.points));

  const auto small_a = rtn_psd(e, 48, 8192, 0.1, 4096, 1);
  const auto small_b = rtn_psd(e, 48, 8192, 0.1, 4096, 3);
  const auto small_c = rtn_psd(e, 48, 8192, 0.1, 4096, 1);
  c.check((small_a.density.array() == small_b.density.array()).all() &&
              (small_a.density.array() == small_c.density.array()).all(),
          "seeded spectra bit-identical across reruns and thread counts");

  const double gamma = 0.01;
  const double v = 0.2;
  const FluctuatorEnsemble one{{gamma}, {v}, 31};
  const auto grid = linspace(0.0, 200.0, 21);
  const int m = 10000;
  std::vector<double> sum(grid.size(), 0.0), sum_sq(grid.size(), 0.0);
  for (int traj = 0; traj < m; ++traj) {
    const auto xi = rtn_trajectory(one, grid, static_cast<std::uint64_t>(traj));
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double x = xi(0) * xi(static_cast<Index>(k));
      sum[k] += x;
      sum_sq[k] += x * x;
    }
  }
  double worst = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double mean = sum[k] / m;
    const double sigma = std::sqrt(std::max(sum_sq[k] / m - mean * mean, 0.0) / m);
    worst = std::max(worst, std::abs(mean - v * v * std::exp(-2.0 * gamma * grid[k])) / sigma);
  }
  c.check(worst <= 3.0, fmt("single-fluctuator autocorrelation: worst deviation %.2f sigma (10^4 trajectories)", worst));
}

void cavity(Criterion& c) {
  JaynesCummingsParams p;
  p.nu01 = 5.0;
  p.nu_c = 5.0;
  p.g = 0.1;
  const auto grid = linspace(0.0, 20.0, 401);
  const auto r = vacuum_rabi(p, grid);
  double dev = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    dev = std::max(dev, std::abs(r.population(static_cast<Index>(k)) - std::pow(std::cos(2.0 * kPi * p.g * grid[k]), 2)));
  }
  c.check(dev <= 1e-6, fmt("vacuum Rabi vs cos^2(2 pi g t): %.2e", dev));

  p.qubit = DecoherenceParams{0.5, 0.5};
  p.kappa = 10.0;
  const auto strong = strong_coupling_check(p, 10.0);
  c.check(strong.strong, fmt("g = 0.1 GHz, T2 = 0.5 us, 1/kappa = 0.1 us: %s", strong.summary.c_str()));
  p.g = 1e-4;
  const auto weak = strong_coupling_check(p, 10.0);
  c.check(!weak.strong, fmt("g = 1e-4 GHz, same lifetimes: %s", weak.summary.c_str()));
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void reproducibility(Criterion& c) {
  std::vector<std::pair<std::string, std::string>> docs;
  for (const char* name : {"cpb_spectrum", "rfsquid_spectrum", "phase_spectrum", "evolve", "rabi", "ramsey",
                           "t1", "cnot", "jc", "fluxoid"}) {
    docs.emplace_back(name, slurp(std::filesystem::path(SQC_CONFIG_DIR) / (std::string(name) + ".ini")));
  }
  docs.emplace_back("noise-psd (64 trajectories)",
                    "command = noise-psd\nseed = 2024\n[noise]\ncount = 20\ngamma_min = 1e-4\n"
                    "gamma_max = 1\ncoupling = 0.001\ntrajectories = 64\nsamples = 16384\nsegment = 8192\n");
  for (const auto& [name, text] : docs) {
    const auto config = cli::parse_config(text);
    const auto a = cli::render_csv(config, 1);
    const auto b = cli::render_csv(config, 4);
    const auto again = cli::render_csv(cli::parse_config(text), 1);
    c.check(a == b && a == again && !a.empty(), name + ": identical at 1 and 4 threads and on rerun");
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> body;
    double budget_s;  // 0: no runtime requirement
  };
  const std::vector<Entry> entries{
      {1, "charge qubit spectrum", charge_spectrum, 5},
      {2, "tunable Josephson coupling", tunable_coupling, 0},
      {3, "three-junction flux qubit spectrum", flux_spectrum, 120},
      {4, "phase qubit levels and readout ordering", phase_qubit, 30},
      {5, "coupled qubits and CNOT", cnot, 60},
      {6, "open-system oracles and fits", open_system, 0},
      {7, "quality factor and visibility", box_metrics, 0},
      {8, "1/f noise from telegraph fluctuators", one_over_f, 120},
      {9, "cavity QED", cavity, 0},
      {10, "reproducible CLI output", reproducibility, 0},
  };
  int failures = 0;
  for (const auto& entry : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.body(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (entry.budget_s > 0.0) {
      c.check(seconds < entry.budget_s, fmt("runtime %.1f s (< %.0f s)", seconds, entry.budget_s));
    }
    std::printf("criterion %2d %s  %s (%.1f s)\n", entry.id, c.ok() ? "PASS" : "FAIL", entry.title, seconds);
    for (const auto& line : c.lines()) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    if (!c.ok()) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
