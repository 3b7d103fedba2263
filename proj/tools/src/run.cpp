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

#include "sqc/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <fmt/format.h>

#include "sqc/cli/circuits.hpp"
#include "sqc/parallel.hpp"

#ifndef SQC_VERSION
#define SQC_VERSION "unknown"
#endif

namespace sqc::cli {
namespace {

std::string num(double v) { return fmt::format("{:.15g}", v); }

class CsvWriter {
 public:
  explicit CsvWriter(const RunConfig& config) {
    text_ += fmt::format("# sqcsim {}\n", SQC_VERSION);
    text_ += fmt::format("# seed = {}\n", config.seed);
    for (const auto& line : config.resolved()) text_ += "# " + line + "\n";
  }

  void metric(const std::string& name, double value) {
    text_ += fmt::format("# {} = {}\n", name, num(value));
  }
  void note(const std::string& name, const std::string& value) {
    text_ += fmt::format("# {} = {}\n", name, value);
  }

  void columns(const std::vector<std::string>& names) { row(names); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) text_ += ',';
      text_ += cells[i];
    }
    text_ += '\n';
  }

  void row(double lead, const RVector& values) {
    std::vector<std::string> cells{num(lead)};
    for (Index k = 0; k < values.size(); ++k) cells.push_back(num(values(k)));
    row(cells);
  }

  [[nodiscard]] const std::string& text() const { return text_; }

 private:
  std::string text_;
};

std::vector<std::string> level_columns(const std::string& lead, Index levels) {
  std::vector<std::string> names{lead};
  for (Index k = 0; k < levels; ++k) names.push_back(fmt::format("E{}", k));
  return names;
}

// Energies of one sweep point. Levels that do not exist come back as NaN.
RVector point_levels(const Block& b, Index levels, double& extra) {
  const auto padded = [levels](const RVector& e) {
    RVector out = RVector::Constant(levels, std::numeric_limits<double>::quiet_NaN());
    const Index n = std::min(levels, e.size());
    out.head(n) = e.head(n);
    return out;
  };
  if (b.name == "cpb") {
    const double ng = b.real("ng");
    return spectrum_vs_ng(to_cpb(b), std::span(&ng, 1), static_cast<int>(levels)).levels.row(0);
  }
  if (b.name == "flux3") {
    const auto p = to_flux3(b);
    const auto solved = solve_three_junction(p, levels, true);
    extra = persistent_current(solved.ground_state, p);
    return solved.energies;
  }
  if (b.name == "phase") {
    const auto p = to_phase(b);
    extra = static_cast<double>(count_bound_states(p));
    return padded(well_levels(p, levels).energies);
  }
  const auto p = to_rfsquid(b);
  return rf_squid_levels(p, levels, b.integer("points")).energies;
}

void spectrum(const RunConfig& c, CsvWriter& csv, int threads) {
  const auto values = c.sweep->values();
  const Index levels = c.circuit.integer("levels");
  std::vector<RVector> rows(values.size());
  std::vector<double> extras(values.size(), 0.0);
  parallel_for(values.size(), threads, [&](std::size_t i) {
    Block b = c.circuit;
    b.values[c.sweep->parameter] = fmt::format("{}", values[i]);
    rows[i] = point_levels(b, levels, extras[i]);
  });

  auto names = level_columns(c.sweep->parameter, levels);
  if (c.circuit.name == "flux3") names.push_back("I0");
  if (c.circuit.name == "phase") names.push_back("bound_states");
  const bool extra = names.size() > static_cast<std::size_t>(levels) + 1;
  csv.columns(names);
  for (std::size_t i = 0; i < values.size(); ++i) {
    RVector r = rows[i];
    if (extra) {
      r.conservativeResize(r.size() + 1);
      r(r.size() - 1) = extras[i];
    }
    csv.row(values[i], r);
  }
}

// Time grid starting at zero; `skip` is 1 when zero was added in front.
std::vector<double> grid_from_zero(const TimeGrid& g, std::size_t& skip) {
  auto t = g.values();
  skip = 0;
  if (t.front() > 0.0) {
    t.insert(t.begin(), 0.0);
    skip = 1;
  }
  return t;
}

void evolve(const RunConfig& c, CsvWriter& csv) {
  const auto& b = c.circuit;
  const double nu01 = b.real("nu01");
  // |1> is the excited state.
  const HermitianOperator h(-0.5 * nu01 * pauli::z());
  CVector psi(2);
  const std::string initial = b.text("initial");
  if (initial == "ground") psi << 1.0, 0.0;
  if (initial == "excited") psi << 0.0, 1.0;
  if (initial == "plus") psi << std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2;
  const auto rho0 = DensityMatrix::pure(QuantumState::normalized(psi));
  const auto dec = to_decoherence(b);
  const auto channels = dec ? dec->channels() : std::vector<LindbladChannel>{};

  std::size_t skip = 0;
  const auto t = grid_from_zero(*c.time, skip);
  const auto states = evolve_lindblad(h, channels, rho0, t, to_integrator(c.precision));
  csv.columns({"time_ns", "p1", "rho01_re", "rho01_im"});
  for (std::size_t k = skip; k < t.size(); ++k) {
    const auto& m = states[k].matrix();
    csv.row({num(t[k]), num(m(1, 1).real()), num(m(0, 1).real()), num(m(0, 1).imag())});
  }
}

void trace(const ExperimentResult& r, CsvWriter& csv, const std::string& column) {
  csv.columns({"time_ns", column});
  for (Index k = 0; k < r.time_ns.size(); ++k) {
    csv.row({num(r.time_ns(k)), num(r.population(k))});
  }
}

void fitted(const FittedMetrics& f, CsvWriter& csv) {
  if (f.nu01) csv.metric("nu01_ghz", *f.nu01);
  if (f.detuning) csv.metric("fit_detuning_ghz", *f.detuning);
  if (f.t1_us) csv.metric("fit_t1_us", *f.t1_us);
  if (f.t2_us) csv.metric("fit_t2_us", *f.t2_us);
  if (f.visibility) csv.metric("visibility", *f.visibility);
  if (f.q) csv.metric("quality_factor", *f.q);
}

DecoherenceParams required_decoherence(const Block& b, const std::string& command) {
  auto dec = to_decoherence(b);
  if (!dec) throw ValidationError(fmt::format("{} needs [qubit] t1_us and t2_us", command));
  return *dec;
}

void rabi_run(const RunConfig& c, CsvWriter& csv) {
  const auto& b = c.circuit;
  const double nu01 = b.real("nu01");
  const HermitianOperator h(-0.5 * nu01 * pauli::z());
  DrivePulse drive;
  drive.amplitude = b.real("amplitude");
  drive.frequency = nu01 - b.real("detuning");
  drive.duration = c.time->stop;
  const auto t = c.time->values();
  const auto r = rabi(h, drive, to_decoherence(b), t, to_integrator(c.precision));
  csv.metric("drive_frequency_ghz", drive.frequency);
  fitted(r.fitted, csv);
  trace(r, csv, "p1");
}

void ramsey_run(const RunConfig& c, CsvWriter& csv) {
  const auto& b = c.circuit;
  const auto t = c.time->values();
  const auto r = ramsey(b.real("nu01"), b.real("detuning"), required_decoherence(b, "ramsey"), t,
                        to_integrator(c.precision));
  fitted(r.fitted, csv);
  trace(r, csv, "p1");
}

void t1_run(const RunConfig& c, CsvWriter& csv) {
  const auto t = c.time->values();
  const auto r = t1_decay(required_decoherence(c.circuit, "t1"), t, to_integrator(c.precision));
  fitted(r.fitted, csv);
  trace(r, csv, "p1");
}

void cnot_run(const RunConfig& c, CsvWriter& csv) {
  const auto& b = c.circuit;
  const auto p = to_coupled(b);
  auto pulse = cnot_pulse(p, b.real("amplitude"), b.flag("mirrored"));
  pulse.phase = b.real("phase");
  if (b.has("duration")) pulse.duration = b.real("duration");
  const auto table = simulate_cnot(p, pulse, to_integrator(c.precision));
  csv.metric("drive_frequency_ghz", pulse.frequency);
  csv.metric("pulse_duration_ns", pulse.duration);
  csv.note("mapping", table.mirrored ? "flip target when control is +" : "flip target when control is -");
  if (table.off_resonant) csv.note("warning", "pulse is off resonance with both transitions");
  csv.metric("fidelity", table.fidelity);
  std::vector<std::string> names{"initial"};
  for (const auto label : kProductLabels) names.push_back(fmt::format("p_{}", label));
  csv.columns(names);
  for (Index i = 0; i < 4; ++i) {
    std::vector<std::string> cells{std::string(kProductLabels[static_cast<std::size_t>(i)])};
    for (Index j = 0; j < 4; ++j) cells.push_back(num(table.populations(i, j)));
    csv.row(cells);
  }
}

void noise_run(const RunConfig& c, CsvWriter& csv, int threads) {
  const auto& b = c.circuit;
  const auto e = to_ensemble(b, c.seed);
  const double gmin = b.real("gamma_min");
  const double dt = b.has("dt") ? b.real("dt") : 0.1 / b.real("gamma_max");
  const auto psd = rtn_psd(e, static_cast<std::size_t>(b.integer("trajectories")),
                           static_cast<std::size_t>(b.integer("samples")), dt,
                           static_cast<std::size_t>(b.integer("segment")), threads);
  const double f_lo = b.has("f_lo") ? b.real("f_lo") : 10.0 * gmin / std::numbers::pi;
  const double f_hi = b.has("f_hi") ? b.real("f_hi") : 1000.0 * gmin / std::numbers::pi;
  csv.metric("dt_ns", dt);
  csv.metric("fit_f_lo_ghz", f_lo);
  csv.metric("fit_f_hi_ghz", f_hi);
  try {
    const auto fit = fit_loglog_slope(psd, f_lo, f_hi);
    csv.metric("fit_slope", fit.slope);
    csv.metric("fit_points", static_cast<double>(fit.points));
  } catch (const ValidationError& ex) {
    csv.note("fit_slope", fmt::format("unavailable ({})", ex.what()));
  }
  csv.columns({"frequency_ghz", "psd"});
  for (Index k = 0; k < psd.frequency.size(); ++k) {
    csv.row({num(psd.frequency(k)), num(psd.density(k))});
  }
}

void jc_run(const RunConfig& c, CsvWriter& csv) {
  const auto p = to_jc(c.circuit);
  const auto report = strong_coupling_check(p, c.circuit.real("margin"));
  csv.note("strong_coupling", report.strong ? "true" : "false");
  if (report.marginal) csv.note("strong_coupling_marginal", "true");
  csv.metric("rabi_period_ns", report.rabi_period_ns);
  csv.metric("qubit_t2_ns", report.qubit_t2_ns);
  csv.metric("photon_lifetime_ns", report.photon_lifetime_ns);
  const auto t = c.time->values();
  const auto r = vacuum_rabi(p, t, to_integrator(c.precision));
  trace(r, csv, "p_excited");
}

void fluxoid_run(const RunConfig& c, CsvWriter& csv) {
  const auto p = to_rfsquid(c.circuit);
  csv.columns({"phi_star", "potential_ghz", "m", "residual"});
  for (const double phi : rf_squid_minima(p)) {
    const auto rec = classify_fluxoid(p, phi);
    csv.row({num(rec.phi_star), num(rf_squid_potential(phi, p)), fmt::format("{}", rec.m),
             num(rec.residual)});
  }
}

}  // namespace

std::string render_csv(const RunConfig& config, int threads) {
  CsvWriter csv(config);
  const auto& cmd = config.command;
  if (cmd == "spectrum") spectrum(config, csv, threads);
  else if (cmd == "evolve") evolve(config, csv);
  else if (cmd == "rabi") rabi_run(config, csv);
  else if (cmd == "ramsey") ramsey_run(config, csv);
  else if (cmd == "t1") t1_run(config, csv);
  else if (cmd == "cnot") cnot_run(config, csv);
  else if (cmd == "noise-psd") noise_run(config, csv, threads);
  else if (cmd == "jc") jc_run(config, csv);
  else if (cmd == "fluxoid") fluxoid_run(config, csv);
  else throw ValidationError(fmt::format("unknown command '{}'", cmd));
  return csv.text();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err, int threads) {
  std::string text;
  try {
    text = render_csv(config, threads);
  } catch (const ValidationError& e) {
    err << "sqcsim: invalid input: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "sqcsim: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  if (config.output.empty()) {
    out << text;
    out.flush();
    return kExitOk;
  }
  std::ofstream file(config.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "sqcsim: cannot write " << config.output << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

}  // namespace sqc::cli
