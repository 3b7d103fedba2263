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

#include "sqc/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "sqc/cli/circuits.hpp"

namespace sqc::cli {
namespace {

enum class Kind { kReal, kInteger, kBool, kChoice, kText };

struct KeySpec {
  std::string name;
  Kind kind = Kind::kReal;
  std::optional<std::string> fallback;  // default value; none = optional or required
  bool required = false;
  std::vector<std::string> choices;
};

using Schema = std::vector<KeySpec>;

KeySpec req(std::string name, Kind kind = Kind::kReal) { return {std::move(name), kind, {}, true, {}}; }
KeySpec opt(std::string name, Kind kind = Kind::kReal) { return {std::move(name), kind, {}, false, {}}; }
KeySpec def(std::string name, std::string value, Kind kind = Kind::kReal) {
  return {std::move(name), kind, std::move(value), false, {}};
}
KeySpec choice(std::string name, std::string value, std::vector<std::string> choices) {
  return {std::move(name), Kind::kChoice, std::move(value), false, std::move(choices)};
}

const std::map<std::string, Schema>& circuit_schemas() {
  static const std::map<std::string, Schema> schemas{
      {"cpb",
       {req("ec"), opt("ej"), opt("ej0"), def("flux_ratio", "0"), def("ng", "0"),
        def("charge_cutoff", "10", Kind::kInteger), def("levels", "5", Kind::kInteger)}},
      {"flux3",
       {req("ej"), req("ec"), def("alpha", "0.8"), def("f", "0.5"),
        def("grid_points", "48", Kind::kInteger), def("levels", "6", Kind::kInteger),
        choice("stencil", "spectral", {"spectral", "central"})}},
      {"rfsquid",
       {req("ej"), req("ec"), req("inductive_scale"), def("phi_ext", "0"),
        def("levels", "4", Kind::kInteger), def("points", "4096", Kind::kInteger)}},
      {"phase", {req("ej"), req("ec"), def("s", "0"), def("levels", "3", Kind::kInteger)}},
      {"qubit",
       {req("nu01"), opt("t1_us"), opt("t2_us"), def("amplitude", "0.05"), def("detuning", "0.01"),
        choice("initial", "plus", {"ground", "excited", "plus"})}},
      {"coupled",
       {req("ej1_star"), req("ej2_star"), req("chi"), def("amplitude", "0.2"),
        def("mirrored", "false", Kind::kBool), def("phase", "0"), opt("duration")}},
      {"noise",
       {req("count", Kind::kInteger), req("gamma_min"), req("gamma_max"), req("coupling"),
        def("trajectories", "1000", Kind::kInteger), opt("dt"),
        def("samples", "196608", Kind::kInteger), def("segment", "131072", Kind::kInteger),
        opt("f_lo"), opt("f_hi")}},
      {"jc",
       {req("nu01"), req("nu_c"), req("g"), def("photon_cutoff", "5", Kind::kInteger),
        def("kappa", "0"), opt("t1_us"), opt("t2_us"), def("margin", "10")}},
  };
  return schemas;
}

const Schema kSweepSchema{req("parameter", Kind::kText), req("start"), req("stop"),
                          req("points", Kind::kInteger)};
const Schema kTimeSchema{def("start", "0"), req("stop"), req("points", Kind::kInteger)};
const Schema kPrecisionSchema{def("halving_tolerance", "1e-9"), def("max_step_ns", "0")};

const std::map<std::string, std::vector<std::string>> kCircuitsFor{
    {"spectrum", {"cpb", "flux3", "phase", "rfsquid"}},
    {"evolve", {"qubit"}},
    {"rabi", {"qubit"}},
    {"ramsey", {"qubit"}},
    {"t1", {"qubit"}},
    {"cnot", {"coupled"}},
    {"noise-psd", {"noise"}},
    {"jc", {"jc"}},
    {"fluxoid", {"rfsquid"}},
};

bool uses_time(const std::string& command) {
  return command == "evolve" || command == "rabi" || command == "ramsey" || command == "t1" ||
         command == "jc";
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(const std::string& text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

template <class Int>
std::optional<Int> parse_int(const std::string& text) {
  Int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<bool> parse_bool(const std::string& text) {
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  return std::nullopt;
}

// Canonical text for a value of the given kind, or nullopt when malformed.
std::optional<std::string> canonical(const KeySpec& spec, const std::string& raw) {
  const std::string text = trim(raw);
  switch (spec.kind) {
    case Kind::kReal:
      if (auto v = parse_real(text)) return fmt::format("{:.15g}", *v);
      return std::nullopt;
    case Kind::kInteger:
      if (auto v = parse_int<long>(text)) return fmt::format("{}", *v);
      return std::nullopt;
    case Kind::kBool:
      if (auto v = parse_bool(text)) return *v ? "true" : "false";
      return std::nullopt;
    case Kind::kChoice:
      if (std::find(spec.choices.begin(), spec.choices.end(), text) != spec.choices.end()) {
        return text;
      }
      return std::nullopt;
    case Kind::kText:
      if (!text.empty()) return text;
      return std::nullopt;
  }
  return std::nullopt;
}

std::string describe(const KeySpec& spec) {
  switch (spec.kind) {
    case Kind::kReal: return "a finite number";
    case Kind::kInteger: return "an integer";
    case Kind::kBool: return "true or false";
    case Kind::kChoice: {
      std::string s = "one of";
      for (const auto& c : spec.choices) s += " " + c;
      return s;
    }
    case Kind::kText: return "a non-empty name";
  }
  return {};
}

const KeySpec* find_key(const Schema& schema, const std::string& key) {
  for (const auto& spec : schema) {
    if (spec.name == key) return &spec;
  }
  return nullptr;
}

Block resolve_block(const std::string& name, const boost::property_tree::ptree* tree,
                    const Schema& schema, std::vector<std::string>& problems) {
  Block block{name, {}};
  std::set<std::string> seen;
  if (tree != nullptr) {
    for (const auto& [key, node] : *tree) {
      seen.insert(key);
      const KeySpec* spec = find_key(schema, key);
      if (spec == nullptr) {
        problems.push_back(fmt::format("unknown key [{}] {}", name, key));
        continue;
      }
      if (auto value = canonical(*spec, node.data())) {
        block.values[key] = *value;
      } else {
        problems.push_back(fmt::format("[{}] {} = '{}' must be {}", name, key, trim(node.data()),
                                       describe(*spec)));
      }
    }
  }
  for (const auto& spec : schema) {
    if (seen.count(spec.name) != 0) continue;
    if (spec.fallback) {
      block.values[spec.name] = *spec.fallback;
    } else if (spec.required) {
      problems.push_back(fmt::format("missing required key [{}] {}", name, spec.name));
    }
  }
  return block;
}

// Circuit-specific cross-key rules.
void check_circuit(const Block& b, std::vector<std::string>& problems) {
  const auto pair_rule = [&](const char* a, const char* c) {
    if (b.has(a) != b.has(c)) {
      problems.push_back(fmt::format("[{}] {} and {} must be given together", b.name, a, c));
    }
  };
  if (b.name == "cpb") {
    if (b.has("ej") == b.has("ej0")) {
      problems.push_back("[cpb] set exactly one of ej or ej0 (the SQUID form uses ej0 and flux_ratio)");
    }
  } else if (b.name == "qubit" || b.name == "jc") {
    pair_rule("t1_us", "t2_us");
  } else if (b.name == "noise") {
    pair_rule("f_lo", "f_hi");
  }
}

// Runs the library's own validation on the assembled records.
void check_physics(const RunConfig& c, std::vector<std::string>& problems) {
  try {
    const auto& b = c.circuit;
    if (b.name == "cpb") to_cpb(b);
    if (b.name == "flux3") to_flux3(b);
    if (b.name == "rfsquid") to_rfsquid(b);
    if (b.name == "phase") to_phase(b);
    if (b.name == "coupled") to_coupled(b);
    if (b.name == "jc") to_jc(b);
    if (b.name == "qubit") {
      to_decoherence(b);
      if (!(b.real("nu01") > 0.0)) problems.push_back("[qubit] nu01 must be > 0");
      if (!(b.real("amplitude") >= 0.0)) problems.push_back("[qubit] amplitude must be >= 0");
    }
    if (b.name == "noise") to_ensemble(b, c.seed);
    to_integrator(c.precision);
  } catch (const std::exception& e) {
    problems.push_back(e.what());
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  " + p;
        return msg;
      }()),
      problems_(std::move(problems)) {}

std::vector<double> Sweep::values() const {
  std::vector<double> out(static_cast<std::size_t>(points));
  for (long k = 0; k < points; ++k) {
    out[static_cast<std::size_t>(k)] =
        points == 1 ? start : start + (stop - start) * static_cast<double>(k) / static_cast<double>(points - 1);
  }
  return out;
}

std::vector<double> TimeGrid::values() const {
  return Sweep{"time", start, stop, points}.values();
}

double Block::real(const std::string& key) const { return *parse_real(text(key)); }
long Block::integer(const std::string& key) const { return *parse_int<long>(text(key)); }
bool Block::flag(const std::string& key) const { return *parse_bool(text(key)); }

const std::string& Block::text(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw std::out_of_range("[" + name + "] has no key " + key);
  return it->second;
}

std::vector<std::string> RunConfig::resolved() const {
  std::vector<std::string> lines;
  lines.push_back(fmt::format("command = {}", command));
  auto emit = [&](const Block& b) {
    for (const auto& [k, v] : b.values) lines.push_back(fmt::format("[{}] {} = {}", b.name, k, v));
  };
  std::vector<const Block*> blocks{&circuit, &precision};
  Block sweep_block{"sweep", {}};
  Block time_block{"time", {}};
  if (sweep) {
    sweep_block.values = {{"parameter", sweep->parameter},
                          {"start", fmt::format("{:.15g}", sweep->start)},
                          {"stop", fmt::format("{:.15g}", sweep->stop)},
                          {"points", fmt::format("{}", sweep->points)}};
    blocks.push_back(&sweep_block);
  }
  if (time) {
    time_block.values = {{"start", fmt::format("{:.15g}", time->start)},
                         {"stop", fmt::format("{:.15g}", time->stop)},
                         {"points", fmt::format("{}", time->points)}};
    blocks.push_back(&time_block);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block* a, const Block* b) { return a->name < b->name; });
  for (const auto* b : blocks) emit(*b);
  return lines;
}

RunConfig parse_config(const std::string& text, const Overrides& overrides) {
  namespace pt = boost::property_tree;
  std::vector<std::string> problems;
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError({fmt::format("line {}: {}", e.line(), e.message())});
  }

  const auto& schemas = circuit_schemas();
  const std::set<std::string> aux_blocks{"sweep", "time", "precision"};
  RunConfig config;
  std::map<std::string, const pt::ptree*> sections;
  std::optional<std::string> command;
  std::optional<std::string> circuit_name = overrides.circuit;

  // The INI reader drops sections without keys; an all-defaults block is
  // still a block, so collect headers from the text as well.
  static const pt::ptree kEmpty;
  {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const std::string t = trim(line);
      if (t.size() < 2 || t.front() != '[' || t.back() != ']') continue;
      const std::string name = trim(t.substr(1, t.size() - 2));
      if (tree.find(name) != tree.not_found()) continue;
      if (schemas.count(name) != 0 || aux_blocks.count(name) != 0) {
        sections[name] = &kEmpty;
      } else {
        problems.push_back(fmt::format("unknown block [{}]", name));
      }
    }
  }

  for (const auto& [key, node] : tree) {
    const bool known_block = schemas.count(key) != 0 || aux_blocks.count(key) != 0;
    if (!node.empty() || known_block) {
      if (!known_block) {
        problems.push_back(fmt::format("unknown block [{}]", key));
      } else {
        sections[key] = &node;
      }
      continue;
    }
    const std::string value = trim(node.data());
    if (key == "command") {
      command = value;
    } else if (key == "seed") {
      if (auto s = parse_int<std::uint64_t>(value)) {
        config.seed = *s;
      } else {
        problems.push_back(fmt::format("seed = '{}' must be an unsigned 64-bit integer", value));
      }
    } else if (key == "output") {
      config.output = value;
    } else {
      problems.push_back(fmt::format("unknown top-level key {}", key));
    }
  }

  if (overrides.command) {
    if (command && *command != *overrides.command) {
      problems.push_back(fmt::format("config command '{}' conflicts with subcommand '{}'", *command,
                                     *overrides.command));
    }
    command = overrides.command;
  }
  if (overrides.seed) config.seed = *overrides.seed;
  if (overrides.output) config.output = *overrides.output;

  if (!command) {
    problems.push_back("missing required key command");
  } else if (kCircuitsFor.count(*command) == 0) {
    problems.push_back(fmt::format("unknown command '{}'", *command));
    command.reset();
  } else {
    config.command = *command;
  }

  std::vector<std::string> present;
  for (const auto& [name, node] : sections) {
    if (schemas.count(name) != 0) present.push_back(name);
  }
  if (circuit_name && schemas.count(*circuit_name) == 0) {
    problems.push_back(fmt::format("unknown circuit '{}'", *circuit_name));
  } else if (circuit_name) {
    for (const auto& name : present) {
      if (name != *circuit_name) {
        problems.push_back(fmt::format("--circuit {} conflicts with block [{}]", *circuit_name, name));
      }
    }
  } else if (present.size() == 1) {
    circuit_name = present.front();
  }
  if (!circuit_name && present.size() > 1) {
    // Still report key problems inside every candidate block.
    for (const auto& name : present) resolve_block(name, sections.at(name), schemas.at(name), problems);
  }
  if (!circuit_name && present.size() != 1) {
    problems.push_back(present.empty() ? std::string("exactly one circuit block is required (found none)")
                                       : fmt::format("exactly one circuit block is required (found {})", join(present)));
  }

  if (circuit_name && schemas.count(*circuit_name) != 0) {
    const auto it = sections.find(*circuit_name);
    config.circuit = resolve_block(*circuit_name, it == sections.end() ? nullptr : it->second,
                                   schemas.at(*circuit_name), problems);
    check_circuit(config.circuit, problems);
    if (command) {
      const auto& allowed = kCircuitsFor.at(*command);
      if (std::find(allowed.begin(), allowed.end(), *circuit_name) == allowed.end()) {
        problems.push_back(fmt::format("command {} does not accept circuit [{}] (expected {})",
                                       *command, *circuit_name, join(allowed)));
      }
    }
  }

  const auto find_section = [&](const std::string& name) -> const pt::ptree* {
    const auto it = sections.find(name);
    return it == sections.end() ? nullptr : it->second;
  };
  config.precision = resolve_block("precision", find_section("precision"), kPrecisionSchema, problems);

  if (const auto* node = find_section("sweep")) {
    const Block b = resolve_block("sweep", node, kSweepSchema, problems);
    if (command && *command != "spectrum") {
      problems.push_back(fmt::format("[sweep] is only used by spectrum, not {}", *command));
    }
    if (b.has("parameter") && circuit_name && schemas.count(*circuit_name) != 0) {
      const KeySpec* spec = find_key(schemas.at(*circuit_name), b.text("parameter"));
      if (spec == nullptr || spec->kind != Kind::kReal || !config.circuit.has(spec->name)) {
        problems.push_back(fmt::format("[sweep] parameter '{}' is not a numeric key of [{}]",
                                       b.text("parameter"), *circuit_name));
      }
    }
    if (b.has("parameter") && b.has("start") && b.has("stop") && b.has("points")) {
      config.sweep = Sweep{b.text("parameter"), b.real("start"), b.real("stop"), b.integer("points")};
      if (config.sweep->points < 1) problems.push_back("[sweep] points must be >= 1");
    }
  } else if (command && *command == "spectrum") {
    problems.push_back("spectrum needs a [sweep] block");
  }

  if (const auto* node = find_section("time")) {
    const Block b = resolve_block("time", node, kTimeSchema, problems);
    if (command && !uses_time(*command)) {
      problems.push_back(fmt::format("[time] is not used by {}", *command));
    }
    if (b.has("start") && b.has("stop") && b.has("points")) {
      config.time = TimeGrid{b.real("start"), b.real("stop"), b.integer("points")};
      if (config.time->points < 1) problems.push_back("[time] points must be >= 1");
      if (!(config.time->start >= 0.0) || !(config.time->stop >= config.time->start)) {
        problems.push_back("[time] need 0 <= start <= stop");
      }
    }
  } else if (command && uses_time(*command)) {
    problems.push_back(fmt::format("{} needs a [time] block", *command));
  }

  if (problems.empty()) check_physics(config, problems);
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return config;
}

}  // namespace sqc::cli
