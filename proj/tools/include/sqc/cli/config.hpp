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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqc::cli {

/// Every problem found while reading a config, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  [[nodiscard]] const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct Sweep {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  long points = 1;

  [[nodiscard]] std::vector<double> values() const;
};

struct TimeGrid {
  double start = 0.0;
  double stop = 0.0;
  long points = 1;

  [[nodiscard]] std::vector<double> values() const;
};

/// A resolved key/value block. Values are kept in canonical text form so the
/// CSV header can echo exactly what was run; typed access re-parses them.
struct Block {
  std::string name;
  std::map<std::string, std::string> values;

  [[nodiscard]] bool has(const std::string& key) const { return values.count(key) != 0; }
  [[nodiscard]] double real(const std::string& key) const;
  [[nodiscard]] long integer(const std::string& key) const;
  [[nodiscard]] bool flag(const std::string& key) const;
  [[nodiscard]] const std::string& text(const std::string& key) const;
};

struct RunConfig {
  std::string command;
  Block circuit;
  std::optional<Sweep> sweep;
  std::optional<TimeGrid> time;
  Block precision;
  std::uint64_t seed = 0;
  std::string output;  // empty means standard output

  /// Header lines "[block] key = value", sorted, including defaults. The
  /// output path is left out so the document does not depend on it.
  [[nodiscard]] std::vector<std::string> resolved() const;
};

/// Values supplied on the command line; they override the document.
struct Overrides {
  std::optional<std::string> command;
  std::optional<std::string> circuit;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
};

inline const std::vector<std::string> kCommands{"spectrum", "evolve", "rabi", "ramsey", "t1",
                                                "cnot", "noise-psd", "jc", "fluxoid"};

/// Parses an INI-style document:
///   command = spectrum
///   seed = 7
///   [cpb]
///   ec = 5
///   ...
/// Throws ConfigError listing every unknown key, missing key, bad value and
/// structural problem.
RunConfig parse_config(const std::string& text, const Overrides& overrides = {});

}  // namespace sqc::cli
