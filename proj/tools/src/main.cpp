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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqc/cli/config.hpp"
#include "sqc/cli/run.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> circuit;
  int threads = 1;
};

int execute(const std::string& command, const Flags& flags) {
  std::ifstream file(flags.config_path, std::ios::binary);
  if (!file) {
    std::cerr << "sqcsim: cannot read " << flags.config_path << '\n';
    return sqc::cli::kExitConfig;
  }
  std::ostringstream text;
  text << file.rdbuf();

  sqc::cli::Overrides overrides{command, flags.circuit, flags.seed, flags.out};
  try {
    const auto config = sqc::cli::parse_config(text.str(), overrides);
    return sqc::cli::run(config, std::cout, std::cerr, flags.threads);
  } catch (const sqc::cli::ConfigError& e) {
    std::cerr << "sqcsim: " << e.what() << '\n';
    return sqc::cli::kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superconducting qubit circuit simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SQC_VERSION);

  Flags flags;
  std::string chosen;
  for (const auto& name : sqc::cli::kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", flags.config_path, "config file")->required();
    sub->add_option("--out", flags.out, "CSV output path (default: standard output)");
    sub->add_option("--seed", flags.seed, "random seed, overrides the config");
    sub->add_option("--threads", flags.threads, "worker threads, 0 = one per core")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--circuit", flags.circuit, "circuit block to use");
    sub->callback([&chosen, name] { chosen = name; });
  }

  CLI11_PARSE(app, argc, argv);
  return execute(chosen, flags);
}
