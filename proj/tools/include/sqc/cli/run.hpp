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

#include <iosfwd>
#include <string>

#include "sqc/cli/config.hpp"

namespace sqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// The complete CSV document for a validated config. Throws the library's
/// ValidationError or NumericalError. `threads` never changes the output.
std::string render_csv(const RunConfig& config, int threads = 1);

/// Renders and writes the CSV to config.output, or to `out` when that is
/// empty. Diagnostics go to `err`. Returns one of the exit codes above.
int run(const RunConfig& config, std::ostream& out, std::ostream& err, int threads = 1);

}  // namespace sqc::cli
