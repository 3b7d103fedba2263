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

#include <string>

#include "sqc/types.hpp"

namespace sqc {

/// Lowest energies (GHz) per control value; one ascending row per point.
struct SpectrumTable {
  std::string control_name;
  RVector control;
  RMatrix levels;

  [[nodiscard]] Index points() const { return control.size(); }
  [[nodiscard]] Index level_count() const { return levels.cols(); }
};

}  // namespace sqc
