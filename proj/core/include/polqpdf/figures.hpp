// Copyright 2026 The polqpdf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Parameter sets of the four published Wigner-function curves.

#include <span>
#include <string>
#include <string_view>

#include "polqpdf/qpdf.hpp"

namespace polqpdf {

inline constexpr int kFigurePoints = 512;
/// Upper end of the |alpha| axis for the amplitude sweeps.
inline constexpr double kFigureMaxModulus = 8.0;

struct FigurePreset {
  std::string_view id;  // "1a", "1b", "2c", "2d"
  AxisKind axis_kind;
  Complex beta;
  Complex p;
  Complex q;
  /// |alpha| of a phase sweep or arg alpha of an amplitude sweep.
  double fixed;
  std::string_view caption;
};

std::span<const FigurePreset> figure_presets();
/// Accepts "1a" or "figure1a".  Throws ValidationError for unknown ids.
const FigurePreset& figure_preset(std::string_view id);

/// Wigner (s = 0) sweep for a preset.
QpdfGrid run_preset(const FigurePreset& preset, int n_points = kFigurePoints,
                    SweepOptions opts = {});

}  // namespace polqpdf
