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

#include "polqpdf/figures.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "polqpdf/errors.hpp"

namespace polqpdf {
namespace {

using std::numbers::pi;

const std::array<FigurePreset, 4>& presets() {
  static const Complex small_index{0.0049, 0.0049};
  static const Complex unit_index = Complex{1.0, 1.0} / std::sqrt(2.0);
  static const Complex beta_a = std::polar(2.0, pi / 2.0);
  static const Complex beta_b = std::polar(1.0 / std::sqrt(20.0), std::atan(2.0));
  static const std::array<FigurePreset, 4> table{{
      {"1a", AxisKind::phase_sweep, beta_a, small_index, small_index, 5.0,
       "Fig. 1a: W vs arg alpha, |alpha|=5, p=q=0.0049(1+i), beta=2 exp(i pi/2)"},
      {"1b", AxisKind::phase_sweep, beta_b, unit_index, unit_index, 5.0,
       "Fig. 1b: W vs arg alpha, |alpha|=5, p=q=(1+i)/sqrt2, beta=exp(i atan2)/sqrt20"},
      {"2c", AxisKind::amplitude_sweep, beta_a, small_index, small_index, pi / 4.0,
       "Fig. 2c: W vs |alpha|, arg alpha=pi/4, p=q=0.0049(1+i), beta=2 exp(i pi/2)"},
      {"2d", AxisKind::amplitude_sweep, beta_b, unit_index, unit_index, pi / 2.0,
       "Fig. 2d: W vs |alpha|, arg alpha=pi/2, p=q=(1+i)/sqrt2, beta=exp(i atan2)/sqrt20"},
  }};
  return table;
}

}  // namespace

std::span<const FigurePreset> figure_presets() { return presets(); }

const FigurePreset& figure_preset(std::string_view id) {
  if (id.rfind("figure", 0) == 0) id.remove_prefix(6);
  for (const auto& p : presets()) {
    if (p.id == id) return p;
  }
  throw ValidationError("unknown figure preset '" + std::string(id) + "'");
}

QpdfGrid run_preset(const FigurePreset& preset, int n_points, SweepOptions opts) {
  const OrderParameter wigner(0.0);
  const PolarizationIndex p(preset.p);
  const PolarizationIndex q(preset.q);
  if (preset.axis_kind == AxisKind::phase_sweep) {
    return sweep_phase(preset.beta, q, p, preset.fixed, wigner, n_points, opts);
  }
  return sweep_modulus(preset.beta, q, p, preset.fixed, wigner, kFigureMaxModulus, n_points,
                       opts);
}

}  // namespace polqpdf
