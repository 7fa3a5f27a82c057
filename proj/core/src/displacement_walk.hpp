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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

namespace polqpdf::detail {

/// Magnitudes along the diagonal of offset k are
///   g_j = exp(log_base) R^k / sqrt(k!) * rho2^j * sqrt(j! k!/(j+k)!) L_j^{(k)}(x)
/// where R = exp(log_radius).  With x = |xi|^2, log_base = -x/2,
/// R = |xi| and rho2 = 1 these are |<j+k|D(xi)|j>|.  They obey
///   sqrt((j+1)(j+1+k)) g_{j+1} = rho2 ((2j+1+k-x) g_j - rho2 sqrt(j(j+k)) g_{j-1}).
struct WalkScale {
  double x;
  double log_base;
  double log_radius;
  double rho2;
};

inline WalkScale displacement_scale(std::complex<double> xi) {
  const double x = std::norm(xi);
  return {x, -0.5 * x, std::log(std::abs(xi)), 1.0};
}

/// Calls visit(m, n, re, im) for every m < rows, n < cols, where re + i im is
/// the magnitude above times e^{ik theta} below the diagonal (m = j + k) and
/// (-e^{-i theta})^k above it (n = j + k).  The seed is formed in log space
/// and a mantissa/log-scale split keeps the walk inside double range.
/// With lower_only set, diagonals above the main one are skipped.
template <typename Visit>
void walk_diagonals(double theta, const WalkScale& scale, int rows, int cols, Visit&& visit,
                    bool lower_only = false) {
  const double x = scale.x;
  const double rho2 = scale.rho2;
  const int span = rows + cols + 1;
  std::vector<double> sq(span), inv_sq(span), log_fact(span);
  for (int n = 0; n < span; ++n) {
    sq[n] = std::sqrt(static_cast<double>(n));
    inv_sq[n] = n > 0 ? 1.0 / sq[n] : 0.0;
    log_fact[n] = n > 0 ? log_fact[n - 1] + std::log(static_cast<double>(n)) : 0.0;
  }
  constexpr double kBig = 1e150;
  constexpr double kSmall = 1e-150;
  constexpr double kLogStep = 150.0 * std::numbers::ln10;

  auto diagonal = [&](int k, int row0, int col0, int length, double phase) {
    const double ur = std::cos(phase);
    const double ui = std::sin(phase);
    double log_scale = scale.log_base + k * scale.log_radius - 0.5 * log_fact[k];
    double factor = std::exp(log_scale);
    bool direct = factor > 0.0 && std::isfinite(factor);
    double prev = 0.0;
    double cur = 1.0;
    for (int j = 0; j < length; ++j) {
      if (j > 0) {
        const int jm = j - 1;
        const double next =
            rho2 * ((2.0 * jm + 1.0 + k - x) * cur - rho2 * sq[jm] * sq[jm + k] * prev) *
            (inv_sq[j] * inv_sq[j + k]);
        prev = cur;
        cur = next;
        const double big = std::max(std::abs(cur), std::abs(prev));
        if (big > kBig || (big < kSmall && big > 0.0)) {
          const double step = big > kBig ? -kLogStep : kLogStep;
          const double mul = big > kBig ? kSmall : kBig;
          cur *= mul;
          prev *= mul;
          log_scale -= step;
          factor = std::exp(log_scale);
          direct = factor > 0.0 && std::isfinite(factor);
        }
      }
      double mag = cur * factor;
      if (!direct) {
        mag = cur == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(cur)) + log_scale), cur);
      }
      visit(row0 + j, col0 + j, mag * ur, mag * ui);
    }
  };

  for (int k = 0; k < rows; ++k) {
    const int length = std::min(cols, rows - k);
    if (length > 0) diagonal(k, k, 0, length, k * theta);
  }
  if (lower_only) return;
  for (int k = 1; k < cols; ++k) {
    const int length = std::min(rows, cols - k);
    if (length > 0) diagonal(k, 0, k, length, k * (std::numbers::pi - theta));
  }
}

/// visit(m, n, re, im) over <m|D(xi)|n> for m < rows, n < cols (xi != 0).
template <typename Visit>
void walk_displacement(std::complex<double> xi, int rows, int cols, Visit&& visit) {
  walk_diagonals(std::arg(xi), displacement_scale(xi), rows, cols, std::forward<Visit>(visit));
}

}  // namespace polqpdf::detail
