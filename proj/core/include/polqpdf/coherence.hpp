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

// Normally ordered correlation functions of the two polarization modes and
// the single-mode reduction they obey for polarized light.

#include <vector>

#include "polqpdf/fock.hpp"
#include "polqpdf/poincare.hpp"

namespace polqpdf {

inline constexpr int kDefaultMaxCoherenceOrder = 6;

/// Powers of a_x^dag, a_y^dag, a_x, a_y in
/// Tr[rho a_x^dag^mx a_y^dag^my a_x^nx a_y^ny].
struct CoherenceOrder {
  int mx = 0;
  int my = 0;
  int nx = 0;
  int ny = 0;

  int total() const noexcept { return mx + my + nx + ny; }
  /// Throws ValidationError for negative powers or total() > max_order.
  void validate(int max_order = kDefaultMaxCoherenceOrder) const;

  friend bool operator==(const CoherenceOrder&, const CoherenceOrder&) = default;
};

/// Every order with total degree <= max_total, lexicographic in
/// (mx, my, nx, ny).
std::vector<CoherenceOrder> orders_up_to(int max_total);

/// Gamma at the given order (field prefactors set to 1).
/// Throws TruncationError when the state dimension cannot resolve the order,
/// i.e. dim <= max(mx + nx, my + ny) + ceil(max(<n_x>, <n_y>)).
Complex coherence_function(const TwoModeState& state, const CoherenceOrder& order,
                           int max_order = kDefaultMaxCoherenceOrder);

/// Frobenius norm of (a_y - p a_x) rho over rows with n_x, n_y < dim - 1.
/// The last photon row of a truncated a rho is missing the contribution of
/// the discarded level, so it is left out.
double polarization_residual(const TwoModeState& state, const PolarizationIndex& p);

struct FactorizationResult {
  Complex lhs;
  Complex rhs;
  double abs_error;
};

/// lhs = Gamma(mx, my, nx, ny); rhs = conj(p)^my p^ny Gamma(mx+my, 0, nx+ny, 0).
FactorizationResult factorization_check(const TwoModeState& state, const PolarizationIndex& p,
                                        const CoherenceOrder& order,
                                        int max_order = kDefaultMaxCoherenceOrder);

}  // namespace polqpdf
