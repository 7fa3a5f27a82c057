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

#include "polqpdf/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polqpdf/errors.hpp"

namespace polqpdf {
namespace {

// a^dag^m a^n formed with `pad` extra levels and cropped back to dim.
TruncatedOperator normal_ordered_power(int m, int n, int dim, int pad) {
  const int work = dim + pad;
  const Matrix a = annihilation(work).matrix();
  const Matrix ad = a.adjoint();
  Matrix out = Matrix::Identity(work, work);
  for (int k = 0; k < n; ++k) out = a * out;
  for (int k = 0; k < m; ++k) out = ad * out;
  return TruncatedOperator(out.topLeftCorner(dim, dim));
}

Complex ipow(Complex z, int n) {
  Complex out{1.0, 0.0};
  for (int k = 0; k < n; ++k) out *= z;
  return out;
}

}  // namespace

void CoherenceOrder::validate(int max_order) const {
  if (mx < 0 || my < 0 || nx < 0 || ny < 0) {
    throw ValidationError("coherence order powers must be >= 0");
  }
  if (total() > max_order) {
    std::ostringstream msg;
    msg << "coherence order total " << total() << " exceeds the configured maximum "
        << max_order;
    throw ValidationError(msg.str());
  }
}

std::vector<CoherenceOrder> orders_up_to(int max_total) {
  std::vector<CoherenceOrder> out;
  for (int mx = 0; mx <= max_total; ++mx) {
    for (int my = 0; mx + my <= max_total; ++my) {
      for (int nx = 0; mx + my + nx <= max_total; ++nx) {
        for (int ny = 0; mx + my + nx + ny <= max_total; ++ny) out.push_back({mx, my, nx, ny});
      }
    }
  }
  return out;
}

Complex coherence_function(const TwoModeState& state, const CoherenceOrder& order,
                           int max_order) {
  order.validate(max_order);
  const int dim = state.dim();
  const double support = std::ceil(std::max(state.mean_photons_x(), state.mean_photons_y()));
  const int need = std::max(order.mx + order.nx, order.my + order.ny) + static_cast<int>(support);
  if (dim <= need) {
    std::ostringstream msg;
    msg << "dim " << dim << " too small for coherence order (" << order.mx << "," << order.my
        << "," << order.nx << "," << order.ny << "); need dim > " << need;
    throw TruncationError(msg.str(), need + 1);
  }
  const TwoModeOperator op(normal_ordered_power(order.mx, order.nx, dim, max_order),
                           normal_ordered_power(order.my, order.ny, dim, max_order));
  return expectation(state, op);
}

double polarization_residual(const TwoModeState& state, const PolarizationIndex& p) {
  const int dim = state.dim();
  const Matrix a = annihilation(dim).matrix();
  const Complex pv = p.value();
  const auto& comps = state.components();

  // (a_y - p a_x) psi as an amplitude matrix: a_x acts on rows, a_y on columns.
  std::vector<Matrix> applied;
  applied.reserve(comps.size());
  for (const auto& c : comps) {
    Matrix u = c.amplitudes * a.transpose() - pv * (a * c.amplitudes);
    u.row(dim - 1).setZero();
    u.col(dim - 1).setZero();
    applied.push_back(std::move(u));
  }
  // ||sum_i w_i u_i psi_i^dag||_F^2 = sum_ij w_i w_j <u_i, u_j> <psi_j, psi_i>
  double total = 0.0;
  for (size_t i = 0; i < comps.size(); ++i) {
    for (size_t j = 0; j < comps.size(); ++j) {
      const Complex uu = (applied[i].conjugate().cwiseProduct(applied[j])).sum();
      const Complex pp = (comps[j].amplitudes.conjugate().cwiseProduct(comps[i].amplitudes)).sum();
      total += comps[i].weight * comps[j].weight * (uu * pp).real();
    }
  }
  return std::sqrt(std::max(total, 0.0));
}

FactorizationResult factorization_check(const TwoModeState& state, const PolarizationIndex& p,
                                        const CoherenceOrder& order, int max_order) {
  const Complex lhs = coherence_function(state, order, max_order);
  const CoherenceOrder reduced{order.mx + order.my, 0, order.nx + order.ny, 0};
  const Complex pv = p.value();
  const Complex rhs = ipow(std::conj(pv), order.my) * ipow(pv, order.ny) *
                      coherence_function(state, reduced, max_order);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace polqpdf
