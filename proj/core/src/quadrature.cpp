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

#include "polqpdf/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>

#include "polqpdf/errors.hpp"

namespace polqpdf {

GaussLegendreRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw ValidationError("Gauss-Legendre rule needs at least one node");
  if (!(hi > lo)) throw ValidationError("Gauss-Legendre interval must satisfy lo < hi");
  std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw Error("gsl_integration_glfixed_table_alloc failed");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(lo, hi, static_cast<size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table.get());
  }
  return rule;
}

}  // namespace polqpdf
