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

// s-parametrized quasi-probability distributions of two-mode fields.
//
// Stored values are raw traces Tr[rho T(ax, ay, s)].  The 1/pi per mode that
// turns them into probability densities over d(Re a) d(Im a) is applied only
// by the integrators.

#include <string>
#include <string_view>
#include <vector>

#include "polqpdf/fock.hpp"
#include "polqpdf/poincare.hpp"

namespace polqpdf {

enum class AxisKind { phase_sweep, amplitude_sweep, plane };
enum class Method { closed_form, trace_oracle };

std::string_view to_string(AxisKind kind);
std::string_view to_string(Method method);
/// Throws ValidationError for unknown names.
AxisKind parse_axis_kind(std::string_view name);
Method parse_method(std::string_view name);

inline constexpr std::string_view kRawTraceMeasure =
    "raw Tr[rho T]; d2a = dRe dIm; 1/pi per mode not applied";

struct GridMeta {
  double s = 0.0;
  Complex p{};
  Complex q{};
  Complex beta{};
  /// Modulus of a phase sweep, phase of a modulus sweep, half-width of a
  /// plane.
  double fixed = 0.0;
  /// Fock truncation of the trace route, 0 for the closed form.
  int dim_used = 0;
  Method method = Method::closed_form;
  std::string measure{kRawTraceMeasure};
};

/// Sampled QPDF.  For plane grids values are row-major over
/// (axis_values[i], axis2_values[j]); otherwise axis2_values is empty.
struct QpdfGrid {
  AxisKind axis_kind = AxisKind::phase_sweep;
  std::vector<double> axis_values;
  std::vector<double> axis2_values;
  std::vector<double> values;
  GridMeta meta;

  /// Throws ValidationError on non-increasing axes, size mismatch or
  /// non-finite values.
  void validate() const;
};

/// Evaluates Tr[rho T(ax, ay, s)] for a fixed state.
///
/// Each kernel is applied as t = (2/(1-s)) M diag(w) M^dag with M the block
/// of D(a) from kernel(), so Tr[|psi><psi| tx (x) ty] reduces to
/// sum_ab w_a w_b |(Mx^dag Psi conj(My))_ab|^2 and product components to a
/// product of single-mode sums.  No amplitude truncation check is made here.
class TraceEvaluator {
 public:
  TraceEvaluator(const TwoModeState& state, OrderParameter s);
  double operator()(Complex ax, Complex ay) const;

 private:
  const TwoModeState* state_;
  OrderParameter s_;
};

/// Single-mode Tr[rho t(alpha, s)], same construction as TraceEvaluator.
double single_mode_trace(const SingleModeState& state, Complex alpha, OrderParameter s);

/// Tr[rho T(ax, ay, s)].  Throws TruncationError when state.dim() does not
/// satisfy the tail rule at max(|ax|, |ay|).
double qpdf_trace(const TwoModeState& state, Complex ax, Complex ay, OrderParameter s);
double qpdf_trace(const SingleModeState& state, Complex alpha, OrderParameter s);

/// (2/(1-s))^2 exp(-2 (|ax - beta|^2 + |ay - gamma|^2) / (1-s)), the QPDF
/// of the coherent state |beta, gamma>.
double qpdf_coherent_closed(Complex beta, Complex gamma, Complex ax, Complex ay,
                            OrderParameter s);

/// Closed form on the polarization manifold: the state |beta, q beta> seen at
/// (ax, p ax).
double qpdf_polarization_section(Complex beta, const PolarizationIndex& q,
                                 const PolarizationIndex& p, Complex ax, OrderParameter s);

/// Same section written in Poincare variables: moduli |ax|, |beta|, the
/// half-angle tangents |p|, |q| and the phase term
/// (sqrt(ax conj(beta)) e^{i(delta0 - delta)/2} + c.c.)^2.
double qpdf_section_polar_form(Complex beta, const PolarizationIndex& q,
                               const PolarizationIndex& p, Complex ax, OrderParameter s);

struct SweepOptions {
  Method method = Method::closed_form;
  /// Fock truncation for the trace route; 0 picks auto_dim over every
  /// amplitude the sweep touches.
  int dim = 0;
  /// Worker threads for the trace route; 0 uses hardware concurrency.
  int threads = 0;
};

/// arg ax over [0, 2 pi) in n_points equal steps, |ax| = modulus.
QpdfGrid sweep_phase(Complex beta, const PolarizationIndex& q, const PolarizationIndex& p,
                     double modulus, OrderParameter s, int n_points, SweepOptions opts = {});

/// |ax| over [0, max_modulus] (inclusive) in n_points steps, arg ax = phase.
QpdfGrid sweep_modulus(Complex beta, const PolarizationIndex& q, const PolarizationIndex& p,
                       double phase, OrderParameter s, double max_modulus, int n_points,
                       SweepOptions opts = {});

/// Trace route over the square [-L, L]^2 of ax with ay = p ax, n x n points.
QpdfGrid sweep_plane(const TwoModeState& state, const PolarizationIndex& p, OrderParameter s,
                     double half_width, int n_points, int threads = 0);

struct QuadratureSpec {
  double half_width = 6.0;
  int nodes = 200;
};

/// Box half-width max amplitude + 5, 200 nodes per axis.
QuadratureSpec default_quadrature(double support_radius);

struct NormalizationResult {
  /// (1/pi) int W d2a per mode (product over modes for two-mode states).
  double value = 0.0;
  double deviation = 0.0;  // |value - 1|
  /// Set when the box is narrower than sqrt(<n>) + 5 in some mode.
  bool box_warning = false;
};

NormalizationResult normalization_check(const SingleModeState& state, OrderParameter s,
                                        QuadratureSpec quadrature);
/// Product states only (throws ValidationError otherwise): the 4D integral
/// is the product of the two reduced single-mode integrals.
NormalizationResult normalization_check(const TwoModeState& state, OrderParameter s,
                                        QuadratureSpec quadrature);

struct RadialQuadrature {
  /// 0 picks |beta| (1 + |q|) + 10.
  double max_radius = 0.0;
  int radial_nodes = 400;
  int angular_nodes = 256;
};

inline constexpr std::string_view kPlanePolarMeasure = "|ax| d|ax| d(arg ax)";

/// int_0^R int_0^{2 pi} qpdf_polarization_section(beta, q, p(chi0, delta0),
/// r e^{i phi}, s) r dphi dr, Gauss-Legendre in r and trapezoidal in phi.
/// Throws PoleError for chi0 = pi.
double poincare_sphere_qpdf(Complex beta, const PolarizationIndex& q, double chi0,
                            double delta0, OrderParameter s, RadialQuadrature quadrature = {});

}  // namespace polqpdf
