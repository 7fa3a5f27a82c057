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

#include "polqpdf/qpdf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "polqpdf/errors.hpp"
#include "polqpdf/quadrature.hpp"

namespace polqpdf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kProductTol = 1e-10;

constexpr double kImagTol = 1e-9;

double real_part(Complex value) {
  if (std::abs(value.imag()) > kImagTol * std::max(1.0, std::abs(value.real()))) {
    std::ostringstream msg;
    msg << "trace has imaginary part " << value.imag() << " (real part " << value.real() << ")";
    throw Error(msg.str());
  }
  return value.real();
}

Complex sandwich(const Vector& psi, const Matrix& op) { return psi.dot(op * psi); }

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void require_points(int n_points) {
  if (n_points < 2) {
    std::ostringstream msg;
    msg << "a sweep needs at least 2 points, got " << n_points;
    throw ValidationError(msg.str());
  }
}

int trace_dim(const SweepOptions& opts, double max_amplitude) {
  if (opts.dim > 0) return opts.dim;
  const int dim = auto_dim(max_amplitude);
  if (dim > kMaxDim) {
    std::ostringstream msg;
    msg << "trace route needs dim " << dim << " for amplitudes up to " << max_amplitude
        << ", beyond the supported envelope " << kMaxDim << "; pass an explicit dim";
    throw TruncationError(msg.str(), dim);
  }
  return dim;
}

}  // namespace

std::string_view to_string(AxisKind kind) {
  switch (kind) {
    case AxisKind::phase_sweep: return "phase_sweep";
    case AxisKind::amplitude_sweep: return "amplitude_sweep";
    case AxisKind::plane: return "plane";
  }
  return "?";
}

std::string_view to_string(Method method) {
  return method == Method::closed_form ? "closed_form" : "trace_oracle";
}

AxisKind parse_axis_kind(std::string_view name) {
  for (auto k : {AxisKind::phase_sweep, AxisKind::amplitude_sweep, AxisKind::plane}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown axis kind '" + std::string(name) + "'");
}

Method parse_method(std::string_view name) {
  for (auto m : {Method::closed_form, Method::trace_oracle}) {
    if (to_string(m) == name) return m;
  }
  throw ValidationError("unknown method '" + std::string(name) + "'");
}

void QpdfGrid::validate() const {
  auto increasing = [](const std::vector<double>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  if (!increasing(axis_values)) throw ValidationError("axis values must be strictly increasing");
  size_t expected = axis_values.size();
  if (axis_kind == AxisKind::plane) {
    if (!increasing(axis2_values)) {
      throw ValidationError("second axis values must be strictly increasing");
    }
    expected *= axis2_values.size();
  } else if (!axis2_values.empty()) {
    throw ValidationError("only plane grids carry a second axis");
  }
  if (values.size() != expected) throw ValidationError("grid value count does not match axes");
  if (!std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); })) {
    throw ValidationError("grid values must be finite");
  }
}

// ---------------------------------------------------------------------------
// Trace route

TraceEvaluator::TraceEvaluator(const TwoModeState& state, OrderParameter s)
    : state_(&state), s_(s) {}

double TraceEvaluator::operator()(Complex ax, Complex ay) const {
  const int dim = state_->dim();
  const Matrix tx = kernel(ax, s_, dim).matrix();
  const Matrix ty = kernel(ay, s_, dim).matrix();
  Complex total{};
  for (const auto& c : state_->components()) {
    if (c.factors) {
      total += c.weight * sandwich(c.factors->first, tx) * sandwich(c.factors->second, ty);
    } else {
      total += c.weight * (c.amplitudes.conjugate().cwiseProduct(tx * c.amplitudes * ty.transpose()))
                              .sum();
    }
  }
  return real_part(total);
}

double single_mode_trace(const SingleModeState& state, Complex alpha, OrderParameter s) {
  const Matrix t = kernel(alpha, s, state.dim()).matrix();
  Complex total{};
  for (const auto& c : state.components()) total += c.weight * sandwich(c.amplitudes, t);
  return real_part(total);
}

double qpdf_trace(const TwoModeState& state, Complex ax, Complex ay, OrderParameter s) {
  check_truncation(std::max(std::abs(ax), std::abs(ay)), state.dim(), "phase-space point");
  return TraceEvaluator(state, s)(ax, ay);
}

double qpdf_trace(const SingleModeState& state, Complex alpha, OrderParameter s) {
  check_truncation(std::abs(alpha), state.dim(), "phase-space point");
  return single_mode_trace(state, alpha, s);
}

// ---------------------------------------------------------------------------
// Closed forms

double qpdf_coherent_closed(Complex beta, Complex gamma, Complex ax, Complex ay,
                            OrderParameter s) {
  const double c = s.prefactor();
  return c * c * std::exp(-c * (std::norm(ax - beta) + std::norm(ay - gamma)));
}

double qpdf_polarization_section(Complex beta, const PolarizationIndex& q,
                                 const PolarizationIndex& p, Complex ax, OrderParameter s) {
  return qpdf_coherent_closed(beta, q.value() * beta, ax, p.value() * ax, s);
}

double qpdf_section_polar_form(Complex beta, const PolarizationIndex& q,
                               const PolarizationIndex& p, Complex ax, OrderParameter s) {
  const double c = s.prefactor();
  const double tan_chi = p.tan_half_chi();
  const double tan_theta = q.tan_half_chi();
  const Complex root = std::sqrt(ax * std::conj(beta)) *
                       std::polar(1.0, 0.5 * (p.delta0() - q.delta0()));
  const double phase_term = std::pow(2.0 * root.real(), 2);  // (z + conj z)^2
  const double radial = std::abs(ax) * tan_chi + std::abs(beta) * tan_theta;
  const double exponent =
      -c * std::norm(ax - beta) + c * (-radial * radial + tan_chi * tan_theta * phase_term);
  return c * c * std::exp(exponent);
}

// ---------------------------------------------------------------------------
// Sweeps

QpdfGrid sweep_phase(Complex beta, const PolarizationIndex& q, const PolarizationIndex& p,
                     double modulus, OrderParameter s, int n_points, SweepOptions opts) {
  require_points(n_points);
  if (!(modulus >= 0.0) || !std::isfinite(modulus)) {
    throw ValidationError("sweep modulus must be finite and >= 0");
  }
  QpdfGrid grid;
  grid.axis_kind = AxisKind::phase_sweep;
  grid.meta = {s.value(), p.value(), q.value(), beta, modulus, 0, opts.method,
               std::string(kRawTraceMeasure)};
  grid.axis_values.resize(n_points);
  grid.values.resize(n_points);
  for (int k = 0; k < n_points; ++k) grid.axis_values[k] = 2.0 * kPi * k / n_points;

  if (opts.method == Method::closed_form) {
    for (int k = 0; k < n_points; ++k) {
      grid.values[k] = qpdf_polarization_section(
          beta, q, p, std::polar(modulus, grid.axis_values[k]), s);
    }
  } else {
    const Complex gamma = q.value() * beta;
    const double reach = std::max({std::abs(beta), std::abs(gamma), modulus,
                                   std::abs(p.value()) * modulus});
    const int dim = trace_dim(opts, reach);
    const TwoModeState state = two_mode_coherent_density(beta, gamma, dim);
    check_truncation(modulus * std::max(1.0, std::abs(p.value())), dim, "phase-space point");
    const TraceEvaluator eval(state, s);
    parallel_for(n_points, opts.threads, [&](int k) {
      const Complex ax = std::polar(modulus, grid.axis_values[k]);
      grid.values[k] = eval(ax, p.value() * ax);
    });
    grid.meta.dim_used = dim;
  }
  grid.validate();
  return grid;
}

QpdfGrid sweep_modulus(Complex beta, const PolarizationIndex& q, const PolarizationIndex& p,
                       double phase, OrderParameter s, double max_modulus, int n_points,
                       SweepOptions opts) {
  require_points(n_points);
  if (!(max_modulus > 0.0) || !std::isfinite(max_modulus)) {
    throw ValidationError("max modulus must be finite and > 0");
  }
  if (!std::isfinite(phase)) throw ValidationError("sweep phase must be finite");
  QpdfGrid grid;
  grid.axis_kind = AxisKind::amplitude_sweep;
  grid.meta = {s.value(), p.value(), q.value(), beta, phase, 0, opts.method,
               std::string(kRawTraceMeasure)};
  grid.axis_values.resize(n_points);
  grid.values.resize(n_points);
  for (int k = 0; k < n_points; ++k) {
    grid.axis_values[k] = max_modulus * k / (n_points - 1);
  }
  grid.axis_values.back() = max_modulus;

  if (opts.method == Method::closed_form) {
    for (int k = 0; k < n_points; ++k) {
      grid.values[k] =
          qpdf_polarization_section(beta, q, p, std::polar(grid.axis_values[k], phase), s);
    }
  } else {
    const Complex gamma = q.value() * beta;
    const double reach = std::max({std::abs(beta), std::abs(gamma), max_modulus,
                                   std::abs(p.value()) * max_modulus});
    const int dim = trace_dim(opts, reach);
    const TwoModeState state = two_mode_coherent_density(beta, gamma, dim);
    check_truncation(max_modulus * std::max(1.0, std::abs(p.value())), dim, "phase-space point");
    const TraceEvaluator eval(state, s);
    parallel_for(n_points, opts.threads, [&](int k) {
      const Complex ax = std::polar(grid.axis_values[k], phase);
      grid.values[k] = eval(ax, p.value() * ax);
    });
    grid.meta.dim_used = dim;
  }
  grid.validate();
  return grid;
}

QpdfGrid sweep_plane(const TwoModeState& state, const PolarizationIndex& p, OrderParameter s,
                     double half_width, int n_points, int threads) {
  require_points(n_points);
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ValidationError("plane half-width must be finite and > 0");
  }
  QpdfGrid grid;
  grid.axis_kind = AxisKind::plane;
  grid.meta = {s.value(), p.value(), Complex{}, Complex{}, half_width, state.dim(),
               Method::trace_oracle, std::string(kRawTraceMeasure)};
  grid.axis_values.resize(n_points);
  for (int k = 0; k < n_points; ++k) {
    grid.axis_values[k] = -half_width + 2.0 * half_width * k / (n_points - 1);
  }
  grid.axis_values.back() = half_width;
  grid.axis2_values = grid.axis_values;
  grid.values.resize(static_cast<size_t>(n_points) * n_points);
  const TraceEvaluator eval(state, s);
  parallel_for(n_points * n_points, threads, [&](int idx) {
    const int i = idx / n_points;
    const int j = idx % n_points;
    const Complex ax{grid.axis_values[i], grid.axis2_values[j]};
    grid.values[idx] = eval(ax, p.value() * ax);
  });
  grid.validate();
  return grid;
}

// ---------------------------------------------------------------------------
// Integrals

QuadratureSpec default_quadrature(double support_radius) {
  return {support_radius + 5.0, 200};
}

NormalizationResult normalization_check(const SingleModeState& state, OrderParameter s,
                                        QuadratureSpec quadrature) {
  const auto rule = gauss_legendre(quadrature.nodes, -quadrature.half_width,
                                   quadrature.half_width);
  const int n = quadrature.nodes;
  std::vector<double> rows(n, 0.0);
  parallel_for(n, 0, [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += rule.weights[j] *
             single_mode_trace(state, Complex{rule.nodes[i], rule.nodes[j]}, s);
    }
    rows[i] = rule.weights[i] * acc;
  });
  double sum = 0.0;
  for (double r : rows) sum += r;
  NormalizationResult out;
  out.value = sum / kPi;
  out.deviation = std::abs(out.value - 1.0);
  out.box_warning = quadrature.half_width < std::sqrt(state.mean_photons()) + 5.0;
  return out;
}

NormalizationResult normalization_check(const TwoModeState& state, OrderParameter s,
                                        QuadratureSpec quadrature) {
  const SingleModeState rx = state.reduced_x();
  const SingleModeState ry = state.reduced_y();
  // ||rho - rho_x (x) rho_y||_F^2
  const Matrix dx = rx.density();
  const Matrix dy = ry.density();
  const TwoModeOperator marginals{TruncatedOperator(dx), TruncatedOperator(dy)};
  const double px = (dx * dx).trace().real();
  const double py = (dy * dy).trace().real();
  const double gap =
      state.purity() - 2.0 * expectation(state, marginals).real() + px * py;
  if (gap > kProductTol) {
    std::ostringstream msg;
    msg << "two-mode normalization_check needs a product state (distance^2 " << gap << ")";
    throw ValidationError(msg.str());
  }
  const auto nx = normalization_check(rx, s, quadrature);
  const auto ny = normalization_check(ry, s, quadrature);
  NormalizationResult out;
  out.value = nx.value * ny.value;
  out.deviation = std::abs(out.value - 1.0);
  out.box_warning = nx.box_warning || ny.box_warning;
  return out;
}

double poincare_sphere_qpdf(Complex beta, const PolarizationIndex& q, double chi0,
                            double delta0, OrderParameter s, RadialQuadrature quadrature) {
  const PolarizationIndex p = PolarizationIndex::from_angles(chi0, delta0);
  if (quadrature.radial_nodes < 1 || quadrature.angular_nodes < 1) {
    throw ValidationError("radial quadrature needs positive node counts");
  }
  const double radius = quadrature.max_radius > 0.0
                            ? quadrature.max_radius
                            : std::abs(beta) * (1.0 + std::abs(q.value())) + 10.0;
  const auto rule = gauss_legendre(quadrature.radial_nodes, 0.0, radius);
  const int n_phi = quadrature.angular_nodes;
  const double dphi = 2.0 * kPi / n_phi;
  double total = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    double ring = 0.0;
    for (int j = 0; j < n_phi; ++j) {
      ring += qpdf_polarization_section(beta, q, p, std::polar(r, j * dphi), s);
    }
    total += rule.weights[i] * r * ring * dphi;
  }
  return total;
}

}  // namespace polqpdf
