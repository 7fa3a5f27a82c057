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

#include "polqpdf/poincare.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "polqpdf/errors.hpp"

namespace polqpdf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitTol = 1e-12;
// Below this modulus a projection onto a unit vector counts as zero.
constexpr double kPoleTol = 1e-14;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double wrap_signed(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

double wrap_positive(double angle) {
  double r = std::fmod(angle, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

void PoincareParams::validate() const {
  std::ostringstream msg;
  if (!(a0 >= 0.0) || !std::isfinite(a0)) {
    msg << "a0 must be finite and >= 0, got " << a0;
  } else if (!(chi0 >= 0.0 && chi0 <= kPi)) {
    msg << "chi0 must lie in [0, pi], got " << chi0;
  } else if (!(delta0 > -kPi && delta0 <= kPi)) {
    msg << "delta0 must lie in (-pi, pi], got " << delta0;
  } else if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    msg << "phi must lie in [0, 2pi), got " << phi;
  } else {
    return;
  }
  throw ValidationError(msg.str());
}

AmplitudePair poincare_to_amplitudes(const PoincareParams& p) {
  p.validate();
  const double c = std::cos(0.5 * p.chi0);
  const double s = std::sin(0.5 * p.chi0);
  return {std::polar(p.a0 * c, p.phi - 0.5 * p.delta0),
          std::polar(p.a0 * s, p.phi + 0.5 * p.delta0)};
}

PoincareParams amplitudes_to_poincare(Complex ax, Complex ay) {
  if (!finite(ax) || !finite(ay)) throw ValidationError("amplitudes must be finite");
  const double mx = std::abs(ax);
  const double my = std::abs(ay);
  if (mx == 0.0 && my == 0.0) {
    throw DegenerateInputError("both amplitudes are zero; polarization is undefined");
  }
  PoincareParams out;
  out.a0 = std::hypot(mx, my);
  out.chi0 = 2.0 * std::atan2(my, mx);
  if (my == 0.0) {
    out.delta0 = 0.0;
    out.phi = wrap_positive(std::arg(ax));
  } else if (mx == 0.0) {
    out.delta0 = 0.0;
    out.phi = wrap_positive(std::arg(ay));
  } else {
    out.delta0 = wrap_signed(std::arg(ay) - std::arg(ax));
    out.phi = wrap_positive(std::arg(ax) + 0.5 * out.delta0);
  }
  return out;
}

PolarizationIndex::PolarizationIndex(Complex value) : value_(value) {
  if (!finite(value)) throw ValidationError("polarization index must be finite");
}

PolarizationIndex PolarizationIndex::from_angles(double chi0, double delta0) {
  if (!(chi0 >= 0.0 && chi0 <= kPi)) {
    throw ValidationError("chi0 must lie in [0, pi]");
  }
  if (chi0 == kPi) {
    throw PoleError("chi0 = pi: field is y-polarized and the index is infinite");
  }
  return PolarizationIndex(std::polar(std::tan(0.5 * chi0), delta0));
}

double PolarizationIndex::chi0() const { return 2.0 * std::atan(std::abs(value_)); }

double PolarizationIndex::delta0() const {
  if (value_ == Complex{}) return 0.0;
  return wrap_signed(std::arg(value_));
}

PolarizationIndex index_of_polarization(Complex ax, Complex ay) {
  if (ax == Complex{}) {
    throw PoleError("x amplitude is zero; index of polarization is infinite");
  }
  return PolarizationIndex(ay / ax);
}

JonesVector::JonesVector(Complex ex, Complex ey) : ex_(ex), ey_(ey) {
  const double norm2 = std::norm(ex) + std::norm(ey);
  if (!(std::abs(norm2 - 1.0) <= kUnitTol)) {
    std::ostringstream msg;
    msg << "Jones vector must have unit norm, |ex|^2+|ey|^2 = " << norm2;
    throw ValidationError(msg.str());
  }
}

JonesVector JonesVector::from_angles(double chi0, double delta0) {
  return {std::polar(std::cos(0.5 * chi0), -0.5 * delta0),
          std::polar(std::sin(0.5 * chi0), 0.5 * delta0)};
}

JonesVector JonesVector::orthogonal() const { return {-std::conj(ey_), std::conj(ex_)}; }

Complex inner(const JonesVector& a, const JonesVector& b) {
  return std::conj(a.ex()) * b.ex() + std::conj(a.ey()) * b.ey();
}

BasisPair::BasisPair(JonesVector eps, JonesVector eps_perp)
    : eps_(eps), eps_perp_(eps_perp) {
  const double overlap = std::abs(inner(eps_perp_, eps_));
  if (!(overlap <= kUnitTol)) {
    std::ostringstream msg;
    msg << "basis vectors are not orthogonal, |<eps_perp, eps>| = " << overlap;
    throw ValidationError(msg.str());
  }
}

BasisPair BasisPair::linear() { return {JonesVector{1.0, 0.0}, JonesVector{0.0, 1.0}}; }

BasisPair BasisPair::circular() {
  const double h = 1.0 / std::sqrt(2.0);
  return {JonesVector{h, Complex{0.0, h}}, JonesVector{h, Complex{0.0, -h}}};
}

BasisPair BasisPair::adapted_to(const JonesVector& e) { return {e, e.orthogonal()}; }

Complex iop_in_basis(const JonesVector& e0, const BasisPair& basis) {
  const Complex den = inner(basis.eps(), e0);
  if (std::abs(den) <= kPoleTol) {
    throw PoleError("field has no component along the first basis vector");
  }
  return inner(basis.eps_perp(), e0) / den;
}

AmplitudePair transform_amplitudes(Complex ax, Complex ay, const BasisPair& basis) {
  const auto& e = basis.eps();
  const auto& f = basis.eps_perp();
  return {std::conj(e.ex()) * ax + std::conj(e.ey()) * ay,
          std::conj(f.ex()) * ax + std::conj(f.ey()) * ay};
}

}  // namespace polqpdf
