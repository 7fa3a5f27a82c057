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

// Classical description of a perfectly polarized plane wave: Poincare-sphere
// parameters, the index of polarization and polarization-basis changes.

#include <complex>
#include <utility>

namespace polqpdf {

using Complex = std::complex<double>;

/// Amplitude pair (alpha_x, alpha_y) in the linear basis.
struct AmplitudePair {
  Complex x;
  Complex y;
};

/// Intensity amplitude, polar angle, azimuth and mean phase of a polarized
/// field.  Canonical ranges: a0 >= 0, chi0 in [0, pi], delta0 in (-pi, pi],
/// phi in [0, 2 pi).
struct PoincareParams {
  double a0 = 0.0;
  double chi0 = 0.0;
  double delta0 = 0.0;
  double phi = 0.0;

  /// Throws ValidationError when a field is outside its canonical range.
  void validate() const;
};

/// Folds an angle into (-pi, pi].
double wrap_signed(double angle);
/// Folds an angle into [0, 2 pi).
double wrap_positive(double angle);

/// (a0 cos(chi0/2) e^{i(phi - delta0/2)}, a0 sin(chi0/2) e^{i(phi + delta0/2)})
AmplitudePair poincare_to_amplitudes(const PoincareParams& p);

/// Inverse of poincare_to_amplitudes.  delta0 is set to 0 when one of the
/// amplitudes vanishes (the azimuth is then unobservable).
/// Throws DegenerateInputError for (0, 0).
PoincareParams amplitudes_to_poincare(Complex ax, Complex ay);

/// Ratio p = alpha_y / alpha_x of a polarized field.  Always finite.
class PolarizationIndex {
 public:
  /// Throws ValidationError for a non-finite value.
  explicit PolarizationIndex(Complex value);

  /// tan(chi0/2) e^{i delta0}; throws PoleError for chi0 = pi.
  static PolarizationIndex from_angles(double chi0, double delta0);
  static PolarizationIndex from_poincare(const PoincareParams& p) {
    return from_angles(p.chi0, p.delta0);
  }

  Complex value() const noexcept { return value_; }
  /// tan(chi0/2), i.e. |p|.
  double tan_half_chi() const { return std::abs(value_); }
  /// Polar angle chi0 in [0, pi).
  double chi0() const;
  /// Azimuth delta0 in (-pi, pi], 0 when p = 0.
  double delta0() const;

 private:
  Complex value_;
};

/// p = ay / ax.  Throws PoleError when ax == 0.
PolarizationIndex index_of_polarization(Complex ax, Complex ay);

/// Unit complex polarization vector in the linear basis.
class JonesVector {
 public:
  /// Throws ValidationError unless |ex|^2 + |ey|^2 = 1 within 1e-12.
  JonesVector(Complex ex, Complex ey);

  /// (cos(chi0/2) e^{-i delta0/2}, sin(chi0/2) e^{+i delta0/2})
  static JonesVector from_angles(double chi0, double delta0);

  Complex ex() const noexcept { return ex_; }
  Complex ey() const noexcept { return ey_; }

  /// Unit vector orthogonal to this one: (-conj(ey), conj(ex)).
  JonesVector orthogonal() const;

 private:
  Complex ex_;
  Complex ey_;
};

/// <a, b> = conj(a.ex) b.ex + conj(a.ey) b.ey
Complex inner(const JonesVector& a, const JonesVector& b);

/// Orthonormal pair of polarization vectors.
class BasisPair {
 public:
  /// Throws ValidationError unless the pair is orthonormal within 1e-12.
  BasisPair(JonesVector eps, JonesVector eps_perp);

  static BasisPair linear();
  /// ((1, i)/sqrt 2, (1, -i)/sqrt 2)
  static BasisPair circular();
  /// (e, e.orthogonal())
  static BasisPair adapted_to(const JonesVector& e);

  const JonesVector& eps() const noexcept { return eps_; }
  const JonesVector& eps_perp() const noexcept { return eps_perp_; }

 private:
  JonesVector eps_;
  JonesVector eps_perp_;
};

/// Index of polarization of the field polarized along e0, measured in the
/// given basis: <eps_perp, e0> / <eps, e0>.  Throws PoleError when the
/// denominator vanishes.
Complex iop_in_basis(const JonesVector& e0, const BasisPair& basis);

/// Mode amplitudes in the new basis:
/// (conj(eps_x) ax + conj(eps_y) ay, conj(perp_x) ax + conj(perp_y) ay).
AmplitudePair transform_amplitudes(Complex ax, Complex ay, const BasisPair& basis);

}  // namespace polqpdf
