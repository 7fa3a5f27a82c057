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

#include <gtest/gtest.h>

#include <cmath>

#include "polqpdf/errors.hpp"
#include "test_support.hpp"

namespace polqpdf {
namespace {

using testing::kPi;
using testing::random_in_disc;
using testing::uniform;

constexpr double kTol = 1e-12;

void expect_near(Complex a, Complex b, double tol) {
  EXPECT_NEAR(std::abs(a - b), 0.0, tol) << a << " vs " << b;
}

TEST(PoincareToAmplitudes, DiagonalLinear) {
  const auto amp = poincare_to_amplitudes({1.0, kPi / 2, 0.0, 0.0});
  expect_near(amp.x, 1.0 / std::sqrt(2.0), kTol);
  expect_near(amp.y, 1.0 / std::sqrt(2.0), kTol);
}

TEST(PoincareToAmplitudes, XPolarized) {
  const auto amp = poincare_to_amplitudes({2.0, 0.0, 0.0, kPi / 2});
  expect_near(amp.x, Complex(0.0, 2.0), kTol);
  expect_near(amp.y, 0.0, kTol);
}

TEST(PoincareToAmplitudes, IntensityIsA0Squared) {
  for (int i = 0; i < 200; ++i) {
    const PoincareParams p{uniform(0.0, 4.0), uniform(0.0, kPi), uniform(-kPi, kPi),
                           uniform(0.0, 2 * kPi)};
    const auto amp = poincare_to_amplitudes(p);
    EXPECT_NEAR(std::norm(amp.x) + std::norm(amp.y), p.a0 * p.a0, 1e-12 * (1 + p.a0 * p.a0));
  }
}

TEST(PoincareParams, ValidateRejectsOutOfRange) {
  EXPECT_THROW((PoincareParams{-1.0, 0.0, 0.0, 0.0}.validate()), ValidationError);
  EXPECT_THROW((PoincareParams{1.0, 4.0, 0.0, 0.0}.validate()), ValidationError);
  EXPECT_THROW((PoincareParams{1.0, 1.0, -kPi, 0.0}.validate()), ValidationError);
  EXPECT_THROW((PoincareParams{1.0, 1.0, 0.0, 2 * kPi}.validate()), ValidationError);
  EXPECT_NO_THROW((PoincareParams{1.0, kPi, kPi, 0.0}.validate()));
}

TEST(AmplitudesToPoincare, Examples) {
  const auto a = amplitudes_to_poincare(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(a.a0, 1.0, kTol);
  EXPECT_NEAR(a.chi0, kPi / 2, kTol);
  EXPECT_NEAR(a.delta0, 0.0, kTol);
  EXPECT_NEAR(a.phi, 0.0, kTol);

  const auto b = amplitudes_to_poincare(Complex(0.0, 2.0), 0.0);
  EXPECT_NEAR(b.a0, 2.0, kTol);
  EXPECT_EQ(b.chi0, 0.0);
  EXPECT_EQ(b.delta0, 0.0);
  EXPECT_NEAR(b.phi, kPi / 2, kTol);
}

TEST(AmplitudesToPoincare, YOnlyCanonicalizesAzimuth) {
  const auto p = amplitudes_to_poincare(0.0, Complex(0.0, -3.0));
  EXPECT_NEAR(p.chi0, kPi, kTol);
  EXPECT_EQ(p.delta0, 0.0);
  const auto amp = poincare_to_amplitudes(p);
  expect_near(amp.y, Complex(0.0, -3.0), kTol);
}

TEST(AmplitudesToPoincare, ZeroPairIsDegenerate) {
  EXPECT_THROW(amplitudes_to_poincare(0.0, 0.0), DegenerateInputError);
}

TEST(AmplitudesToPoincare, RoundTripFromAmplitudes) {
  for (int i = 0; i < 1000; ++i) {
    const Complex ax = random_in_disc(3.0);
    const Complex ay = random_in_disc(3.0);
    const auto p = amplitudes_to_poincare(ax, ay);
    EXPECT_NO_THROW(p.validate());
    const auto back = poincare_to_amplitudes(p);
    expect_near(back.x, ax, kTol);
    expect_near(back.y, ay, kTol);
  }
}

TEST(AmplitudesToPoincare, RoundTripFromParams) {
  for (int i = 0; i < 1000; ++i) {
    const PoincareParams p{uniform(0.1, 4.0), uniform(0.01, kPi - 0.01), uniform(-kPi, kPi),
                           uniform(0.0, 2 * kPi)};
    const auto amp = poincare_to_amplitudes(p);
    const auto q = amplitudes_to_poincare(amp.x, amp.y);
    EXPECT_NEAR(q.a0, p.a0, kTol);
    EXPECT_NEAR(q.chi0, p.chi0, kTol);
    EXPECT_NEAR(std::abs(wrap_signed(q.delta0 - p.delta0)), 0.0, kTol);
    EXPECT_NEAR(std::abs(wrap_signed(q.phi - p.phi)), 0.0, kTol);
  }
}

TEST(Angles, Wrapping) {
  EXPECT_DOUBLE_EQ(wrap_signed(kPi), kPi);
  EXPECT_NEAR(wrap_signed(-kPi), kPi, 1e-15);
  EXPECT_NEAR(wrap_signed(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_EQ(wrap_positive(0.0), 0.0);
  EXPECT_NEAR(wrap_positive(-kPi / 2), 3 * kPi / 2, 1e-15);
  EXPECT_LT(wrap_positive(2 * kPi), 2 * kPi);
}

// Fig. 1b caption state: beta = 20^{-1/2} e^{i atan 2}, gamma = q beta with
// q = (1 + i)/sqrt 2, so theta = pi/2 and delta = pi/4 under the
// beta/gamma parametrization that mirrors poincare_to_amplitudes.
TEST(IndexOfPolarization, FigureOneBInversion) {
  const Complex beta = std::polar(1.0 / std::sqrt(20.0), std::atan(2.0));
  const Complex q(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  const Complex gamma = q * beta;
  const auto params = amplitudes_to_poincare(beta, gamma);
  EXPECT_NEAR(params.a0, std::sqrt(0.1), kTol);
  EXPECT_NEAR(params.chi0, kPi / 2, kTol);
  EXPECT_NEAR(params.delta0, kPi / 4, kTol);
  EXPECT_NEAR(params.phi, std::atan(2.0) + kPi / 8, kTol);

  const auto amp = poincare_to_amplitudes(params);
  expect_near(amp.x, beta, kTol);
  expect_near(amp.y, gamma, kTol);
  expect_near(index_of_polarization(beta, gamma).value(), q, kTol);
  expect_near(PolarizationIndex::from_angles(kPi / 2, kPi / 4).value(), q, kTol);
}

TEST(IndexOfPolarization, Examples) {
  expect_near(index_of_polarization(1.0, 1.0).value(), 1.0, kTol);
  const Complex small(0.0049, 0.0049);
  expect_near(index_of_polarization(1.0, small).value(), small, kTol);
  EXPECT_THROW(index_of_polarization(0.0, 1.0), PoleError);
}

TEST(IndexOfPolarization, AgreesWithAngles) {
  for (int i = 0; i < 1000; ++i) {
    const PoincareParams p{uniform(0.1, 4.0), uniform(0.0, kPi - 0.05), uniform(-kPi, kPi),
                           uniform(0.0, 2 * kPi)};
    const auto amp = poincare_to_amplitudes(p);
    const Complex expected = std::tan(p.chi0 / 2) * std::polar(1.0, p.delta0);
    expect_near(index_of_polarization(amp.x, amp.y).value(), expected,
                kTol * (1 + std::abs(expected)));
    expect_near(PolarizationIndex::from_poincare(p).value(), expected,
                kTol * (1 + std::abs(expected)));
  }
}

TEST(PolarizationIndex, AnglesRecovered) {
  const auto p = PolarizationIndex::from_angles(1.2, -2.0);
  EXPECT_NEAR(p.chi0(), 1.2, kTol);
  EXPECT_NEAR(p.delta0(), -2.0, kTol);
  EXPECT_NEAR(p.tan_half_chi(), std::tan(0.6), kTol);
  EXPECT_EQ(PolarizationIndex(0.0).delta0(), 0.0);
}

TEST(PolarizationIndex, Rejections) {
  EXPECT_THROW(PolarizationIndex::from_angles(kPi, 0.0), PoleError);
  EXPECT_THROW(PolarizationIndex(Complex(NAN, 0.0)), ValidationError);
  EXPECT_THROW(PolarizationIndex(Complex(INFINITY, 0.0)), ValidationError);
}

TEST(JonesVector, UnitNormEnforced) {
  EXPECT_THROW(JonesVector(1.0, 0.1), ValidationError);
  const auto e = JonesVector::from_angles(0.7, 1.3);
  EXPECT_NEAR(std::norm(e.ex()) + std::norm(e.ey()), 1.0, kTol);
  expect_near(e.ey() / e.ex(), PolarizationIndex::from_angles(0.7, 1.3).value(), kTol);
  expect_near(inner(e, e.orthogonal()), 0.0, kTol);
}

TEST(BasisPair, OrthonormalityEnforced) {
  EXPECT_THROW(BasisPair(JonesVector(1.0, 0.0), JonesVector(1.0, 0.0)), ValidationError);
  EXPECT_NO_THROW(BasisPair::circular());
}

TEST(IopInBasis, LinearBasisIsIdentity) {
  for (int i = 0; i < 100; ++i) {
    const double chi = uniform(0.0, kPi - 0.05);
    const double delta = uniform(-kPi, kPi);
    const auto e0 = JonesVector::from_angles(chi, delta);
    expect_near(iop_in_basis(e0, BasisPair::linear()),
                PolarizationIndex::from_angles(chi, delta).value(), 1e-11);
  }
}

TEST(IopInBasis, AdaptedBasisGivesZero) {
  const auto e0 = JonesVector::from_angles(1.1, 0.4);
  expect_near(iop_in_basis(e0, BasisPair::adapted_to(e0)), 0.0, kTol);
}

TEST(IopInBasis, PoleWhenOrthogonal) {
  const auto e0 = JonesVector::from_angles(1.1, 0.4);
  EXPECT_THROW(iop_in_basis(e0, BasisPair::adapted_to(e0.orthogonal())), PoleError);
}

// Random orthonormal basis: uniform first vector, random phase on the second.
BasisPair random_basis() {
  const auto v = testing::random_unit_vector(2);
  const JonesVector e(v(0), v(1));
  const Complex phase = std::polar(1.0, uniform(0.0, 2 * kPi));
  const auto perp = e.orthogonal();
  return BasisPair(e, JonesVector(phase * perp.ex(), phase * perp.ey()));
}

TEST(TransformAmplitudes, Examples) {
  const auto id = transform_amplitudes(Complex(0.3, 1.0), Complex(-2.0, 0.5), BasisPair::linear());
  expect_near(id.x, Complex(0.3, 1.0), kTol);
  expect_near(id.y, Complex(-2.0, 0.5), kTol);

  const auto c = transform_amplitudes(1.0, 0.0, BasisPair::circular());
  expect_near(c.x, 1.0 / std::sqrt(2.0), kTol);
  expect_near(c.y, 1.0 / std::sqrt(2.0), kTol);
}

TEST(TransformAmplitudes, PreservesIntensityOverRandomBases) {
  for (int i = 0; i < 1000; ++i) {
    const auto basis = random_basis();
    const Complex ax = random_in_disc(3.0);
    const Complex ay = random_in_disc(3.0);
    const auto out = transform_amplitudes(ax, ay, basis);
    EXPECT_NEAR(std::norm(out.x) + std::norm(out.y), std::norm(ax) + std::norm(ay), 1e-12 * 20);
  }
}

TEST(TransformAmplitudes, ConsistentWithIopInBasis) {
  for (int i = 0; i < 1000; ++i) {
    const auto basis = random_basis();
    const auto e0 = JonesVector::from_angles(uniform(0.0, kPi), uniform(-kPi, kPi));
    const Complex a = std::polar(uniform(0.5, 3.0), uniform(0.0, 2 * kPi));
    const auto out = transform_amplitudes(a * e0.ex(), a * e0.ey(), basis);
    if (std::abs(out.x) < 1e-3) continue;
    const Complex ratio = out.y / out.x;
    expect_near(iop_in_basis(e0, basis), ratio, 1e-10 * (1 + std::abs(ratio)));
  }
}

}  // namespace
}  // namespace polqpdf
