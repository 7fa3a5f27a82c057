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

// Dense operator algebra on a photon-number-truncated Fock space.
//
// Two-mode vectors and matrices use the ordering index = n_x * dim + n_y.
// Only the helpers two_mode_index / split_two_mode_index below know this.

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "polqpdf/poincare.hpp"

namespace polqpdf {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Largest weight a coherent amplitude may lose to truncation.
inline constexpr double kTailTolerance = 1e-12;
/// Supported per-mode truncation envelope for dense two-mode work.
inline constexpr int kMaxDim = 120;

inline int two_mode_index(int nx, int ny, int dim) { return nx * dim + ny; }
inline std::pair<int, int> split_two_mode_index(int index, int dim) {
  return {index / dim, index % dim};
}

/// Kronecker product with the two-mode ordering above (a acts on x).
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Cahill-Glauber ordering parameter s, restricted to -1 <= s < 1.
class OrderParameter {
 public:
  /// Throws SingularOrderError for s == 1, ValidationError otherwise out of
  /// range.
  explicit OrderParameter(double s);

  double value() const noexcept { return s_; }
  /// 2 / (1 - s)
  double prefactor() const noexcept { return 2.0 / (1.0 - s_); }
  /// ((s+1)/(s-1))^k for k = 0..count-1.  Exact (-1)^k at s = 0 and
  /// exact (1, 0, 0, ...) at s = -1.
  std::vector<double> number_weights(int count) const;

 private:
  double s_;
};

/// Square complex matrix on an n < dim Fock space.
class TruncatedOperator {
 public:
  /// Throws ValidationError unless the matrix is square, non-empty and finite.
  explicit TruncatedOperator(Matrix entries);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const noexcept { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  TruncatedOperator adjoint() const { return TruncatedOperator(entries_.adjoint()); }
  TruncatedOperator operator*(const TruncatedOperator& rhs) const;

 private:
  Matrix entries_;
};

TruncatedOperator identity(int dim);
/// sqrt(n) on the first superdiagonal.
TruncatedOperator annihilation(int dim);
TruncatedOperator creation(int dim);
TruncatedOperator number(int dim);

/// Poisson weight sum_{n >= dim} e^{-mean} mean^n / n!.
double poisson_tail(double mean, int dim);
/// Smallest dim whose Poisson tail at mean |modulus|^2 is below kTailTolerance.
int required_dim(double modulus);
/// Default sizing: max(ceil((M + 3)^2 + 10), required_dim(M)).
int auto_dim(double max_modulus);
/// Throws TruncationError (carrying required_dim) if dim is too small for an
/// amplitude of the given modulus.
void check_truncation(double modulus, int dim, const char* what);
bool truncation_admits(double modulus, int dim);

/// Truncated coherent state e^{-|b|^2/2} b^n / sqrt(n!), renormalized.
/// Throws TruncationError when the discarded tail exceeds kTailTolerance.
Vector coherent_vector(Complex beta, int dim);
/// Number state |n>.
Vector fock_vector(int n, int dim);

/// Block <m|D(xi)|n> for m < rows, n < cols of the untruncated displacement
/// operator, from the associated-Laguerre closed form evaluated in log space.
Matrix displacement_block(Complex xi, int rows, int cols);

TruncatedOperator displacement(Complex xi, int dim);
/// D(xi) e^{s |xi|^2 / 2}
TruncatedOperator sordered_displacement(Complex xi, OrderParameter s, int dim);

/// t(alpha, s) = (2/(1-s)) D(alpha) ((s+1)/(s-1))^{a^dag a} D(alpha)^dag,
/// restricted to n < dim.  Entries are the exact elements of the untruncated
/// operator, evaluated as
///   <m|t|n> = c e^{-2s|alpha|^2/(1-s^2)} r^{m+n} (-1)^n <m|D(xi)|n>,
///   c = 2/(1-s),  r = sqrt((1+s)/(1-s)),  xi = 2 alpha / sqrt(1-s^2),
/// which stays finite for 0 < s < 1 where the photon-number sum cancels
/// catastrophically.  At s = -1 the kernel is |alpha><alpha|.
TruncatedOperator kernel(Complex alpha, OrderParameter s, int dim);

/// Product operator x (x) y on the two-mode space.  Stored factored; dense()
/// materializes the dim^2 x dim^2 matrix.
class TwoModeOperator {
 public:
  /// Throws ValidationError if the factors have different dimensions.
  TwoModeOperator(TruncatedOperator x, TruncatedOperator y);

  int dim() const noexcept { return x_.dim(); }
  const TruncatedOperator& x() const noexcept { return x_; }
  const TruncatedOperator& y() const noexcept { return y_; }

  /// <mx, my| op |nx, ny>
  Complex entry(int mx, int my, int nx, int ny) const { return x_(mx, nx) * y_(my, ny); }
  Matrix dense() const { return kron(x_.matrix(), y_.matrix()); }

 private:
  TruncatedOperator x_;
  TruncatedOperator y_;
};

/// T(ax, ay, s) = t(ax, s) (x) t(ay, s)
TwoModeOperator transiting(Complex ax, Complex ay, OrderParameter s, int dim);
/// transiting(ax, p * ax, s, dim)
TwoModeOperator transiting_restricted(Complex ax, const PolarizationIndex& p, OrderParameter s,
                                      int dim);

/// Density operator on one truncated mode, stored as a weighted ensemble of
/// normalized pure states.
class SingleModeState {
 public:
  struct Component {
    double weight;
    Vector amplitudes;
  };

  static SingleModeState pure(const Vector& psi);
  static SingleModeState coherent(Complex beta, int dim);
  static SingleModeState fock(int n, int dim);
  /// Weights are normalized to sum 1.
  static SingleModeState mixture(const std::vector<std::pair<double, SingleModeState>>& parts);
  /// Eigendecomposes rho.  Throws ValidationError unless Hermitian (1e-12),
  /// unit trace (1e-9) and positive semidefinite (-1e-10).
  static SingleModeState from_density(const Matrix& rho);

  int dim() const noexcept { return dim_; }
  const std::vector<Component>& components() const noexcept { return components_; }
  Matrix density() const;
  double mean_photons() const;

 private:
  SingleModeState(int dim, std::vector<Component> components);
  int dim_;
  std::vector<Component> components_;
};

/// Density operator on two truncated modes as a weighted ensemble of pure
/// states.  Each pure component is kept as its dim x dim amplitude matrix
/// psi(n_x, n_y); components built from a product of single-mode vectors
/// also keep the factors.
class TwoModeState {
 public:
  struct Component {
    double weight;
    Matrix amplitudes;
    std::optional<std::pair<Vector, Vector>> factors;
  };

  /// psi indexed by two_mode_index.  Throws ValidationError unless normalized.
  static TwoModeState pure(const Vector& psi, int dim);
  static TwoModeState product(const Vector& x, const Vector& y);
  static TwoModeState mixture(const std::vector<std::pair<double, TwoModeState>>& parts);
  /// Same checks as SingleModeState::from_density.
  static TwoModeState from_density(const Matrix& rho, int dim);

  int dim() const noexcept { return dim_; }
  const std::vector<Component>& components() const noexcept { return components_; }

  /// dim^2 x dim^2 matrix.
  Matrix density() const;
  /// Reduced states (partial traces).
  SingleModeState reduced_x() const;
  SingleModeState reduced_y() const;
  double purity() const;
  double mean_photons_x() const;
  double mean_photons_y() const;

 private:
  TwoModeState(int dim, std::vector<Component> components);
  int dim_;
  std::vector<Component> components_;
};

/// |beta, gamma><beta, gamma| with tail-checked coherent vectors.
TwoModeState two_mode_coherent_density(Complex beta, Complex gamma, int dim);

/// Tr[rho op].  Throws ValidationError on a dimension mismatch.
Complex expectation(const TwoModeState& state, const TwoModeOperator& op);
Complex expectation(const SingleModeState& state, const TruncatedOperator& op);

}  // namespace polqpdf
