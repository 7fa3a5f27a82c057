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

#include "polqpdf/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "displacement_walk.hpp"
#include "polqpdf/errors.hpp"

namespace polqpdf {
namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = -1e-10;

void require_dim(int dim) {
  if (dim < 1) {
    std::ostringstream msg;
    msg << "Fock dimension must be >= 1, got " << dim;
    throw ValidationError(msg.str());
  }
}

// Validates a density matrix and returns its eigen-ensemble.
std::vector<std::pair<double, Vector>> eigen_ensemble(const Matrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  if (!rho.allFinite()) throw ValidationError("density matrix has non-finite entries");
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (residual " << herm << ")";
    throw ValidationError(msg.str());
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw ValidationError(msg.str());
  }
  const Matrix sym = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  const auto& evals = solver.eigenvalues();
  if (evals.minCoeff() < kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite (min eigenvalue " << evals.minCoeff()
        << ")";
    throw ValidationError(msg.str());
  }
  std::vector<std::pair<double, Vector>> out;
  for (Eigen::Index k = 0; k < evals.size(); ++k) {
    if (evals(k) > 0.0) out.emplace_back(evals(k), solver.eigenvectors().col(k));
  }
  return out;
}

Vector normalized(const Vector& psi, const char* what) {
  if (psi.size() == 0) throw ValidationError(std::string(what) + ": empty state vector");
  const double n = psi.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kTraceTol) {
    std::ostringstream msg;
    msg << what << ": state vector must be normalized, norm = " << n;
    throw ValidationError(msg.str());
  }
  return psi / n;
}

Matrix to_amplitude_matrix(const Vector& psi, int dim) {
  Matrix out(dim, dim);
  for (int nx = 0; nx < dim; ++nx) {
    for (int ny = 0; ny < dim; ++ny) out(nx, ny) = psi(two_mode_index(nx, ny, dim));
  }
  return out;
}

Vector to_two_mode_vector(const Matrix& amps) {
  const int dim = static_cast<int>(amps.rows());
  Vector out(static_cast<Eigen::Index>(dim) * dim);
  for (int nx = 0; nx < dim; ++nx) {
    for (int ny = 0; ny < dim; ++ny) out(two_mode_index(nx, ny, dim)) = amps(nx, ny);
  }
  return out;
}

template <typename State>
double mixture_total(const std::vector<std::pair<double, State>>& parts) {
  if (parts.empty()) throw ValidationError("mixture needs at least one component");
  double total = 0.0;
  for (const auto& [w, st] : parts) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("mixture weights must be >= 0");
    if (st.dim() != parts.front().second.dim()) {
      throw ValidationError("mixture components have different dimensions");
    }
    total += w;
  }
  if (!(total > 0.0)) throw ValidationError("mixture weights sum to zero");
  return total;
}

// e^{-|b|^2/2} b^n / sqrt(n!) for n < dim, without renormalization.
Vector coherent_amplitudes(Complex beta, int dim) {
  Vector v = Vector::Zero(dim);
  if (beta == Complex{}) {
    v(0) = 1.0;
    return v;
  }
  const double r = std::abs(beta);
  const double theta = std::arg(beta);
  const double log_r = std::log(r);
  double log_fact = 0.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) log_fact += std::log(static_cast<double>(n));
    v(n) = std::polar(std::exp(-0.5 * r * r + n * log_r - 0.5 * log_fact), n * theta);
  }
  return v;
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

OrderParameter::OrderParameter(double s) : s_(s) {
  if (s == 1.0) {
    throw SingularOrderError("s = 1 is singular: the kernel carries 1/(1-s) factors");
  }
  if (!(s >= -1.0 && s < 1.0)) {
    std::ostringstream msg;
    msg << "order parameter must satisfy -1 <= s < 1, got " << s;
    throw ValidationError(msg.str());
  }
}

std::vector<double> OrderParameter::number_weights(int count) const {
  std::vector<double> w(static_cast<size_t>(std::max(count, 0)), 0.0);
  if (count <= 0) return w;
  if (s_ == 0.0) {
    for (int k = 0; k < count; ++k) w[k] = (k % 2 == 0) ? 1.0 : -1.0;
    return w;
  }
  if (s_ == -1.0) {
    w[0] = 1.0;
    return w;
  }
  const double ratio = (s_ + 1.0) / (s_ - 1.0);
  w[0] = 1.0;
  for (int k = 1; k < count; ++k) w[k] = w[k - 1] * ratio;
  return w;
}

TruncatedOperator::TruncatedOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw ValidationError("operator matrix must be square and non-empty");
  }
  if (!entries_.allFinite()) throw ValidationError("operator matrix has non-finite entries");
}

TruncatedOperator TruncatedOperator::operator*(const TruncatedOperator& rhs) const {
  if (dim() != rhs.dim()) throw ValidationError("operator dimension mismatch");
  return TruncatedOperator(entries_ * rhs.entries_);
}

TruncatedOperator identity(int dim) {
  require_dim(dim);
  return TruncatedOperator(Matrix::Identity(dim, dim));
}

TruncatedOperator annihilation(int dim) {
  require_dim(dim);
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return TruncatedOperator(std::move(a));
}

TruncatedOperator creation(int dim) { return annihilation(dim).adjoint(); }

TruncatedOperator number(int dim) {
  require_dim(dim);
  Matrix n = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return TruncatedOperator(std::move(n));
}

double poisson_tail(double mean, int dim) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) throw ValidationError("Poisson mean must be >= 0");
  if (dim <= 0) return 1.0;
  if (mean == 0.0) return 0.0;
  const double log_mean = std::log(mean);
  double sum = 0.0;
  for (int n = dim;; ++n) {
    const double term = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
    sum += term;
    if (n > mean && (term < 1e-300 || term < 1e-17 * sum)) break;
  }
  return std::min(sum, 1.0);
}

int required_dim(double modulus) {
  const double mean = modulus * modulus;
  int dim = 1;
  while (poisson_tail(mean, dim) >= kTailTolerance) ++dim;
  return dim;
}

int auto_dim(double max_modulus) {
  const double rule = std::ceil((max_modulus + 3.0) * (max_modulus + 3.0) + 10.0);
  return std::max(static_cast<int>(rule), required_dim(max_modulus));
}

bool truncation_admits(double modulus, int dim) {
  return dim >= 1 && poisson_tail(modulus * modulus, dim) < kTailTolerance;
}

void check_truncation(double modulus, int dim, const char* what) {
  require_dim(dim);
  const double tail = poisson_tail(modulus * modulus, dim);
  if (tail >= kTailTolerance) {
    const int need = required_dim(modulus);
    std::ostringstream msg;
    msg << "truncation too small for " << what << ": |amplitude| = " << modulus
        << " at dim = " << dim << " loses weight " << tail << " (limit " << kTailTolerance
        << "); need dim >= " << need;
    throw TruncationError(msg.str(), need);
  }
}

Vector coherent_vector(Complex beta, int dim) {
  check_truncation(std::abs(beta), dim, "coherent state");
  const Vector v = coherent_amplitudes(beta, dim);
  return v / v.norm();
}

Vector fock_vector(int n, int dim) {
  require_dim(dim);
  if (n < 0 || n >= dim) throw ValidationError("Fock level outside the truncated space");
  Vector v = Vector::Zero(dim);
  v(n) = 1.0;
  return v;
}

Matrix displacement_block(Complex xi, int rows, int cols) {
  require_dim(rows);
  require_dim(cols);
  Matrix out = Matrix::Zero(rows, cols);
  if (xi == Complex{}) {
    for (int i = 0; i < std::min(rows, cols); ++i) out(i, i) = 1.0;
    return out;
  }
  detail::walk_displacement(xi, rows, cols,
                            [&out](int m, int n, double re, double im) { out(m, n) = {re, im}; });
  return out;
}

TruncatedOperator displacement(Complex xi, int dim) {
  return TruncatedOperator(displacement_block(xi, dim, dim));
}

TruncatedOperator sordered_displacement(Complex xi, OrderParameter s, int dim) {
  return TruncatedOperator(displacement_block(xi, dim, dim) *
                           std::exp(0.5 * s.value() * std::norm(xi)));
}

TruncatedOperator kernel(Complex alpha, OrderParameter s, int dim) {
  require_dim(dim);
  const double sv = s.value();
  const double c = s.prefactor();
  if (sv == -1.0) {
    const Vector v = coherent_amplitudes(alpha, dim);
    return TruncatedOperator(v * v.adjoint());
  }
  if (alpha == Complex{}) {
    const auto w = s.number_weights(dim);
    Matrix out = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) out(n, n) = c * w[n];
    return TruncatedOperator(std::move(out));
  }
  const double r = std::abs(alpha);
  const detail::WalkScale scale{4.0 * r * r / ((1.0 - sv) * (1.0 + sv)), std::log(c) - c * r * r,
                                std::log(c * r), (1.0 + sv) / (1.0 - sv)};
  Matrix out(dim, dim);
  detail::walk_diagonals(
      std::arg(alpha), scale, dim, dim,
      [&out](int m, int n, double re, double im) {
        const Complex v = (n & 1) ? Complex{-re, -im} : Complex{re, im};
        out(m, n) = v;
        out(n, m) = std::conj(v);
      },
      true);
  for (int n = 0; n < dim; ++n) out(n, n).imag(0.0);
  return TruncatedOperator(std::move(out));
}

TwoModeOperator::TwoModeOperator(TruncatedOperator x, TruncatedOperator y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.dim() != y_.dim()) throw ValidationError("two-mode factors differ in dimension");
}

TwoModeOperator transiting(Complex ax, Complex ay, OrderParameter s, int dim) {
  return {kernel(ax, s, dim), kernel(ay, s, dim)};
}

TwoModeOperator transiting_restricted(Complex ax, const PolarizationIndex& p, OrderParameter s,
                                      int dim) {
  return transiting(ax, p.value() * ax, s, dim);
}

// ---------------------------------------------------------------------------
// SingleModeState

SingleModeState::SingleModeState(int dim, std::vector<Component> components)
    : dim_(dim), components_(std::move(components)) {}

SingleModeState SingleModeState::pure(const Vector& psi) {
  return SingleModeState(static_cast<int>(psi.size()), {{1.0, normalized(psi, "pure state")}});
}

SingleModeState SingleModeState::coherent(Complex beta, int dim) {
  return pure(coherent_vector(beta, dim));
}

SingleModeState SingleModeState::fock(int n, int dim) { return pure(fock_vector(n, dim)); }

SingleModeState SingleModeState::mixture(
    const std::vector<std::pair<double, SingleModeState>>& parts) {
  const double total = mixture_total(parts);
  std::vector<Component> comps;
  for (const auto& [w, st] : parts) {
    for (const auto& c : st.components()) comps.push_back({w / total * c.weight, c.amplitudes});
  }
  return SingleModeState(parts.front().second.dim(), std::move(comps));
}

SingleModeState SingleModeState::from_density(const Matrix& rho) {
  std::vector<Component> comps;
  for (auto& [w, v] : eigen_ensemble(rho)) comps.push_back({w, std::move(v)});
  return SingleModeState(static_cast<int>(rho.rows()), std::move(comps));
}

Matrix SingleModeState::density() const {
  Matrix rho = Matrix::Zero(dim_, dim_);
  for (const auto& c : components_) rho += c.weight * c.amplitudes * c.amplitudes.adjoint();
  return rho;
}

double SingleModeState::mean_photons() const {
  double mean = 0.0;
  for (const auto& c : components_) {
    for (int n = 0; n < dim_; ++n) mean += c.weight * n * std::norm(c.amplitudes(n));
  }
  return mean;
}

// ---------------------------------------------------------------------------
// TwoModeState

TwoModeState::TwoModeState(int dim, std::vector<Component> components)
    : dim_(dim), components_(std::move(components)) {}

TwoModeState TwoModeState::pure(const Vector& psi, int dim) {
  require_dim(dim);
  if (psi.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw ValidationError("two-mode state vector must have dim^2 entries");
  }
  return TwoModeState(dim, {{1.0, to_amplitude_matrix(normalized(psi, "pure state"), dim), {}}});
}

TwoModeState TwoModeState::product(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw ValidationError("product factors differ in dimension");
  const Vector nx = normalized(x, "x factor");
  const Vector ny = normalized(y, "y factor");
  Matrix amps = nx * ny.transpose();
  return TwoModeState(static_cast<int>(x.size()),
                      {{1.0, std::move(amps), std::make_pair(nx, ny)}});
}

TwoModeState TwoModeState::mixture(const std::vector<std::pair<double, TwoModeState>>& parts) {
  const double total = mixture_total(parts);
  std::vector<Component> comps;
  for (const auto& [w, st] : parts) {
    for (const auto& c : st.components()) {
      comps.push_back({w / total * c.weight, c.amplitudes, c.factors});
    }
  }
  return TwoModeState(parts.front().second.dim(), std::move(comps));
}

TwoModeState TwoModeState::from_density(const Matrix& rho, int dim) {
  require_dim(dim);
  if (rho.rows() != static_cast<Eigen::Index>(dim) * dim) {
    throw ValidationError("two-mode density must be dim^2 x dim^2");
  }
  std::vector<Component> comps;
  for (auto& [w, v] : eigen_ensemble(rho)) comps.push_back({w, to_amplitude_matrix(v, dim), {}});
  return TwoModeState(dim, std::move(comps));
}

Matrix TwoModeState::density() const {
  const Eigen::Index n = static_cast<Eigen::Index>(dim_) * dim_;
  Matrix rho = Matrix::Zero(n, n);
  for (const auto& c : components_) {
    const Vector psi = to_two_mode_vector(c.amplitudes);
    rho += c.weight * psi * psi.adjoint();
  }
  return rho;
}

SingleModeState TwoModeState::reduced_x() const {
  const bool all_product =
      std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.factors; });
  if (all_product) {
    std::vector<std::pair<double, SingleModeState>> parts;
    for (const auto& c : components_) {
      parts.emplace_back(c.weight, SingleModeState::pure(c.factors->first));
    }
    return SingleModeState::mixture(parts);
  }
  Matrix rho = Matrix::Zero(dim_, dim_);
  for (const auto& c : components_) rho += c.weight * c.amplitudes * c.amplitudes.adjoint();
  return SingleModeState::from_density(0.5 * (rho + rho.adjoint()));
}

SingleModeState TwoModeState::reduced_y() const {
  const bool all_product =
      std::all_of(components_.begin(), components_.end(), [](const auto& c) { return c.factors; });
  if (all_product) {
    std::vector<std::pair<double, SingleModeState>> parts;
    for (const auto& c : components_) {
      parts.emplace_back(c.weight, SingleModeState::pure(c.factors->second));
    }
    return SingleModeState::mixture(parts);
  }
  // rho_y(ny, my) = sum_nx psi(nx, ny) conj(psi(nx, my))
  Matrix rho = Matrix::Zero(dim_, dim_);
  for (const auto& c : components_) {
    rho += c.weight * (c.amplitudes.transpose() * c.amplitudes.conjugate());
  }
  return SingleModeState::from_density(0.5 * (rho + rho.adjoint()));
}

double TwoModeState::purity() const {
  double p = 0.0;
  for (const auto& a : components_) {
    for (const auto& b : components_) {
      const Complex overlap = (a.amplitudes.conjugate().cwiseProduct(b.amplitudes)).sum();
      p += a.weight * b.weight * std::norm(overlap);
    }
  }
  return p;
}

double TwoModeState::mean_photons_x() const {
  double mean = 0.0;
  for (const auto& c : components_) {
    for (int nx = 0; nx < dim_; ++nx) mean += c.weight * nx * c.amplitudes.row(nx).squaredNorm();
  }
  return mean;
}

double TwoModeState::mean_photons_y() const {
  double mean = 0.0;
  for (const auto& c : components_) {
    for (int ny = 0; ny < dim_; ++ny) mean += c.weight * ny * c.amplitudes.col(ny).squaredNorm();
  }
  return mean;
}

TwoModeState two_mode_coherent_density(Complex beta, Complex gamma, int dim) {
  return TwoModeState::product(coherent_vector(beta, dim), coherent_vector(gamma, dim));
}

Complex expectation(const TwoModeState& state, const TwoModeOperator& op) {
  if (state.dim() != op.dim()) {
    std::ostringstream msg;
    msg << "dimension mismatch: state dim " << state.dim() << ", operator dim " << op.dim();
    throw ValidationError(msg.str());
  }
  const Matrix& a = op.x().matrix();
  const Matrix& b = op.y().matrix();
  Complex total{};
  for (const auto& c : state.components()) {
    if (c.factors) {
      const auto& [x, y] = *c.factors;
      total += c.weight * x.dot(a * x) * y.dot(b * y);
    } else {
      // Tr[|psi><psi| A (x) B] = sum conj(Psi) .* (A Psi B^T)
      const Matrix applied = a * c.amplitudes * b.transpose();
      total += c.weight * (c.amplitudes.conjugate().cwiseProduct(applied)).sum();
    }
  }
  return total;
}

Complex expectation(const SingleModeState& state, const TruncatedOperator& op) {
  if (state.dim() != op.dim()) throw ValidationError("dimension mismatch");
  Complex total{};
  for (const auto& c : state.components()) {
    total += c.weight * c.amplitudes.dot(op.matrix() * c.amplitudes);
  }
  return total;
}

}  // namespace polqpdf
