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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"
#include "polqpdf/coherence.hpp"
#include "polqpdf/errors.hpp"
#include "polqpdf/figures.hpp"
#include "polqpdf/grid_io.hpp"
#include "polqpdf/poincare.hpp"
#include "polqpdf/qpdf.hpp"

namespace {

using namespace polqpdf;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  Complex disc(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * kPi));
  }

 private:
  std::mt19937_64 rng_;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  Sampler rng(1);
  const double orders[] = {-1.0, -0.5, 0.0};
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Complex beta = rng.disc(2.5), gamma = rng.disc(2.5);
    const Complex ax = rng.disc(2.5), ay = rng.disc(2.5);
    const OrderParameter s(orders[i % 3]);
    const auto state = two_mode_coherent_density(beta, gamma, 60);
    worst = std::max(worst, std::abs(qpdf_trace(state, ax, ay, s) -
                                     qpdf_coherent_closed(beta, gamma, ax, ay, s)));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-8 && secs <= 60.0,
          "200 tuples, dim 60: max |closed - trace| = " + sci(worst) + " (<= 1e-8), " +
              sci(secs) + " s (<= 60 s)"};
}

Outcome kernel_identities() {
  Sampler rng(2);
  double projector = 0.0;
  for (int i = 0; i < 25; ++i) {
    const Complex alpha = rng.disc(3.0);
    const int dim = auto_dim(std::abs(alpha));
    const Vector c = coherent_vector(alpha, dim);
    const Matrix t = kernel(alpha, OrderParameter(-1.0), dim).matrix();
    projector = std::max(projector, (t - c * c.adjoint()).cwiseAbs().maxCoeff());
  }
  const int dim = 40;
  const Matrix parity = kernel(0.0, OrderParameter(0.0), dim).matrix();
  bool exact = true;
  for (int n = 0; n < dim; ++n) {
    exact = exact && parity(n, n) == Complex(n % 2 == 0 ? 2.0 : -2.0);
  }
  double hermitian = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Matrix t =
        kernel(rng.disc(3.0), OrderParameter(rng.uniform(-1.0, 0.9)), 60).matrix();
    hermitian = std::max(hermitian, (t - t.adjoint()).cwiseAbs().maxCoeff());
  }
  return {projector <= 1e-10 && exact && hermitian <= 1e-10,
          "t(a,-1) vs |a><a| " + sci(projector) + " (<= 1e-10); t(0,0) diagonal " +
              (exact ? "exactly" : "NOT exactly") + " 2(-1)^n; Hermiticity " + sci(hermitian) +
              " (<= 1e-10)"};
}

Outcome normalization() {
  const QuadratureSpec box{6.0, 200};
  const auto coherent = SingleModeState::coherent(Complex(0.6, 0.8), 40);
  const auto fock1 = SingleModeState::fock(1, 20);
  double worst = 0.0;
  for (double sv : {-1.0, 0.0}) {
    for (const auto* st : {&coherent, &fock1}) {
      worst = std::max(worst, normalization_check(*st, OrderParameter(sv), box).deviation);
    }
  }
  const double origin = qpdf_trace(fock1, Complex{}, OrderParameter(0.0));
  return {worst <= 1e-4 && std::abs(origin + 2.0) <= 1e-9,
          "200^2 Gauss-Legendre on [-6,6]^2: max |(1/pi) int W - 1| = " + sci(worst) +
              " (<= 1e-4); W_|1>(0, s=0) = " + format_real(origin)};
}

Outcome figure_reproduction() {
  const fs::path dir = fs::temp_directory_path() / "polqpdf_acceptance";
  fs::create_directories(dir);
  auto run_cli = [&](const std::string& cmd, const fs::path& out) {
    std::ostringstream sink, err;
    return cli::run({"polqpdf", cmd, "--out", out.string()}, sink, err);
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };

  bool deterministic = true;
  for (const auto& preset : figure_presets()) {
    const std::string cmd = "figure" + std::string(preset.id);
    const fs::path a = dir / (cmd + "_a.csv"), b = dir / (cmd + "_b.csv");
    if (run_cli(cmd, a) != cli::kOk || run_cli(cmd, b) != cli::kOk) return {false, cmd + " failed"};
    std::ifstream f(a);
    deterministic = deterministic && slurp(a) == slurp(b) && read_csv(f).values.size() == 512;
  }

  std::ifstream f1a(dir / "figure1a_a.csv");
  const QpdfGrid grid = read_csv(f1a);
  const auto it = std::max_element(grid.values.begin(), grid.values.end());
  const double peak = grid.axis_values[it - grid.values.begin()];
  const auto& p1a = figure_preset("1a");
  const bool caption = p1a.beta == std::polar(2.0, kPi / 2) &&
                       p1a.p == Complex(0.0049, 0.0049) && p1a.q == p1a.p && p1a.fixed == 5.0 &&
                       grid.meta.fixed == 5.0 && grid.meta.p == p1a.p && grid.meta.q == p1a.q &&
                       grid.meta.beta == p1a.beta;
  const bool peak_ok = std::abs(peak - kPi / 2) <= kPi / 512;

  // Trace route at the supported envelope, at every point it admits.
  double worst = 0.0;
  int checked = 0, total = 0;
  for (const auto& preset : figure_presets()) {
    const QpdfGrid closed = run_preset(preset);
    const Complex gamma = preset.q * preset.beta;
    const auto state = two_mode_coherent_density(preset.beta, gamma, kMaxDim);
    const TraceEvaluator eval(state, OrderParameter(0.0));
    for (size_t k = 0; k < closed.values.size(); ++k) {
      ++total;
      const bool phase = preset.axis_kind == AxisKind::phase_sweep;
      const Complex ax = phase ? std::polar(preset.fixed, closed.axis_values[k])
                               : std::polar(closed.axis_values[k], preset.fixed);
      const Complex ay = preset.p * ax;
      if (!truncation_admits(std::max(std::abs(ax), std::abs(ay)), kMaxDim)) continue;
      ++checked;
      worst = std::max(worst, std::abs(eval(ax, ay) - closed.values[k]));
    }
  }
  fs::remove_all(dir);
  return {caption && peak_ok && deterministic && worst <= 1e-6,
          "figure1a peak at " + format_real(peak) + " (pi/2 +- pi/512" +
              (caption ? ", caption parameters verbatim" : ", CAPTION MISMATCH") + "); 4 presets " +
              (deterministic ? "deterministic" : "NOT deterministic") +
              " 512-point CSVs; closed vs trace max " + sci(worst) + " (<= 1e-6) over " +
              std::to_string(checked) + "/" + std::to_string(total) + " admitted points at dim " +
              std::to_string(kMaxDim)};
}

Outcome factorization() {
  const PolarizationIndex p(Complex(1.0, 1.0) / std::sqrt(2.0));
  const Complex beta = 1.0;
  const auto state = two_mode_coherent_density(beta, p.value() * beta, 40);
  double worst = 0.0;
  int count = 0;
  for (const auto& order : orders_up_to(4)) {
    worst = std::max(worst, factorization_check(state, p, order).abs_error);
    ++count;
  }
  return {count == 70 && worst <= 1e-10,
          std::to_string(count) + " orders of total degree <= 4: max |lhs - rhs| = " + sci(worst) +
              " (<= 1e-10)"};
}

Outcome polarization_condition() {
  const PolarizationIndex p(Complex(1.0, 1.0) / std::sqrt(2.0));
  Sampler rng(6);
  double aligned = 0.0;
  double perturbed = 1e300;
  for (int i = 0; i < 16; ++i) {
    const Complex beta = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
    const auto good = two_mode_coherent_density(beta, p.value() * beta, 40);
    aligned = std::max(aligned, polarization_residual(good, p));
    const Complex off = p.value() * beta + std::polar(0.1, rng.uniform(0.0, 2.0 * kPi));
    const auto bad = two_mode_coherent_density(beta, off, 40);
    perturbed = std::min(perturbed, polarization_residual(bad, p));
  }
  return {aligned <= 1e-9 && perturbed >= 1e-3,
          "residual on |b, pb> max " + sci(aligned) + " (<= 1e-9); with |g - pb| = 0.1 min " +
              sci(perturbed) + " (>= 1e-3)"};
}

Outcome round_trips() {
  Sampler rng(7);
  double params_err = 0.0, amps_err = 0.0, iop_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PoincareParams pp{rng.uniform(0.1, 5.0), rng.uniform(1e-3, kPi - 1e-3),
                            rng.uniform(-kPi, kPi), rng.uniform(0.0, 2.0 * kPi)};
    const auto amp = poincare_to_amplitudes(pp);
    const auto back = amplitudes_to_poincare(amp.x, amp.y);
    params_err = std::max({params_err, std::abs(back.a0 - pp.a0), std::abs(back.chi0 - pp.chi0),
                           std::abs(wrap_signed(back.delta0 - pp.delta0)),
                           std::abs(wrap_signed(back.phi - pp.phi))});

    const Complex ax = rng.disc(3.0), ay = rng.disc(3.0);
    const auto pa = amplitudes_to_poincare(ax, ay);
    const auto re = poincare_to_amplitudes(pa);
    amps_err = std::max({amps_err, std::abs(re.x - ax), std::abs(re.y - ay)});

    // p = a_y / a_x = tan(chi0/2) e^{i delta0}, also read as q = gamma / beta.
    const Complex expected = std::tan(pp.chi0 / 2) * std::polar(1.0, pp.delta0);
    const double scale = 1.0 + std::abs(expected);
    iop_err = std::max({iop_err, std::abs(index_of_polarization(amp.x, amp.y).value() - expected) / scale,
                        std::abs(PolarizationIndex::from_poincare(pp).value() - expected) / scale,
                        std::abs(index_of_polarization(ax, ay).value() -
                                 PolarizationIndex::from_poincare(pa).value()) /
                            (1.0 + std::abs(ay / ax))});
  }
  return {params_err <= 1e-12 && amps_err <= 1e-12 && iop_err <= 1e-12,
          "1000 samples: params " + sci(params_err) + ", amplitudes " + sci(amps_err) +
              ", index (relative) " + sci(iop_err) + " (all <= 1e-12)"};
}

Outcome q_nonnegativity() {
  const int dim = 40;
  const PolarizationIndex p(Complex(1.0, 1.0) / std::sqrt(2.0));
  const auto coherent = two_mode_coherent_density(Complex(1.0, 0.5), Complex(-0.4, 0.9), dim);
  const auto fock = TwoModeState::product(fock_vector(1, dim), fock_vector(1, dim));
  const auto mixed = TwoModeState::mixture({{0.5, coherent}, {0.5, fock}});
  std::string detail = "64x64 plane, s = -1, min:";
  bool pass = true;
  const std::pair<const char*, const TwoModeState*> states[] = {
      {"coherent", &coherent}, {"fock|1,1>", &fock}, {"50/50 mix", &mixed}};
  for (const auto& [name, st] : states) {
    const auto grid = sweep_plane(*st, p, OrderParameter(-1.0), 4.0, 64);
    const double lo = *std::min_element(grid.values.begin(), grid.values.end());
    pass = pass && lo >= -1e-10;
    detail += std::string(" ") + name + " " + sci(lo);
  }
  return {pass, detail + " (>= -1e-10)"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"kernel identities", kernel_identities},
      {"normalization", normalization},
      {"figure reproduction", figure_reproduction},
      {"coherence factorization", factorization},
      {"polarization condition", polarization_condition},
      {"parametrization round-trips", round_trips},
      {"Q-function nonnegativity", q_nonnegativity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
