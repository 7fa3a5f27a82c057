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

#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "polqpdf/coherence.hpp"
#include "polqpdf/errors.hpp"
#include "polqpdf/figures.hpp"
#include "polqpdf/grid_io.hpp"
#include "polqpdf/qpdf.hpp"

namespace polqpdf::cli {
namespace {

namespace fs = std::filesystem;

constexpr double kOracleTolerance = 1e-6;
constexpr double kNormTolerance = 1e-4;
constexpr int kOracleTuples = 200;
constexpr int kOracleDim = 60;
constexpr double kOracleMaxModulus = 2.5;
constexpr std::uint64_t kOracleSeed = 20260516;

// Raw option values; optional where "not given" matters.
struct RunConfig {
  std::string command;
  std::optional<double> s;
  std::optional<std::string> beta;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::optional<double> modulus;
  std::optional<double> phase;
  double max_modulus = kFigureMaxModulus;
  std::optional<int> points;
  int dim = 0;
  std::string out_path;
  bool emit_svg = false;
  std::string method = "closed_form";
  std::uint64_t seed = kOracleSeed;
  int threads = 0;
};

class ToleranceExceeded : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

std::string output_path(const RunConfig& cfg, const std::string& default_name) {
  if (!cfg.out_path.empty()) return cfg.out_path;
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir && *dir) return (fs::path(dir) / default_name).string();
  return default_name;
}

void write_outputs(const QpdfGrid& grid, const std::string& csv_path, bool svg,
                   const std::string& caption, std::ostream& out) {
  {
    std::ofstream f(csv_path, std::ios::binary);
    if (!f) throw IoFailure("cannot open '" + csv_path + "' for writing");
    write_csv(f, grid);
    if (!f) throw IoFailure("failed writing '" + csv_path + "'");
  }
  out << "wrote " << csv_path << " (" << grid.values.size() << " points)\n";
  if (svg) {
    const std::string svg_path = fs::path(csv_path).replace_extension(".svg").string();
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw IoFailure("cannot open '" + svg_path + "' for writing");
    write_svg(f, grid, caption);
    if (!f) throw IoFailure("failed writing '" + svg_path + "'");
    out << "wrote " << svg_path << "\n";
  }
}

void print_peak(const QpdfGrid& grid, std::ostream& out) {
  const auto it = std::max_element(grid.values.begin(), grid.values.end());
  const auto idx = static_cast<size_t>(it - grid.values.begin());
  out << "peak: axis=" << format_real(grid.axis_values[idx]) << " value=" << format_real(*it)
      << "\n";
}

int run_figure(const RunConfig& cfg, std::ostream& out) {
  const FigurePreset& preset = figure_preset(cfg.command);
  SweepOptions opts;
  opts.method = parse_method(cfg.method);
  opts.dim = cfg.dim;
  opts.threads = cfg.threads;
  const QpdfGrid grid = run_preset(preset, cfg.points.value_or(kFigurePoints), opts);
  write_outputs(grid, output_path(cfg, "figure" + std::string(preset.id) + ".csv"), cfg.emit_svg,
                std::string(preset.caption), out);
  print_peak(grid, out);
  return kOk;
}

template <typename T>
const T& required(const std::optional<T>& v, const char* flag, const std::string& command) {
  if (!v) throw ValidationError(command + " requires " + flag);
  return *v;
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const Complex beta = parse_complex(required(cfg.beta, "--beta", "sweep"));
  const PolarizationIndex p(parse_complex(required(cfg.p, "--p", "sweep")));
  const PolarizationIndex q(parse_complex(required(cfg.q, "--q", "sweep")));
  const OrderParameter s(required(cfg.s, "--s", "sweep"));
  if (cfg.modulus.has_value() == cfg.phase.has_value()) {
    throw ValidationError("sweep requires exactly one of --modulus or --phase");
  }
  SweepOptions opts;
  opts.method = parse_method(cfg.method);
  opts.dim = cfg.dim;
  opts.threads = cfg.threads;
  const int n = cfg.points.value_or(kFigurePoints);
  std::ostringstream caption;
  caption << "s=" << s.value() << ", beta=" << beta << ", p=" << p.value() << ", q=" << q.value();
  QpdfGrid grid;
  if (cfg.modulus) {
    grid = sweep_phase(beta, q, p, *cfg.modulus, s, n, opts);
    caption << ", |alpha|=" << *cfg.modulus;
  } else {
    grid = sweep_modulus(beta, q, p, *cfg.phase, s, cfg.max_modulus, n, opts);
    caption << ", arg alpha=" << *cfg.phase;
  }
  write_outputs(grid, output_path(cfg, "sweep.csv"), cfg.emit_svg, caption.str(), out);
  print_peak(grid, out);
  return kOk;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  std::vector<double> orders{-1.0, -0.5, 0.0};
  if (cfg.s) orders = {*cfg.s};
  std::vector<OrderParameter> params;
  for (double s : orders) params.emplace_back(s);
  const int dim = cfg.dim > 0 ? cfg.dim : kOracleDim;
  const int tuples = cfg.points.value_or(kOracleTuples);
  if (tuples < 1) throw ValidationError("oracle needs at least one tuple");
  const std::optional<Complex> fixed_beta =
      cfg.beta ? std::optional<Complex>(parse_complex(*cfg.beta)) : std::nullopt;

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> radius(0.0, kOracleMaxModulus);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  auto draw = [&] { return std::polar(radius(rng), angle(rng)); };

  double max_err = 0.0;
  double sum_err = 0.0;
  std::string worst;
  for (int i = 0; i < tuples; ++i) {
    const Complex beta = fixed_beta.value_or(draw());
    const Complex gamma = draw();
    const Complex ax = draw();
    const Complex ay = draw();
    const OrderParameter& s = params[static_cast<size_t>(i) % params.size()];
    const TwoModeState state = two_mode_coherent_density(beta, gamma, dim);
    const double closed = qpdf_coherent_closed(beta, gamma, ax, ay, s);
    const double trace = qpdf_trace(state, ax, ay, s);
    const double err = std::abs(closed - trace);
    sum_err += err;
    if (err >= max_err) {
      max_err = err;
      std::ostringstream t;
      t << "beta=" << format_complex(beta) << " gamma=" << format_complex(gamma)
        << " ax=" << format_complex(ax) << " ay=" << format_complex(ay)
        << " s=" << format_real(s.value());
      worst = t.str();
    }
  }
  out << "tuples=" << tuples << " dim=" << dim << "\n";
  out << "max_abs_err=" << format_real(max_err) << "\n";
  out << "mean_abs_err=" << format_real(sum_err / tuples) << "\n";
  out << "worst: " << worst << "\n";
  if (max_err > kOracleTolerance) {
    throw ToleranceExceeded("closed form and trace disagree by " + format_real(max_err) +
                            " (limit " + format_real(kOracleTolerance) + ") at " + worst);
  }
  out << "status=ok\n";
  return kOk;
}

int run_normcheck(const RunConfig& cfg, std::ostream& out) {
  std::vector<double> orders{-1.0, 0.0};
  if (cfg.s) orders = {*cfg.s};
  const Complex beta = cfg.beta ? parse_complex(*cfg.beta) : Complex{1.0, 0.0};
  const Complex pv = cfg.p ? parse_complex(*cfg.p) : Complex{1.0, 1.0} / std::sqrt(2.0);
  const PolarizationIndex p(pv);
  const PolarizationIndex q(cfg.q ? parse_complex(*cfg.q) : pv);
  const Complex gamma = q.value() * beta;
  const int dim = cfg.dim > 0 ? cfg.dim : auto_dim(std::max(std::abs(beta), std::abs(gamma)));

  const SingleModeState coherent = SingleModeState::coherent(beta, dim);
  const SingleModeState fock1 = SingleModeState::fock(1, dim);
  const TwoModeState product = two_mode_coherent_density(beta, gamma, dim);

  double worst = 0.0;
  out << std::left << std::setw(22) << "state" << std::setw(8) << "s" << std::setw(26)
      << "integral" << std::setw(26) << "deviation"
      << "box\n";
  auto row = [&](const std::string& name, double s, const NormalizationResult& r) {
    worst = std::max(worst, r.deviation);
    out << std::left << std::setw(22) << name << std::setw(8) << s << std::setw(26)
        << format_real(r.value) << std::setw(26) << format_real(r.deviation)
        << (r.box_warning ? "WARN(box too small)" : "ok") << "\n";
  };
  for (double sv : orders) {
    const OrderParameter s(sv);
    const double radius = std::max(1.0, std::abs(beta));
    row("coherent", sv, normalization_check(coherent, s, default_quadrature(radius)));
    row("fock|1>", sv, normalization_check(fock1, s, default_quadrature(1.0)));
    row("product|b,qb>", sv,
        normalization_check(product, s,
                            default_quadrature(std::max({1.0, std::abs(beta), std::abs(gamma)}))));
  }
  out << "W_fock1(0, s=0)=" << format_real(qpdf_trace(fock1, Complex{}, OrderParameter(0.0)))
      << "\n";

  // The restricted section integral is reported, not asserted.
  out << "section integrals (measure " << kPlanePolarMeasure << "):\n";
  for (const auto& preset : figure_presets()) {
    const PolarizationIndex pp(preset.p);
    const double value = poincare_sphere_qpdf(preset.beta, PolarizationIndex(preset.q),
                                              pp.chi0(), pp.delta0(), OrderParameter(0.0));
    out << "  figure" << preset.id << ": integral=" << format_real(value)
        << " integral/pi=" << format_real(value / std::numbers::pi) << "\n";
  }
  if (worst > kNormTolerance) {
    throw ToleranceExceeded("normalization deviation " + format_real(worst) + " exceeds " +
                            format_real(kNormTolerance));
  }
  out << "status=ok\n";
  return kOk;
}

int run_report(const RunConfig& cfg, std::ostream& out) {
  const Complex beta = cfg.beta ? parse_complex(*cfg.beta) : Complex{1.0, 0.0};
  const Complex pv = cfg.p ? parse_complex(*cfg.p) : Complex{1.0, 1.0} / std::sqrt(2.0);
  const PolarizationIndex p(pv);
  const PolarizationIndex q(cfg.q ? parse_complex(*cfg.q) : pv);
  const Complex gamma = q.value() * beta;
  const int dim = cfg.dim > 0 ? cfg.dim : auto_dim(std::max(std::abs(beta), std::abs(gamma)));
  const TwoModeState state = two_mode_coherent_density(beta, gamma, dim);

  out << "state |beta, q beta>: beta=" << format_complex(beta) << " q=" << format_complex(q.value())
      << " p=" << format_complex(p.value()) << " dim=" << dim << "\n";
  out << "factorization (total degree <= 4):\n";
  out << "  mx my nx ny  lhs  rhs  abs_err\n";
  double worst = 0.0;
  for (const auto& order : orders_up_to(4)) {
    const auto r = factorization_check(state, p, order);
    worst = std::max(worst, r.abs_error);
    out << "  " << order.mx << "  " << order.my << "  " << order.nx << "  " << order.ny << "  "
        << format_complex(r.lhs) << "  " << format_complex(r.rhs) << "  "
        << format_real(r.abs_error) << "\n";
  }
  out << "max_factorization_err=" << format_real(worst) << "\n";
  out << "polarization_residual=" << format_real(polarization_residual(state, p)) << "\n";
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.command.rfind("figure", 0) == 0) return run_figure(cfg, out);
  if (cfg.command == "sweep") return run_sweep(cfg, out);
  if (cfg.command == "oracle") return run_oracle(cfg, out);
  if (cfg.command == "normcheck") return run_normcheck(cfg, out);
  if (cfg.command == "report") return run_report(cfg, out);
  throw ValidationError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quasi-probability distributions of polarized two-mode light"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--s", cfg.s, "Ordering parameter, -1 <= s < 1");
  app.add_option("--beta", cfg.beta, "x-mode coherent amplitude as re,im");
  app.add_option("--p", cfg.p, "Index of polarization of the phase-space point, re,im");
  app.add_option("--q", cfg.q, "Index of polarization of the state (gamma = q beta), re,im");
  app.add_option("--modulus", cfg.modulus, "|alpha_x| for a phase sweep");
  app.add_option("--phase", cfg.phase, "arg alpha_x for an amplitude sweep");
  app.add_option("--max-modulus", cfg.max_modulus, "Upper |alpha_x| of an amplitude sweep");
  app.add_option("--points", cfg.points, "Samples per sweep (512) or oracle tuples (200)");
  app.add_option("--dim", cfg.dim, "Fock truncation per mode (0 = automatic)");
  app.add_option("--out", cfg.out_path, "Output CSV path");
  app.add_flag("--svg", cfg.emit_svg, "Also write an SVG plot next to the CSV");
  app.add_option("--method", cfg.method, "closed_form or trace_oracle");
  app.add_option("--seed", cfg.seed, "Oracle random seed");
  app.add_option("--threads", cfg.threads, "Worker threads for the trace route (0 = all)");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"figure1a", "Wigner function vs arg alpha, preset (a)"},
      {"figure1b", "Wigner function vs arg alpha, preset (b)"},
      {"figure2c", "Wigner function vs |alpha|, preset (c)"},
      {"figure2d", "Wigner function vs |alpha|, preset (d)"},
      {"sweep", "Custom phase or amplitude sweep"},
      {"normcheck", "Quadrature normalization checks"},
      {"oracle", "Closed form vs Fock-space trace comparison"},
      {"report", "Coherence factorization and polarization residual report"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    return dispatch(cfg, out);
  } catch (const ToleranceExceeded& e) {
    err << "tolerance exceeded: " << e.what() << "\n";
    return kTolerance;
  } catch (const TruncationError& e) {
    err << "truncation error: " << e.what() << "\n";
    return kTruncation;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
}

}  // namespace polqpdf::cli
