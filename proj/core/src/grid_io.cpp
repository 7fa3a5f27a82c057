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

#include "polqpdf/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "polqpdf/errors.hpp"

namespace polqpdf {
namespace {

double parse_real(const std::string& text) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ValidationError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ValidationError("trailing characters in number '" + text + "'");
  return v;
}

int parse_int(const std::string& text) {
  const double v = parse_real(text);
  if (v != std::floor(v)) throw ValidationError("not an integer: '" + text + "'");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) { return format_real(z.real()) + "," + format_real(z.imag()); }

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() != 2) throw ValidationError("expected 're,im', got '" + text + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

void write_csv(std::ostream& out, const QpdfGrid& grid) {
  grid.validate();
  const auto& m = grid.meta;
  out << "# axis=" << to_string(grid.axis_kind) << '\n'
      << "# s=" << format_real(m.s) << '\n'
      << "# p=" << format_complex(m.p) << '\n'
      << "# q=" << format_complex(m.q) << '\n'
      << "# beta=" << format_complex(m.beta) << '\n'
      << "# fixed=" << format_real(m.fixed) << '\n'
      << "# dim=" << m.dim_used << '\n'
      << "# method=" << to_string(m.method) << '\n'
      << "# measure=" << m.measure << '\n';
  if (grid.axis_kind == AxisKind::plane) {
    out << "axis,axis2,value\n";
    const size_t n2 = grid.axis2_values.size();
    for (size_t i = 0; i < grid.axis_values.size(); ++i) {
      for (size_t j = 0; j < n2; ++j) {
        out << format_real(grid.axis_values[i]) << ',' << format_real(grid.axis2_values[j]) << ','
            << format_real(grid.values[i * n2 + j]) << '\n';
      }
    }
  } else {
    out << "axis,value\n";
    for (size_t i = 0; i < grid.axis_values.size(); ++i) {
      out << format_real(grid.axis_values[i]) << ',' << format_real(grid.values[i]) << '\n';
    }
  }
}

QpdfGrid read_csv(std::istream& in) {
  std::map<std::string, std::string> header;
  std::string line;
  std::string columns;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ValidationError("malformed header line: " + line);
      header[line.substr(2, eq - 2)] = line.substr(eq + 1);
      continue;
    }
    columns = line;
    break;
  }
  for (const char* key : {"axis", "s", "p", "q", "beta", "fixed", "dim", "method", "measure"}) {
    if (!header.count(key)) throw ValidationError(std::string("missing header key '") + key + "'");
  }
  QpdfGrid grid;
  grid.axis_kind = parse_axis_kind(header["axis"]);
  grid.meta.s = parse_real(header["s"]);
  grid.meta.p = parse_complex(header["p"]);
  grid.meta.q = parse_complex(header["q"]);
  grid.meta.beta = parse_complex(header["beta"]);
  grid.meta.fixed = parse_real(header["fixed"]);
  grid.meta.dim_used = parse_int(header["dim"]);
  grid.meta.method = parse_method(header["method"]);
  grid.meta.measure = header["measure"];

  const bool plane = grid.axis_kind == AxisKind::plane;
  if (columns != (plane ? "axis,axis2,value" : "axis,value")) {
    throw ValidationError("unexpected column header '" + columns + "'");
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != (plane ? 3u : 2u)) throw ValidationError("malformed row: " + line);
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_real(f));
    rows.push_back(std::move(row));
  }
  if (!plane) {
    for (const auto& r : rows) {
      grid.axis_values.push_back(r[0]);
      grid.values.push_back(r[1]);
    }
  } else {
    for (const auto& r : rows) {
      if (grid.axis_values.empty() || grid.axis_values.back() != r[0]) {
        grid.axis_values.push_back(r[0]);
      }
      if (grid.axis_values.size() == 1) grid.axis2_values.push_back(r[1]);
      grid.values.push_back(r[2]);
    }
  }
  grid.validate();
  return grid;
}

void write_svg(std::ostream& out, const QpdfGrid& grid, const std::string& caption) {
  grid.validate();
  if (grid.axis_kind == AxisKind::plane) {
    throw ValidationError("SVG output supports phase and amplitude sweeps only");
  }
  constexpr double kWidth = 720.0, kHeight = 480.0;
  constexpr double kLeft = 80.0, kRight = 20.0, kTop = 40.0, kBottom = 60.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const double x0 = grid.axis_values.front();
  const double x1 = grid.axis_values.back();
  auto [ymin_it, ymax_it] = std::minmax_element(grid.values.begin(), grid.values.end());
  double y0 = std::min(0.0, *ymin_it);
  double y1 = *ymax_it;
  if (y1 <= y0) y1 = y0 + 1.0;

  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto py = [&](double y) { return kTop + (1.0 - (y - y0) / (y1 - y0)) * plot_h; };

  const bool phase = grid.axis_kind == AxisKind::phase_sweep;
  const std::string xlabel = phase ? "arg alpha_x (rad)" : "|alpha_x|";
  const std::string ylabel = grid.meta.s == 0.0 ? "W (s = 0)" : "QPDF (s = " +
                                                                    tick_label(grid.meta.s) + ")";

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
      << xml_escape(caption) << "</text>\n";
  // Frame.
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double xv = x0 + (x1 - x0) * t / kTicks;
    const double yv = y0 + (y1 - y0) * t / kTicks;
    const std::string xs = fixed3(px(xv));
    const std::string ys = fixed3(py(yv));
    out << "<line x1=\"" << xs << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << xs << "\" y2=\""
        << kTop + plot_h + 6 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << xs << "\" y=\"" << kTop + plot_h + 20
        << "\" text-anchor=\"middle\" font-size=\"11\">" << tick_label(xv) << "</text>\n";
    out << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << ys << "\" x2=\"" << kLeft << "\" y2=\""
        << ys << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 10 << "\" y=\"" << ys
        << "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-size=\"11\">"
        << tick_label(yv) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-size=\"12\">" << xml_escape(xlabel) << "</text>\n";
  out << "<text x=\"18\" y=\"" << kTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 18 "
      << kTop + plot_h / 2 << ")\">" << xml_escape(ylabel) << "</text>\n";
  out << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (size_t i = 0; i < grid.values.size(); ++i) {
    if (i) out << ' ';
    out << fixed3(px(grid.axis_values[i])) << ',' << fixed3(py(grid.values[i]));
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace polqpdf
