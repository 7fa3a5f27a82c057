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

// Text formats for QpdfGrid.
//
// CSV: a block of "# key=value" lines (axis, s, p, q, beta, fixed, dim,
// method, measure), a column header, then one row per sample.  Reals are
// printed with 17 significant digits so a parse reproduces the grid exactly;
// complex values are written "re,im".  Plane grids use three columns.

#include <iosfwd>
#include <string>

#include "polqpdf/qpdf.hpp"

namespace polqpdf {

/// %.17g
std::string format_real(double v);
/// "re,im" with format_real on both parts.
std::string format_complex(Complex z);
/// Parses "re,im" (or a bare real).  Throws ValidationError.
Complex parse_complex(const std::string& text);

void write_csv(std::ostream& out, const QpdfGrid& grid);
/// Throws ValidationError on malformed input.
QpdfGrid read_csv(std::istream& in);

/// Line plot of a 1D grid: polyline, ticks on both axes, axis labels and a
/// caption line.  Throws ValidationError for plane grids.
void write_svg(std::ostream& out, const QpdfGrid& grid, const std::string& caption);

}  // namespace polqpdf
