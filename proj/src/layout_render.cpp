// Copyright 2026 The coppack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coppack/layout_render.hpp"

#include <algorithm>
#include <sstream>

namespace coppack {

namespace {

constexpr const char* kPalette[16] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295",
    "#fabfd2", "#b6992d", "#499894", "#79706e"};

}  // namespace

std::string emit_svg(const Instance& instance, const Placement& placement,
                     int dim_x, int dim_y) {
  const int w = instance.container.sizes[dim_x];
  const int h = instance.container.sizes[dim_y];
  // All coordinates are doubled so rectangle centers stay integral.
  const int vw = 2 * w + 4;
  const int vh = 2 * h + 4;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << vw << ' '
      << vh << "\" width=\"" << 4 * vw << "\" height=\"" << 4 * vh << "\">\n";
  out << "<rect x=\"2\" y=\"2\" width=\"" << 2 * w << "\" height=\"" << 2 * h
      << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  for (int v = 0; v < instance.size(); ++v) {
    const int x = 2 + 2 * placement.coords[v][dim_x];
    // SVG y grows downward; flip so the second dimension grows upward.
    const int y = 2 + 2 * (h - placement.coords[v][dim_y] - instance.width(v, dim_y));
    const int rw = 2 * instance.width(v, dim_x);
    const int rh = 2 * instance.width(v, dim_y);
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << rw
        << "\" height=\"" << rh << "\" fill=\"" << kPalette[v % 16]
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    const std::string label =
        instance.items[v].label.empty() ? std::to_string(v) : instance.items[v].label;
    out << "<text x=\"" << x + rw / 2 << "\" y=\"" << y + rh / 2
        << "\" font-size=\"" << std::max(4, std::min(rw, rh) / 2)
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string emit_ascii(const Instance& instance, const Placement& placement,
                       int dim_x, int dim_y) {
  const int w = instance.container.sizes[dim_x];
  const int h = instance.container.sizes[dim_y];
  const int step = std::max(1, (w + 119) / 120);
  const int cols = (w + step - 1) / step;
  const int rows = (h + step - 1) / step;
  std::vector<std::string> grid(rows, std::string(cols, '.'));
  for (int v = 0; v < instance.size(); ++v) {
    const char c = v < 10 ? static_cast<char>('0' + v)
                          : static_cast<char>('a' + (v - 10) % 26);
    const int xb = placement.coords[v][dim_x] / step;
    const int xe = (placement.coords[v][dim_x] + instance.width(v, dim_x) - 1) / step;
    const int yb = placement.coords[v][dim_y] / step;
    const int ye = (placement.coords[v][dim_y] + instance.width(v, dim_y) - 1) / step;
    for (int y = yb; y <= ye && y < rows; ++y) {
      for (int x = xb; x <= xe && x < cols; ++x) grid[y][x] = c;
    }
  }
  std::ostringstream out;
  for (int y = rows - 1; y >= 0; --y) out << grid[y] << '\n';
  return out.str();
}

}  // namespace coppack
