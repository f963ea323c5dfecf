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

#include "coppack/benchmarks.hpp"

#include <map>
#include <stdexcept>

namespace coppack {

namespace {

// 17 rectangles over a strip of base width 100, labeled "1".."17"; the
// height h_t is minimized. Order constraints act on the height dimension.
Problem make_okp17(const std::vector<std::pair<int, int>>& prec_labels) {
  Problem problem;
  static constexpr int kSizes[17][2] = {
      {8, 81},  {5, 76},  {42, 19}, {6, 80},  {41, 48}, {6, 86},
      {58, 20}, {99, 3},  {9, 52},  {100, 14}, {7, 53},  {24, 54},
      {23, 77}, {42, 32}, {17, 30}, {11, 90}, {26, 65}};
  problem.instance.container.sizes = {100, 1};
  problem.objective_dims = {1};
  for (int i = 0; i < 17; ++i) {
    problem.instance.items.push_back(
        {i, {kSizes[i][0], kSizes[i][1]}, std::to_string(i + 1)});
  }
  int widest = 1;
  for (const Item& item : problem.instance.items) {
    widest = std::max(widest, item.widths[1]);
  }
  problem.instance.container.sizes[1] = widest;
  for (auto [before, after] : prec_labels) {
    problem.instance.constraints.push_back({1, before - 1, after - 1});
  }
  return problem;
}

// The 21 squares of the 112x112 perfect squared square, labeled by side
// length. Order constraints name squares by their side.
Problem make_square21(int fixed_base,
                      const std::vector<std::tuple<int, int, int>>& prec_sides) {
  Problem problem;
  static constexpr int kSides[21] = {50, 42, 37, 35, 33, 29, 27, 25, 24, 19, 18,
                                     17, 16, 15, 11, 9,  8,  7,  6,  4,  2};
  std::map<int, int> by_side;
  for (int i = 0; i < 21; ++i) {
    problem.instance.items.push_back({i, {kSides[i], kSides[i]}, std::to_string(kSides[i])});
    by_side[kSides[i]] = i;
  }
  if (fixed_base > 0) {
    problem.instance.container.sizes = {fixed_base, 50};
    problem.objective_dims = {1};
  } else {
    problem.instance.container.sizes = {50, 50};
    problem.objective_dims = {0, 1};
  }
  for (auto [dim, before, after] : prec_sides) {
    problem.instance.constraints.push_back({dim, by_side.at(before), by_side.at(after)});
  }
  return problem;
}

std::vector<Benchmark> make_benchmarks() {
  std::vector<Benchmark> list;

  const std::vector<std::pair<int, int>> okp17_sets[5] = {
      {},
      {{11, 8}, {11, 16}},
      {{11, 8}, {11, 16}, {8, 16}},
      {{11, 8}, {11, 16}, {8, 16}, {8, 17}, {11, 7}, {16, 7}},
      {{11, 8}, {11, 16}, {8, 16}, {8, 17}, {11, 7}, {16, 7}, {17, 16}},
  };
  const int okp17_optima[5] = {169, 172, 182, 184, 245};
  for (int k = 0; k < 5; ++k) {
    list.push_back({"okp17-" + std::to_string(k), "okp17", "cspp",
                    make_okp17(okp17_sets[k]), okp17_optima[k], okp17_optima[k],
                    false});
  }

  const std::vector<std::tuple<int, int, int>> mat = {
      {1, 2, 4},   {1, 6, 7},   {1, 8, 9},   {1, 11, 15}, {1, 16, 17},
      {1, 18, 19}, {1, 24, 25}, {1, 27, 29}, {1, 33, 35}, {1, 37, 42},
      {1, 2, 50},  {1, 50, 4}};
  const std::vector<std::tuple<int, int, int>> tri = {
      {1, 2, 15},  {1, 15, 27}, {1, 2, 27},  {1, 4, 16},  {1, 16, 29},
      {1, 4, 29},  {1, 6, 17},  {1, 17, 33}, {1, 6, 33},  {1, 7, 18},
      {1, 18, 35}, {1, 7, 35},  {1, 8, 19},  {1, 19, 37}, {1, 8, 37},
      {1, 9, 24},  {1, 24, 42}, {1, 9, 42},  {1, 11, 25}, {1, 25, 50},
      {1, 11, 50}};
  std::vector<std::tuple<int, int, int>> two_mat = {
      {0, 2, 19},  {0, 6, 25},  {0, 8, 29},  {0, 11, 35}, {0, 16, 42},
      {0, 18, 4},  {0, 24, 7},  {0, 27, 9},  {0, 33, 15}, {0, 37, 17},
      {0, 50, 4},  {0, 18, 50}};
  for (const auto& c : mat) two_mat.push_back(c);

  list.push_back({"square21-no", "square21", "cspp", make_square21(112, {}), 112,
                  112, false});
  list.push_back({"square21-mat", "square21", "cspp", make_square21(112, mat), 117,
                  117, false});
  list.push_back({"square21-tri", "square21", "cspp", make_square21(112, tri), 125,
                  125, false});
  list.push_back({"square21-2mat", "square21", "bmp", make_square21(0, two_mat), 118,
                  120, true});
  return list;
}

}  // namespace

const std::vector<Benchmark>& benchmarks() {
  static const std::vector<Benchmark> list = make_benchmarks();
  return list;
}

const Benchmark* find_benchmark(const std::string& name) {
  for (const Benchmark& b : benchmarks()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

}  // namespace coppack
