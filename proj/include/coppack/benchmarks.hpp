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

#ifndef COPPACK_BENCHMARKS_HPP_
#define COPPACK_BENCHMARKS_HPP_

#include <string>
#include <vector>

#include "coppack/pack_io.hpp"

namespace coppack {

/// One embedded benchmark instance with its published optimum (or, for the
/// open square21-2mat, the published bound interval).
struct Benchmark {
  std::string name;
  std::string suite;  // okp17 | square21
  std::string mode;   // cspp | bmp
  Problem problem;
  int published_lower = 0;
  int published_upper = 0;
  bool open = false;  // published as an interval, not an optimum
};

const std::vector<Benchmark>& benchmarks();
const Benchmark* find_benchmark(const std::string& name);

}  // namespace coppack

#endif  // COPPACK_BENCHMARKS_HPP_
