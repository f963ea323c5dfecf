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

#ifndef COPPACK_PACK_IO_HPP_
#define COPPACK_PACK_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "coppack/instance.hpp"
#include "coppack/search.hpp"

namespace coppack {

inline constexpr const char* kVersion = "coppack 1.0.0";

/// A parsed .pack file: the instance plus which container dimensions were
/// starred as the optimization objective. Starred sizes are placeholders
/// (widest item) until a solver substitutes probe values.
struct Problem {
  Instance instance;
  std::vector<int> objective_dims;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Plain-text instance format:
///   dims <d>
///   container <h_1> ... <h_d>     (* marks an objective dimension)
///   item <id> <w_1> ... <w_d> [label]
///   prec <dim> <before> <after>   (dim: x/y/z/t or index; items by label or id)
///   # comment
Problem parse_pack(const std::string& text);
Problem load_pack_file(const std::string& path);

/// Canonical rendering; parse(serialize(p)) reproduces p.
std::string serialize_pack(const Problem& problem);

/// Canonical dimension name used by the serializer ("x", "y", "t", or the
/// index for d > 3).
std::string dim_name(int dim, int dims);

/// Structured result record printed by the CLI.
struct ResultRecord {
  std::string mode;  // opp | cspp | bmp
  bool optimization = false;
  Verdict verdict = Verdict::kUnknown;  // decision problems
  bool closed = false;                  // optimization solved to optimality
  int lower = 0;
  int upper = 0;
  std::optional<Placement> placement;
  SearchStats stats;
  double find_seconds = 0.0;
  double prove_seconds = 0.0;
};

std::string format_record(const Instance& instance, const ResultRecord& record);

}  // namespace coppack

#endif  // COPPACK_PACK_IO_HPP_
