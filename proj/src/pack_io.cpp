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

#include "coppack/pack_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace coppack {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

bool parse_int(const std::string& token, int& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

int parse_dim_token(const std::string& token, int dims, int line) {
  if (token == "x") return 0;
  if (token == "y" && dims >= 2) return 1;
  if (token == "z" && dims >= 3) return 2;
  if (token == "t") return dims - 1;
  int value = -1;
  if (parse_int(token, value) && value >= 0 && value < dims) return value;
  throw ParseError(line, "unknown dimension '" + token + "'");
}

}  // namespace

std::string dim_name(int dim, int dims) {
  if (dims <= 3) {
    static constexpr const char* kNames2[] = {"x", "y"};
    static constexpr const char* kNames3[] = {"x", "y", "t"};
    if (dims == 2 && dim < 2) return kNames2[dim];
    if (dims == 3 && dim < 3) return kNames3[dim];
  }
  return std::to_string(dim);
}

Problem parse_pack(const std::string& text) {
  Problem problem;
  int dims = -1;
  bool have_container = false;
  struct PendingPrec {
    int line;
    std::string dim, before, after;
  };
  std::vector<PendingPrec> pending;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::vector<std::string> tokens = split_tokens(raw);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (directive == "dims") {
      if (tokens.size() != 2 || !parse_int(tokens[1], dims) || dims < 1) {
        throw ParseError(line_no, "expected: dims <d>");
      }
    } else if (directive == "container") {
      if (dims < 0) throw ParseError(line_no, "dims must come before container");
      if (static_cast<int>(tokens.size()) != dims + 1) {
        throw ParseError(line_no, "container needs one size per dimension");
      }
      problem.instance.container.sizes.assign(dims, 0);
      for (int i = 0; i < dims; ++i) {
        if (tokens[i + 1] == "*") {
          problem.objective_dims.push_back(i);
        } else {
          int size = 0;
          if (!parse_int(tokens[i + 1], size) || size < 1) {
            throw ParseError(line_no, "container size must be a positive integer or *");
          }
          problem.instance.container.sizes[i] = size;
        }
      }
      have_container = true;
    } else if (directive == "item") {
      if (dims < 0) throw ParseError(line_no, "dims must come before item lines");
      if (static_cast<int>(tokens.size()) < dims + 2 ||
          static_cast<int>(tokens.size()) > dims + 3) {
        throw ParseError(line_no, "expected: item <id> <w_1..w_d> [label]");
      }
      Item item;
      if (!parse_int(tokens[1], item.id)) {
        throw ParseError(line_no, "item id must be an integer");
      }
      for (int i = 0; i < dims; ++i) {
        int width = 0;
        if (!parse_int(tokens[2 + i], width)) {
          throw ParseError(line_no, "item width must be an integer");
        }
        item.widths.push_back(width);
      }
      if (static_cast<int>(tokens.size()) == dims + 3) item.label = tokens[dims + 2];
      problem.instance.items.push_back(std::move(item));
    } else if (directive == "prec") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected: prec <dim> <before> <after>");
      }
      pending.push_back({line_no, tokens[1], tokens[2], tokens[3]});
    } else {
      throw ParseError(line_no, "unknown directive '" + directive + "'");
    }
  }
  if (dims < 0) throw ParseError(line_no, "missing dims line");
  if (!have_container) throw ParseError(line_no, "missing container line");

  std::map<std::string, int> by_label;
  for (const Item& item : problem.instance.items) {
    if (!item.label.empty()) by_label.emplace(item.label, item.id);
  }
  auto resolve_item = [&](const std::string& token, int line) {
    auto it = by_label.find(token);
    if (it != by_label.end()) return it->second;
    int id = -1;
    if (parse_int(token, id) && id >= 0 && id < problem.instance.size()) return id;
    throw ParseError(line, "unknown item '" + token + "'");
  };
  for (const PendingPrec& p : pending) {
    problem.instance.constraints.push_back({parse_dim_token(p.dim, dims, p.line),
                                            resolve_item(p.before, p.line),
                                            resolve_item(p.after, p.line)});
  }

  // Objective dimensions carry a placeholder size: wide enough for any item.
  for (int dim : problem.objective_dims) {
    int widest = 1;
    for (const Item& item : problem.instance.items) {
      if (static_cast<int>(item.widths.size()) == dims) {
        widest = std::max(widest, item.widths[dim]);
      }
    }
    problem.instance.container.sizes[dim] = widest;
  }
  return problem;
}

Problem load_pack_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pack(buffer.str());
}

std::string serialize_pack(const Problem& problem) {
  const Instance& inst = problem.instance;
  const int d = inst.dims();
  std::ostringstream out;
  out << "dims " << d << '\n';
  out << "container";
  for (int dim = 0; dim < d; ++dim) {
    const bool starred =
        std::find(problem.objective_dims.begin(), problem.objective_dims.end(), dim) !=
        problem.objective_dims.end();
    if (starred) {
      out << " *";
    } else {
      out << ' ' << inst.container.sizes[dim];
    }
  }
  out << '\n';
  for (const Item& item : inst.items) {
    out << "item " << item.id;
    for (int w : item.widths) out << ' ' << w;
    if (!item.label.empty()) out << ' ' << item.label;
    out << '\n';
  }
  std::vector<PrecedenceConstraint> constraints = inst.constraints;
  std::sort(constraints.begin(), constraints.end());
  for (const PrecedenceConstraint& c : constraints) {
    auto name = [&](int id) {
      return inst.items[id].label.empty() ? std::to_string(id) : inst.items[id].label;
    };
    out << "prec " << dim_name(c.dim, d) << ' ' << name(c.before) << ' '
        << name(c.after) << '\n';
  }
  return out.str();
}

std::string format_record(const Instance& instance, const ResultRecord& record) {
  std::ostringstream out;
  out << kVersion << '\n';
  out << "mode " << record.mode << '\n';
  if (record.optimization) {
    if (record.closed) {
      out << "status optimal\n";
      out << "objective " << record.upper << '\n';
    } else if (record.verdict == Verdict::kInfeasible) {
      out << "status infeasible\n";
    } else {
      out << "status open\n";
      out << "bounds " << record.lower << ' ' << record.upper << '\n';
    }
  } else {
    out << "status " << verdict_name(record.verdict) << '\n';
  }
  if (record.placement) {
    for (size_t v = 0; v < record.placement->coords.size(); ++v) {
      out << "place " << v;
      for (int c : record.placement->coords[v]) out << ' ' << c;
      out << '\n';
    }
  }
  out << "nodes " << record.stats.nodes << '\n';
  out << "propagations " << record.stats.propagations << '\n';
  out << "conflicts";
  for (int kind = 0; kind < kNumConflictKinds; ++kind) {
    out << ' ' << conflict_kind_name(static_cast<ConflictKind>(kind)) << '='
        << record.stats.conflicts[kind];
  }
  out << '\n';
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3f", record.find_seconds);
  out << "time_find " << buffer << '\n';
  std::snprintf(buffer, sizeof buffer, "%.3f", record.prove_seconds);
  out << "time_prove " << buffer << '\n';
  std::snprintf(buffer, sizeof buffer, "%.3f", record.find_seconds + record.prove_seconds);
  out << "time_total " << buffer << '\n';
  return out.str();
}

}  // namespace coppack
