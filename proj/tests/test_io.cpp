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

#include <algorithm>
#include <fstream>

#include "doctest.h"

#include "coppack/benchmarks.hpp"
#include "coppack/layout_render.hpp"
#include "coppack/pack_io.hpp"

using namespace coppack;

TEST_CASE("parse: labels, comments, star, and dimension names") {
  const std::string text =
      "# strip with two boxes\n"
      "dims 2\n"
      "container 10 *\n"
      "item 0 4 5 left\n"
      "item 1 6 3 right\n"
      "prec t left right  # labels resolve before ids\n"
      "prec 0 1 0\n";
  const Problem problem = parse_pack(text);
  CHECK(problem.objective_dims == std::vector<int>{1});
  CHECK(problem.instance.size() == 2);
  CHECK(problem.instance.items[0].label == "left");
  REQUIRE(problem.instance.constraints.size() == 2);
  CHECK(problem.instance.constraints[0] == PrecedenceConstraint{1, 0, 1});
  CHECK(problem.instance.constraints[1] == PrecedenceConstraint{0, 1, 0});
  // The starred dimension holds a placeholder wide enough for any item.
  CHECK(problem.instance.container.sizes[1] == 5);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("unknown directive") {
    try {
      parse_pack("dims 2\ncontainer 3 3\nitms 0 1 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("container before dims") {
    CHECK_THROWS_AS(parse_pack("container 3 3\n"), ParseError);
  }
  SUBCASE("bad container token") {
    CHECK_THROWS_AS(parse_pack("dims 2\ncontainer 3 -1\n"), ParseError);
  }
  SUBCASE("unknown item in prec") {
    CHECK_THROWS_AS(parse_pack("dims 2\ncontainer 3 3\nitem 0 1 1\nprec t 0 9\n"),
                    ParseError);
  }
  SUBCASE("unknown dimension name") {
    CHECK_THROWS_AS(
        parse_pack("dims 2\ncontainer 3 3\nitem 0 1 1\nitem 1 1 1\nprec q 0 1\n"),
        ParseError);
  }
}

TEST_CASE("serialization round-trips canonically") {
  for (const Benchmark& bench : benchmarks()) {
    const std::string once = serialize_pack(bench.problem);
    const Problem reparsed = parse_pack(once);
    CHECK(serialize_pack(reparsed) == once);
    CHECK(reparsed.objective_dims == bench.problem.objective_dims);
    // The canonical form sorts constraints; compare as sets.
    auto lhs = reparsed.instance.constraints;
    auto rhs = bench.problem.instance.constraints;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("shipped data files equal the embedded benchmarks") {
  for (const Benchmark& bench : benchmarks()) {
    const Problem from_file = load_pack_file(std::string(COPPACK_DATA_DIR) + "/" +
                                             bench.name + ".pack");
    CHECK(serialize_pack(from_file) == serialize_pack(bench.problem));
  }
}

TEST_CASE("result records render bounds or optima") {
  Instance inst;
  inst.container.sizes = {4, 4};
  inst.items.push_back({0, {2, 2}, ""});
  ResultRecord record;
  record.mode = "cspp";
  record.optimization = true;
  SUBCASE("open interval") {
    record.closed = false;
    record.lower = 118;
    record.upper = 120;
    const std::string text = format_record(inst, record);
    CHECK(text.find("status open\n") != std::string::npos);
    CHECK(text.find("bounds 118 120\n") != std::string::npos);
  }
  SUBCASE("closed optimum with placement") {
    record.closed = true;
    record.lower = record.upper = 7;
    record.placement = Placement{{{1, 2}}};
    const std::string text = format_record(inst, record);
    CHECK(text.find("status optimal\n") != std::string::npos);
    CHECK(text.find("objective 7\n") != std::string::npos);
    CHECK(text.find("place 0 1 2\n") != std::string::npos);
  }
}

TEST_CASE("svg output is deterministic and pins the layout") {
  Instance inst;
  inst.container.sizes = {4, 3};
  inst.items.push_back({0, {2, 3}, "a"});
  const Placement p{{{1, 0}}};
  const std::string svg = emit_svg(inst, p, 0, 1);
  CHECK(svg == emit_svg(inst, p, 0, 1));
  CHECK(svg ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 12 10\" "
        "width=\"48\" height=\"40\">\n"
        "<rect x=\"2\" y=\"2\" width=\"8\" height=\"6\" fill=\"#ffffff\" "
        "stroke=\"#000000\" stroke-width=\"1\"/>\n"
        "<rect x=\"4\" y=\"2\" width=\"4\" height=\"6\" fill=\"#4e79a7\" "
        "stroke=\"#000000\" stroke-width=\"1\"/>\n"
        "<text x=\"6\" y=\"5\" font-size=\"4\" text-anchor=\"middle\" "
        "dominant-baseline=\"central\">a</text>\n"
        "</svg>\n");
}

TEST_CASE("ascii layout draws one character per cell") {
  Instance inst;
  inst.container.sizes = {4, 2};
  inst.items.push_back({0, {2, 1}, ""});
  inst.items.push_back({1, {2, 2}, ""});
  const Placement p{{{0, 0}, {2, 0}}};
  CHECK(emit_ascii(inst, p, 0, 1) ==
        "..11\n"
        "0011\n");
}
