// Copyright 2026 The eclosure Authors
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

#include "doctest.h"

#include "eclosure/error.hpp"
#include "eclosure/family.hpp"
#include "eclosure/layout.hpp"

using namespace ecl;

TEST_CASE("parse_family: single block") {
  const FamilyDesc f = parse_family("omega");
  REQUIRE(f.blocks.size() == 1);
  CHECK(f.blocks[0] == Block::omega());
  CHECK(f.junctions.empty());
  CHECK_FALSE(f.repeated);
}

TEST_CASE("parse_family: annotated junction") {
  const FamilyDesc f = parse_family("zeta +split zeta");
  REQUIRE(f.blocks.size() == 2);
  CHECK(f.blocks[0] == Block::zeta());
  CHECK(f.blocks[1] == Block::zeta());
  REQUIRE(f.junctions.size() == 1);
  CHECK(f.junctions[0].annotation == Annotation::kSplit);
}

TEST_CASE("parse_family: fin(0) is rejected") {
  CHECK_THROWS_AS(parse_family("fin(0)"), ValidationError);
}

TEST_CASE("parse_family: syntax errors carry a column") {
  try {
    parse_family("omega +foo zeta");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_family("fin(3"), SyntaxError);
  CHECK_THROWS_AS(parse_family(""), SyntaxError);
  CHECK_THROWS_AS(parse_family("omega +"), SyntaxError);
  CHECK_THROWS_AS(parse_family("eta(loose)"), SyntaxError);
}

TEST_CASE("parse_family: annotations must fit the junction") {
  CHECK_THROWS_AS(parse_family("fin(1) +merged fin(1)"), ValidationError);
  CHECK_THROWS_AS(parse_family("fin(1) +split omega"), ValidationError);
  CHECK_NOTHROW(parse_family("omega +merged omega*"));
  CHECK_NOTHROW(parse_family("omega +absorbed fin(1)"));
}

TEST_CASE("parse_family: aliases and defaults") {
  // split and separate name the same thing; so do merged and absorbed.
  CHECK(parse_family("zeta +split omega") == parse_family("zeta +separate omega"));
  CHECK(parse_family("omega +merged fin(1)") == parse_family("omega +absorbed fin(1)"));
  CHECK(parse_family("omega + omega*").junctions[0].annotation == Annotation::kSplit);
  CHECK(parse_family("fin(1) + omega").junctions[0].annotation == Annotation::kNone);
}

TEST_CASE("parse_family: repeated groups") {
  const FamilyDesc f = parse_family("(zeta +split)^omega");
  CHECK(f.repeated);
  CHECK(f.blocks.size() == 1);
  CHECK(f.link.annotation == Annotation::kSplit);
  CHECK(parse_family("(fin(1))^omega").repeated);
  CHECK_THROWS(parse_family("(zeta +split)"));
}

TEST_CASE("print and parse round trip") {
  for (const char* s : {"omega", "fin(5)", "zeta +split zeta", "omega +merged omega*",
                        "omega +absorbed fin(1) +separate omega*", "eta(tight)", "eta(gapped)",
                        "(zeta +split)^omega", "(fin(2) +separate omega*)^omega",
                        "zeta +merged eta(gapped) +split zeta"}) {
    const FamilyDesc f = parse_family(s);
    CHECK(print_family(f) == s);
    CHECK(parse_family(print_family(f)) == f);
  }
}

TEST_CASE("canonicalize examples") {
  CHECK(print_family(canonicalize(parse_family("fin(2) + fin(3)"))) == "fin(5)");
  CHECK(canonicalize(parse_family("omega")) == parse_family("omega"));
  CHECK(canonicalize(parse_family("fin(1) + omega")) == parse_family("fin(1) + omega"));
  CHECK(print_family(canonicalize(parse_family("omega +absorbed fin(1) + fin(2)"))) ==
        "omega +absorbed fin(3)");
}

TEST_CASE("element_count examples") {
  CHECK(element_count(parse_family("fin(5)")) == Cardinal::finite(5));
  CHECK(element_count(parse_family("fin(2) + fin(3)")) == Cardinal::finite(5));
  CHECK(element_count(parse_family("omega")) == Cardinal::aleph0());
  CHECK(element_count(parse_family("eta(tight)")) == Cardinal::aleph0());
}

TEST_CASE("dyadic tags are reduced") {
  CHECK(make_dyadic(2, 2) == make_dyadic(1, 1));
  CHECK(make_dyadic(1, 2) < make_dyadic(3, 2));
  CHECK_THROWS_AS(make_dyadic(0, 1), InvalidArgument);
  CHECK_THROWS_AS(make_dyadic(4, 2), InvalidArgument);
}

TEST_CASE("layout: point references resolve to exactly one element") {
  const Layout lay(parse_family("fin(2) + omega* + eta(gapped)"));
  CHECK_NOTHROW(lay.check_point(PointRef::at(0, 1)));
  CHECK_THROWS_AS(lay.check_point(PointRef::at(0, 2)), InvalidArgument);
  CHECK_THROWS_AS(lay.check_point(PointRef::at(1, -1)), InvalidArgument);
  CHECK_NOTHROW(lay.check_point(PointRef::eta_point(2, make_dyadic(3, 3))));
  CHECK_THROWS_AS(lay.check_point(PointRef::at(2, 0)), InvalidArgument);
  CHECK_THROWS_AS(lay.check_point(PointRef::at(3, 0)), InvalidArgument);
  const Layout rep(parse_family("(zeta +split)^omega"));
  CHECK(rep.infinite());
  CHECK(rep.block(7) == Block::zeta());
  CHECK_NOTHROW(rep.check_point(PointRef::at(1000, -5)));
}
