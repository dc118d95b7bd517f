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

#include "eclosure/cardinal.hpp"
#include "eclosure/index_set.hpp"

using namespace ecl;

TEST_CASE("cardinal ordering and sums") {
  const Cardinal c = Cardinal::at_least_continuum();
  CHECK(Cardinal::finite(3) < Cardinal::finite(4));
  CHECK(Cardinal::finite(1000000) < Cardinal::aleph0());
  CHECK(Cardinal::aleph0() < c);
  CHECK(Cardinal::finite(2) + Cardinal::finite(3) == Cardinal::finite(5));
  CHECK(Cardinal::finite(2) + Cardinal::aleph0() == Cardinal::aleph0());
  CHECK(Cardinal::aleph0() + c == c);
  CHECK(Cardinal::finite(0).is_zero());
  CHECK(Cardinal::finite(4).to_string() == "4");
  CHECK(Cardinal::aleph0().to_string() == "aleph0");
  CHECK(c.to_string() == ">=max(2^omega,omega)");
  CHECK(std::string(to_string(TriBool::kUnknown)) == "unknown");
}

TEST_CASE("index sets: parsing and normal forms") {
  CHECK(IndexSet::parse("{1,2}") == IndexSet::of({2, 1}));
  CHECK(IndexSet::parse("mod(2:0)") == IndexSet::mod(2, {0}));
  CHECK(IndexSet::parse("mod(4:0,2)") == IndexSet::mod(2, {0}));
  CHECK(IndexSet::parse("from(3)") == IndexSet::from(3));
  CHECK(IndexSet::parse("empty").is_empty());
  CHECK(IndexSet::parse("{0,1,2} + from(3)") == IndexSet::all());
  CHECK(IndexSet::parse("mod(4:1;8)").first(3) == std::vector<std::uint64_t>{9, 13, 17});
  for (const char* s : {"{1,5,9}", "mod(3:1)", "from(4)", "{0} + mod(5:2,3;7)", "empty"}) {
    const IndexSet a = IndexSet::parse(s);
    CHECK(IndexSet::parse(a.to_string()) == a);
  }
  CHECK_THROWS(IndexSet::parse("{1,"));
  CHECK_THROWS(IndexSet::parse("mod(0:1)"));
}

TEST_CASE("index sets: algebra") {
  const IndexSet ev = IndexSet::mod(2, {0});
  const IndexSet od = ev.complement();
  CHECK(od == IndexSet::mod(2, {1}));
  CHECK((ev | od) == IndexSet::all());
  CHECK((ev & od).is_empty());
  CHECK((IndexSet::from(3) - ev) == IndexSet::parse("mod(2:1;3)"));
  CHECK(IndexSet::range(4).cardinality() == Cardinal::finite(4));
  CHECK(ev.cardinality() == Cardinal::aleph0());
  CHECK(IndexSet::range(3).subset_of(IndexSet::range(5)));
  CHECK_FALSE(ev.subset_of(IndexSet::range(100)));
  CHECK(ev.affine(2, 1) == IndexSet::mod(4, {1}));
  CHECK(IndexSet::of({3}).affine(4, 1) == IndexSet::of({13}));
}
