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

#include "eclosure/catalog.hpp"
#include "eclosure/error.hpp"
#include "eclosure/genset.hpp"
#include "eclosure/spectrum.hpp"

using namespace ecl;

TEST_CASE("e_spectrum examples") {
  CHECK(e_spectrum(parse_family("fin(4)")) == SpectrumValue{Cardinal::finite(0), true});
  CHECK(e_spectrum(parse_family("zeta +split zeta")) == SpectrumValue{Cardinal::finite(4), true});
  const SpectrumValue t = e_spectrum(parse_family("eta(tight)"));
  CHECK(t.value.tag() == Cardinal::Tag::kAtLeastContinuum);
  CHECK_FALSE(t.exact);
}

TEST_CASE("e_spectrum counts excluded points") {
  // one new limit from omega*, one absorbed point outside the least set
  CHECK(e_spectrum(parse_family("omega +absorbed fin(1) +separate omega*")).value ==
        Cardinal::finite(2));
  CHECK(e_spectrum(parse_family("omega +absorbed fin(1)")).value == Cardinal::finite(1));
}

TEST_CASE("construct_family_with_spectrum examples") {
  CHECK(print_family(construct_family_with_spectrum(Cardinal::finite(0))) == "fin(1)");
  CHECK(construct_family_with_spectrum(Cardinal::finite(3)) == parse_family("zeta +split omega"));
  CHECK(construct_family_with_spectrum(Cardinal::finite(4)) == parse_family("zeta +split zeta"));
  CHECK(construct_family_with_spectrum(Cardinal::aleph0()) == parse_family("(zeta +split)^omega"));
  CHECK_THROWS_AS(construct_family_with_spectrum(Cardinal::at_least_continuum()), Unsupported);
  CHECK(e_spectrum(continuum_recipe()).value.tag() == Cardinal::Tag::kAtLeastContinuum);
}

TEST_CASE("round trip for mu up to 12 and aleph0") {
  for (std::uint64_t n = 0; n <= 12; ++n) {
    const Cardinal mu = Cardinal::finite(n);
    CHECK(e_spectrum(construct_family_with_spectrum(mu)) == SpectrumValue{mu, true});
  }
  CHECK(e_spectrum(construct_family_with_spectrum(Cardinal::aleph0())) ==
        SpectrumValue{Cardinal::aleph0(), true});
}

TEST_CASE("spectrum table rows") {
  const auto rows = spectrum_table();
  REQUIRE(rows.size() == 10);
  CHECK(print_family(rows[0].witness) == "fin(1)");
  CHECK(rows[0].computed.value == Cardinal::finite(0));
  CHECK(rows[4].construction == "2 zeta components, pairwise distinct limits");
  CHECK(rows[4].computed.value == Cardinal::finite(4));
  CHECK(rows[9].mu == Cardinal::aleph0());
  CHECK(rows[9].construction == "omega many zeta components");
  for (const SpectrumRow& r : rows) CHECK(r.computed == SpectrumValue{r.mu, true});
}

TEST_CASE("inexact only for continuum values") {
  for (const CatalogEntry& e : builtin_catalog()) {
    const SpectrumValue v = e_spectrum(parse_family(e.expr));
    if (!v.exact) CHECK(v.value.tag() == Cardinal::Tag::kAtLeastContinuum);
    CHECK(v.exact == has_least_generating_set(parse_family(e.expr)));
  }
}
