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

// Exercises the shared library through its C header only.

#include <cstring>
#include <string>

#include "doctest.h"

#include "eclosure/eclosure.h"

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { ecl_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("parse, print, free") {
  ecl_family* f = nullptr;
  REQUIRE(ecl_family_parse("zeta + zeta", &f) == ECL_OK);
  Owned text;
  REQUIRE(ecl_family_print(f, &text.s) == ECL_OK);
  CHECK(text.str() == "zeta +split zeta");
  ecl_family_free(f);
  ecl_family_free(nullptr);
}

TEST_CASE("error codes and last error") {
  ecl_family* f = reinterpret_cast<ecl_family*>(1);
  CHECK(ecl_family_parse("fin(3", &f) == ECL_ERR_SYNTAX);
  CHECK(f == nullptr);
  CHECK(std::string(ecl_last_error()).find("column") != std::string::npos);
  CHECK(ecl_family_parse("fin(0)", &f) == ECL_ERR_VALIDATION);
  CHECK(ecl_family_parse(nullptr, &f) == ECL_ERR_NULL_POINTER);
  CHECK(ecl_family_parse("omega", nullptr) == ECL_ERR_NULL_POINTER);
  ecl_cardinal c{ECL_CARD_AT_LEAST_CONTINUUM, 0};
  CHECK(ecl_family_with_spectrum(c, &f) == ECL_ERR_UNSUPPORTED);
  Owned out;
  CHECK(ecl_sig_report("dom", "1: {1}, {2}", "1: {1}, {3}", ECL_FORMAT_JSON, 0, &out.s) ==
        ECL_ERR_LANGUAGE_MISMATCH);
  CHECK(ecl_sig_report("uniformize", "0", nullptr, ECL_FORMAT_JSON, 0, &out.s) ==
        ECL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("typed queries") {
  ecl_family* f = nullptr;
  REQUIRE(ecl_family_parse("omega", &f) == ECL_OK);
  ecl_cardinal c{};
  REQUIRE(ecl_accumulation_points(f, &c) == ECL_OK);
  CHECK(c.kind == ECL_CARD_FINITE);
  CHECK(c.value == 1);
  int least = -1;
  REQUIRE(ecl_has_least_generating_set(f, &least) == ECL_OK);
  CHECK(least == 1);
  ecl_family_free(f);

  REQUIRE(ecl_family_parse("eta(tight)", &f) == ECL_OK);
  int exact = -1;
  REQUIRE(ecl_e_spectrum(f, &c, &exact) == ECL_OK);
  CHECK(c.kind == ECL_CARD_AT_LEAST_CONTINUUM);
  CHECK(exact == 0);
  REQUIRE(ecl_has_least_generating_set(f, &least) == ECL_OK);
  CHECK(least == 0);
  ecl_family_free(f);

  for (std::uint64_t n = 0; n <= 12; ++n) {
    REQUIRE(ecl_family_with_spectrum(ecl_cardinal{ECL_CARD_FINITE, n}, &f) == ECL_OK);
    REQUIRE(ecl_e_spectrum(f, &c, &exact) == ECL_OK);
    CHECK(c.kind == ECL_CARD_FINITE);
    CHECK(c.value == n);
    CHECK(exact == 1);
    ecl_family_free(f);
  }
}

TEST_CASE("reports") {
  ecl_family* f = nullptr;
  REQUIRE(ecl_family_parse("zeta +split zeta", &f) == ECL_OK);
  ecl_report_options opt;
  ecl_report_options_init(&opt);
  Owned a;
  REQUIRE(ecl_report(f, &opt, &a.s) == ECL_OK);
  CHECK(a.str().find("\"exists_least\":true") != std::string::npos);
  CHECK(a.str().find("\"value\":4") != std::string::npos);
  opt.sections = ECL_SECTION_SPECTRUM;
  opt.command = "spectrum";
  Owned b;
  REQUIRE(ecl_report(f, &opt, &b.s) == ECL_OK);
  CHECK(b.str().find("\"genset\"") == std::string::npos);
  CHECK(b.str().find("\"command\":\"spectrum\"") != std::string::npos);
  Owned o;
  int passed = 0;
  REQUIRE(ecl_oracle_report(f, 32, 0, ECL_FORMAT_TEXT, 0, &o.s, &passed) == ECL_OK);
  CHECK(passed == 1);
  CHECK(o.str().find("closure-agreement") != std::string::npos);
  CHECK(ecl_oracle_report(f, 0, 0, ECL_FORMAT_TEXT, 0, &o.s, &passed) == ECL_ERR_INVALID_ARGUMENT);
  ecl_family_free(f);
  Owned cat;
  REQUIRE(ecl_catalog_report(ECL_FORMAT_JSON, 1, &cat.s) == ECL_OK);
  CHECK(cat.str().find("\"spectrum_table\"") != std::string::npos);
  Owned p;
  REQUIRE(ecl_ptoy_report("clpdr", "{7}", nullptr, ECL_FORMAT_JSON, 0, &p.s) == ECL_OK);
  CHECK(p.str().find("\"result\":\"I\"") != std::string::npos);
  CHECK(std::strlen(ecl_version()) > 0);
}
