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
#include "eclosure/report.hpp"

using namespace ecl;

namespace {
Json analyze(const char* expr) { return build_report(parse_family(expr), ReportRequest{}); }
}  // namespace

TEST_CASE("analyze: two split zetas") {
  const Json j = analyze("zeta +split zeta");
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["family"]["expr"] == "zeta +split zeta");
  CHECK(j["genset"]["exists_least"] == true);
  CHECK(j["spectrum"]["value"] == 4);
  CHECK(j["spectrum"]["exact"] == true);
  CHECK(j["completion"]["new_points"] == 4);
  CHECK(j["completion"]["components"].size() == 2);
  CHECK_FALSE(j.contains("oracle"));
}

TEST_CASE("analyze: tight eta") {
  const Json j = analyze("eta(tight)");
  CHECK(j["genset"]["exists_least"] == false);
  CHECK(j["genset"]["required_points"].is_null());
  CHECK(j["spectrum"]["exact"] == false);
  CHECK(j["spectrum"]["value"] == ">=max(2^omega,omega)");
  CHECK_FALSE(j["spectrum"].contains("witness_construction"));
  CHECK(j["completion"]["dense_intervals"] == true);
}

TEST_CASE("analyze: finite family is closed") {
  const Json j = analyze("fin(3)");
  CHECK(j["completion"]["new_points"] == 0);
  CHECK(j["completion"]["closure_family"] == "fin(3)");
  CHECK(j["spectrum"]["value"] == 0);
}

TEST_CASE("reports are deterministic") {
  ReportRequest req;
  req.oracle = true;
  req.depth = 16;
  req.seed = 9;
  const FamilyDesc f = parse_family("omega +absorbed fin(1) +separate omega*");
  const RenderOptions opt;
  CHECK(render(build_report(f, req), opt) == render(build_report(f, req), opt));
  CHECK(render(catalog_report(), opt) == render(catalog_report(), opt));
  const Json j = build_report(f, req);
  CHECK(j["oracle"]["passed"] == true);
  CHECK(j["oracle"]["checks"].size() == 9);
}

TEST_CASE("catalog report") {
  const Json j = catalog_report();
  CHECK(j["families"].size() == builtin_catalog().size());
  CHECK(builtin_catalog().size() >= 20);
  const Json& t = j["spectrum_table"];
  REQUIRE(t.size() == 10);
  CHECK(t[0]["mu"] == 0);
  CHECK(t[0]["witness"] == "fin(1)");
  CHECK(t[0]["spectrum"] == 0);
  CHECK(t[4]["witness"] == "zeta +split zeta");
  CHECK(t[4]["spectrum"] == 4);
  CHECK(t[9]["mu"] == "aleph0");
  CHECK(t[9]["witness"] == "(zeta +split)^omega");
}

TEST_CASE("sig and ptoy reports") {
  CHECK(sig_report("uniformize", "3,1,5", "")["result"] == Json::array({3, 4, 6}));
  CHECK(sig_report("supp", "1: 1, 0; 3: 2, 2", "")["result"] == Json::array({1, 3}));
  CHECK(sig_report("dom", "1: {1}, {2}", "1: {1,2}, empty")["result"] == true);
  CHECK(sig_report("similar", "1: inf, inf", "1: mod(3:0), mod(3:1,2)")["result"] == true);
  CHECK(sig_report("iilu", "1: 1, 0", "")["is_iilu"] == true);
  CHECK_THROWS_AS(sig_report("dom", "1: 1, 1", ""), InvalidArgument);
  CHECK_THROWS_AS(sig_report("uniformize", "2, x", ""), InvalidArgument);
  CHECK_THROWS_AS(sig_report("bogus", "1: 1, 1", "1: 1, 1"), InvalidArgument);
  CHECK(ptoy_report("clp", "{3,5}", "")["result"] == "{3,5}");
  CHECK(ptoy_report("clpdr", "{7}", "")["result"] == "I");
  CHECK(ptoy_report("genset", "I", "")["result"] == false);
  CHECK(ptoy_report("hausdorff-demo", "", "")["result"] == true);
  CHECK_THROWS_AS(ptoy_report("bogus", "I", ""), InvalidArgument);
}

TEST_CASE("text rendering") {
  RenderOptions opt;
  opt.format = Format::kText;
  const std::string s = render(analyze("omega"), opt);
  CHECK(s.find("schema: eclosure.report/1\n") == 0);
  CHECK(s.find("  new_points: 1\n") != std::string::npos);
  CHECK(s.find("first_block") != std::string::npos);
  opt.format = Format::kJson;
  opt.pretty = true;
  CHECK(render(analyze("omega"), opt).find("\n  \"version\"") != std::string::npos);
}
