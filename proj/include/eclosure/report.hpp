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

#pragma once

// Structured reports.  Key order is fixed, so output is byte-deterministic
// for fixed inputs.

#include <cstddef>
#include <cstdint>
#include <string>

#include "json.hpp"

#include "eclosure/cardinal.hpp"
#include "eclosure/family.hpp"
#include "eclosure/oracle.hpp"

namespace ecl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "eclosure.report/1";
const char* engine_version();

enum class Format { kJson, kText };

struct RenderOptions {
  Format format = Format::kJson;
  bool pretty = false;
};

struct ReportRequest {
  std::string command = "analyze";
  bool completion = true;
  bool genset = true;
  bool spectrum = true;
  bool oracle = false;
  std::size_t depth = 32;
  std::uint64_t seed = 0;
};

/// Finite values as integers, everything else as its text form.
Json cardinal_json(const Cardinal& c);

Json envelope(const std::string& command, std::uint64_t seed);
Json family_json(const FamilyDesc& f);
Json completion_json(const FamilyDesc& f);
Json genset_json(const FamilyDesc& f);
Json spectrum_json(const FamilyDesc& f);
Json oracle_json(const VerifyReport& r);

Json build_report(const FamilyDesc& f, const ReportRequest& req);
Json catalog_report();

/// Throws on malformed operands.  Ops: supp, dom, idom, similar, iilu,
/// uniformize.
Json sig_report(const std::string& op, const std::string& a, const std::string& b);
/// Ops: clp, clpdr, genset, open, intersect, hausdorff-demo.
Json ptoy_report(const std::string& op, const std::string& a, const std::string& b);

std::string render(const Json& report, const RenderOptions& opt);

}  // namespace ecl
