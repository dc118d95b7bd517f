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

#include "eclosure/eclosure.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "eclosure/error.hpp"
#include "eclosure/family.hpp"
#include "eclosure/genset.hpp"
#include "eclosure/report.hpp"
#include "eclosure/spectrum.hpp"

struct ecl_family {
  ecl::FamilyDesc desc;
};

namespace {

thread_local std::string last_error;

ecl_status fail(ecl_status s, const std::string& what) {
  last_error = what;
  return s;
}

ecl_status from_code(ecl::ErrorCode c) {
  switch (c) {
    case ecl::ErrorCode::kSyntax:
      return ECL_ERR_SYNTAX;
    case ecl::ErrorCode::kValidation:
      return ECL_ERR_VALIDATION;
    case ecl::ErrorCode::kInvalidArgument:
      return ECL_ERR_INVALID_ARGUMENT;
    case ecl::ErrorCode::kUnsupported:
      return ECL_ERR_UNSUPPORTED;
    case ecl::ErrorCode::kLanguageMismatch:
      return ECL_ERR_LANGUAGE_MISMATCH;
  }
  return ECL_ERR_INTERNAL;
}

template <class F>
ecl_status guarded(F&& body) {
  try {
    body();
    return ECL_OK;
  } catch (const ecl::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(ECL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ECL_ERR_INTERNAL, "unknown failure");
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ecl_cardinal to_c(const ecl::Cardinal& c) {
  ecl_cardinal out{ECL_CARD_FINITE, 0};
  switch (c.tag()) {
    case ecl::Cardinal::Tag::kFinite:
      out.value = c.count();
      break;
    case ecl::Cardinal::Tag::kAleph0:
      out.kind = ECL_CARD_ALEPH0;
      break;
    case ecl::Cardinal::Tag::kAtLeastContinuum:
      out.kind = ECL_CARD_AT_LEAST_CONTINUUM;
      break;
  }
  return out;
}

ecl::RenderOptions render_opts(ecl_format format, int pretty) {
  ecl::RenderOptions r;
  r.format = format == ECL_FORMAT_TEXT ? ecl::Format::kText : ecl::Format::kJson;
  r.pretty = pretty != 0;
  return r;
}

#define ECL_REQUIRE(p)                                        \
  do {                                                        \
    if (!(p)) return fail(ECL_ERR_NULL_POINTER, #p " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

const char* ecl_version(void) { return ecl::engine_version(); }

const char* ecl_last_error(void) { return last_error.c_str(); }

void ecl_string_free(char* s) { std::free(s); }

void ecl_report_options_init(ecl_report_options* opt) {
  if (!opt) return;
  opt->command = nullptr;
  opt->sections = ECL_SECTION_ALL;
  opt->depth = 32;
  opt->seed = 0;
  opt->format = ECL_FORMAT_JSON;
  opt->pretty = 0;
}

ecl_status ecl_family_parse(const char* text, ecl_family** out) {
  ECL_REQUIRE(text);
  ECL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new ecl_family{ecl::parse_family(text)}; });
}

void ecl_family_free(ecl_family* f) { delete f; }

ecl_status ecl_family_print(const ecl_family* f, char** out) {
  ECL_REQUIRE(f);
  ECL_REQUIRE(out);
  return guarded([&] { *out = dup(ecl::print_family(f->desc)); });
}

ecl_status ecl_family_with_spectrum(ecl_cardinal mu, ecl_family** out) {
  ECL_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    ecl::Cardinal c;
    switch (mu.kind) {
      case ECL_CARD_FINITE:
        c = ecl::Cardinal::finite(mu.value);
        break;
      case ECL_CARD_ALEPH0:
        c = ecl::Cardinal::aleph0();
        break;
      case ECL_CARD_AT_LEAST_CONTINUUM:
        c = ecl::Cardinal::at_least_continuum();
        break;
      default:
        throw ecl::InvalidArgument("unknown cardinal kind");
    }
    *out = new ecl_family{ecl::construct_family_with_spectrum(c)};
  });
}

ecl_status ecl_accumulation_points(const ecl_family* f, ecl_cardinal* out) {
  ECL_REQUIRE(f);
  ECL_REQUIRE(out);
  return guarded([&] { *out = to_c(ecl::accumulation_points(f->desc)); });
}

ecl_status ecl_has_least_generating_set(const ecl_family* f, int* out) {
  ECL_REQUIRE(f);
  ECL_REQUIRE(out);
  return guarded([&] { *out = ecl::has_least_generating_set(f->desc) ? 1 : 0; });
}

ecl_status ecl_e_spectrum(const ecl_family* f, ecl_cardinal* out, int* exact) {
  ECL_REQUIRE(f);
  ECL_REQUIRE(out);
  return guarded([&] {
    const ecl::SpectrumValue v = ecl::e_spectrum(f->desc);
    *out = to_c(v.value);
    if (exact) *exact = v.exact ? 1 : 0;
  });
}

ecl_status ecl_report(const ecl_family* f, const ecl_report_options* opt, char** out) {
  ECL_REQUIRE(f);
  ECL_REQUIRE(opt);
  ECL_REQUIRE(out);
  return guarded([&] {
    ecl::ReportRequest req;
    req.command = opt->command ? opt->command : "analyze";
    req.completion = (opt->sections & ECL_SECTION_COMPLETION) != 0;
    req.genset = (opt->sections & ECL_SECTION_GENSET) != 0;
    req.spectrum = (opt->sections & ECL_SECTION_SPECTRUM) != 0;
    req.oracle = (opt->sections & ECL_SECTION_ORACLE) != 0;
    req.depth = opt->depth;
    req.seed = opt->seed;
    *out = dup(ecl::render(ecl::build_report(f->desc, req), render_opts(opt->format, opt->pretty)));
  });
}

ecl_status ecl_oracle_report(const ecl_family* f, size_t depth, uint64_t seed, ecl_format format,
                             int pretty, char** out, int* passed) {
  ECL_REQUIRE(f);
  ECL_REQUIRE(out);
  return guarded([&] {
    const ecl::VerifyReport v = ecl::verify(f->desc, depth, seed);
    ecl::Json j = ecl::envelope("oracle", seed);
    j["family"] = ecl::family_json(f->desc);
    j["oracle"] = ecl::oracle_json(v);
    *out = dup(ecl::render(j, render_opts(format, pretty)));
    if (passed) *passed = v.passed() ? 1 : 0;
  });
}

ecl_status ecl_catalog_report(ecl_format format, int pretty, char** out) {
  ECL_REQUIRE(out);
  return guarded([&] { *out = dup(ecl::render(ecl::catalog_report(), render_opts(format, pretty))); });
}

ecl_status ecl_sig_report(const char* op, const char* a, const char* b, ecl_format format,
                          int pretty, char** out) {
  ECL_REQUIRE(op);
  ECL_REQUIRE(a);
  ECL_REQUIRE(out);
  return guarded([&] {
    *out = dup(ecl::render(ecl::sig_report(op, a, b ? b : ""), render_opts(format, pretty)));
  });
}

ecl_status ecl_ptoy_report(const char* op, const char* a, const char* b, ecl_format format,
                           int pretty, char** out) {
  ECL_REQUIRE(op);
  ECL_REQUIRE(out);
  return guarded([&] {
    *out = dup(ecl::render(ecl::ptoy_report(op, a ? a : "", b ? b : ""),
                           render_opts(format, pretty)));
  });
}

}  // extern "C"
