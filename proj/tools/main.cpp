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

// eclosure command-line front end.  Talks to the engine only through the C
// interface.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "eclosure/eclosure.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

struct Flags {
  std::size_t depth = 32;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool pretty = false;

  ecl_format fmt() const { return format == "text" ? ECL_FORMAT_TEXT : ECL_FORMAT_JSON; }
};

int report_error(ecl_status) {
  std::cerr << "eclosure: " << ecl_last_error() << "\n";
  return kExitValidation;
}

int emit(ecl_status s, char** text) {
  if (s != ECL_OK) return report_error(s);
  std::fputs(*text, stdout);
  ecl_string_free(*text);
  return kExitOk;
}

class Family {
 public:
  Family() = default;
  Family(const Family&) = delete;
  Family& operator=(const Family&) = delete;
  ~Family() { ecl_family_free(f_); }
  ecl_status parse(const std::string& expr) { return ecl_family_parse(expr.c_str(), &f_); }
  const ecl_family* get() const { return f_; }

 private:
  ecl_family* f_ = nullptr;
};

int run_report(const std::string& expr, const Flags& fl, const char* command, unsigned sections) {
  Family f;
  if (ecl_status s = f.parse(expr); s != ECL_OK) return report_error(s);
  ecl_report_options opt;
  ecl_report_options_init(&opt);
  opt.command = command;
  opt.sections = sections;
  opt.depth = fl.depth;
  opt.seed = fl.seed;
  opt.format = fl.fmt();
  opt.pretty = fl.pretty ? 1 : 0;
  char* out = nullptr;
  return emit(ecl_report(f.get(), &opt, &out), &out);
}

int run_oracle(const std::string& expr, const Flags& fl) {
  if (fl.depth < 8 || fl.depth > 256) {
    std::cerr << "eclosure: oracle depth must lie in [8, 256]\n";
    return kExitValidation;
  }
  Family f;
  if (ecl_status s = f.parse(expr); s != ECL_OK) return report_error(s);
  char* out = nullptr;
  int passed = 0;
  const ecl_status s =
      ecl_oracle_report(f.get(), fl.depth, fl.seed, fl.fmt(), fl.pretty ? 1 : 0, &out, &passed);
  if (const int rc = emit(s, &out); rc != kExitOk) return rc;
  return passed ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closures of families of theories: completion, generating sets, spectra"};
  app.set_version_flag("--version", std::string(ecl_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Flags fl;
  app.add_option("--depth", fl.depth, "Oracle depth")->check(CLI::PositiveNumber);
  app.add_option("--seed", fl.seed, "Realization seed");
  app.add_option("--format", fl.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--pretty", fl.pretty, "Indented, human-readable output");

  std::string expr;
  std::string op;
  std::string a;
  std::string b;
  int rc = kExitOk;

  auto family_cmd = [&](const char* name, const char* help, const char* command,
                        unsigned sections) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("family", expr, "Family expression")->required();
    c->callback([&, command, sections] { rc = run_report(expr, fl, command, sections); });
  };
  family_cmd("analyze", "Full report", "analyze", ECL_SECTION_ALL);
  family_cmd("closure", "Completion and components", "closure", ECL_SECTION_COMPLETION);
  family_cmd("genset", "Least generating set", "genset", ECL_SECTION_GENSET);
  family_cmd("spectrum", "e-spectrum", "spectrum", ECL_SECTION_SPECTRUM);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force checks on a realization");
  oracle->require_subcommand(1);
  CLI::App* verify = oracle->add_subcommand("verify", "Run every check and print a table");
  verify->add_option("family", expr, "Family expression")->required();
  verify->callback([&] { rc = run_oracle(expr, fl); });

  CLI::App* catalog = app.add_subcommand("catalog", "Built-in families and the spectrum table");
  catalog->callback([&] {
    char* out = nullptr;
    rc = emit(ecl_catalog_report(fl.fmt(), fl.pretty ? 1 : 0, &out), &out);
  });

  CLI::App* sig = app.add_subcommand("sig", "Signature profiles");
  sig->add_option("op", op, "supp, dom, idom, similar, iilu or uniformize")
      ->required()
      ->check(CLI::IsMember({"supp", "dom", "idom", "similar", "iilu", "uniformize"}));
  sig->add_option("a", a, "Profile, or comma-separated arities for uniformize")->required();
  sig->add_option("b", b, "Second profile");
  sig->callback([&] {
    char* out = nullptr;
    rc = emit(ecl_sig_report(op.c_str(), a.c_str(), b.empty() ? nullptr : b.c_str(), fl.fmt(),
                             fl.pretty ? 1 : 0, &out),
              &out);
  });

  CLI::App* ptoy = app.add_subcommand("ptoy", "Cardinality-spectrum closure toy");
  ptoy->add_option("op", op, "clp, clpdr, genset, open, intersect or hausdorff-demo")
      ->required()
      ->check(CLI::IsMember({"clp", "clpdr", "genset", "open", "intersect", "hausdorff-demo"}));
  ptoy->add_option("a", a, "Family of cardinalities");
  ptoy->add_option("b", b, "Second family");
  ptoy->callback([&] {
    char* out = nullptr;
    rc = emit(ecl_ptoy_report(op.c_str(), a.c_str(), b.empty() ? nullptr : b.c_str(), fl.fmt(),
                              fl.pretty ? 1 : 0, &out),
              &out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return rc;
}
