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

#include "eclosure/catalog.hpp"

namespace ecl {

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"point", "fin(1)"},
      {"five points", "fin(5)"},
      {"omega", "omega"},
      {"omega star", "omega*"},
      {"zeta", "zeta"},
      {"omega merged omega star", "omega +merged omega*"},
      {"omega split omega star", "omega +split omega*"},
      {"omega star then omega", "omega* + omega"},
      {"two zetas split", "zeta +split zeta"},
      {"two zetas merged", "zeta +merged zeta"},
      {"omega absorbed point", "omega +absorbed fin(1)"},
      {"point absorbed omega star", "fin(1) +absorbed omega*"},
      {"separated chain", "omega +separate fin(3) +separate omega*"},
      {"zeta between pairs", "fin(2) + zeta + fin(2)"},
      {"double absorption", "omega +absorbed fin(1) +absorbed omega*"},
      {"tight eta", "eta(tight)"},
      {"gapped eta", "eta(gapped)"},
      {"tight eta between chains", "omega + eta(tight) + omega*"},
      {"tight eta between points", "fin(3) + eta(tight) + fin(3)"},
      {"gapped eta absorbed point", "eta(gapped) +absorbed fin(1)"},
      {"gapped eta between zetas", "zeta +merged eta(gapped) +split zeta"},
      {"zeta copies", "(zeta +split)^omega"},
      {"point copies", "(fin(1))^omega"},
      {"merged pair copies", "(omega +merged omega*)^omega"},
      {"gapped eta copies", "(eta(gapped) +split)^omega"},
      {"pair and omega star copies", "(fin(2) + omega*)^omega"},
  };
  return entries;
}

std::vector<SpectrumRow> spectrum_table(std::uint64_t max_finite) {
  std::vector<SpectrumRow> rows;
  auto add = [&](const Cardinal& mu) {
    SpectrumRow r;
    r.mu = mu;
    r.witness = construct_family_with_spectrum(mu);
    r.computed = e_spectrum(r.witness);
    r.construction = witness_construction(mu);
    rows.push_back(std::move(r));
  };
  for (std::uint64_t n = 0; n <= max_finite; ++n) add(Cardinal::finite(n));
  add(Cardinal::aleph0());
  return rows;
}

}  // namespace ecl
