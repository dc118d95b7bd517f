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

// Built-in families used by the catalog command and the test suites.

#include <string>
#include <vector>

#include "eclosure/family.hpp"
#include "eclosure/spectrum.hpp"

namespace ecl {

struct CatalogEntry {
  std::string name;
  std::string expr;
};

const std::vector<CatalogEntry>& builtin_catalog();

struct SpectrumRow {
  Cardinal mu;
  FamilyDesc witness;
  SpectrumValue computed;
  std::string construction;
};

/// Witness families for mu = 0..max_finite and aleph0.
std::vector<SpectrumRow> spectrum_table(std::uint64_t max_finite = 8);

}  // namespace ecl
