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

// e-spectra of E-combinations built from families of LU-theories.

#include <string>

#include "eclosure/cardinal.hpp"
#include "eclosure/family.hpp"

namespace ecl {

struct SpectrumValue {
  Cardinal value;
  /// false: `value` is only a lower bound.
  bool exact = true;

  bool operator==(const SpectrumValue& other) const {
    return exact == other.exact && value == other.value;
  }
  std::string to_string() const;
};

/// Closure points outside the least generating set, or the continuum lower
/// bound when there is no least generating set.
SpectrumValue e_spectrum(const FamilyDesc& f);

/// A family whose spectrum is exactly `mu`.  Throws Unsupported for
/// AtLeastContinuum; see continuum_recipe().
FamilyDesc construct_family_with_spectrum(const Cardinal& mu);

/// Short description of the shape construct_family_with_spectrum() uses.
std::string witness_construction(const Cardinal& mu);

/// A family whose spectrum is bounded below by max(2^omega, lambda).
FamilyDesc continuum_recipe();

}  // namespace ecl
