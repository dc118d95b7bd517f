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

#include "eclosure/spectrum.hpp"

#include "eclosure/completion.hpp"
#include "eclosure/error.hpp"
#include "eclosure/genset.hpp"

namespace ecl {

std::string SpectrumValue::to_string() const {
  if (exact || value.tag() == Cardinal::Tag::kAtLeastContinuum) return value.to_string();
  return ">=" + value.to_string();
}

SpectrumValue e_spectrum(const FamilyDesc& f) {
  const std::optional<GenSetDesc> g = least_generating_set(f);
  if (!g) return {Cardinal::at_least_continuum(), false};
  return {accumulation_points(f) + g->excluded_count, true};
}

FamilyDesc construct_family_with_spectrum(const Cardinal& mu) {
  switch (mu.tag()) {
    case Cardinal::Tag::kFinite: {
      const std::uint64_t n = mu.count();
      if (n == 0) return make_family({Block::fin(1)});
      std::vector<Block> blocks(n / 2, Block::zeta());
      if (n % 2 == 1) blocks.push_back(Block::omega());
      return make_family(std::move(blocks));
    }
    case Cardinal::Tag::kAleph0: {
      FamilyDesc f;
      f.blocks = {Block::zeta()};
      f.repeated = true;
      f.link = {Annotation::kSplit};
      validate(f);
      return f;
    }
    case Cardinal::Tag::kAtLeastContinuum:
      break;
  }
  throw Unsupported("no discrete witness has spectrum " + mu.to_string() +
                    "; use the eta(tight) recipe");
}

std::string witness_construction(const Cardinal& mu) {
  switch (mu.tag()) {
    case Cardinal::Tag::kFinite: {
      const std::uint64_t n = mu.count();
      if (n == 0) return "finite family";
      std::string s;
      if (n / 2 == 1) s = "one zeta component";
      if (n / 2 > 1) s = std::to_string(n / 2) + " zeta components";
      if (n % 2 == 1) s += s.empty() ? "one omega component" : " and one omega component";
      return n == 1 ? s : s + ", pairwise distinct limits";
    }
    case Cardinal::Tag::kAleph0:
      return "omega many zeta components";
    case Cardinal::Tag::kAtLeastContinuum:
      return "tight dense block";
  }
  return "";
}

FamilyDesc continuum_recipe() { return make_family({Block::eta(EtaMode::kTight)}); }

}  // namespace ecl
