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

// Depth-bounded checks of the closure operator on a realization.
//
// A set T lies in the closure of a subfamily S at depth d when every pattern
// over indices below d that T satisfies is satisfied by infinitely many
// members of S.  Answers are monotone in d: an answer of No never becomes Yes
// for a larger depth, and Yes is only reported when it holds at every depth
// up to the realization capacity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eclosure/completion.hpp"
#include "eclosure/index_set.hpp"
#include "eclosure/realization.hpp"

namespace ecl {

/// Sets T with T cap probe == trace.
struct PatternFormula {
  std::vector<std::size_t> probe;
  std::vector<std::size_t> trace;

  bool matches(const Realization& r, const Loc& set) const;
  std::string to_string() const;
};

struct CandidateDesc {
  enum class Kind { kPoint, kUnion, kIntersection, kExplicit };
  Kind kind = Kind::kPoint;
  std::optional<PointRef> point;
  Loc loc;
  /// kExplicit: the candidate set itself.
  std::optional<IndexSet> set;
  std::string label;

  static CandidateDesc of_point(const Realization& r, const PointRef& p);
  static CandidateDesc union_at(Loc l, std::string label);
  static CandidateDesc intersection_at(Loc l, std::string label);
  static CandidateDesc explicit_set(IndexSet s, std::string label);

  bool contains(const Realization& r, std::size_t i) const;
};

/// Throws InvalidArgument for depth 0 or depth above the capacity.
TriBool in_closure(const Realization& r, const Subfamily& s, const CandidateDesc& c,
                   std::size_t depth);

/// One limit of F found by the oracle.
struct ClosureCandidate {
  CandidateDesc cand;
  LimitSite site = LimitSite::kJunction;
  LimitSide side = LimitSide::kUpper;
  std::size_t block = 0;
  std::size_t junction = 0;
  TriBool accepted = TriBool::kUnknown;
  LimitStatus status = LimitStatus::kNew;
  std::optional<PointRef> equals_point;
  std::optional<std::size_t> merged_with;
};

struct ClosureEnumeration {
  std::vector<ClosureCandidate> candidates;
  /// Distinct accepted candidates outside F, when the layout has finitely
  /// many limits.
  std::optional<std::size_t> new_count;
  bool continuum = false;
  /// Disagreements with the symbolic completion.
  std::vector<std::string> mismatches;
};

/// Limits at every open block end (two copies for repeated families), near
/// sampled eta points and at sampled eta cuts, checked against complete().
ClosureEnumeration closure_enumerate(const Realization& r, std::size_t depth);

/// A pattern over indices below max_depth satisfied by p alone among F.
std::optional<PatternFormula> isolating_pattern(const Realization& r, const PointRef& p,
                                                std::size_t max_depth);

/// Two complementary patterns, one satisfied by p and the other by q.
std::optional<std::pair<PatternFormula, PatternFormula>> separating_patterns(const Realization& r,
                                                                             const Loc& p,
                                                                             const Loc& q);

struct CheckTally {
  std::size_t checked = 0;
  std::size_t inconclusive = 0;
  std::size_t violations = 0;
  bool holds() const noexcept { return violations == 0; }
};

/// Members of either subfamily.
Subfamily unite(const Realization& r, const Subfamily& a, const Subfamily& b);
/// Adds a candidate as an extra member.
Subfamily with_candidate(const Subfamily& s, const CandidateDesc& c);

/// cl(A u B) == cl(A) u cl(B) on the given candidates.
CheckTally check_additivity(const Realization& r, const Subfamily& a, const Subfamily& b,
                            const std::vector<CandidateDesc>& cands, std::size_t depth);

/// Additivity for two families placed side by side with a split junction.
CheckTally check_additivity(const FamilyDesc& a, const FamilyDesc& b, std::uint64_t seed,
                            std::size_t depth);

/// t2 in cl(s + t1) and t2 not in cl(s) imply t1 in cl(s + t2).  Only
/// definite answers count.
CheckTally check_exchange(const Realization& r, const Subfamily& s, const CandidateDesc& t1,
                          const CandidateDesc& t2, std::size_t depth);

/// Candidates sampled from the layout: F points, limits, eta cuts.
std::vector<CandidateDesc> sample_candidates(const Realization& r, std::size_t per_block);

struct VerifyRow {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t inconclusive = 0;
  std::string detail;
};

struct VerifyReport {
  std::string family;
  std::size_t depth = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyRow> rows;
  bool passed() const;
};

VerifyReport verify(const FamilyDesc& f, std::size_t depth, std::uint64_t seed);

}  // namespace ecl
