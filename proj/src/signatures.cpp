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

#include "eclosure/signatures.hpp"

#include <cctype>
#include <sstream>

#include "eclosure/error.hpp"

namespace ecl {

SignatureProfile::SignatureProfile(std::map<std::uint64_t, ArityEntry> arities) {
  for (auto& [n, e] : arities) {
    if (!(e.nonempty & e.empty).is_empty()) {
      throw ValidationError("arity " + std::to_string(n) +
                            ": nonempty and empty predicates overlap");
    }
    if (e.nonempty.is_empty() && e.empty.is_empty()) continue;
    arities_.emplace(n, std::move(e));
  }
}

ArityEntry SignatureProfile::place(const Cardinal& nonempty, const Cardinal& empty) {
  if (!nonempty.is_finite() && !empty.is_finite()) {
    return {IndexSet::mod(2, {0}), IndexSet::mod(2, {1})};
  }
  if (!nonempty.is_finite() || !empty.is_finite()) {
    if (nonempty.tag() == Cardinal::Tag::kAtLeastContinuum ||
        empty.tag() == Cardinal::Tag::kAtLeastContinuum) {
      throw InvalidArgument("predicate counts are at most aleph0");
    }
  }
  if (!nonempty.is_finite()) {
    const std::uint64_t m = empty.count();
    return {IndexSet::from(m), IndexSet::range(m)};
  }
  const std::uint64_t k = nonempty.count();
  if (!empty.is_finite()) return {IndexSet::range(k), IndexSet::from(k)};
  return {IndexSet::range(k), IndexSet::range(k + empty.count()) - IndexSet::range(k)};
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits at `sep` outside braces and parentheses.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(std::string(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(std::string(s.substr(start)));
  return out;
}

bool is_count(const std::string& s) {
  if (s == "inf" || s == "aleph0" || s == "omega") return true;
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Cardinal to_count(const std::string& s) {
  if (!std::isdigit(static_cast<unsigned char>(s[0]))) return Cardinal::aleph0();
  if (s.size() > 7) throw InvalidArgument("predicate count " + s + " is too large");
  return Cardinal::finite(std::stoull(s));
}

}  // namespace

SignatureProfile SignatureProfile::parse(std::string_view text) {
  std::map<std::uint64_t, ArityEntry> arities;
  std::string cleaned;
  for (const std::string& line : split_top(text, '\n')) {
    cleaned += line.substr(0, line.find('#'));
    cleaned += ';';
  }
  for (const std::string& raw : split_top(cleaned, ';')) {
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const std::size_t colon = entry.find(':');
    if (colon == std::string::npos) throw ValidationError("profile entry '" + entry + "' lacks ':'");
    const std::string arity = trim(entry.substr(0, colon));
    if (arity.empty() || arity.size() > 6 || !is_count(arity) || !std::isdigit(arity[0])) {
      throw ValidationError("bad arity '" + arity + "'");
    }
    const std::uint64_t n = std::stoull(arity);
    if (n == 0) throw ValidationError("arities start at 1");
    const std::vector<std::string> sides = split_top(entry.substr(colon + 1), ',');
    if (sides.size() != 2) {
      throw ValidationError("arity " + arity + ": expected 'NONEMPTY, EMPTY'");
    }
    const std::string a = trim(sides[0]), b = trim(sides[1]);
    ArityEntry e;
    if (is_count(a) && is_count(b)) {
      e = place(to_count(a), to_count(b));
    } else if (!is_count(a) && !is_count(b)) {
      e = {IndexSet::parse(a), IndexSet::parse(b)};
    } else {
      throw ValidationError("arity " + arity + ": give two counts or two index sets");
    }
    if (arities.count(n)) throw ValidationError("arity " + arity + " given twice");
    arities.emplace(n, e);
  }
  return SignatureProfile(std::move(arities));
}

ArityEntry SignatureProfile::at(std::uint64_t n) const {
  auto it = arities_.find(n);
  if (it == arities_.end()) return {};
  return it->second;
}

bool SignatureProfile::is_iilu() const {
  bool occupied = false;
  for (const auto& [n, e] : arities_) {
    if (e.nonempty.is_empty()) continue;
    occupied = true;
    if (e.nonempty.is_finite() || e.empty.is_finite()) return false;
  }
  return occupied;
}

bool SignatureProfile::operator==(const SignatureProfile& other) const {
  return arities_ == other.arities_;
}

std::string SignatureProfile::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, e] : arities_) {
    if (!first) os << "; ";
    first = false;
    os << n << ": " << e.nonempty.to_string() << ", " << e.empty.to_string();
  }
  return os.str();
}

std::set<std::uint64_t> supp(const SignatureProfile& p) {
  std::set<std::uint64_t> out;
  for (const auto& [n, e] : p.arities()) {
    if (!e.nonempty.is_empty()) out.insert(n);
  }
  return out;
}

namespace {

void require_same_language(const SignatureProfile& p1, const SignatureProfile& p2) {
  std::set<std::uint64_t> ns;
  for (const auto& [n, e] : p1.arities()) ns.insert(n);
  for (const auto& [n, e] : p2.arities()) ns.insert(n);
  for (std::uint64_t n : ns) {
    if (!(p1.at(n).universe() == p2.at(n).universe())) {
      throw LanguageMismatch("profiles use different predicates at arity " + std::to_string(n));
    }
  }
}

}  // namespace

bool dominates(const SignatureProfile& p1, const SignatureProfile& p2) {
  require_same_language(p1, p2);
  for (const auto& [n, e] : p1.arities()) {
    if (!e.nonempty.subset_of(p2.at(n).nonempty)) return false;
  }
  return true;
}

bool infinitely_dominates(const SignatureProfile& p1, const SignatureProfile& p2) {
  if (!dominates(p1, p2)) throw InvalidArgument("infinite domination needs p1 dominated by p2");
  for (const auto& [n, e] : p2.arities()) {
    if (!(e.nonempty - p1.at(n).nonempty).is_finite()) return true;
  }
  return false;
}

bool language_similar(const SignatureProfile& p1, const SignatureProfile& p2) {
  std::set<std::uint64_t> ns;
  for (const auto& [n, e] : p1.arities()) ns.insert(n);
  for (const auto& [n, e] : p2.arities()) ns.insert(n);
  for (std::uint64_t n : ns) {
    const ArityEntry a = p1.at(n), b = p2.at(n);
    if (!(a.nonempty.cardinality() == b.nonempty.cardinality())) return false;
    if (!(a.empty.cardinality() == b.empty.cardinality())) return false;
  }
  return true;
}

std::vector<std::uint64_t> uniformize(const std::vector<std::uint64_t>& arities) {
  std::vector<std::uint64_t> r;
  r.reserve(arities.size());
  for (std::uint64_t k : arities) {
    if (k == 0) throw InvalidArgument("arities must be >= 1");
    r.push_back(r.empty() ? k : std::max(r.back(), k) + 1);
  }
  return r;
}

SignatureProfile iilu_expand(const SignatureProfile& p) {
  if (supp(p).empty()) throw InvalidArgument("profile has no nonempty predicate");
  std::map<std::uint64_t, ArityEntry> out;
  for (const auto& [n, e] : p.arities()) {
    if (e.nonempty.is_empty() || (!e.nonempty.is_finite() && !e.empty.is_finite())) {
      out.emplace(n, e);
      continue;
    }
    out.emplace(n, ArityEntry{e.nonempty.affine(2, 0) | IndexSet::mod(4, {1}),
                              e.empty.affine(2, 0) | IndexSet::mod(4, {3})});
  }
  return SignatureProfile(std::move(out));
}

}  // namespace ecl
