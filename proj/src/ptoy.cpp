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

#include "eclosure/ptoy.hpp"

#include "eclosure/error.hpp"

namespace ecl {

CardFamily::CardFamily(IndexSet finite_part, bool has_omega)
    : finite_(std::move(finite_part)), omega_(has_omega) {
  if (finite_.contains(0)) throw InvalidArgument("cardinalities start at 1");
}

CardFamily CardFamily::singleton(std::uint64_t i) {
  if (i == kOmega) return CardFamily(IndexSet::empty(), true);
  return CardFamily(IndexSet::of({i}), false);
}

CardFamily CardFamily::parse(std::string_view text) {
  std::string t(text);
  auto trimmed = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    return s;
  };
  t = trimmed(t);
  if (t == "I") return whole();
  bool omega = false;
  const std::string tail = "omega";
  if (t.size() >= tail.size() && t.compare(t.size() - tail.size(), tail.size(), tail) == 0) {
    omega = true;
    t = trimmed(t.substr(0, t.size() - tail.size()));
    if (!t.empty() && t.back() == '+') t = trimmed(t.substr(0, t.size() - 1));
    if (t.empty()) return CardFamily(IndexSet::empty(), true);
  }
  return CardFamily(IndexSet::parse(t), omega);
}

bool CardFamily::contains(std::uint64_t i) const {
  return i == kOmega ? omega_ : finite_.contains(i);
}

bool CardFamily::is_cofinite() const { return complement().is_finite(); }

CardFamily CardFamily::operator|(const CardFamily& o) const {
  return CardFamily(finite_ | o.finite_, omega_ || o.omega_);
}

CardFamily CardFamily::operator&(const CardFamily& o) const {
  return CardFamily(finite_ & o.finite_, omega_ && o.omega_);
}

CardFamily CardFamily::complement() const {
  return CardFamily(IndexSet::from(1) - finite_, !omega_);
}

bool CardFamily::subset_of(const CardFamily& o) const {
  return finite_.subset_of(o.finite_) && (!omega_ || o.omega_);
}

std::string CardFamily::to_string() const {
  if (*this == whole()) return "I";
  if (is_empty()) return "{}";
  if (finite_.is_empty()) return "{omega}";
  return finite_.to_string() + (omega_ ? " + omega" : "");
}

CardFamily cl_p(const CardFamily& s) { return s.is_finite() ? s : CardFamily::whole(); }

CardFamily cl_p_dr(const CardFamily& s) {
  return s.is_empty() ? CardFamily::empty() : CardFamily::whole();
}

bool has_minimal_generating_set_dP(const CardFamily& s) {
  if (!(cl_p(s) == s)) throw InvalidArgument("input " + s.to_string() + " is not closed");
  return s.is_finite();
}

bool is_open(const CardFamily& u) {
  const CardFamily c = u.complement();
  return cl_p(c) == c;
}

bool open_sets_intersect(const CardFamily& u1, const CardFamily& u2) {
  for (const CardFamily* u : {&u1, &u2}) {
    if (!is_open(*u)) throw InvalidArgument("set " + u->to_string() + " is not open");
  }
  if (u1.is_empty() || u2.is_empty()) return true;
  return !(u1 & u2).is_empty();
}

bool t0_separates(std::uint64_t i, std::uint64_t j) {
  const CardFamily u = cl_p(CardFamily::singleton(i)).complement();
  return is_open(u) && u.contains(j) && !u.contains(i);
}

}  // namespace ecl
