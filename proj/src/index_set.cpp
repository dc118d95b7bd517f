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

#include "eclosure/index_set.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "eclosure/error.hpp"

namespace ecl {

IndexSet::IndexSet() : period_{false} {}

IndexSet::IndexSet(std::vector<bool> prefix, std::vector<bool> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  normalize();
}

IndexSet IndexSet::of(const std::vector<std::uint64_t>& elements) {
  std::vector<bool> prefix;
  for (std::uint64_t e : elements) {
    if (e >= prefix.size()) prefix.resize(e + 1, false);
    prefix[e] = true;
  }
  return IndexSet(std::move(prefix), {false});
}

IndexSet IndexSet::range(std::uint64_t n) { return IndexSet(std::vector<bool>(n, true), {false}); }

IndexSet IndexSet::from(std::uint64_t n) { return IndexSet(std::vector<bool>(n, false), {true}); }

IndexSet IndexSet::mod(std::uint64_t k, const std::vector<std::uint64_t>& residues) {
  if (k == 0) throw InvalidArgument("mod needs a positive modulus");
  std::vector<bool> period(k, false);
  for (std::uint64_t r : residues) {
    if (r >= k) throw InvalidArgument("residue " + std::to_string(r) + " is not below " + std::to_string(k));
    period[r] = true;
  }
  return IndexSet({}, std::move(period));
}

bool IndexSet::bit(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

bool IndexSet::contains(std::uint64_t i) const { return bit(i); }

void IndexSet::normalize() {
  // Shortest period.
  const std::size_t p = period_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  // Absorb the tail of the prefix into the period.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    prefix_.pop_back();
  }
}

bool IndexSet::is_empty() const {
  return std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; }) &&
         std::none_of(period_.begin(), period_.end(), [](bool b) { return b; });
}

bool IndexSet::is_finite() const {
  return std::none_of(period_.begin(), period_.end(), [](bool b) { return b; });
}

Cardinal IndexSet::cardinality() const {
  if (!is_finite()) return Cardinal::aleph0();
  return Cardinal::finite(static_cast<std::uint64_t>(std::count(prefix_.begin(), prefix_.end(), true)));
}

template <class Op>
IndexSet IndexSet::combine(const IndexSet& o, Op op) const {
  const std::size_t len = std::max(prefix_.size(), o.prefix_.size());
  const std::size_t per = std::lcm(period_.size(), o.period_.size());
  std::vector<bool> prefix(len), period(per);
  for (std::size_t i = 0; i < len; ++i) prefix[i] = op(bit(i), o.bit(i));
  for (std::size_t i = 0; i < per; ++i) period[i] = op(bit(len + i), o.bit(len + i));
  return IndexSet(std::move(prefix), std::move(period));
}

IndexSet IndexSet::operator|(const IndexSet& o) const {
  return combine(o, [](bool a, bool b) { return a || b; });
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
  return combine(o, [](bool a, bool b) { return a && b; });
}

IndexSet IndexSet::operator-(const IndexSet& o) const {
  return combine(o, [](bool a, bool b) { return a && !b; });
}

IndexSet IndexSet::complement() const { return all() - *this; }

bool IndexSet::subset_of(const IndexSet& o) const { return (*this - o).is_empty(); }

IndexSet IndexSet::affine(std::uint64_t a, std::uint64_t b) const {
  if (a == 0) throw InvalidArgument("affine map needs a >= 1");
  std::vector<bool> prefix(b + a * prefix_.size(), false), period(a * period_.size(), false);
  for (std::size_t i = 0; i < prefix_.size(); ++i) prefix[b + a * i] = prefix_[i];
  for (std::size_t i = 0; i < period_.size(); ++i) period[a * i] = period_[i];
  return IndexSet(std::move(prefix), std::move(period));
}

std::vector<std::uint64_t> IndexSet::first(std::size_t limit) const {
  std::vector<std::uint64_t> out;
  if (is_empty()) return out;
  const std::size_t stop = is_finite() ? prefix_.size() : static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < stop && out.size() < limit; ++i) {
    if (bit(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  std::vector<std::uint64_t> finite_part;
  for (std::size_t i = 0; i < prefix_.size(); ++i) {
    if (prefix_[i]) finite_part.push_back(i);
  }
  bool any = false;
  if (!finite_part.empty() || is_finite()) {
    os << '{';
    for (std::size_t i = 0; i < finite_part.size(); ++i) os << (i ? "," : "") << finite_part[i];
    os << '}';
    any = true;
  }
  if (!is_finite()) {
    if (any) os << " + ";
    const std::size_t start = prefix_.size();
    const std::size_t p = period_.size();
    if (p == 1) {
      os << "from(" << start << ')';
    } else {
      std::vector<std::size_t> res;
      for (std::size_t r = 0; r < p; ++r) {
        if (period_[r]) res.push_back((start + r) % p);
      }
      std::sort(res.begin(), res.end());
      os << "mod(" << p << ':';
      for (std::size_t i = 0; i < res.size(); ++i) os << (i ? "," : "") << res[i];
      if (start > 0) os << ';' << start;
      os << ')';
    }
  }
  return os.str();
}

namespace {

class SetParser {
 public:
  explicit SetParser(std::string_view t) : t_(t) {}

  IndexSet parse() {
    IndexSet s = term();
    skip();
    while (pos_ < t_.size() && t_[pos_] == '+') {
      ++pos_;
      s = s | term();
      skip();
    }
    if (pos_ != t_.size()) fail("unexpected '" + std::string(1, t_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(pos_ + 1, msg + " in index set");
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(std::string_view word) {
    skip();
    if (t_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view word) {
    if (!eat(word)) fail("expected '" + std::string(word) + "'");
  }
  std::uint64_t number() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(t_[pos_] - '0');
      if (v > (std::uint64_t{1} << 20)) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }
  std::vector<std::uint64_t> list(char close) {
    std::vector<std::uint64_t> out;
    skip();
    if (pos_ < t_.size() && t_[pos_] == close) return out;
    out.push_back(number());
    while (eat(",")) out.push_back(number());
    return out;
  }
  IndexSet term() {
    if (eat("{")) {
      IndexSet s = IndexSet::of(list('}'));
      expect("}");
      return s;
    }
    if (eat("empty")) return IndexSet::empty();
    if (eat("from(")) {
      const std::uint64_t n = number();
      expect(")");
      return IndexSet::from(n);
    }
    if (eat("mod(")) {
      const std::uint64_t k = number();
      expect(":");
      IndexSet s = IndexSet::mod(k, list(')'));
      if (eat(";")) s = s & IndexSet::from(number());
      expect(")");
      return s;
    }
    fail("expected an index set");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

IndexSet IndexSet::parse(std::string_view text) { return SetParser(text).parse(); }

}  // namespace ecl
