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

#include "eclosure/realization.hpp"

#include <bit>
#include <algorithm>
#include <random>

#include "eclosure/error.hpp"

namespace ecl {

namespace {

using boost::multiprecision::cpp_int;

constexpr int kMaxSteps = 8192;

Rational inv_pow2(long long k) { return Rational(cpp_int(1), cpp_int(1) << k); }

bool is_pow2(const cpp_int& n) { return n > 0 && (n & (n - 1)) == 0; }

bool is_dyadic(const Rational& q) {
  return is_pow2(boost::multiprecision::denominator(q));
}

// Strictly inside (0, 1) and dyadic.
bool is_unit_dyadic(const Rational& q) { return q > 0 && q < 1 && is_dyadic(q); }

// Reduced denominator 3 * 2^m.
bool is_unit_third(const Rational& q) {
  if (!(q > 0 && q < 1)) return false;
  const cpp_int d = boost::multiprecision::denominator(q);
  return d % 3 == 0 && is_pow2(d / 3);
}

// e-th dyadic of (0, 1) in the order 1/2, 1/4, 3/4, 1/8, ...
Rational dyadic_elem(std::uint64_t e) {
  long long m = 1;
  std::uint64_t start = 0;
  while (e >= start + (std::uint64_t{1} << (m - 1))) {
    start += std::uint64_t{1} << (m - 1);
    ++m;
  }
  const std::uint64_t j = e - start;
  return Rational(cpp_int(2 * j + 1), cpp_int(1) << m);
}

// m with t = m(m + 1) / 2: the m-th threshold of a gap lands that many
// rounds after its first
std::optional<std::uint64_t> triangular_root(std::uint64_t t) {
  std::uint64_t m = 0;
  while (m * (m + 1) / 2 < t) ++m;
  if (m * (m + 1) / 2 == t) return m;
  return std::nullopt;
}

Rational floor_half(const Rational& x) {
  // floor(x / 2) for x >= 0
  const Rational h = x / 2;
  return Rational(boost::multiprecision::numerator(h) / boost::multiprecision::denominator(h));
}

// Unit coordinate of a point within its block.
Rational unit_point(const Block& blk, const PointRef& p) {
  switch (blk.kind()) {
    case BlockKind::kFin:
      if (blk.size() == 1) return Rational(1, 2);
      return Rational(p.offset, static_cast<long long>(blk.size() - 1));
    case BlockKind::kOmega:
      return 1 - inv_pow2(p.offset);
    case BlockKind::kOmegaStar:
      return inv_pow2(p.offset);
    case BlockKind::kZeta:
      return p.offset >= 0 ? 1 - inv_pow2(p.offset + 1) : inv_pow2(1 - p.offset);
    case BlockKind::kEta:
      return Rational(cpp_int(p.dyadic.num), cpp_int(1) << p.dyadic.exp);
  }
  return 0;
}

// Points x_k = 1 - 2^-k (k >= k0) with offset = k + shift.
struct TowardOne {
  long long k0;
  long long shift;
};
// Points x_k = 2^-k (k >= k0) with offset = sign * k + shift.
struct TowardZero {
  long long k0;
  long long sign;
  long long shift;
};

}  // namespace

std::string to_string(const Loc& l) {
  if (l.top) return "top";
  return l.x.str() + (l.eps == 0 ? "" : (l.eps > 0 ? "+" : "") + std::to_string(l.eps));
}

Realization::Realization(FamilyDesc f, std::uint64_t seed, std::size_t capacity)
    : layout_(std::move(f)), seed_(seed) {
  if (capacity < 8) throw InvalidArgument("realization capacity must be at least 8");
  generate(capacity);
}

Loc Realization::point_loc(const PointRef& p) const {
  layout_.check_point(p);
  if (p.offset > kMaxOffset || p.offset < -kMaxOffset) {
    throw InvalidArgument("offset of " + p.to_string() + " is too large to realize");
  }
  return Loc::at(base(p.block) + unit_point(layout_.block(p.block), p));
}

Realization::Neighbors Realization::block_neighbors(std::size_t b, const Rational& u) const {
  const Block& blk = layout_.block(b);
  Neighbors nb;
  auto offer_below = [&](const Rational& v, PointRef p) {
    if (v <= u && (!nb.below || v > nb.below->first)) nb.below = {v, p};
  };
  auto offer_above = [&](const Rational& v, PointRef p) {
    if (v >= u && (!nb.above || v < nb.above->first)) nb.above = {v, p};
  };
  auto scan_one = [&](TowardOne s) {
    // Increasing to 1.
    if (u >= 1) return;
    long long k = s.k0;
    Rational v = 1 - inv_pow2(k);
    if (v > u) {
      offer_above(v, PointRef::at(b, k + s.shift));
      return;
    }
    for (int step = 0; step < kMaxSteps; ++step) {
      const Rational next = 1 - inv_pow2(k + 1);
      if (next > u) break;
      ++k;
      v = next;
    }
    offer_below(v, PointRef::at(b, k + s.shift));
    if (v == u) {
      offer_above(v, PointRef::at(b, k + s.shift));
    } else {
      offer_above(1 - inv_pow2(k + 1), PointRef::at(b, k + 1 + s.shift));
    }
  };
  auto scan_zero = [&](TowardZero s) {
    // Decreasing to 0.
    if (u <= 0) return;
    long long k = s.k0;
    Rational v = inv_pow2(k);
    if (v < u) {
      offer_below(v, PointRef::at(b, s.sign * k + s.shift));
      return;
    }
    for (int step = 0; step < kMaxSteps; ++step) {
      const Rational next = inv_pow2(k + 1);
      if (next < u) break;
      ++k;
      v = next;
    }
    offer_above(v, PointRef::at(b, s.sign * k + s.shift));
    if (v == u) {
      offer_below(v, PointRef::at(b, s.sign * k + s.shift));
    } else {
      offer_below(inv_pow2(k + 1), PointRef::at(b, s.sign * (k + 1) + s.shift));
    }
  };
  switch (blk.kind()) {
    case BlockKind::kFin:
      for (std::uint64_t k = 0; k < blk.size(); ++k) {
        const PointRef p = PointRef::at(b, static_cast<std::int64_t>(k));
        const Rational v = unit_point(blk, p);
        offer_below(v, p);
        offer_above(v, p);
      }
      break;
    case BlockKind::kOmega:
      scan_one({0, 0});
      break;
    case BlockKind::kOmegaStar:
      scan_zero({0, 1, 0});
      break;
    case BlockKind::kZeta:
      scan_one({1, -1});
      scan_zero({2, -1, 1});
      break;
    case BlockKind::kEta:
      if (is_unit_dyadic(u)) {
        const cpp_int den = boost::multiprecision::denominator(u);
        unsigned exp = 0;
        while ((cpp_int(1) << exp) < den) ++exp;
        const auto num = static_cast<std::uint64_t>(boost::multiprecision::numerator(u));
        const PointRef p = PointRef::eta_point(b, Dyadic{num, exp});
        nb.below = {u, p};
        nb.above = {u, p};
      }
      break;
  }
  return nb;
}

std::pair<std::optional<PointRef>, std::optional<PointRef>> Realization::neighbors(
    const Loc& l) const {
  std::optional<PointRef> below, above;
  auto least_of = [&](std::size_t b) -> std::optional<PointRef> {
    if (!layout_.has_block(b) || layout_.block(b).open_left()) return std::nullopt;
    return PointRef::at(b, 0);
  };
  auto greatest_of = [&](std::size_t b) -> std::optional<PointRef> {
    const Block& blk = layout_.block(b);
    if (blk.open_right()) return std::nullopt;
    return PointRef::at(b, blk.is_fin() ? static_cast<std::int64_t>(blk.size() - 1) : 0);
  };
  if (l.top) {
    if (!layout_.infinite()) below = greatest_of(*layout_.block_count() - 1);
    return {below, above};
  }
  if (l.x < 0) return {below, least_of(0)};
  const auto b = static_cast<std::size_t>(floor_half(l.x));
  if (!layout_.has_block(b)) return {greatest_of(*layout_.block_count() - 1), above};
  const Rational u = l.x - base(b);
  if (u <= 1) {
    const Neighbors nb = block_neighbors(b, u);
    if (nb.below) below = nb.below->second;
    if (nb.above) above = nb.above->second;
    if (!nb.below && b > 0) below = greatest_of(b - 1);
    if (!nb.above && layout_.has_junction_after(b)) above = least_of(b + 1);
    return {below, above};
  }
  below = greatest_of(b);
  above = least_of(b + 1);
  return {below, above};
}

bool Realization::same_set(const Loc& a, const Loc& b) const {
  if (a == b) return true;
  return a < b ? !thresholds_between(a, b) : !thresholds_between(b, a);
}

std::optional<PointRef> Realization::equal_point(const Loc& l) const {
  const auto [below, above] = neighbors(l);
  for (const auto& p : {below, above}) {
    if (p && same_set(point_loc(*p), l)) return p;
  }
  return std::nullopt;
}

bool Realization::exact_threshold(const Rational& x, int eps_lo, int eps_hi) const {
  if (x < 0) return false;
  const bool eps0 = eps_lo <= 0 && 0 < eps_hi;
  const auto b = static_cast<std::size_t>(floor_half(x));
  if (!layout_.has_block(b)) return false;
  const Rational u = x - base(b);
  auto grid_gap = [&](const Rational& l, const Rational& r) {
    return eps0 && l < x && x < r && is_unit_dyadic((x - l) / (r - l));
  };
  if (u > 0 && u < 1) {
    const Block& blk = layout_.block(b);
    if (blk.is_tight_eta()) {
      if (eps0 && is_unit_third(u)) return true;
    } else if (blk.is_gapped_eta()) {
      if (is_unit_dyadic(u) && ((eps_lo <= -2 && -2 < eps_hi) || (eps_lo <= 2 && 2 < eps_hi))) {
        return true;
      }
    } else {
      const Neighbors nb = block_neighbors(b, u);
      if (nb.below && nb.above && grid_gap(nb.below->first + base(b), nb.above->first + base(b))) {
        return true;
      }
    }
  }
  // Point-point gaps next to block b.
  for (std::size_t j : {b == 0 ? b : b - 1, b}) {
    if (!layout_.has_junction_after(j) || layout_.shape_after(j) != JunctionShape::kPointPoint) {
      continue;
    }
    const Block& left = layout_.block(j);
    const PointRef last =
        PointRef::at(j, left.is_fin() ? static_cast<std::int64_t>(left.size() - 1) : 0);
    const Rational l = point_loc(last).x;
    const Rational r = point_loc(PointRef::at(j + 1, 0)).x;
    if (grid_gap(l, r)) return true;
  }
  return false;
}

bool Realization::isolated_threshold_in(const Loc& lo, const Loc& hi) const {
  auto in = [&](const Loc& t) { return lo <= t && t < hi; };
  if (in(Loc::at(-1))) return true;
  const Rational x0 = lo.x < 0 ? Rational(0) : lo.x;
  auto b0 = static_cast<std::size_t>(floor_half(x0));
  if (b0 > 0) --b0;
  const std::size_t b1 =
      hi.top ? static_cast<std::size_t>(-2)
             : static_cast<std::size_t>(floor_half(hi.x < 0 ? Rational(0) : hi.x)) + 1;
  for (std::size_t j = b0; j <= b1 && layout_.has_junction_after(j); ++j) {
    const Annotation a = layout_.junction_after(j).annotation;
    switch (layout_.shape_after(j)) {
      case JunctionShape::kOpenOpen:
        if (a == Annotation::kSplit && in(Loc::at(base(j) + Rational(3, 2)))) return true;
        break;
      case JunctionShape::kOpenPoint:
        if (a == Annotation::kSeparate &&
            in(Loc::at(point_loc(PointRef::at(j + 1, 0)).x, -2))) {
          return true;
        }
        break;
      case JunctionShape::kPointOpen: {
        if (a != Annotation::kSeparate) break;
        const Block& left = layout_.block(j);
        const PointRef last =
            PointRef::at(j, left.is_fin() ? static_cast<std::int64_t>(left.size() - 1) : 0);
        if (in(Loc::at(point_loc(last).x, 2))) return true;
        break;
      }
      case JunctionShape::kPointPoint:
        break;
    }
  }
  return false;
}

bool Realization::dense_between(const Loc& lo, const Loc& hi) const {
  if (!(lo < hi)) return false;
  if (hi.top) {
    if (layout_.infinite()) return true;
    const auto n = static_cast<long long>(*layout_.block_count());
    return dense_between(lo, Loc::at(Rational(2 * n + 1)));
  }
  if (lo.x >= hi.x) return false;
  const Rational x0 = lo.x < 0 ? Rational(0) : lo.x;
  auto b0 = static_cast<std::size_t>(floor_half(x0));
  if (b0 > 0) --b0;
  const auto b1 = static_cast<std::size_t>(floor_half(hi.x < 0 ? Rational(0) : hi.x)) + 1;
  auto overlaps = [&](const Rational& u, const Rational& v) {
    return std::max(lo.x, u) < std::min(hi.x, v);
  };
  for (std::size_t b = b0; b <= b1 && layout_.has_block(b); ++b) {
    const Block& blk = layout_.block(b);
    if (!(blk.is_fin() && blk.size() == 1) && overlaps(base(b), base(b) + 1)) return true;
    if (layout_.has_junction_after(b) && layout_.shape_after(b) == JunctionShape::kPointPoint) {
      const PointRef last =
          PointRef::at(b, blk.is_fin() ? static_cast<std::int64_t>(blk.size() - 1) : 0);
      if (overlaps(point_loc(last).x, point_loc(PointRef::at(b + 1, 0)).x)) return true;
    }
  }
  return false;
}

bool Realization::thresholds_between(const Loc& lo, const Loc& hi) const {
  if (!(lo < hi)) return false;
  if (hi.top) {
    if (layout_.infinite()) return true;
    // Everything in a finite layout lies below 2 * blocks.
    const auto n = static_cast<long long>(*layout_.block_count());
    return thresholds_between(lo, Loc::at(Rational(2 * n + 1)));
  }
  if (isolated_threshold_in(lo, hi)) return true;
  if (lo.x == hi.x) return exact_threshold(lo.x, lo.eps, hi.eps);
  if (dense_between(lo, hi)) return true;
  return exact_threshold(lo.x, lo.eps, 1000) || exact_threshold(hi.x, -1000, hi.eps);
}

Subfamily Realization::whole() const {
  Subfamily s;
  s.segments.push_back({Loc::at(-2), Loc::top_loc()});
  return s;
}

Subfamily Realization::without(const PointRef& p) const {
  Subfamily s = whole();
  s.excluded.push_back(p);
  return s;
}

bool Realization::contains(const Subfamily& s, const PointRef& p) const {
  for (const PointRef& q : s.points) {
    if (q == p) return true;
  }
  for (const PointRef& q : s.excluded) {
    if (q == p) return false;
  }
  const Loc l = point_loc(p);
  for (const auto& [lo, hi] : s.segments) {
    if (lo < l && l <= hi) return true;
  }
  return false;
}

Cardinal Realization::count_block(std::size_t b, const Loc& lo, const Loc& hi) const {
  const Block& blk = layout_.block(b);
  const Rational a = base(b);
  const Rational a1 = a + 1;
  if (!hi.top && hi.x < a) return Cardinal::finite(0);
  if (!lo.top && lo.x > a1) return Cardinal::finite(0);
  if (lo.top) return Cardinal::finite(0);
  auto in = [&](const Rational& x) {
    const Loc l = Loc::at(x);
    return lo < l && l <= hi;
  };
  const Rational hx = hi.top ? a1 + 1 : hi.x;
  std::uint64_t n = 0;
  // Sequences increasing to a + 1 and decreasing to a.
  auto toward_one = [&](long long k0) -> bool {
    if (lo.x >= a1) return false;
    if (hx >= a1) return true;
    for (long long k = k0; k < k0 + kMaxSteps; ++k) {
      const Rational x = a1 - inv_pow2(k);
      if (Loc::at(x) > hi) break;
      if (in(x)) ++n;
    }
    return false;
  };
  auto toward_zero = [&](long long k0) -> bool {
    if (hx <= a) return false;
    if (lo.x <= a) return true;
    for (long long k = k0; k < k0 + kMaxSteps; ++k) {
      const Rational x = a + inv_pow2(k);
      if (!(Loc::at(x) > lo)) break;
      if (in(x)) ++n;
    }
    return false;
  };
  switch (blk.kind()) {
    case BlockKind::kFin:
      for (std::uint64_t k = 0; k < blk.size(); ++k) {
        if (in(a + unit_point(blk, PointRef::at(b, static_cast<std::int64_t>(k))))) ++n;
      }
      break;
    case BlockKind::kOmega:
      if (toward_one(0)) return Cardinal::aleph0();
      break;
    case BlockKind::kOmegaStar:
      if (toward_zero(0)) return Cardinal::aleph0();
      break;
    case BlockKind::kZeta:
      if (toward_one(1) || toward_zero(2)) return Cardinal::aleph0();
      break;
    case BlockKind::kEta:
      if (std::max(lo.x, a) < std::min(hx, a1)) return Cardinal::aleph0();
      if (!hi.top && lo.x == hi.x && is_unit_dyadic(lo.x - a) && lo.eps < 0 && 0 <= hi.eps) {
        n = 1;
      }
      break;
  }
  return Cardinal::finite(n);
}

Cardinal Realization::count(const Subfamily& s, const Loc& lo, const Loc& hi) const {
  Cardinal total = Cardinal::finite(0);
  std::int64_t removed = 0;
  for (const auto& [slo, shi] : s.segments) {
    const Loc l = std::max(lo, slo);
    const Loc h = std::min(hi, shi);
    if (!(l < h)) continue;
    if (h.top && layout_.infinite()) {
      total += Cardinal::aleph0();
      continue;
    }
    const Rational x0 = l.x < 0 ? Rational(0) : l.x;
    auto b = static_cast<std::size_t>(floor_half(x0));
    if (b > 0) --b;
    for (; layout_.has_block(b); ++b) {
      if (!h.top && base(b) > h.x) break;
      total += count_block(b, l, h);
    }
  }
  auto in = [&](const Loc& x) { return lo < x && x <= hi; };
  for (const PointRef& p : s.excluded) {
    const Loc l = point_loc(p);
    if (!in(l)) continue;
    for (const auto& [slo, shi] : s.segments) {
      if (slo < l && l <= shi) {
        ++removed;
        break;
      }
    }
  }
  std::uint64_t added = 0;
  for (const PointRef& p : s.points) {
    if (in(point_loc(p))) ++added;
  }
  for (const Loc& x : s.extra) {
    if (in(x)) ++added;
  }
  if (total.is_finite()) {
    const auto kept = static_cast<std::int64_t>(total.count()) - removed;
    total = Cardinal::finite(static_cast<std::uint64_t>(std::max<std::int64_t>(kept, 0)));
  }
  return total + Cardinal::finite(added);
}

Loc Realization::block_union(std::size_t b) const {
  const Block& blk = layout_.block(b);
  if (blk.open_right()) return Loc::at(base(b) + 1, -3);
  return point_loc(PointRef::at(b, blk.is_fin() ? static_cast<std::int64_t>(blk.size() - 1) : 0));
}

Loc Realization::block_intersection(std::size_t b) const {
  const Block& blk = layout_.block(b);
  if (blk.open_left()) return Loc::at(base(b), 3);
  return point_loc(PointRef::at(b, 0));
}

void Realization::generate(std::size_t capacity) {
  std::mt19937_64 rng(seed_);
  const bool inf = layout_.infinite();
  auto gap_of = [&](std::size_t b, std::uint64_t g) -> std::optional<std::pair<Rational, Rational>> {
    const Block& blk = layout_.block(b);
    auto u = [&](std::int64_t off) { return unit_point(blk, PointRef::at(b, off)); };
    const auto gi = static_cast<std::int64_t>(g);
    switch (blk.kind()) {
      case BlockKind::kFin:
        if (g + 1 >= blk.size()) return std::nullopt;
        return std::pair{u(gi), u(gi + 1)};
      case BlockKind::kOmega:
        return std::pair{u(gi), u(gi + 1)};
      case BlockKind::kOmegaStar:
        return std::pair{u(gi + 1), u(gi)};
      case BlockKind::kZeta: {
        const std::int64_t z = g % 2 == 0 ? gi / 2 : -(gi + 1) / 2;
        return std::pair{u(z), u(z + 1)};
      }
      case BlockKind::kEta:
        return std::nullopt;
    }
    return std::nullopt;
  };

  for (std::uint64_t r = 0; thresholds_.size() < capacity; ++r) {
    std::vector<Threshold> batch;
    if (r == 0) batch.push_back({Loc::at(-1), Threshold::Kind::kBase, 0});
    // copy k of a repeated group starts at round 2k
    const std::size_t nblocks = inf ? static_cast<std::size_t>(r / 2) + 1 : *layout_.block_count();
    for (std::size_t b = 0; b < nblocks; ++b) {
      const std::uint64_t rho = inf ? r - 2 * b : r;
      const Block& blk = layout_.block(b);
      const Rational a = base(b);
      if (blk.is_tight_eta()) {
        const cpp_int den = cpp_int(3) << rho;
        for (cpp_int c = 1; c < den; ++c) {
          if (rho > 0 && (c % 2 == 0)) continue;
          if (c % 3 == 0) continue;
          batch.push_back({Loc::at(a + Rational(c, den)), Threshold::Kind::kEtaGrid, b});
          if (batch.size() > capacity) break;
        }
      } else if (blk.is_gapped_eta()) {
        // one dyadic per round: 1/2, 1/4, 3/4, 1/8, ...
        const std::uint64_t k = rho + 1;
        const unsigned level = static_cast<unsigned>(std::bit_width(k));
        const std::uint64_t num = 2 * (k - (std::uint64_t{1} << (level - 1))) + 1;
        const Rational x = a + Rational(cpp_int(num), cpp_int(1) << level);
        batch.push_back({Loc::at(x, -2), Threshold::Kind::kEtaWitness, b});
        batch.push_back({Loc::at(x, 2), Threshold::Kind::kEtaWitness, b});
      } else {
        // finite blocks refine every round, infinite ones more slowly
        const bool fin = blk.is_fin();
        for (std::uint64_t g = 0; g <= rho; ++g) {
          if (fin && g + 1 >= blk.size()) break;
          const auto m = fin ? std::optional<std::uint64_t>(rho - g) : triangular_root(rho - g);
          if (!m) continue;
          const auto gap = gap_of(b, g);
          if (!gap) continue;
          const Rational x = a + gap->first + (gap->second - gap->first) * dyadic_elem(*m);
          batch.push_back({Loc::at(x), Threshold::Kind::kGap, b});
        }
      }
      if (!layout_.has_junction_after(b)) continue;
      const Annotation ann = layout_.junction_after(b).annotation;
      switch (layout_.shape_after(b)) {
        case JunctionShape::kPointPoint: {
          const std::optional<std::uint64_t> m = rho;
          const PointRef last =
              PointRef::at(b, blk.is_fin() ? static_cast<std::int64_t>(blk.size() - 1) : 0);
          const Rational l = point_loc(last).x;
          const Rational rr = point_loc(PointRef::at(b + 1, 0)).x;
          batch.push_back({Loc::at(l + (rr - l) * dyadic_elem(*m)), Threshold::Kind::kGap, b});
          break;
        }
        case JunctionShape::kOpenOpen:
          if (rho == 0 && ann == Annotation::kSplit) {
            batch.push_back({Loc::at(a + Rational(3, 2)), Threshold::Kind::kJunctionWitness, b});
          }
          break;
        case JunctionShape::kOpenPoint:
          if (rho == 0 && ann == Annotation::kSeparate) {
            batch.push_back({Loc::at(point_loc(PointRef::at(b + 1, 0)).x, -2),
                             Threshold::Kind::kJunctionWitness, b});
          }
          break;
        case JunctionShape::kPointOpen:
          if (rho == 0 && ann == Annotation::kSeparate) {
            const PointRef last =
                PointRef::at(b, blk.is_fin() ? static_cast<std::int64_t>(blk.size() - 1) : 0);
            batch.push_back(
                {Loc::at(point_loc(last).x, 2), Threshold::Kind::kJunctionWitness, b});
          }
          break;
      }
    }
    if (batch.empty()) batch.push_back({Loc::at(-1), Threshold::Kind::kBase, 0});
    std::shuffle(batch.begin(), batch.end(), rng);
    for (Threshold& t : batch) {
      if (thresholds_.size() >= capacity) break;
      thresholds_.push_back(std::move(t));
    }
  }
}

}  // namespace ecl
