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

#include "eclosure/family.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "eclosure/error.hpp"

namespace ecl {

Block Block::fin(std::uint64_t n) {
  if (n == 0) throw ValidationError("fin requires n >= 1");
  Block b(BlockKind::kFin);
  b.size_ = n;
  return b;
}

Block Block::eta(EtaMode mode) {
  Block b(BlockKind::kEta);
  b.mode_ = mode;
  return b;
}

bool Block::open_left() const noexcept {
  return kind_ == BlockKind::kOmegaStar || kind_ == BlockKind::kZeta ||
         kind_ == BlockKind::kEta;
}

bool Block::open_right() const noexcept {
  return kind_ == BlockKind::kOmega || kind_ == BlockKind::kZeta ||
         kind_ == BlockKind::kEta;
}

std::string Block::to_string() const {
  switch (kind_) {
    case BlockKind::kFin:
      return "fin(" + std::to_string(size_) + ")";
    case BlockKind::kOmega:
      return "omega";
    case BlockKind::kOmegaStar:
      return "omega*";
    case BlockKind::kZeta:
      return "zeta";
    case BlockKind::kEta:
      return mode_ == EtaMode::kTight ? "eta(tight)" : "eta(gapped)";
  }
  return "?";
}

JunctionShape junction_shape(const Block& left, const Block& right) {
  const bool l = left.open_right();
  const bool r = right.open_left();
  if (l && r) return JunctionShape::kOpenOpen;
  if (l) return JunctionShape::kOpenPoint;
  if (r) return JunctionShape::kPointOpen;
  return JunctionShape::kPointPoint;
}

const char* to_string(Annotation a) {
  switch (a) {
    case Annotation::kNone:
      return "";
    case Annotation::kMerged:
      return "merged";
    case Annotation::kSplit:
      return "split";
    case Annotation::kAbsorbed:
      return "absorbed";
    case Annotation::kSeparate:
      return "separate";
  }
  return "?";
}

Annotation default_annotation(JunctionShape shape) {
  switch (shape) {
    case JunctionShape::kPointPoint:
      return Annotation::kNone;
    case JunctionShape::kOpenOpen:
      return Annotation::kSplit;
    case JunctionShape::kOpenPoint:
    case JunctionShape::kPointOpen:
      return Annotation::kSeparate;
  }
  return Annotation::kNone;
}

bool annotation_applies(JunctionShape shape, Annotation a) {
  switch (shape) {
    case JunctionShape::kPointPoint:
      return a == Annotation::kNone;
    case JunctionShape::kOpenOpen:
      return a == Annotation::kMerged || a == Annotation::kSplit;
    case JunctionShape::kOpenPoint:
    case JunctionShape::kPointOpen:
      return a == Annotation::kAbsorbed || a == Annotation::kSeparate;
  }
  return false;
}

namespace {

// "merged"/"absorbed" both say "the limits coincide", "split"/"separate" both
// say "they differ"; the written word is mapped onto the spelling the shape
// uses.  Returns kNone when the word cannot apply to the shape at all.
Annotation resolve(JunctionShape shape, std::optional<Annotation> written) {
  if (!written) return default_annotation(shape);
  if (shape == JunctionShape::kPointPoint) return Annotation::kNone;
  const bool coincide =
      *written == Annotation::kMerged || *written == Annotation::kAbsorbed;
  if (shape == JunctionShape::kOpenOpen) {
    return coincide ? Annotation::kMerged : Annotation::kSplit;
  }
  return coincide ? Annotation::kAbsorbed : Annotation::kSeparate;
}

void check_junction(const Block& left, const Block& right, const Junction& j,
                    const std::string& where) {
  const JunctionShape shape = junction_shape(left, right);
  if (!annotation_applies(shape, j.annotation)) {
    std::string ann = to_string(j.annotation);
    throw ValidationError("annotation '" + (ann.empty() ? "none" : ann) +
                          "' does not apply to the junction " + where + " (" +
                          left.to_string() + " | " + right.to_string() + ")");
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilyDesc parse() {
    FamilyDesc f;
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      parse_group(f, /*allow_trailing_link=*/true);
      skip_ws();
      expect(")");
      skip_ws();
      expect("^omega");
      f.repeated = true;
    } else {
      parse_group(f, false);
    }
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  struct RawJunction {
    std::optional<Annotation> written;
    std::size_t column;
  };

  void parse_group(FamilyDesc& f, bool allow_trailing_link) {
    std::vector<RawJunction> raw;
    f.blocks.push_back(parse_block());
    for (;;) {
      skip_ws();
      if (peek() != '+') break;
      const std::size_t column = pos_ + 1;
      ++pos_;
      std::optional<Annotation> written = parse_annotation();
      skip_ws();
      if (allow_trailing_link && peek() == ')') {
        link_ = RawJunction{written, column};
        break;
      }
      raw.push_back({written, column});
      f.blocks.push_back(parse_block());
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
      f.junctions.push_back(
          make_junction(f.blocks[i], f.blocks[i + 1], raw[i]));
    }
    if (allow_trailing_link) {
      RawJunction link = link_.value_or(RawJunction{std::nullopt, pos_ + 1});
      f.link = make_junction(f.blocks.back(), f.blocks.front(), link);
    }
  }

  Junction make_junction(const Block& left, const Block& right,
                         const RawJunction& raw) {
    const JunctionShape shape = junction_shape(left, right);
    if (raw.written && shape == JunctionShape::kPointPoint) {
      throw ValidationError(
          "annotation '" + std::string(to_string(*raw.written)) +
          "' at column " + std::to_string(raw.column) +
          " does not apply between " + left.to_string() + " and " +
          right.to_string() + " (no limit lies between two points)");
    }
    return Junction{resolve(shape, raw.written)};
  }

  std::optional<Annotation> parse_annotation() {
    static const std::pair<const char*, Annotation> kWords[] = {
        {"merged", Annotation::kMerged},
        {"split", Annotation::kSplit},
        {"absorbed", Annotation::kAbsorbed},
        {"separate", Annotation::kSeparate},
    };
    for (const auto& [word, a] : kWords) {
      if (accept(word)) return a;
    }
    return std::nullopt;
  }

  Block parse_block() {
    skip_ws();
    if (accept("fin")) {
      skip_ws();
      expect("(");
      skip_ws();
      const std::uint64_t n = parse_uint();
      skip_ws();
      expect(")");
      return Block::fin(n);
    }
    if (accept("omega*")) return Block::omega_star();
    if (accept("omega")) return Block::omega();
    if (accept("zeta")) return Block::zeta();
    if (accept("eta")) {
      skip_ws();
      expect("(");
      skip_ws();
      Block b = Block::omega();
      if (accept("tight")) {
        b = Block::eta(EtaMode::kTight);
      } else if (accept("gapped")) {
        b = Block::eta(EtaMode::kGapped);
      } else {
        fail("expected 'tight' or 'gapped'");
      }
      skip_ws();
      expect(")");
      return b;
    }
    fail("expected a block (fin(n), omega, omega*, zeta, eta(tight), eta(gapped))");
  }

  std::uint64_t parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const unsigned d = static_cast<unsigned>(peek() - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
        fail("integer out of range");
      }
      n = n * 10 + d;
      ++pos_;
    }
    return n;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(pos_ + 1, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<RawJunction> link_;
};

}  // namespace

void validate(const FamilyDesc& f) {
  if (f.blocks.empty()) throw ValidationError("a family needs at least one block");
  if (f.junctions.size() + 1 != f.blocks.size()) {
    throw ValidationError("expected " + std::to_string(f.blocks.size() - 1) +
                          " junctions, got " + std::to_string(f.junctions.size()));
  }
  for (const Block& b : f.blocks) {
    if (b.is_fin() && b.size() == 0) throw ValidationError("fin requires n >= 1");
  }
  for (std::size_t i = 0; i < f.junctions.size(); ++i) {
    check_junction(f.blocks[i], f.blocks[i + 1], f.junctions[i],
                   "#" + std::to_string(i));
  }
  if (f.repeated) check_junction(f.blocks.back(), f.blocks.front(), f.link, "link");
}

FamilyDesc make_family(std::vector<Block> blocks) {
  FamilyDesc f;
  f.blocks = std::move(blocks);
  for (std::size_t i = 0; i + 1 < f.blocks.size(); ++i) {
    f.junctions.push_back(
        {default_annotation(junction_shape(f.blocks[i], f.blocks[i + 1]))});
  }
  validate(f);
  return f;
}

FamilyDesc parse_family(std::string_view text) {
  FamilyDesc f = Parser(text).parse();
  validate(f);
  return f;
}

namespace {

void print_junction(std::ostringstream& os, const Junction& j) {
  os << " +" << to_string(j.annotation) << ' ';
}

}  // namespace

std::string print_family(const FamilyDesc& f) {
  std::ostringstream os;
  if (f.repeated) os << '(';
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (i > 0) print_junction(os, f.junctions[i - 1]);
    os << f.blocks[i].to_string();
  }
  if (f.repeated) {
    if (f.link.annotation != Annotation::kNone) {
      os << " +" << to_string(f.link.annotation);
    }
    os << ")^omega";
  }
  return os.str();
}

FamilyDesc canonicalize(const FamilyDesc& f) {
  FamilyDesc out;
  out.label = f.label;
  out.repeated = f.repeated;
  out.link = f.link;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const Block& b = f.blocks[i];
    if (!out.blocks.empty() && out.blocks.back().is_fin() && b.is_fin()) {
      out.blocks.back() = Block::fin(out.blocks.back().size() + b.size());
      continue;
    }
    if (!out.blocks.empty()) out.junctions.push_back(f.junctions[i - 1]);
    out.blocks.push_back(b);
  }
  return out;
}

Cardinal element_count(const FamilyDesc& f) {
  std::uint64_t total = 0;
  for (const Block& b : f.blocks) {
    if (!b.is_fin()) return Cardinal::aleph0();
    total += b.size();
  }
  if (f.repeated) return Cardinal::aleph0();
  return Cardinal::finite(total);
}

bool contains_tight_eta(const FamilyDesc& f) {
  for (const Block& b : f.blocks) {
    if (b.is_tight_eta()) return true;
  }
  return false;
}

bool Dyadic::operator<(const Dyadic& other) const {
  // Both exponents are at most 62, so shifting to the common exponent is safe.
  if (exp <= other.exp) return (num << (other.exp - exp)) < other.num;
  return num < (other.num << (exp - other.exp));
}

std::string Dyadic::to_string() const {
  return std::to_string(num) + "/2^" + std::to_string(exp);
}

Dyadic make_dyadic(std::uint64_t num, unsigned exp) {
  if (num == 0) throw InvalidArgument("dyadic tag must lie strictly inside (0, 1)");
  while (exp > 0 && num % 2 == 0) {
    num /= 2;
    --exp;
  }
  if (exp == 0 || exp > 62 || num >= (std::uint64_t{1} << exp)) {
    throw InvalidArgument("dyadic tag must lie strictly inside (0, 1) with exponent <= 62");
  }
  return Dyadic{num, exp};
}

std::string PointRef::to_string() const {
  return "(" + std::to_string(block) + "," +
         (eta ? dyadic.to_string() : std::to_string(offset)) + ")";
}

}  // namespace ecl
