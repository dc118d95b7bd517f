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

// Order-type descriptions of linearly ordered families of index sets.
//
// A family F is written as a finite concatenation of blocks, each one of
// fin(n), omega, omega*, zeta or eta(mode), joined by junctions that record
// how the limits on either side of the join relate to each other.  A family
// may also be a block group repeated omega times, written "(group)^omega".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eclosure/cardinal.hpp"

namespace ecl {

enum class BlockKind { kFin, kOmega, kOmegaStar, kZeta, kEta };

enum class EtaMode {
  /// Every point equals the limits of its own cut.
  kTight,
  /// Every point is strictly separated from the limits of its cut.
  kGapped,
};

class Block {
 public:
  static Block fin(std::uint64_t n);
  static Block omega() { return Block(BlockKind::kOmega); }
  static Block omega_star() { return Block(BlockKind::kOmegaStar); }
  static Block zeta() { return Block(BlockKind::kZeta); }
  static Block eta(EtaMode mode);

  BlockKind kind() const noexcept { return kind_; }
  /// Number of points; meaningful for fin blocks only.
  std::uint64_t size() const noexcept { return size_; }
  EtaMode mode() const noexcept { return mode_; }

  bool is_fin() const noexcept { return kind_ == BlockKind::kFin; }
  bool is_eta() const noexcept { return kind_ == BlockKind::kEta; }
  bool is_tight_eta() const noexcept { return is_eta() && mode_ == EtaMode::kTight; }
  bool is_gapped_eta() const noexcept { return is_eta() && mode_ == EtaMode::kGapped; }

  /// True when the block has no least element (a lower limit sits there).
  bool open_left() const noexcept;
  /// True when the block has no greatest element (an upper limit sits there).
  bool open_right() const noexcept;

  std::string to_string() const;

  bool operator==(const Block&) const = default;

 private:
  explicit Block(BlockKind kind) : kind_(kind) {}

  BlockKind kind_ = BlockKind::kFin;
  std::uint64_t size_ = 0;
  EtaMode mode_ = EtaMode::kTight;
};

/// Geometry of a join, determined by the facing sides of the two blocks.
enum class JunctionShape {
  kPointPoint,  // last point meets first point; no limit in between
  kOpenOpen,    // upper limit of the left part meets lower limit of the right
  kOpenPoint,   // upper limit of the left part meets the first point
  kPointOpen,   // last point meets the lower limit of the right part
};

JunctionShape junction_shape(const Block& left, const Block& right);

enum class Annotation {
  kNone,      // point-point joins only
  kMerged,    // open-open: the two limits coincide
  kSplit,     // open-open: lower limit strictly below upper limit
  kAbsorbed,  // open-point: the point equals the adjacent limit
  kSeparate,  // open-point: the point differs from the adjacent limit
};

const char* to_string(Annotation a);

struct Junction {
  Annotation annotation = Annotation::kNone;
  bool operator==(const Junction&) const = default;
};

/// Annotation used when the text gives a bare "+".
Annotation default_annotation(JunctionShape shape);

/// True when the annotation is meaningful for the shape.
bool annotation_applies(JunctionShape shape, Annotation a);

struct FamilyDesc {
  std::vector<Block> blocks;
  /// junctions[i] joins blocks[i] and blocks[i + 1].
  std::vector<Junction> junctions;
  std::optional<std::string> label;
  /// When set, `blocks` is a group repeated omega times.
  bool repeated = false;
  /// Join between the last block of one copy and the first of the next.
  Junction link;

  bool operator==(const FamilyDesc& other) const {
    return blocks == other.blocks && junctions == other.junctions &&
           repeated == other.repeated && (!repeated || link == other.link);
  }
};

/// Throws ValidationError when the description breaks an invariant.
void validate(const FamilyDesc& f);

/// Builds a family from blocks and default junctions.
FamilyDesc make_family(std::vector<Block> blocks);

/// Parses the DSL.  Throws SyntaxError or ValidationError.
FamilyDesc parse_family(std::string_view text);

/// Canonical text; annotations are always spelled out.
std::string print_family(const FamilyDesc& f);

/// Merges adjacent fin blocks.  Idempotent.
FamilyDesc canonicalize(const FamilyDesc& f);

/// Finite(sum) for all-fin families, Aleph0 otherwise.
Cardinal element_count(const FamilyDesc& f);

bool contains_tight_eta(const FamilyDesc& f);

/// A dyadic rational num / 2^exp with odd num, used to name eta points and
/// eta cuts.
struct Dyadic {
  std::uint64_t num = 1;
  unsigned exp = 1;

  bool operator==(const Dyadic&) const = default;
  /// Orders by value.
  bool operator<(const Dyadic& other) const;
  std::string to_string() const;
};

/// Reduces num / 2^exp; throws InvalidArgument unless 0 < value < 1.
Dyadic make_dyadic(std::uint64_t num, unsigned exp);

/// Names one element of F.
///
/// Offsets: fin -> 0..n-1 from the bottom; omega -> n >= 0 from the bottom;
/// omega* -> n >= 0 from the top (0 is the greatest point); zeta -> any
/// integer; eta -> `dyadic`.  For repeated families `block` indexes the
/// unrolled sequence of copies.
struct PointRef {
  std::size_t block = 0;
  std::int64_t offset = 0;
  bool eta = false;
  Dyadic dyadic;

  static PointRef at(std::size_t block, std::int64_t offset) {
    PointRef p;
    p.block = block;
    p.offset = offset;
    return p;
  }
  static PointRef eta_point(std::size_t block, Dyadic d) {
    PointRef p;
    p.block = block;
    p.eta = true;
    p.dyadic = d;
    return p;
  }

  bool operator==(const PointRef&) const = default;
  std::string to_string() const;
};

}  // namespace ecl
