#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longhom/adapted.hpp"
#include "longhom/dirseq.hpp"
#include "longhom/interval_set.hpp"

namespace longhom {

// Restriction of a map to one brick C_g, up to homotopy.
enum class BrickLabel { Zero, Horiz, Vert };

struct BrickSides {
  bool h_cofinal;
  bool d_cofinal;
};

/// Verdicts on the h-side and the d-side of a brick. No label is cofinal on
/// its h-side and bounded on its d-side.
constexpr BrickSides sides(BrickLabel l) {
  switch (l) {
    case BrickLabel::Zero:
      return {false, false};
    case BrickLabel::Horiz:
      return {true, true};
    case BrickLabel::Vert:
      return {false, true};
  }
  return {false, false};
}

std::string to_string(BrickLabel l);
/// "zero", "horiz", "vert", or the single letters z, h, v.
BrickLabel parse_label(std::string_view text);

struct LabelRun {
  Interval where;
  BrickLabel label;
};

/// A per-brick labelling of [0, alpha), stored as one index set per label.
class SymbolicMap {
 public:
  /// The runs must partition [0, alpha); throws DomainError otherwise.
  static SymbolicMap from_runs(DirectionSeq s, const std::vector<LabelRun>& runs);
  static SymbolicMap from_labels(DirectionSeq s, const std::vector<BrickLabel>& labels);
  /// Finite shorthand such as "zvv".
  static SymbolicMap from_letters(DirectionSeq s, std::string_view letters);

  const DirectionSeq& seq() const noexcept { return s_; }
  const IntervalSet& zero_set() const noexcept { return zero_; }
  const IntervalSet& horiz_set() const noexcept { return horiz_; }
  const IntervalSet& vert_set() const noexcept { return vert_; }

  BrickLabel label(const Ordinal& g) const;
  /// Maximal runs of constant label in increasing order.
  std::vector<LabelRun> runs() const;
  /// One letter per brick; finite alpha only.
  std::string letters() const;

  /// Bricks whose bottom boundary Delta_g is cofinal.
  IntervalSet bottom_cofinal() const;
  /// Bricks whose top boundary Delta_{g+1} is cofinal.
  IntervalSet top_cofinal() const;

  friend bool operator==(const SymbolicMap&, const SymbolicMap&) = default;

 private:
  friend SymbolicMap canonical_map(const DirectionSeq& s, const IntervalSet& w);

  SymbolicMap(DirectionSeq s, IntervalSet horiz, IntervalSet vert);

  DirectionSeq s_;
  IntervalSet zero_;
  IntervalSet horiz_;
  IntervalSet vert_;
};

struct BoundaryVerdicts {
  IntervalSet cofinal_set;
};

/// Each successor boundary takes the verdict of the brick below it, each
/// limit boundary is cofinal iff a final segment of the bricks below it is,
/// and Delta_0 is read from the top of the last brick (finite alpha) or the
/// bottom of C_0 (infinite alpha).
BoundaryVerdicts verdicts(const SymbolicMap& m);

struct Consistency {
  bool consistent = true;
  std::optional<Ordinal> boundary;  // offending Delta index
  std::string reason;
};

/// Checked in order: successor boundaries shared by two bricks, limit
/// boundaries against the final-segment rule, then Delta_0 against the wrap
/// (finite), the final segment of alpha (countable limit) or the one-way
/// rule that a cofinal final segment of w1 forces Delta_0 cofinal.
Consistency is_consistent(const SymbolicMap& m);

/// The consistent map whose verdict set is W. Horiz where both sides lie in
/// W, Vert where only the d-side does, Zero elsewhere. Throws DomainError
/// when W is not adapted.
SymbolicMap canonical_map(const DirectionSeq& s, const IntervalSet& w);

/// Equal verdict sets. Throws DomainError for different sequences and
/// InconsistentMap when either map is inconsistent.
bool homotopic(const SymbolicMap& m1, const SymbolicMap& m2);

struct ClassCount {
  std::size_t count = 0;
  Completeness completeness = Completeness::Complete;
};

ClassCount count_classes(const DirectionSeq& s, const Bounds& bounds = {});

}  // namespace longhom
