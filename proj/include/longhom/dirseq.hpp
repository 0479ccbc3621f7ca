#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longhom/interval_set.hpp"
#include "longhom/ordinal.hpp"

namespace longhom {

enum class Direction { Up, Down };

/// A maximal interval of constant direction.
struct Run {
  Span span;
  Direction direction;
};

/// A direction sequence s : alpha -> {Up, Down}, described by the set of
/// positions pointing up. alpha is a finite ordinal >= 2, an infinite
/// ordinal, or w1. Infinite successor lengths are accepted so they can be
/// normalized; most downstream operations require is_normalized().
class DirectionSeq {
 public:
  DirectionSeq(Universe alpha, IntervalSet up);

  /// Finite shorthand: one character per position, 'u' or 'd'.
  static DirectionSeq from_dirs(std::string_view dirs);
  static DirectionSeq constant(Universe alpha, Direction d);

  const Universe& alpha() const noexcept { return alpha_; }
  const IntervalSet& up_set() const noexcept { return up_; }
  IntervalSet down_set() const { return up_.complement(); }

  bool is_finite() const { return alpha_.is_finite(); }
  /// Length as a number; throws DomainError for infinite alpha.
  std::uint64_t length() const;
  /// Finite, limit, or w1.
  bool is_normalized() const { return alpha_.is_finite() || alpha_.is_limit(); }

  /// Throws DomainError when g >= alpha.
  Direction direction(const Ordinal& g) const;

  /// Maximal constant runs in increasing order.
  std::vector<Run> runs() const;

  /// "uud" for finite sequences.
  std::string dirs() const;

  friend bool operator==(const DirectionSeq&, const DirectionSeq&) = default;

 private:
  Universe alpha_;
  IntervalSet up_;
};

/// Rotates the finite remainder of alpha = beta + n (beta limit, n > 0) to
/// the front:
///   s'(i)     = s(beta + i)   for i < n
///   s'(n + i) = s(i)          for i < w
///   s'(g)     = s(g)          for w <= g < beta
/// The surface glued from s' is homeomorphic to the one glued from s.
/// Finite, limit and w1 lengths pass through unchanged.
DirectionSeq normalize(const DirectionSeq& s);

}  // namespace longhom
