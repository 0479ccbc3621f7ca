#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "longhom/ordinal.hpp"

namespace longhom {

/// The ambient ordinal: either a concrete countable ordinal, read as the set
/// of smaller ordinals, or the symbolic first uncountable ordinal (rendered
/// "w1"). Every CNF ordinal lies below the latter.
class Universe {
 public:
  static Universe ordinal(Ordinal bound) { return Universe(std::move(bound)); }
  static Universe omega_one() { return Universe(); }

  bool is_omega_one() const noexcept { return !bound_.has_value(); }
  /// Throws DomainError for omega_one.
  const Ordinal& bound() const;
  bool admits(const Ordinal& x) const { return !bound_ || x < *bound_; }
  bool is_limit() const { return !bound_ || bound_->is_limit(); }
  bool is_finite() const { return bound_ && bound_->is_finite(); }

  std::string to_string() const;
  static Universe parse(std::string_view text);

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  Universe() = default;
  explicit Universe(Ordinal bound) : bound_(std::move(bound)) {}

  std::optional<Ordinal> bound_;
};

/// One part of an ordinal set as written by users: a lower bound and one of
/// three upper-bound kinds. Tail runs to the end of the universe.
struct Interval {
  enum class Hi { Inclusive, Exclusive, Tail };

  Ordinal lo;
  Hi kind = Hi::Tail;
  Ordinal hi;  // ignored for Tail

  static Interval closed(Ordinal lo, Ordinal hi) { return {std::move(lo), Hi::Inclusive, std::move(hi)}; }
  static Interval half_open(Ordinal lo, Ordinal hi) { return {std::move(lo), Hi::Exclusive, std::move(hi)}; }
  static Interval tail(Ordinal lo) { return {std::move(lo), Hi::Tail, Ordinal{}}; }
  static Interval point(const Ordinal& x) { return closed(x, x); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Half-open [lo, end); an absent end is the end of the universe.
struct Span {
  Ordinal lo;
  std::optional<Ordinal> end;

  friend bool operator==(const Span&, const Span&) = default;
};

/// A finite union of intervals inside a universe, kept in a unique normal
/// form: spans sorted, pairwise disjoint and non-adjacent, every finite end
/// strictly below the universe bound. Presented as Intervals, a successor end
/// reads as an inclusive bound, a limit end as an exclusive bound, and an
/// absent end as Tail.
class IntervalSet {
 public:
  explicit IntervalSet(Universe universe) : universe_(std::move(universe)) {}
  IntervalSet(Universe universe, std::span<const Interval> parts);
  IntervalSet(Universe universe, std::initializer_list<Interval> parts)
      : IntervalSet(std::move(universe), std::span<const Interval>(parts.begin(), parts.size())) {}

  static IntervalSet from_spans(Universe universe, std::vector<Span> spans);
  static IntervalSet full(Universe universe);
  /// [lo, end); an absent end runs to the end of the universe.
  static IntervalSet range(Universe universe, const Ordinal& lo, std::optional<Ordinal> end);
  static IntervalSet of_points(Universe universe, std::span<const Ordinal> points);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Span>& spans() const noexcept { return spans_; }
  std::vector<Interval> parts() const;

  bool empty() const noexcept { return spans_.empty(); }
  std::size_t part_count() const noexcept { return spans_.size(); }

  /// Throws DomainError when x is outside the universe.
  bool contains(const Ordinal& x) const;
  bool has_tail() const noexcept { return !spans_.empty() && !spans_.back().end; }
  /// True iff the set includes [g, beta) for some g < beta.
  bool contains_tail_below(const Ordinal& beta) const;
  std::optional<Ordinal> min() const;

  bool is_finite() const;
  /// Members in increasing order; throws DomainError for infinite sets.
  std::vector<Ordinal> points() const;

  bool is_subset_of(const IntervalSet& other) const;

  /// Closed and unbounded in a limit universe. Throws DomainError otherwise.
  bool is_club() const;

  IntervalSet complement() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  Universe universe_;
  std::vector<Span> spans_;
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);

inline IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return set_union(a, b); }
inline IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return intersect(a, b); }
inline IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return difference(a, b); }

/// {g : g+1 in X}.
IntervalSet step_back(const IntervalSet& x);

/// {d : d-1 in X} together with the limits d for which X contains a final
/// segment of d. Each span [lo, end) maps to [lo+1, end+1).
IntervalSet step_forward(const IntervalSet& x);

/// Piecewise-constant family d -> E_d over a shared universe. The index
/// intervals must partition the universe.
struct IndexedFamily {
  Universe universe;
  std::vector<std::pair<Interval, IntervalSet>> pieces;

  /// Throws DomainError when the pieces do not partition the universe or a
  /// member set lives in another universe.
  void validate() const;
};

/// {g : g in E_d for every d < g}.
IntervalSet diagonal_intersection(const IndexedFamily& family);

/// Human form, e.g. "{0} u [w,w*2) u [w^2,tail]"; "{}" when empty.
std::string to_string(const IntervalSet& s);
std::string to_string(const Interval& i);

/// Inverse of to_string: items separated by "u", each either
/// "[lo,hi]", "[lo,hi)", "[lo,tail]" or a point list "{a,b,...}".
IntervalSet parse_interval_set(const Universe& universe, std::string_view text);

}  // namespace longhom
