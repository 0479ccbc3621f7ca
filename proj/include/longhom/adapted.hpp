#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "longhom/dirseq.hpp"
#include "longhom/interval_set.hpp"

namespace longhom {

/// Which adaptedness rule applies, determined by the length of s.
enum class Variant {
  FiniteWrap,      // alpha finite: upward closure under the cyclic preorder
  CountableLimit,  // alpha a countable limit: limit rule, 0 tied to the final tail
  OmegaOne,        // alpha = w1: a final tail forces 0, not conversely
};

/// Throws DomainError for an infinite successor length.
Variant variant_of(const DirectionSeq& s);
std::string to_string(Variant v);

struct Witness {
  enum class Kind {
    ClosureEdge,    // `at` in W, covering step at -> `to`, `to` not in W
    LimitMismatch,  // membership of limit `at` disagrees with W just below it
    TailRule,       // w1: W contains a final tail but not 0
  };
  Kind kind;
  Ordinal at;
  Ordinal to;

  std::string to_string() const;
};

struct AdaptedVerdict {
  bool adapted = true;
  std::optional<Witness> witness;  // present iff !adapted
};

/// Decides adaptedness of W with exact interval algebra.
///   i)   W is closed upward along every covering step;
///   ii)  each limit beta < alpha is in W iff W contains a final segment of
///        beta (for interval sets: no part starts at a limit and no part
///        ends exclusively at a limit below alpha);
///   iii) CountableLimit: 0 in W iff W contains a final segment of alpha;
///        OmegaOne: a final segment of w1 in W forces 0 in W.
/// The first violated condition, in that order, is reported.
AdaptedVerdict is_adapted(const DirectionSeq& s, const IntervalSet& w, Variant v);
inline AdaptedVerdict is_adapted(const DirectionSeq& s, const IntervalSet& w) {
  return is_adapted(s, w, variant_of(s));
}

inline constexpr std::uint64_t kMaxFiniteLength = 24;

using SubsetMask = std::uint32_t;

SubsetMask to_mask(const IntervalSet& w);
IntervalSet from_mask(const Universe& u, SubsetMask mask);

/// Adapted subsets of a finite sequence as bitmasks, ascending.
/// Throws BoundError when the length exceeds kMaxFiniteLength.
std::vector<SubsetMask> enumerate_adapted_masks(const DirectionSeq& s);
std::vector<IntervalSet> enumerate_adapted_finite(const DirectionSeq& s);

struct Bounds {
  std::size_t max_parts = 4;
  std::uint64_t shift_bound = 4;
};

enum class Completeness { Complete, FragmentOnly };

struct AdaptedFamily {
  std::vector<IntervalSet> classes;
  Completeness completeness = Completeness::Complete;
};

/// Cut points a searched W may use as part boundaries: every run start of s
/// (and 0) shifted by 0..shift_bound, together with the successors of those.
std::vector<Ordinal> candidate_cuts(const DirectionSeq& s, const Bounds& bounds);

/// Adapted W of an infinite sequence with at most max_parts parts whose
/// boundaries are candidate cuts, ordered by part count then by parts.
///
/// Inside one run of s an adapted W is empty, full, or cut once (a final
/// segment of an Up run, an initial segment of a Down run, never cut at a
/// limit). Which of the three shapes fit together is a finite constraint
/// problem over the runs, so the result is exact, and the flag is Complete
/// exactly when no adapted set lies outside the searched fragment. A cut
/// inside an infinite run can slide freely, so any admissible assignment
/// using one makes the family infinite and the flag FragmentOnly.
AdaptedFamily enumerate_adapted(const DirectionSeq& s, const Bounds& bounds);

/// Pairs (W, minimal elements of W) over all adapted W, in bitmask order.
/// Throws CyclicPreorder when the preorder is not antisymmetric.
std::vector<std::pair<IntervalSet, IntervalSet>> antichain_bijection(const DirectionSeq& s);

}  // namespace longhom
