#pragma once

#include <string>
#include <utility>
#include <vector>

#include "longhom/dirseq.hpp"

namespace longhom {

/// The preorder on alpha generated by the covering steps
///   g -> g+1   when s(g) = Up,
///   g+1 -> g   when s(g) = Down,
/// plus, for finite alpha = n, the wrap step between n-1 and 0 governed by
/// s(n-1). Nothing is materialized; queries are decided from the runs of s.
///
/// The relation is only a preorder: a finite sequence pointing the same way
/// everywhere makes all elements mutually comparable. Operations that need
/// antisymmetry check it and throw CyclicPreorder.
class PosetView {
 public:
  explicit PosetView(DirectionSeq s) : s_(std::move(s)) {}

  const DirectionSeq& seq() const noexcept { return s_; }

  /// Reflexive-transitive reachability g -> ... -> h.
  bool precedes(const Ordinal& g, const Ordinal& h) const;

  /// Requires a finite set; throws DomainError otherwise.
  bool is_antichain(const IntervalSet& a) const;

  /// Finite alpha only. Throws CyclicPreorder if two distinct members of w
  /// precede each other.
  IntervalSet minimal_elements(const IntervalSet& w) const;

  /// Covering steps (from, to) in position order; the last one is the wrap.
  std::vector<std::pair<Ordinal, Ordinal>> covering_edges() const;

  /// Graphviz digraph of the covering steps, nodes named d<ordinal>.
  std::string export_dot() const;

 private:
  void check_index(const Ordinal& g) const;

  DirectionSeq s_;
};

}  // namespace longhom
