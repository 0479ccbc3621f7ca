#include "longhom/adapted.hpp"

#include <algorithm>
#include <set>

#include "longhom/errors.hpp"
#include "longhom/poset.hpp"

namespace longhom {

Variant variant_of(const DirectionSeq& s) {
  const Universe& u = s.alpha();
  if (u.is_omega_one()) return Variant::OmegaOne;
  if (u.is_finite()) return Variant::FiniteWrap;
  if (u.is_limit()) return Variant::CountableLimit;
  throw DomainError("alpha " + u.to_string() + " is not normalized; normalize the sequence first");
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::FiniteWrap:
      return "finite";
    case Variant::CountableLimit:
      return "countable-limit";
    case Variant::OmegaOne:
      return "omega1";
  }
  return {};
}

std::string Witness::to_string() const {
  switch (kind) {
    case Kind::ClosureEdge:
      return "ClosureEdge(" + at.to_string() + "," + to.to_string() + ")";
    case Kind::LimitMismatch:
      return "LimitMismatch(" + at.to_string() + ")";
    case Kind::TailRule:
      return "TailRule";
  }
  return {};
}

namespace {

// {g : g+1 in W}, where for finite alpha = n the successor of n-1 is 0.
IntervalSet cyclic_step_back(const IntervalSet& w) {
  IntervalSet out = step_back(w);
  const Universe& u = w.universe();
  if (u.is_finite() && w.contains(Ordinal{})) {
    const Ordinal last = u.bound().predecessor();
    out = out | IntervalSet::of_points(u, std::span<const Ordinal>(&last, 1));
  }
  return out;
}

Ordinal cyclic_successor(const Universe& u, const Ordinal& g) {
  Ordinal next = g.successor();
  return u.admits(next) ? next : Ordinal{};
}

}  // namespace

AdaptedVerdict is_adapted(const DirectionSeq& s, const IntervalSet& w, Variant v) {
  const Universe& u = s.alpha();
  if (variant_of(s) != v)
    throw DomainError("variant " + to_string(v) + " does not match alpha " + u.to_string());
  if (!(w.universe() == u))
    throw DomainError("subset universe " + w.universe().to_string() + " differs from alpha " + u.to_string());

  auto fail = [](Witness::Kind kind, Ordinal at, Ordinal to = {}) {
    return AdaptedVerdict{false, Witness{kind, std::move(at), std::move(to)}};
  };

  // i) upward closure along covering steps.
  const IntervalSet back = cyclic_step_back(w);
  const IntervalSet up_leaks = (s.up_set() & w) - back;      // g in W, Up, g+1 not in W
  const IntervalSet down_leaks = (s.down_set() & back) - w;  // g+1 in W, Down, g not in W
  auto up_min = up_leaks.min();
  auto down_min = down_leaks.min();
  if (up_min && (!down_min || *up_min < *down_min))
    return fail(Witness::Kind::ClosureEdge, *up_min, cyclic_successor(u, *up_min));
  if (down_min) return fail(Witness::Kind::ClosureEdge, cyclic_successor(u, *down_min), *down_min);

  if (v == Variant::FiniteWrap) return {};

  // ii) limits below alpha.
  for (const auto& sp : w.spans()) {
    if (sp.lo.is_limit()) return fail(Witness::Kind::LimitMismatch, sp.lo);
    if (sp.end && sp.end->is_limit()) return fail(Witness::Kind::LimitMismatch, *sp.end);
  }

  // iii) the top end, identified with boundary 0.
  const bool zero_in = w.contains(Ordinal{});
  if (v == Variant::CountableLimit && zero_in != w.has_tail())
    return fail(Witness::Kind::LimitMismatch, u.bound());
  if (v == Variant::OmegaOne && w.has_tail() && !zero_in) return fail(Witness::Kind::TailRule, Ordinal{});
  return {};
}

// ---------------------------------------------------------------------------
// Finite enumeration

SubsetMask to_mask(const IntervalSet& w) {
  SubsetMask m = 0;
  for (const auto& p : w.points()) {
    const auto i = p.finite_part();
    if (i >= kMaxFiniteLength) throw BoundError("subset element " + p.to_string() + " exceeds mask width");
    m |= SubsetMask{1} << i;
  }
  return m;
}

IntervalSet from_mask(const Universe& u, SubsetMask mask) {
  std::vector<Ordinal> pts;
  for (std::uint64_t i = 0; mask >> i; ++i)
    if ((mask >> i) & 1U) pts.push_back(Ordinal::finite(i));
  return IntervalSet::of_points(u, pts);
}

namespace {

std::uint64_t checked_finite_length(const DirectionSeq& s) {
  if (!s.is_finite()) throw DomainError("finite enumeration needs finite alpha, got " + s.alpha().to_string());
  const std::uint64_t n = s.length();
  if (n > kMaxFiniteLength)
    throw BoundError("length " + std::to_string(n) + " exceeds the finite limit " + std::to_string(kMaxFiniteLength));
  return n;
}

}  // namespace

std::vector<SubsetMask> enumerate_adapted_masks(const DirectionSeq& s) {
  const std::uint64_t n = checked_finite_length(s);
  const SubsetMask all = static_cast<SubsetMask>((std::uint64_t{1} << n) - 1);
  const SubsetMask ups = to_mask(s.up_set());
  const SubsetMask downs = all & ~ups;
  auto rotate_up = [&](SubsetMask x) { return ((x << 1) | (x >> (n - 1))) & all; };    // i -> i+1
  auto rotate_down = [&](SubsetMask x) { return ((x >> 1) | (x << (n - 1))) & all; };  // i+1 -> i

  std::vector<SubsetMask> out;
  for (std::uint64_t m = 0; m <= all; ++m) {
    const auto w = static_cast<SubsetMask>(m);
    if ((rotate_up(w & ups) & ~w) != 0) continue;
    if ((rotate_down(w) & downs & ~w) != 0) continue;
    out.push_back(w);
  }
  return out;
}

std::vector<IntervalSet> enumerate_adapted_finite(const DirectionSeq& s) {
  std::vector<IntervalSet> out;
  for (SubsetMask m : enumerate_adapted_masks(s)) out.push_back(from_mask(s.alpha(), m));
  return out;
}

std::vector<std::pair<IntervalSet, IntervalSet>> antichain_bijection(const DirectionSeq& s) {
  const std::uint64_t n = checked_finite_length(s);
  const PosetView poset(s);
  std::vector<SubsetMask> below(n, 0);  // below[i]: all j with j preceding i
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      if (poset.precedes(Ordinal::finite(j), Ordinal::finite(i))) below[i] |= SubsetMask{1} << j;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = i + 1; j < n; ++j)
      if (((below[i] >> j) & 1U) && ((below[j] >> i) & 1U))
        throw CyclicPreorder("positions " + std::to_string(i) + " and " + std::to_string(j) +
                             " precede each other in " + s.dirs());

  std::vector<std::pair<IntervalSet, IntervalSet>> out;
  for (SubsetMask w : enumerate_adapted_masks(s)) {
    SubsetMask minimal = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const SubsetMask bit = SubsetMask{1} << i;
      if ((w & bit) && (below[i] & w & ~bit) == 0) minimal |= bit;
    }
    out.emplace_back(from_mask(s.alpha(), w), from_mask(s.alpha(), minimal));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Infinite enumeration

namespace {

enum class RunShape { Empty, Full, Cut };

struct RunSlot {
  Run run;
  bool infinite;
  std::vector<Ordinal> grid_cuts;  // admissible cut points inside the run that lie on the grid
  bool grid_covers_all_cuts;       // every admissible cut of the run is on the grid
};

bool first_in(RunShape shape, Direction d) {
  return shape == RunShape::Full || (shape == RunShape::Cut && d == Direction::Down);
}

bool tail_in(RunShape shape, Direction d) {
  return shape == RunShape::Full || (shape == RunShape::Cut && d == Direction::Up);
}

// Constraint across the boundary where `lower` ends and `upper` begins.
bool boundary_ok(const RunSlot& lower, RunShape a, const RunSlot& upper, RunShape b) {
  const Ordinal& at = *lower.run.span.end;
  const bool below = tail_in(a, lower.run.direction);
  const bool above = first_in(b, upper.run.direction);
  if (at.is_limit()) return below == above;
  if (lower.run.direction == Direction::Up) return !below || above;
  return !above || below;
}

bool closure_ok(Variant v, const RunSlot& first, RunShape a, const RunSlot& last, RunShape b) {
  const bool zero_in = first_in(a, first.run.direction);
  const bool top_tail = tail_in(b, last.run.direction);
  if (v == Variant::CountableLimit) return zero_in == top_tail;
  return !top_tail || zero_in;
}

IntervalSet shape_set(const Universe& u, const RunSlot& slot, RunShape shape, const Ordinal* cut) {
  const Span& sp = slot.run.span;
  switch (shape) {
    case RunShape::Empty:
      return IntervalSet(u);
    case RunShape::Full:
      return IntervalSet::range(u, sp.lo, sp.end);
    case RunShape::Cut:
      if (slot.run.direction == Direction::Up) return IntervalSet::range(u, *cut, sp.end);
      return IntervalSet::range(u, sp.lo, *cut);
  }
  return IntervalSet(u);
}

bool family_less(const IntervalSet& a, const IntervalSet& b) {
  if (a.part_count() != b.part_count()) return a.part_count() < b.part_count();
  for (std::size_t i = 0; i < a.part_count(); ++i) {
    const Span& x = a.spans()[i];
    const Span& y = b.spans()[i];
    if (x.lo != y.lo) return x.lo < y.lo;
    if (x.end != y.end) return !y.end || (x.end && *x.end < *y.end);
  }
  return false;
}

class FamilySearch {
 public:
  FamilySearch(const DirectionSeq& s, const Bounds& bounds)
      : s_(s), bounds_(bounds), variant_(variant_of(s)) {
    const auto cuts = candidate_cuts(s, bounds);
    grid_.insert(cuts.begin(), cuts.end());
    for (const auto& run : s.runs()) {
      RunSlot slot{run, !run.span.end || !subtract_finite(*run.span.end, run.span.lo), {}, true};
      if (slot.infinite) slot.grid_covers_all_cuts = false;
      for (auto it = grid_.upper_bound(run.span.lo); it != grid_.end(); ++it) {
        if (run.span.end && !(*it < *run.span.end)) break;
        if (!it->is_limit()) slot.grid_cuts.push_back(*it);
      }
      if (!slot.infinite) {
        const std::uint64_t interior = *subtract_finite(*run.span.end, run.span.lo) - 1;
        slot.grid_covers_all_cuts = slot.grid_cuts.size() == interior;
      }
      slots_.push_back(std::move(slot));
    }
  }

  AdaptedFamily run() {
    shapes_.assign(slots_.size(), RunShape::Empty);
    assign(0);
    std::sort(found_.begin(), found_.end(), family_less);
    return {std::move(found_), missed_ ? Completeness::FragmentOnly : Completeness::Complete};
  }

 private:
  void assign(std::size_t i) {
    if (i == slots_.size()) {
      if (closure_ok(variant_, slots_.front(), shapes_.front(), slots_.back(), shapes_.back())) expand();
      return;
    }
    for (RunShape shape : {RunShape::Empty, RunShape::Full, RunShape::Cut}) {
      if (shape == RunShape::Cut && !has_interior(slots_[i])) continue;
      if (i > 0 && !boundary_ok(slots_[i - 1], shapes_[i - 1], slots_[i], shape)) continue;
      shapes_[i] = shape;
      assign(i + 1);
    }
  }

  static bool has_interior(const RunSlot& slot) {
    return slot.infinite || *subtract_finite(*slot.run.span.end, slot.run.span.lo) >= 2;
  }

  // Every admissible shape assignment is adapted; instantiate its cuts on the grid.
  void expand() {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (shapes_[i] == RunShape::Cut && !slots_[i].grid_covers_all_cuts) missed_ = true;
    std::vector<const Ordinal*> picks(slots_.size(), nullptr);
    expand_from(0, picks);
  }

  void expand_from(std::size_t i, std::vector<const Ordinal*>& picks) {
    if (i == slots_.size()) {
      IntervalSet w(s_.alpha());
      for (std::size_t k = 0; k < slots_.size(); ++k) w = w | shape_set(s_.alpha(), slots_[k], shapes_[k], picks[k]);
      if (w.part_count() > bounds_.max_parts) {
        missed_ = true;
        return;
      }
      found_.push_back(std::move(w));
      return;
    }
    if (shapes_[i] != RunShape::Cut) {
      expand_from(i + 1, picks);
      return;
    }
    for (const auto& c : slots_[i].grid_cuts) {
      picks[i] = &c;
      expand_from(i + 1, picks);
    }
  }

  const DirectionSeq& s_;
  Bounds bounds_;
  Variant variant_;
  std::set<Ordinal> grid_;
  std::vector<RunSlot> slots_;
  std::vector<RunShape> shapes_;
  std::vector<IntervalSet> found_;
  bool missed_ = false;
};

}  // namespace

std::vector<Ordinal> candidate_cuts(const DirectionSeq& s, const Bounds& bounds) {
  const Universe& u = s.alpha();
  std::set<Ordinal> grid;
  std::vector<Ordinal> anchors{Ordinal{}};
  for (const auto& run : s.runs()) anchors.push_back(run.span.lo);
  for (const auto& e : anchors) {
    Ordinal p = e;
    for (std::uint64_t k = 0; k <= bounds.shift_bound && u.admits(p); ++k, p = p.successor()) {
      grid.insert(p);
      if (u.admits(p.successor())) grid.insert(p.successor());
    }
  }
  return {grid.begin(), grid.end()};
}

AdaptedFamily enumerate_adapted(const DirectionSeq& s, const Bounds& bounds) {
  if (s.is_finite()) throw DomainError("enumerate_adapted needs infinite alpha; use enumerate_adapted_finite");
  if (bounds.max_parts == 0) throw BoundError("max_parts must be at least 1 to hold the full set");
  return FamilySearch(s, bounds).run();
}

}  // namespace longhom
