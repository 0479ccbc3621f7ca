#include "longhom/symmap.hpp"

#include <algorithm>
#include <cctype>

#include "longhom/errors.hpp"

namespace longhom {

std::string to_string(BrickLabel l) {
  switch (l) {
    case BrickLabel::Zero:
      return "zero";
    case BrickLabel::Horiz:
      return "horiz";
    case BrickLabel::Vert:
      return "vert";
  }
  return {};
}

BrickLabel parse_label(std::string_view text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "zero" || t == "z") return BrickLabel::Zero;
  if (t == "horiz" || t == "h") return BrickLabel::Horiz;
  if (t == "vert" || t == "v") return BrickLabel::Vert;
  throw ParseError("unknown brick label '" + std::string(text) + "'");
}

SymbolicMap::SymbolicMap(DirectionSeq s, IntervalSet horiz, IntervalSet vert)
    : s_(std::move(s)), zero_(IntervalSet(s_.alpha())), horiz_(std::move(horiz)), vert_(std::move(vert)) {
  if (!s_.is_normalized()) throw DomainError("symbolic maps need a normalized sequence");
  zero_ = (horiz_ | vert_).complement();
}

SymbolicMap SymbolicMap::from_runs(DirectionSeq s, const std::vector<LabelRun>& runs) {
  const Universe& u = s.alpha();
  IntervalSet covered(u), horiz(u), vert(u);
  for (const auto& r : runs) {
    IntervalSet piece(u, {r.where});
    if (piece.empty()) throw DomainError("empty label interval " + to_string(r.where));
    if (!(covered & piece).empty()) throw DomainError("label intervals overlap at " + to_string(r.where));
    covered = covered | piece;
    if (r.label == BrickLabel::Horiz) horiz = horiz | piece;
    if (r.label == BrickLabel::Vert) vert = vert | piece;
  }
  if (!(covered == IntervalSet::full(u)))
    throw DomainError("label intervals leave " + to_string(covered.complement()) + " uncovered");
  return SymbolicMap(std::move(s), std::move(horiz), std::move(vert));
}

SymbolicMap SymbolicMap::from_labels(DirectionSeq s, const std::vector<BrickLabel>& labels) {
  if (labels.size() != s.length())
    throw DomainError("expected " + std::to_string(s.length()) + " labels, got " + std::to_string(labels.size()));
  std::vector<LabelRun> runs;
  for (std::size_t i = 0; i < labels.size(); ++i) runs.push_back({Interval::point(Ordinal::finite(i)), labels[i]});
  return from_runs(std::move(s), runs);
}

SymbolicMap SymbolicMap::from_letters(DirectionSeq s, std::string_view letters) {
  std::vector<BrickLabel> labels;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    try {
      labels.push_back(parse_label(letters.substr(i, 1)));
    } catch (const ParseError&) {
      throw ParseError("labels: expected 'z', 'h' or 'v'", i);
    }
  }
  return from_labels(std::move(s), labels);
}

BrickLabel SymbolicMap::label(const Ordinal& g) const {
  if (horiz_.contains(g)) return BrickLabel::Horiz;
  if (vert_.contains(g)) return BrickLabel::Vert;
  return BrickLabel::Zero;
}

std::vector<LabelRun> SymbolicMap::runs() const {
  std::vector<LabelRun> out;
  for (auto [set, label] : {std::pair{&zero_, BrickLabel::Zero}, std::pair{&horiz_, BrickLabel::Horiz},
                            std::pair{&vert_, BrickLabel::Vert}})
    for (auto& part : set->parts()) out.push_back({std::move(part), label});
  std::sort(out.begin(), out.end(), [](const LabelRun& a, const LabelRun& b) { return a.where.lo < b.where.lo; });
  return out;
}

std::string SymbolicMap::letters() const {
  std::string out;
  for (std::uint64_t i = 0; i < s_.length(); ++i) {
    switch (label(Ordinal::finite(i))) {
      case BrickLabel::Zero:
        out += 'z';
        break;
      case BrickLabel::Horiz:
        out += 'h';
        break;
      case BrickLabel::Vert:
        out += 'v';
        break;
    }
  }
  return out;
}

// Up bricks have the h-side at the bottom, Down bricks at the top.
IntervalSet SymbolicMap::bottom_cofinal() const {
  return (s_.up_set() & horiz_) | (s_.down_set() & (horiz_ | vert_));
}

IntervalSet SymbolicMap::top_cofinal() const {
  return (s_.up_set() & (horiz_ | vert_)) | (s_.down_set() & horiz_);
}

namespace {

bool zero_boundary_cofinal(const SymbolicMap& m, const IntervalSet& top, const IntervalSet& bottom) {
  const Universe& u = m.seq().alpha();
  if (u.is_finite()) return top.contains(u.bound().predecessor());
  return bottom.contains(Ordinal{});
}

}  // namespace

BoundaryVerdicts verdicts(const SymbolicMap& m) {
  const Universe& u = m.seq().alpha();
  const IntervalSet top = m.top_cofinal();
  IntervalSet out = step_forward(top);
  if (zero_boundary_cofinal(m, top, m.bottom_cofinal())) out = out | IntervalSet::range(u, Ordinal{}, Ordinal::finite(1));
  return {std::move(out)};
}

Consistency is_consistent(const SymbolicMap& m) {
  const Universe& u = m.seq().alpha();
  const IntervalSet top = m.top_cofinal();
  const IntervalSet bottom = m.bottom_cofinal();
  const IntervalSet from_below = step_forward(top);
  const IntervalSet zero_only = IntervalSet::range(u, Ordinal{}, Ordinal::finite(1));

  const IntervalSet clash = ((bottom - from_below) | (from_below - bottom)) - zero_only;
  if (auto at = clash.min()) {
    const bool above = bottom.contains(*at);
    if (at->is_limit())
      return {false, *at,
              std::string("limit boundary ") + (above ? "cofinal from the brick above but bounded below" :
                                                        "bounded from the brick above but cofinal below")};
    return {false, *at,
            std::string("shared boundary ") + (above ? "cofinal from the brick above, bounded from the brick below" :
                                                       "bounded from the brick above, cofinal from the brick below")};
  }

  const bool zero_up = bottom.contains(Ordinal{});
  if (u.is_finite()) {
    if (zero_up != top.contains(u.bound().predecessor()))
      return {false, Ordinal{}, "wrap boundary disagrees between the first and the last brick"};
    return {};
  }
  if (u.is_omega_one()) {
    if (top.has_tail() && !zero_up)
      return {false, Ordinal{}, "cofinal final segment of w1 but Delta_0 bounded"};
    return {};
  }
  if (zero_up != top.has_tail())
    return {false, Ordinal{},
            zero_up ? "Delta_0 cofinal but the final segment is not" : "final segment cofinal but Delta_0 bounded"};
  return {};
}

SymbolicMap canonical_map(const DirectionSeq& s, const IntervalSet& w) {
  const AdaptedVerdict check = is_adapted(s, w);
  if (!check.adapted) throw DomainError("subset " + to_string(w) + " is not adapted: " + check.witness->to_string());

  // Brick g has h-side Delta_g when Up, Delta_{g+1} when Down.
  IntervalSet next = step_back(w);
  if (s.is_finite() && w.contains(Ordinal{})) {
    const Ordinal last = s.alpha().bound().predecessor();
    next = next | IntervalSet::of_points(s.alpha(), std::span<const Ordinal>(&last, 1));
  }
  const IntervalSet& up = s.up_set();
  const IntervalSet down = s.down_set();
  IntervalSet horiz = (up & w) | (down & next);
  IntervalSet vert = ((up & next) | (down & w)) - horiz;
  return SymbolicMap(s, std::move(horiz), std::move(vert));
}

bool homotopic(const SymbolicMap& m1, const SymbolicMap& m2) {
  if (!(m1.seq() == m2.seq())) throw DomainError("maps are defined over different direction sequences");
  for (const SymbolicMap* m : {&m1, &m2}) {
    const Consistency c = is_consistent(*m);
    if (!c.consistent)
      throw InconsistentMap("map " + std::string(m == &m1 ? "1" : "2") + " is inconsistent at Delta_" +
                            c.boundary->to_string() + ": " + c.reason);
  }
  return verdicts(m1).cofinal_set == verdicts(m2).cofinal_set;
}

ClassCount count_classes(const DirectionSeq& s, const Bounds& bounds) {
  if (s.is_finite()) return {enumerate_adapted_masks(s).size(), Completeness::Complete};
  const AdaptedFamily family = enumerate_adapted(s, bounds);
  return {family.classes.size(), family.completeness};
}

}  // namespace longhom
