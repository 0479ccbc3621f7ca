#include "longhom/poset.hpp"

#include <sstream>

#include "longhom/errors.hpp"

namespace longhom {

void PosetView::check_index(const Ordinal& g) const {
  if (!s_.alpha().admits(g))
    throw DomainError("index " + g.to_string() + " out of range for alpha " + s_.alpha().to_string());
}

bool PosetView::precedes(const Ordinal& g, const Ordinal& h) const {
  check_index(g);
  check_index(h);
  if (g == h) return true;
  const Universe& u = s_.alpha();
  const IntervalSet& up = s_.up_set();
  const IntervalSet down = s_.down_set();
  auto range = [&](const Ordinal& lo, const std::optional<Ordinal>& end) { return IntervalSet::range(u, lo, end); };

  if (!u.is_finite()) {
    // A chain moves one successor step at a time, so it never crosses a limit.
    if (g < h) return subtract_finite(h, g).has_value() && range(g, h).is_subset_of(up);
    return subtract_finite(g, h).has_value() && range(h, g).is_subset_of(down);
  }

  // Finite alpha: the covering steps form a cycle; h is reachable iff one of
  // the two arcs from g to h is oriented consistently.
  const Ordinal zero;
  if (g < h) {
    if (range(g, h).is_subset_of(up)) return true;
    return (range(zero, g) | range(h, std::nullopt)).is_subset_of(down);
  }
  if ((range(g, std::nullopt) | range(zero, h)).is_subset_of(up)) return true;
  return range(h, g).is_subset_of(down);
}

bool PosetView::is_antichain(const IntervalSet& a) const {
  if (!(a.universe() == s_.alpha())) throw DomainError("antichain candidate lives in another universe");
  const auto pts = a.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j && precedes(pts[i], pts[j])) return false;
  return true;
}

IntervalSet PosetView::minimal_elements(const IntervalSet& w) const {
  if (!s_.is_finite()) throw DomainError("minimal_elements needs finite alpha");
  if (!(w.universe() == s_.alpha())) throw DomainError("subset lives in another universe");
  const auto pts = w.points();
  std::vector<Ordinal> minimal;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j || !precedes(pts[j], pts[i])) continue;
      if (precedes(pts[i], pts[j]))
        throw CyclicPreorder(pts[i].to_string() + " and " + pts[j].to_string() + " precede each other");
      is_min = false;
    }
    if (is_min) minimal.push_back(pts[i]);
  }
  return IntervalSet::of_points(s_.alpha(), minimal);
}

std::vector<std::pair<Ordinal, Ordinal>> PosetView::covering_edges() const {
  const std::uint64_t n = s_.length();
  std::vector<std::pair<Ordinal, Ordinal>> edges;
  for (std::uint64_t i = 0; i < n; ++i) {
    Ordinal a = Ordinal::finite(i);
    Ordinal b = Ordinal::finite((i + 1) % n);
    if (s_.direction(a) == Direction::Up)
      edges.emplace_back(a, b);
    else
      edges.emplace_back(b, a);
  }
  return edges;
}

std::string PosetView::export_dot() const {
  if (!s_.is_finite()) throw DomainError("DOT export needs finite alpha, got " + s_.alpha().to_string());
  const auto edges = covering_edges();
  std::ostringstream out;
  out << "digraph P {\n";
  for (std::uint64_t i = 0; i < s_.length(); ++i) out << "  d" << i << ";\n";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << "  d" << edges[i].first.to_string() << " -> d" << edges[i].second.to_string();
    if (i + 1 == edges.size()) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace longhom
