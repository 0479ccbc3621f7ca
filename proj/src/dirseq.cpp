#include "longhom/dirseq.hpp"

#include <algorithm>

#include "longhom/errors.hpp"

namespace longhom {

DirectionSeq::DirectionSeq(Universe alpha, IntervalSet up) : alpha_(std::move(alpha)), up_(std::move(up)) {
  if (!(up_.universe() == alpha_))
    throw DomainError("up set universe " + up_.universe().to_string() + " differs from alpha " + alpha_.to_string());
  if (alpha_.is_finite() && alpha_.bound() < Ordinal::finite(2))
    throw DomainError("a finite direction sequence needs length >= 2, got " + alpha_.to_string());
}

DirectionSeq DirectionSeq::from_dirs(std::string_view dirs) {
  Universe u = Universe::ordinal(Ordinal::finite(dirs.size()));
  std::vector<Ordinal> ups;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (dirs[i] == 'u' || dirs[i] == 'U')
      ups.push_back(Ordinal::finite(i));
    else if (dirs[i] != 'd' && dirs[i] != 'D')
      throw ParseError("direction sequence: expected 'u' or 'd'", i);
  }
  return DirectionSeq(u, IntervalSet::of_points(u, ups));
}

DirectionSeq DirectionSeq::constant(Universe alpha, Direction d) {
  IntervalSet up = d == Direction::Up ? IntervalSet::full(alpha) : IntervalSet(alpha);
  return DirectionSeq(std::move(alpha), std::move(up));
}

std::uint64_t DirectionSeq::length() const {
  if (!alpha_.is_finite()) throw DomainError("sequence length " + alpha_.to_string() + " is infinite");
  return alpha_.bound().finite_part();
}

Direction DirectionSeq::direction(const Ordinal& g) const {
  if (!alpha_.admits(g)) throw DomainError("index " + g.to_string() + " out of range for alpha " + alpha_.to_string());
  return up_.contains(g) ? Direction::Up : Direction::Down;
}

std::vector<Run> DirectionSeq::runs() const {
  std::vector<Run> out;
  for (const auto& s : up_.spans()) out.push_back({s, Direction::Up});
  const IntervalSet down = down_set();
  for (const auto& s : down.spans()) out.push_back({s, Direction::Down});
  std::sort(out.begin(), out.end(), [](const Run& a, const Run& b) { return a.span.lo < b.span.lo; });
  return out;
}

std::string DirectionSeq::dirs() const {
  std::string out(length(), 'd');
  for (const auto& p : up_.points()) out[p.finite_part()] = 'u';
  return out;
}

DirectionSeq normalize(const DirectionSeq& s) {
  const Universe& u = s.alpha();
  if (u.is_finite() || u.is_limit()) return s;

  const Ordinal& alpha = u.bound();
  const std::uint64_t n = alpha.finite_part();
  std::vector<CnfTerm> head = alpha.terms();
  head.pop_back();
  const Ordinal beta = Ordinal::from_terms(std::move(head));
  const Ordinal w = Ordinal::omega();
  const Universe target = Universe::ordinal(beta);

  std::vector<Span> spans;
  // Final block [beta, beta+n) moves to [0, n).
  const IntervalSet block = s.up_set() & IntervalSet::range(u, beta, std::nullopt);
  for (const auto& sp : block.spans()) {
    Ordinal lo = Ordinal::finite(*subtract_finite(sp.lo, beta));
    Ordinal end = Ordinal::finite(sp.end ? *subtract_finite(*sp.end, beta) : n);
    spans.push_back({lo, end});
  }
  // [0, w) shifts up by n; n + w = w.
  const Ordinal shift = Ordinal::finite(n);
  const IntervalSet head_part = s.up_set() & IntervalSet::range(u, Ordinal{}, w);
  for (const auto& sp : head_part.spans())
    spans.push_back({shift + sp.lo, shift + *sp.end});
  // [w, beta) is untouched.
  const IntervalSet middle = s.up_set() & IntervalSet::range(u, w, beta);
  for (const auto& sp : middle.spans()) spans.push_back(sp);

  return DirectionSeq(target, IntervalSet::from_spans(target, std::move(spans)));
}

}  // namespace longhom
