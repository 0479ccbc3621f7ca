#include "longhom/interval_set.hpp"

#include <algorithm>
#include <cctype>

#include "longhom/errors.hpp"

namespace longhom {

namespace {

// Absent ends are +infinity.
bool end_less(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

bool lo_before_end(const Ordinal& lo, const std::optional<Ordinal>& end) { return !end || lo < *end; }

const std::optional<Ordinal>& min_end(const std::optional<Ordinal>& a, const std::optional<Ordinal>& b) {
  return end_less(b, a) ? b : a;
}

// g with g+1 >= x  <=>  step target: predecessor for successors, x otherwise.
Ordinal floor_step(const Ordinal& x) { return x.is_successor() ? x.predecessor() : x; }

Span to_span(const Universe& u, const Interval& part) {
  if (!u.admits(part.lo))
    throw DomainError("interval lower bound " + part.lo.to_string() + " outside universe " + u.to_string());
  switch (part.kind) {
    case Interval::Hi::Tail:
      return {part.lo, std::nullopt};
    case Interval::Hi::Inclusive:
      if (part.hi < part.lo) throw DomainError("interval " + to_string(part) + " has hi < lo");
      if (!u.admits(part.hi))
        throw DomainError("interval bound " + part.hi.to_string() + " outside universe " + u.to_string());
      return {part.lo, part.hi.successor()};
    case Interval::Hi::Exclusive:
      if (!(part.lo < part.hi)) throw DomainError("exclusive interval " + to_string(part) + " is empty");
      if (!u.is_omega_one() && u.bound() < part.hi)
        throw DomainError("interval bound " + part.hi.to_string() + " outside universe " + u.to_string());
      return {part.lo, part.hi};
  }
  return {part.lo, std::nullopt};
}

}  // namespace

// ---------------------------------------------------------------------------
// Universe

const Ordinal& Universe::bound() const {
  if (!bound_) throw DomainError("the universe w1 has no ordinal bound");
  return *bound_;
}

std::string Universe::to_string() const { return bound_ ? bound_->to_string() : std::string("w1"); }

Universe Universe::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact == "w1") return omega_one();
  return ordinal(parse_ordinal(text));
}

// ---------------------------------------------------------------------------
// IntervalSet

IntervalSet::IntervalSet(Universe universe, std::span<const Interval> parts) : universe_(std::move(universe)) {
  std::vector<Span> spans;
  spans.reserve(parts.size());
  for (const auto& p : parts) spans.push_back(to_span(universe_, p));
  *this = from_spans(universe_, std::move(spans));
}

IntervalSet IntervalSet::from_spans(Universe universe, std::vector<Span> spans) {
  IntervalSet out(std::move(universe));
  const Universe& u = out.universe_;
  std::erase_if(spans, [](const Span& s) { return !lo_before_end(s.lo, s.end); });
  for (auto& s : spans) {
    if (!u.admits(s.lo)) throw DomainError("span start " + s.lo.to_string() + " outside universe " + u.to_string());
    if (s.end && !u.is_omega_one()) {
      if (u.bound() < *s.end)
        throw DomainError("span end " + s.end->to_string() + " outside universe " + u.to_string());
      if (*s.end == u.bound()) s.end.reset();
    }
  }
  std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
  for (auto& s : spans) {
    if (!out.spans_.empty()) {
      Span& last = out.spans_.back();
      if (!last.end) break;
      if (!(*last.end < s.lo)) {
        if (end_less(last.end, s.end)) last.end = s.end;
        continue;
      }
    }
    out.spans_.push_back(std::move(s));
  }
  return out;
}

IntervalSet IntervalSet::full(Universe universe) {
  return from_spans(std::move(universe), {Span{Ordinal{}, std::nullopt}});
}

IntervalSet IntervalSet::range(Universe universe, const Ordinal& lo, std::optional<Ordinal> end) {
  if (end && !(lo < *end)) return IntervalSet(std::move(universe));
  return from_spans(std::move(universe), {Span{lo, std::move(end)}});
}

IntervalSet IntervalSet::of_points(Universe universe, std::span<const Ordinal> points) {
  std::vector<Span> spans;
  spans.reserve(points.size());
  for (const auto& p : points) {
    if (!universe.admits(p)) throw DomainError("point " + p.to_string() + " outside universe " + universe.to_string());
    spans.push_back({p, p.successor()});
  }
  return from_spans(std::move(universe), std::move(spans));
}

std::vector<Interval> IntervalSet::parts() const {
  std::vector<Interval> out;
  out.reserve(spans_.size());
  for (const auto& s : spans_) {
    if (!s.end && universe_.is_finite())
      out.push_back(Interval::closed(s.lo, universe_.bound().predecessor()));
    else if (!s.end)
      out.push_back(Interval::tail(s.lo));
    else if (s.end->is_successor())
      out.push_back(Interval::closed(s.lo, s.end->predecessor()));
    else
      out.push_back(Interval::half_open(s.lo, *s.end));
  }
  return out;
}

bool IntervalSet::contains(const Ordinal& x) const {
  if (!universe_.admits(x)) throw DomainError(x.to_string() + " is outside universe " + universe_.to_string());
  auto it = std::upper_bound(spans_.begin(), spans_.end(), x,
                             [](const Ordinal& v, const Span& s) { return v < s.lo; });
  if (it == spans_.begin()) return false;
  --it;
  return lo_before_end(x, it->end);
}

bool IntervalSet::contains_tail_below(const Ordinal& beta) const {
  for (const auto& s : spans_) {
    if (!(s.lo < beta)) break;
    if (!s.end || !(*s.end < beta)) return true;
  }
  return false;
}

std::optional<Ordinal> IntervalSet::min() const {
  if (spans_.empty()) return std::nullopt;
  return spans_.front().lo;
}

bool IntervalSet::is_finite() const {
  if (universe_.is_finite()) return true;
  return std::all_of(spans_.begin(), spans_.end(),
                     [](const Span& s) { return s.end && subtract_finite(*s.end, s.lo).has_value(); });
}

std::vector<Ordinal> IntervalSet::points() const {
  if (!is_finite()) throw DomainError("set " + to_string(*this) + " is infinite");
  std::vector<Ordinal> out;
  for (const auto& s : spans_) {
    const Ordinal end = s.end ? *s.end : universe_.bound();
    for (Ordinal x = s.lo; x < end; x = x.successor()) out.push_back(x);
  }
  return out;
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const { return difference(*this, other).empty(); }

bool IntervalSet::is_club() const {
  if (!universe_.is_limit())
    throw DomainError("club test needs a limit universe, got " + universe_.to_string());
  if (!has_tail()) return false;
  return std::none_of(spans_.begin(), spans_.end(), [](const Span& s) { return s.end && s.end->is_limit(); });
}

IntervalSet IntervalSet::complement() const {
  std::vector<Span> gaps;
  Ordinal cursor;
  for (const auto& s : spans_) {
    if (cursor < s.lo) gaps.push_back({cursor, s.lo});
    if (!s.end) return from_spans(universe_, std::move(gaps));
    cursor = *s.end;
  }
  gaps.push_back({cursor, std::nullopt});
  return from_spans(universe_, std::move(gaps));
}

// ---------------------------------------------------------------------------
// Algebra

namespace {

void require_same_universe(const IntervalSet& a, const IntervalSet& b) {
  if (!(a.universe() == b.universe()))
    throw DomainError("universe mismatch: " + a.universe().to_string() + " vs " + b.universe().to_string());
}

}  // namespace

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  require_same_universe(a, b);
  std::vector<Span> all = a.spans();
  all.insert(all.end(), b.spans().begin(), b.spans().end());
  return IntervalSet::from_spans(a.universe(), std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  require_same_universe(a, b);
  std::vector<Span> out;
  const auto& x = a.spans();
  const auto& y = b.spans();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const Ordinal& lo = std::max(x[i].lo, y[j].lo);
    const auto& end = min_end(x[i].end, y[j].end);
    if (lo_before_end(lo, end)) out.push_back({lo, end});
    if (end_less(x[i].end, y[j].end))
      ++i;
    else
      ++j;
  }
  return IntervalSet::from_spans(a.universe(), std::move(out));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  require_same_universe(a, b);
  return intersect(a, b.complement());
}

IntervalSet step_back(const IntervalSet& x) {
  std::vector<Span> out;
  const Universe& u = x.universe();
  for (const auto& s : x.spans()) {
    std::optional<Ordinal> end;
    if (s.end)
      end = floor_step(*s.end);
    else if (!u.is_omega_one() && u.bound().is_successor())
      end = u.bound().predecessor();
    out.push_back({floor_step(s.lo), end});
  }
  return IntervalSet::from_spans(u, std::move(out));
}

IntervalSet step_forward(const IntervalSet& x) {
  std::vector<Span> out;
  for (const auto& s : x.spans()) {
    std::optional<Ordinal> end;
    if (s.end) end = s.end->successor();
    Ordinal lo = s.lo.successor();
    if (x.universe().admits(lo)) out.push_back({std::move(lo), std::move(end)});
  }
  return IntervalSet::from_spans(x.universe(), std::move(out));
}

// ---------------------------------------------------------------------------
// Diagonal intersection

void IndexedFamily::validate() const {
  if (pieces.empty()) throw DomainError("indexed family has no pieces");
  std::vector<Span> index;
  for (const auto& [interval, set] : pieces) {
    if (!(set.universe() == universe))
      throw DomainError("family member lives in universe " + set.universe().to_string() + ", expected " +
                        universe.to_string());
    IntervalSet one(universe, {interval});
    if (one.part_count() != 1) throw DomainError("empty index interval in family");
    index.push_back(one.spans().front());
  }
  std::sort(index.begin(), index.end(), [](const Span& a, const Span& b) { return a.lo < b.lo; });
  if (!index.front().lo.is_zero()) throw DomainError("family index intervals must start at 0");
  for (std::size_t i = 0; i + 1 < index.size(); ++i)
    if (!index[i].end || !(*index[i].end == index[i + 1].lo))
      throw DomainError("family index intervals do not partition the universe");
  if (index.back().end) throw DomainError("family index intervals do not reach the end of the universe");
}

IntervalSet diagonal_intersection(const IndexedFamily& family) {
  family.validate();
  // An index piece starting at a only constrains g > a.
  IntervalSet out = IntervalSet::full(family.universe);
  for (const auto& [interval, set] : family.pieces) {
    const Ordinal& a = interval.lo;
    out = out & (set | IntervalSet::range(family.universe, Ordinal{}, a.successor()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Interval& i) {
  switch (i.kind) {
    case Interval::Hi::Tail:
      return "[" + i.lo.to_string() + ",tail]";
    case Interval::Hi::Inclusive:
      if (i.lo == i.hi) return "{" + i.lo.to_string() + "}";
      return "[" + i.lo.to_string() + "," + i.hi.to_string() + "]";
    case Interval::Hi::Exclusive:
      return "[" + i.lo.to_string() + "," + i.hi.to_string() + ")";
  }
  return {};
}

std::string to_string(const IntervalSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& p : s.parts()) {
    if (!out.empty()) out += " u ";
    out += to_string(p);
  }
  return out;
}

namespace {

class SetExprParser {
 public:
  SetExprParser(const Universe& u, std::string_view text) : universe_(u), text_(text) {}

  IntervalSet parse() {
    std::vector<Interval> parts;
    skip_ws();
    if (pos_ == text_.size()) return IntervalSet(universe_);
    do {
      item(parts);
      skip_ws();
    } while (accept_separator());
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return IntervalSet(universe_, parts);
  }

 private:
  void item(std::vector<Interval>& parts) {
    skip_ws();
    if (accept('{')) {
      skip_ws();
      if (accept('}')) return;
      do parts.push_back(Interval::point(ordinal_until(",}")));
      while (accept(','));
      if (!accept('}')) fail("expected '}'");
      return;
    }
    if (!accept('[')) fail("expected '[' or '{'");
    Ordinal lo = ordinal_until(",");
    if (!accept(',')) fail("expected ','");
    skip_ws();
    if (text_.substr(pos_, 4) == "tail") {
      pos_ += 4;
      skip_ws();
      if (!accept(']') && !accept(')')) fail("expected ']' after tail");
      parts.push_back(Interval::tail(std::move(lo)));
      return;
    }
    Ordinal hi = ordinal_until("])");
    if (accept(']'))
      parts.push_back(Interval::closed(std::move(lo), std::move(hi)));
    else if (accept(')'))
      parts.push_back(Interval::half_open(std::move(lo), std::move(hi)));
    else
      fail("expected ']' or ')'");
  }

  Ordinal ordinal_until(std::string_view stops) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    try {
      return parse_ordinal(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      std::size_t at = e.position() == ParseError::npos ? start : start + e.position();
      throw ParseError(std::string("interval set: bad ordinal"), at);
    }
  }

  bool accept_separator() {
    skip_ws();
    if (pos_ < text_.size() && (text_[pos_] == 'u' || text_[pos_] == 'U' || text_[pos_] == ';')) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError("interval set: " + msg, pos_); }

  const Universe& universe_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalSet parse_interval_set(const Universe& universe, std::string_view text) {
  return SetExprParser(universe, text).parse();
}

}  // namespace longhom
