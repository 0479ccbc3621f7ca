#include "longhom/ordinal.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "longhom/errors.hpp"

namespace longhom {

namespace {

std::uint64_t checked_sum(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b)
    throw std::overflow_error("ordinal coefficient overflow");
  return a + b;
}

}  // namespace

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal r;
  if (n > 0) r.terms_.push_back(CnfTerm{Ordinal{}, n});
  return r;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal r;
  if (coefficient > 0) r.terms_.push_back(CnfTerm{exponent, coefficient});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw DomainError("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("CNF exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

std::optional<std::uint64_t> Ordinal::as_finite() const {
  if (!is_finite()) return std::nullopt;
  return finite_part();
}

std::uint64_t Ordinal::finite_part() const noexcept {
  return is_successor() ? terms_.back().coefficient : 0;
}

Ordinal Ordinal::successor() const { return add(*this, finite(1)); }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw DomainError("predecessor of non-successor " + to_string());
  Ordinal r = *this;
  if (--r.terms_.back().coefficient == 0) r.terms_.pop_back();
  return r;
}

std::string Ordinal::to_string() const { return longhom::to_string(*this); }

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

Order cmp(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Order::Less;
  if (c > 0) return Order::Greater;
  return Order::Equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms().front().exponent;
  std::vector<CnfTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent < lead) break;
    out.push_back(t);
  }
  auto rest = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead) {
    out.back().coefficient = checked_sum(out.back().coefficient, rest->coefficient);
    ++rest;
  }
  out.insert(out.end(), rest, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

OrdinalKind classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalKind::Kind::Zero, std::nullopt};
  if (a.is_successor()) return {OrdinalKind::Kind::Successor, a.predecessor()};
  return {OrdinalKind::Kind::Limit, std::nullopt};
}

std::optional<std::uint64_t> subtract_finite(const Ordinal& a, const Ordinal& b) {
  if (b > a) throw DomainError("subtract_finite: " + b.to_string() + " exceeds " + a.to_string());
  auto infinite_part = [](const Ordinal& x) {
    auto t = x.terms();
    if (!t.empty() && t.back().exponent.is_zero()) t.pop_back();
    return t;
  };
  if (infinite_part(a) != infinite_part(b)) return std::nullopt;
  return a.finite_part() - b.finite_part();
}

Ordinal fundamental_seq(const Ordinal& b, std::uint64_t k) {
  if (!b.is_limit()) throw DomainError("fundamental_seq of non-limit " + b.to_string());
  std::vector<CnfTerm> head = b.terms();
  const Ordinal e = head.back().exponent;
  if (--head.back().coefficient == 0) head.pop_back();
  const Ordinal prefix = Ordinal::from_terms(std::move(head));
  if (e.is_successor()) return add(prefix, Ordinal::omega_power(e.predecessor(), k));
  return add(prefix, Ordinal::omega_power(fundamental_seq(e, k)));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal r = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  Ordinal sum() {
    Ordinal r = term();
    while (accept('+')) r = add(r, term());
    return r;
  }

  Ordinal term() {
    skip_ws();
    if (peek_digit()) return Ordinal::finite(nat());
    if (!accept('w')) fail("expected 'w' or a natural number");
    Ordinal e = Ordinal::finite(1);
    if (accept('^')) e = exponent();
    std::uint64_t c = 1;
    if (accept('*')) {
      std::size_t at = pos_;
      c = nat();
      if (c == 0) fail_at("coefficient must be positive", at);
    }
    return Ordinal::omega_power(e, c);
  }

  Ordinal exponent() {
    skip_ws();
    if (peek_digit()) return Ordinal::finite(nat());
    if (accept('(')) {
      Ordinal r = sum();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (!accept('w')) fail("expected exponent");
    Ordinal e = Ordinal::finite(1);
    if (accept('^')) e = exponent();
    return Ordinal::omega_power(e);
  }

  std::uint64_t nat() {
    skip_ws();
    if (!peek_digit()) fail("expected a natural number");
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      unsigned d = static_cast<unsigned>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        fail_at("natural number too large", start);
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
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

  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
    throw ParseError("ordinal: " + msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_power(const Ordinal& e);

// Exponent position: bare digits, a single coefficient-free power, or a
// parenthesized sum.
std::string render_exponent(const Ordinal& e) {
  if (e.is_finite()) return std::to_string(e.finite_part());
  if (e.terms().size() == 1 && e.terms()[0].coefficient == 1) return render_power(e.terms()[0].exponent);
  return "(" + to_string(e) + ")";
}

std::string render_power(const Ordinal& e) {
  if (e == Ordinal::finite(1)) return "w";
  return "w^" + render_exponent(e);
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += render_power(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

}  // namespace longhom
