#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace longhom {

struct CnfTerm;

/// A countable ordinal below epsilon_0, held in Cantor normal form
///
///   w^e1*c1 + w^e2*c2 + ... + w^ek*ck,   e1 > e2 > ... > ek,  ci >= 1.
///
/// Exponents are themselves ordinals in normal form, so the representation
/// is unique and equality is structural. The empty term list is 0.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  /// w^exponent * coefficient. A zero coefficient yields 0.
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
  /// Validates strictly decreasing exponents and positive coefficients.
  static Ordinal from_terms(std::vector<CnfTerm> terms);

  const std::vector<CnfTerm>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept { return !is_zero() && !is_successor(); }

  /// Value when finite.
  std::optional<std::uint64_t> as_finite() const;
  /// Coefficient of w^0 (the trailing natural number).
  std::uint64_t finite_part() const noexcept;

  Ordinal successor() const;
  /// Throws DomainError unless this is a successor.
  Ordinal predecessor() const;

  std::string to_string() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

enum class Order { Less, Equal, Greater };

Order cmp(const Ordinal& a, const Ordinal& b);

/// Ordinal sum; not commutative (1 + w == w).
Ordinal add(const Ordinal& a, const Ordinal& b);
inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

struct OrdinalKind {
  enum class Kind { Zero, Successor, Limit };
  Kind kind;
  std::optional<Ordinal> predecessor;  // set iff kind == Successor
};

OrdinalKind classify(const Ordinal& a);

/// n with a == b + n when that difference is finite; nullopt when it is
/// infinite. Throws DomainError if b > a.
std::optional<std::uint64_t> subtract_finite(const Ordinal& a, const Ordinal& b);

/// k-th element of the canonical fundamental sequence of a limit ordinal.
/// Writing b = g + w^e (last term split off):
///   e = e' + 1   ->  g + w^e' * k
///   e limit      ->  g + w^(e[k])
/// The sequence is strictly increasing in k with supremum b.
Ordinal fundamental_seq(const Ordinal& b, std::uint64_t k);

/// Parses the ordinal expression language
///
///   sum  := term ("+" term)*
///   term := nat | "w" ("^" exp)? ("*" nat)?
///   exp  := nat | "w" ("^" exp)? | "(" sum ")"
///
/// Whitespace is ignored. A "*nat" suffix always binds to the outermost
/// power, so "w^w*2" is (w^w)*2; compound exponents need parentheses.
/// The result is normalized ("1+w" parses to w).
Ordinal parse_ordinal(std::string_view text);

std::string to_string(const Ordinal& a);

}  // namespace longhom
